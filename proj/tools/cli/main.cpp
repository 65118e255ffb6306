#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "io.hpp"
#include "suites.hpp"
#include "wkl/hermgroup.hpp"
#include "wkl/holods.hpp"
#include "wkl/l2norm.hpp"
#include "wkl/whittaker.hpp"

using namespace wkl;
using namespace wkl::cli;

namespace {

constexpr int EXIT_USAGE = 1;
constexpr int EXIT_DOMAIN = 2;
constexpr int EXIT_VERIFY = 3;

struct Common {
    std::uint64_t seed = 7;
    int degree_cap = 12;
    int quad_nodes = 0;  // 0: the rule's default
    bool json = false;
    bool csv = false;
    std::string out;
};

struct Args {
    std::string group = "su11";
    std::string element;
    std::string sign = "plus";
    std::string kind = "pkn";
    std::string check = "reproducing";
    std::optional<int> lambda;
    std::string pi;
    std::string eta = "e0";
    std::string xi = "e0";
    std::string at;
    std::string z;
    std::string method = "reduced";
    std::string suite;
    int points = 20;
    double radius = 0.8;
    int k_samples = 16;
    double t_min = -2.0, t_max = 6.0;
    int rows = 400;
};

Json header(const std::string& command) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open " + c.out);
    f << text;
}

KRep rep_from(const Args& a, const BlockSpec& s) {
    if (!a.pi.empty() && a.lambda) throw Error(ErrorKind::InvalidArgument, "give either --pi or --lambda");
    if (a.lambda) return KRep::character(s, -*a.lambda);
    if (a.pi.empty()) throw Error(ErrorKind::InvalidArgument, "--pi or --lambda is required");
    return KRep::parse(a.pi, s);
}

// "e3", "3" or a JSON vector.
CVector basis_or_vector(const std::string& text, int dim, const char* what) {
    std::string t = text;
    if (!t.empty() && t.front() == '[') {
        CVector v = parse_vector(t);
        if (v.size() != dim) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": wrong length");
        return v;
    }
    if (!t.empty() && t.front() == 'e') t = t.substr(1);
    std::size_t used = 0;
    int i = -1;
    try {
        i = std::stoi(t, &used);
    } catch (const std::logic_error&) {
        used = 0;
    }
    if (used == 0 || used != t.size() || i < 0 || i >= dim)
        throw Error(ErrorKind::InvalidArgument, std::string(what) + ": expected a basis index below " + std::to_string(dim));
    return CVector::Unit(dim, i);
}

CMatrix group_element(const std::string& text, const GroupArg& g) {
    CMatrix m = parse_matrix(text);
    if (m.rows() != g.spec.size() || m.cols() != g.spec.size())
        throw Error(ErrorKind::InvalidArgument, "element must be " + std::to_string(g.spec.size()) + " x " + std::to_string(g.spec.size()));
    const bool member = g.sl2 ? has_unit_det(m) : is_in_su(m, g.spec);
    if (!member) throw Error(ErrorKind::InvalidArgument, g.sl2 ? "element is not in SL(2,C)" : "element is not in SU(p,q)");
    return m;
}

Json rep_json(const KRep& pi, const RootDatum& rd) {
    DSParams p = classify(pi, rd);
    Json j;
    j["name"] = pi.name();
    j["dim"] = pi.dim();
    j["mu"] = p.mu;
    j["rho"] = p.rho;
    j["discrete"] = p.discrete;
    Json st = Json::array();
    for (auto s : p.status) st.push_back(to_string(s));
    j["status"] = st;
    return j;
}

int cmd_decompose(const Common& c, const Args& a) {
    GroupArg g = parse_group(a.group);
    CMatrix m = group_element(a.element, g);
    Json j = header("decompose");
    j["group"] = a.group;
    j["kind"] = a.kind;
    if (a.kind == "hc") {
        HCTriple t = hc_factorize(m, g.spec);
        j["zplus"] = to_json(t.zplus);
        j["k"] = to_json(t.k);
        j["zminus"] = to_json(t.zminus);
        j["residual"] = (t.reassemble(g.spec) - m).norm() / m.norm();
    } else {
        if (g.sl2 && a.sign == "minus") throw Error(ErrorKind::InvalidArgument, "sl2 supports --sign plus only");
        auto rd = root_datum(g.spec);
        PKNTriple t = pkn_factorize(m, *rd, a.sign == "minus" ? PknSign::Minus : PknSign::Plus);
        j["sign"] = a.sign;
        j["method"] = to_string(t.method);
        j["zplus"] = to_json(t.zplus);
        j["k"] = to_json(t.k);
        j["n"] = to_json(t.n);
        j["log_n"] = to_json(t.log_n);
        j["residual"] = t.residual;
        j["reassembly_error"] = (t.reassemble(g.spec) - m).norm() / m.norm();
        j["gauge"] = to_string(t.gauge);
    }
    emit(c, dump(j));
    return 0;
}

int report(const Common& c, const std::string& command, Json j, const std::vector<SuiteResult>& results) {
    bool ok = true;
    Json suites = Json::array();
    for (const auto& r : results) {
        suites.push_back(to_json(r));
        ok = ok && r.ok();
    }
    j["status"] = ok ? "pass" : "fail";
    j["suites"] = suites;
    emit(c, dump(j));
    std::cerr << human_table(results);
    (void)command;
    return ok ? 0 : EXIT_VERIFY;
}

int cmd_roots(const Common& c, const Args& a) {
    GroupArg g = parse_group(a.group);
    RootDatum rd = build_root_datum(g.spec);
    Json j = header("roots");
    j["group"] = a.group;
    j["rank"] = rd.rank;
    j["tube_type"] = rd.tube_type();
    Json table = Json::array();
    for (const auto& r : rd.restricted_table) table.push_back(Json{{"label", r.label}, {"multiplicity", r.multiplicity}});
    j["restricted_roots"] = table;
    j["centralizer_dim"] = rd.centralizer_dim;
    RhoConstants rc = rho_constants(rd);
    j["rho_n"] = rc.rho_n;
    j["rho_l"] = rc.rho_l;
    j["rho"] = rc.rho;
    j["half_dim"] = rd.half_dim();
    j["center_dim"] = rd.one_dim();
    VerifyOptions vo;
    vo.seed = c.seed;
    vo.group = g.spec;
    return report(c, "roots", j, {run_suite("roots", vo)});
}

int cmd_plancherel(const Common& c, const Args& a) {
    if (a.check != "reproducing") throw Error(ErrorKind::InvalidArgument, "--check supports 'reproducing'");
    GroupArg g = parse_group(a.group);
    auto rd = root_datum(g.spec);
    KRep pi = rep_from(a, g.spec);
    BallRule rule;
    rule.radial = c.quad_nodes > 0 ? c.quad_nodes : (g.spec.p == 1 ? 256 : 32);
    HoloDS ds(pi, rd, rule);
    if (!ds.params().discrete) throw Error(ErrorKind::Divergent, "parameters outside the discrete range; the norm diverges");
    const CVector xi = extract_mu(pi, *rd).vector;
    Rng rng(c.seed);
    Json pts = Json::array();
    double worst = 0.0;
    Complex worst_value = 1.0;
    for (int i = 0; i < a.points; ++i) {
        CMatrix w = random_domain_point(rng, g.spec, a.radius);
        DSResult r = ds.inner(HoloFunction::constant(xi), HoloFunction::kernel_section(pi, w, xi));
        const Complex expected = xi.squaredNorm();
        const double err = std::abs(r.value - expected);
        if (err >= worst) {
            worst = err;
            worst_value = r.value;
        }
        pts.push_back(Json{{"w", to_json(w)}, {"value", to_json(r.value)}, {"quadrature_error", r.error}, {"abs_err", err}});
    }
    Json j = header("plancherel");
    j["group"] = a.group;
    j["pi"] = rep_json(pi, *rd);
    j["check"] = a.check;
    j["nodes"] = static_cast<int>(ds.nodes().size());
    j["value"] = to_json(worst_value);
    j["expected"] = to_json(Complex(xi.squaredNorm()));
    j["abs_err"] = worst;
    j["points"] = pts;
    emit(c, dump(j));
    return 0;
}

int cmd_whittaker(const Common& c, const Args& a) {
    GroupArg g = parse_group(a.group);
    auto rd = root_datum(g.spec);
    KRep pi = rep_from(a, g.spec);
    FockSpace f(rd, c.degree_cap);
    const CVector eta = basis_or_vector(a.eta, pi.dim(), "--eta");
    const CVector xi = basis_or_vector(a.xi, pi.dim(), "--xi");
    WhittakerKernel wk(f, pi, eta);
    Json j = header("whittaker");
    j["group"] = a.group;
    j["pi"] = rep_json(pi, *rd);
    j["eta"] = to_json(eta);
    j["xi"] = to_json(xi);
    if (!a.z.empty()) {
        if (!a.at.empty()) throw Error(ErrorKind::InvalidArgument, "give either --at or --z");
        CMatrix z = parse_matrix(a.z);
        if (z.rows() != g.spec.p || z.cols() != g.spec.q) throw Error(ErrorKind::InvalidArgument, "--z must be p x q");
        if (!DomainPoint::contains(z)) throw Error(ErrorKind::InvalidArgument, "--z is outside the domain");
        j["z"] = to_json(z);
        j["value"] = to_json(wk.whittaker_function(z, xi));
    } else {
        CMatrix x = a.at.empty() ? CMatrix(CMatrix::Identity(g.spec.size(), g.spec.size())) : group_element(a.at, GroupArg{g.spec, false});
        j["at"] = to_json(x);
        j["value"] = to_json(wk.t_lkt_eval(xi, x));
    }
    emit(c, dump(j));
    return 0;
}

int cmd_l2norm(const Common& c, const Args& a) {
    GroupArg g = parse_group(a.group);
    auto rd = root_datum(g.spec);
    KRep pi = rep_from(a, g.spec);
    FockSpace f(rd, c.degree_cap);
    const CVector eta = basis_or_vector(a.eta, pi.dim(), "--eta");
    WhittakerKernel wk(f, pi, eta);
    L2Result r;
    if (a.method == "reduced") {
        r = gn_l2_norm_reduced(wk);
    } else if (a.method == "full") {
        FullOptions fo;
        fo.seed = c.seed;
        fo.k_samples = a.k_samples;
        r = gn_l2_norm_full(wk, basis_or_vector(a.xi, pi.dim(), "--xi"), fo);
    } else {
        throw Error(ErrorKind::InvalidArgument, "--method must be full or reduced");
    }
    Json j = header("l2norm");
    j["group"] = a.group;
    j["pi"] = rep_json(pi, *rd);
    j["method"] = a.method;
    j["status"] = to_string(r.status);
    j["value"] = r.status == L2Status::Finite ? Json(r.value) : Json(nullptr);
    j["err"] = r.status == L2Status::Finite ? Json(r.error) : Json(nullptr);
    j["t_lower"] = r.t_lower;
    j["t_upper"] = r.t_upper;
    j["partials"] = r.partials;
    emit(c, dump(j));
    return 0;
}

int cmd_sample(const Common& c, const Args& a) {
    GroupArg g = parse_group(a.group);
    auto rd = root_datum(g.spec);
    KRep pi = rep_from(a, g.spec);
    if (a.rows < 2 || !(a.t_min < a.t_max)) throw Error(ErrorKind::InvalidArgument, "need --rows >= 2 and --t-min < --t-max");
    const std::vector<double> mu = extract_mu(pi, *rd).mu;
    std::vector<IntegrandSample> rows = sample_reduced_integrand(mu, *rd, 1.0, a.t_min, a.t_max, a.rows);
    if (c.json) {
        Json j = header("sample-integrand");
        j["group"] = a.group;
        j["pi"] = rep_json(pi, *rd);
        Json r = Json::array();
        for (const auto& s : rows) r.push_back(Json{{"t", s.t}, {"integrand", s.integrand}, {"partial_integral", s.partial}});
        j["rows"] = r;
        emit(c, dump(j));
        return 0;
    }
    std::string text = "t,integrand,partial_integral\n";
    char line[128];
    for (const auto& s : rows) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", s.t, s.integrand, s.partial);
        text += line;
    }
    emit(c, text);
    return 0;
}

int cmd_verify(const Common& c, const Args& a) {
    if (a.suite.empty()) throw CLI::ValidationError("--suite", "suite name is empty");
    VerifyOptions vo;
    vo.seed = c.seed;
    vo.degree_cap = c.degree_cap;
    vo.quad_nodes = c.quad_nodes > 0 ? c.quad_nodes : 256;
    if (!a.group.empty()) vo.group = parse_group(a.group).spec;
    std::vector<std::string> names;
    if (a.suite == "all")
        names = suite_names();
    else
        names.push_back(a.suite);
    std::vector<SuiteResult> results;
    for (const auto& n : names) results.push_back(run_suite(n, vo));
    Json j = header("verify");
    j["suite"] = a.suite;
    j["seed"] = c.seed;
    j["group"] = a.group.empty() ? Json(nullptr) : Json(a.group);
    return report(c, "verify", j, results);
}

int domain_error(const std::string& command, const Error& e) {
    Json j = header(command);
    j["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
    std::fputs(dump(j).c_str(), stdout);
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.kind() == ErrorKind::InvalidArgument ? EXIT_USAGE : EXIT_DOMAIN;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Whittaker kernels for holomorphic discrete series of SU(p,q)"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    Args a;
    app.add_option("--seed", c.seed, "Random seed")->capture_default_str();
    app.add_option("--degree-cap", c.degree_cap, "Fock truncation degree")->capture_default_str()->check(CLI::Range(0, 64));
    app.add_option("--quad-nodes", c.quad_nodes, "Radial quadrature nodes");
    auto* json_flag = app.add_flag("--json", c.json, "JSON output");
    app.add_flag("--csv", c.csv, "CSV output")->excludes(json_flag);
    app.add_option("--out", c.out, "Write output to a file");

    const std::vector<std::string> groups = {"sl2", "su11", "su21", "su22", "su31", "su32", "su33"};
    auto group_opt = [&](CLI::App* s, bool required) {
        auto* o = s->add_option("--group", a.group, "sl2, su11, su21, su22, ...");
        if (required) o->required();
        return o;
    };
    auto rep_opts = [&](CLI::App* s) {
        s->add_option("--lambda", a.lambda, "Scalar weight: pi = char:-lambda");
        s->add_option("--pi", a.pi, "K representation: char:M, sym:M:K, trivial");
    };

    auto* dec = app.add_subcommand("decompose", "Factorize g in P+ K_C N_C (or P+ K_C P-)");
    group_opt(dec, true);
    dec->add_option("--element", a.element, "Matrix such as [[1,0],[i,1]]")->required();
    dec->add_option("--sign", a.sign, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
    dec->add_option("--kind", a.kind, "pkn or hc")->check(CLI::IsMember({"pkn", "hc"}));

    auto* roots = app.add_subcommand("roots", "Restricted roots, rho constants and their checks");
    group_opt(roots, true);

    auto* pl = app.add_subcommand("plancherel", "Reproducing-kernel check of the discrete series inner product");
    group_opt(pl, true);
    rep_opts(pl);
    pl->add_option("--check", a.check, "reproducing")->check(CLI::IsMember({"reproducing"}));
    pl->add_option("--points", a.points, "Sample points")->check(CLI::Range(1, 10000));
    pl->add_option("--radius", a.radius, "Sample radius")->check(CLI::Range(0.0, 0.99));

    auto* wh = app.add_subcommand("whittaker", "Section T xi at a group element, or Pi(z) xi");
    group_opt(wh, true);
    rep_opts(wh);
    wh->add_option("--eta", a.eta, "eta: basis index (e0, 1, ...) or vector");
    wh->add_option("--xi", a.xi, "xi: basis index or vector");
    wh->add_option("--at", a.at, "Group element x");
    wh->add_option("--z", a.z, "Domain point z (p x q matrix)");

    auto* l2 = app.add_subcommand("l2norm", "L2 norm of the lowest-K-type section");
    group_opt(l2, true);
    rep_opts(l2);
    l2->add_option("--method", a.method, "full or reduced")->check(CLI::IsMember({"full", "reduced"}));
    l2->add_option("--eta", a.eta, "eta: basis index or vector");
    l2->add_option("--xi", a.xi, "xi for the full norm");
    l2->add_option("--k-samples", a.k_samples, "K samples for the full norm")->check(CLI::Range(2, 100000));

    auto* ver = app.add_subcommand("verify", "Run verification suites");
    ver->add_option("--suite", a.suite, "cocycle, kernel, fock, pkn, whittaker, roots or all")->required();
    auto* vgroup = ver->add_option("--group", a.group, "Restrict to one group");
    (void)vgroup;

    auto* smp = app.add_subcommand("sample-integrand", "Reduced L2 integrand on a t grid (CSV)");
    group_opt(smp, true);
    rep_opts(smp);
    smp->add_option("--t-min", a.t_min, "Lower end")->capture_default_str();
    smp->add_option("--t-max", a.t_max, "Upper end")->capture_default_str();
    smp->add_option("--rows", a.rows, "Number of rows")->capture_default_str();

    (void)groups;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return EXIT_USAGE;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
        if (c.csv && name != "sample-integrand") throw Error(ErrorKind::InvalidArgument, "--csv applies to sample-integrand only");
        if (sub == ver) a.group = ver->count("--group") ? a.group : "";
        if (sub == dec) return cmd_decompose(c, a);
        if (sub == roots) return cmd_roots(c, a);
        if (sub == pl) return cmd_plancherel(c, a);
        if (sub == wh) return cmd_whittaker(c, a);
        if (sub == l2) return cmd_l2norm(c, a);
        if (sub == ver) return cmd_verify(c, a);
        if (sub == smp) return cmd_sample(c, a);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return EXIT_USAGE;
    } catch (const Error& e) {
        return domain_error(name, e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}
