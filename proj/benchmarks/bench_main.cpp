#include <benchmark/benchmark.h>

#include "wkl/hermgroup.hpp"
#include "wkl/holods.hpp"
#include "wkl/l2norm.hpp"
#include "wkl/whittaker.hpp"

using namespace wkl;

namespace {

const BlockSpec SU11{1, 1}, SU21{2, 1}, SU22{2, 2};

BlockSpec spec_of(int i) {
    const BlockSpec all[] = {SU11, SU21, SU22};
    return all[i];
}

void BM_MatExp(benchmark::State& st) {
    const BlockSpec s = spec_of(static_cast<int>(st.range(0)));
    Rng rng(1);
    CMatrix x = random_lie_algebra(rng, s, 2.0);
    for (auto _ : st) benchmark::DoNotOptimize(mat_exp(x));
}
BENCHMARK(BM_MatExp)->DenseRange(0, 2);

void BM_HCFactorize(benchmark::State& st) {
    const BlockSpec s = spec_of(static_cast<int>(st.range(0)));
    Rng rng(2);
    CMatrix g = random_group(rng, s, 2.0);
    for (auto _ : st) benchmark::DoNotOptimize(hc_factorize(g, s));
}
BENCHMARK(BM_HCFactorize)->DenseRange(0, 2);

void BM_PknNewton(benchmark::State& st) {
    const BlockSpec s = spec_of(static_cast<int>(st.range(0)));
    auto rd = root_datum(s);
    Rng rng(3);
    CMatrix g = random_group(rng, s, 2.0);
    PknOptions opt;
    opt.allow_closed_forms = false;
    for (auto _ : st) benchmark::DoNotOptimize(pkn_factorize(g, *rd, PknSign::Plus, opt));
}
BENCHMARK(BM_PknNewton)->DenseRange(0, 2);

void BM_FockActN(benchmark::State& st) {
    auto rd = root_datum(SU21);
    FockSpace f(rd, static_cast<int>(st.range(0)));
    CVector w(1);
    w(0) = Complex(0.3, -0.2);
    CMatrix z = f.element(w), x = 0.4 * rd->nil.basis_one[0];
    FockVector zeta = FockVector::constant(f, 1.0);
    for (auto _ : st) benchmark::DoNotOptimize(fock_act_n(f, z, x, zeta));
}
BENCHMARK(BM_FockActN)->Arg(12)->Arg(24)->Arg(48);

void BM_SectionEval(benchmark::State& st) {
    auto rd = root_datum(SU21);
    FockSpace f(rd, static_cast<int>(st.range(0)));
    WhittakerKernel wk(f, KRep(SU21, -4, 1), CVector::Ones(2));
    Rng rng(4);
    CMatrix x = random_group(rng, SU21, 1.0);
    for (auto _ : st) benchmark::DoNotOptimize(wk.t_lkt_eval(CVector::Unit(2, 0), x));
}
BENCHMARK(BM_SectionEval)->Arg(12)->Arg(24);

void BM_DiskInnerProduct(benchmark::State& st) {
    BallRule rule;
    rule.radial = static_cast<int>(st.range(0));
    HoloDS ds(KRep::character(SU11, -3), root_datum(SU11), rule);
    CMatrix w(1, 1);
    w(0, 0) = Complex(0.5, 0.2);
    const CVector one = CVector::Ones(1);
    for (auto _ : st) benchmark::DoNotOptimize(ds.inner(HoloFunction::constant(one), HoloFunction::kernel_section(ds.rep(), w, one)));
}
BENCHMARK(BM_DiskInnerProduct)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ReducedSeries(benchmark::State& st) {
    const BlockSpec s = st.range(0) == 0 ? SU11 : SU22;
    auto rd = root_datum(s);
    std::vector<double> mu(static_cast<std::size_t>(rd->rank), 5.0);
    for (auto _ : st) benchmark::DoNotOptimize(reduced_series(mu, *rd, 1.0));
}
BENCHMARK(BM_ReducedSeries)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
