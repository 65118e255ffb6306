#include "io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace wkl::cli {

namespace {

std::string number(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void emit(const Json& j, int indent, int depth, std::string& out) {
    const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
    const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
    const char* nl = indent > 0 ? "\n" : "";
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            // Small scalar records such as complex numbers stay on one line.
            bool flat = j.size() <= 4;
            for (const auto& e : j) flat = flat && !e.is_structured();
            if (flat) {
                out += "{";
                bool first = true;
                for (auto it = j.begin(); it != j.end(); ++it) {
                    if (!first) out += ", ";
                    first = false;
                    out += Json(it.key()).dump() + ": ";
                    emit(it.value(), indent, depth + 1, out);
                }
                out += "}";
                return;
            }
            out += "{";
            out += nl;
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ",";
                    out += nl;
                }
                first = false;
                out += pad + Json(it.key()).dump() + (indent > 0 ? ": " : ":");
                emit(it.value(), indent, depth + 1, out);
            }
            out += nl + close_pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            bool flat = true;
            for (const auto& e : j) flat = flat && !e.is_structured();
            if (flat) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out += ", ";
                    emit(j[i], indent, depth + 1, out);
                }
                out += "]";
                return;
            }
            out += "[";
            out += nl;
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) {
                    out += ",";
                    out += nl;
                }
                out += pad;
                emit(j[i], indent, depth + 1, out);
            }
            out += nl + close_pad + "]";
            return;
        }
        case Json::value_t::number_float: out += number(j.get<double>()); return;
        default: out += j.dump(); return;
    }
}

}  // namespace

std::string dump(const Json& j, int indent) {
    std::string out;
    emit(j, indent, 0, out);
    out += "\n";
    return out;
}

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const CVector& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
    return a;
}

Json to_json(const FockVector& v) {
    Json terms = Json::array();
    for (int i = 0; i < v.set->size(); ++i) {
        if (v.coeffs(i) == Complex(0.0)) continue;
        Json t;
        t["alpha"] = v.set->at(i);
        t["re"] = v.coeffs(i).real();
        t["im"] = v.coeffs(i).imag();
        terms.push_back(t);
    }
    Json j;
    j["degree_cap"] = v.cap();
    j["vars"] = v.set->vars();
    j["norm"] = v.norm();
    j["tail"] = v.tail;
    j["terms"] = terms;
    return j;
}

Json to_json(const NCCoords& c) {
    Json j;
    j["plus"] = to_json(c.plus);
    j["minus"] = to_json(c.minus);
    j["center"] = to_json(c.center);
    return j;
}

Complex parse_complex(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty number");
    // Split at the last sign that is not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
    auto real_part = [&](const std::string& t) -> double {
        std::size_t used = 0;
        double v = std::stod(t, &used);
        if (used != t.size()) throw Error(ErrorKind::InvalidArgument, "bad number: " + raw);
        return v;
    };
    auto imag_part = [&](std::string t) -> double {
        if (t.empty() || t.back() != 'i') throw Error(ErrorKind::InvalidArgument, "bad number: " + raw);
        t.pop_back();
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return real_part(t);
    };
    try {
        if (s.back() != 'i') {
            if (split != std::string::npos && s.find('i') != std::string::npos) throw Error(ErrorKind::InvalidArgument, "bad number: " + raw);
            return {real_part(s), 0.0};
        }
        if (split == std::string::npos) return {0.0, imag_part(s)};
        return {real_part(s.substr(0, split)), imag_part(s.substr(split))};
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::InvalidArgument, "bad number: " + raw);
    }
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    void expect(char c) {
        if (!peek(c)) throw Error(ErrorKind::InvalidArgument, std::string("matrix: expected '") + c + "'");
        ++pos;
    }
    Complex scalar() {
        skip();
        if (peek('{')) {
            std::size_t end = s.find('}', pos);
            if (end == std::string::npos) throw Error(ErrorKind::InvalidArgument, "matrix: unterminated object");
            Json j = Json::parse(s.substr(pos, end - pos + 1), nullptr, false);
            pos = end + 1;
            if (j.is_discarded() || !j.contains("re") || !j.contains("im"))
                throw Error(ErrorKind::InvalidArgument, "matrix: objects need re and im");
            return {j["re"].get<double>(), j["im"].get<double>()};
        }
        std::size_t start = pos;
        while (pos < s.size() && s[pos] != ',' && s[pos] != ']') ++pos;
        if (pos == s.size()) throw Error(ErrorKind::InvalidArgument, "matrix: unexpected end of input");
        std::string tok = s.substr(start, pos - start);
        if (tok.size() >= 2 && tok.front() == '"' && tok.back() == '"') tok = tok.substr(1, tok.size() - 2);
        return parse_complex(tok);
    }
    std::vector<Complex> row() {
        std::vector<Complex> out;
        expect('[');
        if (peek(']')) {
            ++pos;
            return out;
        }
        for (;;) {
            out.push_back(scalar());
            if (peek(',')) {
                ++pos;
                continue;
            }
            expect(']');
            return out;
        }
    }
};

}  // namespace

CMatrix parse_matrix(const std::string& text) {
    Parser p{text};
    std::vector<std::vector<Complex>> rows;
    p.expect('[');
    for (;;) {
        rows.push_back(p.row());
        if (p.peek(',')) {
            ++p.pos;
            continue;
        }
        p.expect(']');
        break;
    }
    p.skip();
    if (p.pos != text.size()) throw Error(ErrorKind::InvalidArgument, "matrix: trailing characters");
    const std::size_t cols = rows.front().size();
    if (cols == 0) throw Error(ErrorKind::InvalidArgument, "matrix: empty row");
    CMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorKind::InvalidArgument, "matrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    return m;
}

CVector parse_vector(const std::string& text) {
    Parser p{text};
    std::vector<Complex> v = p.row();
    p.skip();
    if (p.pos != text.size() || v.empty()) throw Error(ErrorKind::InvalidArgument, "vector: expected [a, b, ...]");
    CVector out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
    return out;
}

GroupArg parse_group(const std::string& text) {
    if (text == "sl2") return {{1, 1}, true};
    if (text.size() == 4 && text.rfind("su", 0) == 0 && std::isdigit(static_cast<unsigned char>(text[2])) &&
        std::isdigit(static_cast<unsigned char>(text[3]))) {
        BlockSpec s{text[2] - '0', text[3] - '0'};
        if (s.p < 1 || s.q < 1 || s.q > s.p) throw Error(ErrorKind::InvalidArgument, "group: need p >= q >= 1");
        return {s, false};
    }
    throw Error(ErrorKind::InvalidArgument, "unknown group '" + text + "' (sl2, su11, su21, su22, ...)");
}

}  // namespace wkl::cli
