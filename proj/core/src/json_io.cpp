#include "holodyn/json_io.hpp"

#include <cmath>

#include "holodyn/error.hpp"

namespace holodyn::json_io {

namespace {

const json& require(const json& j, const char* key, const std::string& field) {
    if (!j.is_object()) throw SchemaError(field, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw SchemaError(field.empty() ? key : field + "." + key, "missing");
    return *it;
}

std::string sub(const std::string& field, const char* key) { return field.empty() ? key : field + "." + key; }
std::string sub(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

double number(const json& j, const std::string& field) {
    if (!j.is_number()) throw SchemaError(field, "expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw SchemaError(field, "non-finite number");
    return x;
}

int positive_int(const json& j, const std::string& field, int min) {
    if (!j.is_number_integer()) throw SchemaError(field, "expected an integer");
    const auto v = j.get<long long>();
    if (v < min || v > 1'000'000) throw SchemaError(field, "out of range");
    return static_cast<int>(v);
}

MultiIndex alpha_from_json(const json& j, int dim, const std::string& field) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw SchemaError(field, "expected an array of " + std::to_string(dim) + " exponents");
    std::vector<int> e;
    for (std::size_t i = 0; i < j.size(); ++i) e.push_back(positive_int(j[i], sub(field, i), 0));
    return MultiIndex(std::move(e));
}

Complex term_coeff(const json& t, const std::string& field) {
    const double re = t.contains("re") ? number(t["re"], sub(field, "re")) : 0.0;
    const double im = t.contains("im") ? number(t["im"], sub(field, "im")) : 0.0;
    if (!t.contains("re") && !t.contains("im")) throw SchemaError(field, "term needs 're' and/or 'im'");
    return {re, im};
}

}  // namespace

Complex complex_from_json(const json& j, const std::string& field) {
    if (j.is_number()) return {number(j, field), 0.0};
    if (j.is_array() && j.size() == 2) return {number(j[0], field + "[0]"), number(j[1], field + "[1]")};
    if (j.is_object()) return term_coeff(j, field);
    throw SchemaError(field, "expected a number or [re, im]");
}

Jet jet_from_json(const json& j) {
    const int dim = positive_int(require(j, "dim", ""), "dim", 1);
    const int cap = positive_int(require(j, "cap", ""), "cap", 0);
    const json& base = require(j, "base", "");
    if (!base.is_array() || static_cast<int>(base.size()) != dim) throw SchemaError("base", "expected dim entries");
    Vector b(dim);
    for (int i = 0; i < dim; ++i) b[i] = complex_from_json(base[static_cast<std::size_t>(i)], sub("base", static_cast<std::size_t>(i)));
    Jet jet(dim, cap, b);
    const json& terms = require(j, "terms", "");
    if (!terms.is_array()) throw SchemaError("terms", "expected an array");
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string f = sub("terms", k);
        const MultiIndex a = alpha_from_json(require(terms[k], "alpha", f), dim, sub(f, "alpha"));
        if (a.degree() > cap) throw SchemaError(sub(f, "alpha"), "degree exceeds cap");
        jet.set_coeff(a, jet.coeff(a) + term_coeff(terms[k], f));
    }
    return jet;
}

Polynomial polynomial_from_terms(const json& terms, int dim, const std::string& field) {
    if (!terms.is_array()) throw SchemaError(field, "expected an array of terms");
    Polynomial p(dim);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string f = sub(field, k);
        const MultiIndex a = alpha_from_json(require(terms[k], "alpha", f), dim, sub(f, "alpha"));
        p.add_term(a, term_coeff(terms[k], f));
    }
    return p;
}

PolyMap polymap_from_json(const json& j) {
    const int dim = positive_int(require(j, "dim", ""), "dim", 1);
    const json& comps = require(j, "components", "");
    if (!comps.is_array() || static_cast<int>(comps.size()) != dim)
        throw SchemaError("components", "expected dim components");
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string f = sub("components", i);
        out.push_back(polynomial_from_terms(require(comps[i], "terms", f), dim, sub(f, "terms")));
    }
    return PolyMap(std::move(out));
}

Weight weight_from_json(const json& j, int dim) {
    if (j.is_null()) return Weight::one(dim);
    const int wdim = positive_int(require(j, "dim", ""), "dim", 1);
    if (wdim != dim) throw SchemaError("dim", "weight dimension differs from the map");
    if (j.contains("exp")) {
        return Weight::exp_polynomial(polynomial_from_terms(require(j["exp"], "terms", "exp"), dim, "exp.terms"));
    }
    return Weight::polynomial(polynomial_from_terms(require(j, "terms", ""), dim, "terms"));
}

HenonComposition henon_from_json(const json& j) {
    const json& factors = require(j, "factors", "");
    if (!factors.is_array() || factors.empty()) throw SchemaError("factors", "expected a nonempty array");
    std::vector<GeneralizedHenon> out;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const std::string f = sub("factors", k);
        const json& pj = require(factors[k], "p", f);
        if (!pj.is_array()) throw SchemaError(sub(f, "p"), "expected ascending coefficients");
        std::vector<Complex> p;
        for (std::size_t i = 0; i < pj.size(); ++i) p.push_back(complex_from_json(pj[i], sub(sub(f, "p"), i)));
        const Complex delta = complex_from_json(require(factors[k], "delta", f), sub(f, "delta"));
        auto convention = GeneralizedHenon::Convention::Minus;
        if (factors[k].contains("convention")) {
            const json& c = factors[k]["convention"];
            if (c == "minus") {
                convention = GeneralizedHenon::Convention::Minus;
            } else if (c == "plus") {
                convention = GeneralizedHenon::Convention::Plus;
            } else {
                throw SchemaError(sub(f, "convention"), "expected \"minus\" or \"plus\"");
            }
        }
        if (delta == Complex{}) throw SchemaError(sub(f, "delta"), "delta must be nonzero");
        while (!p.empty() && p.back() == Complex{}) p.pop_back();
        if (p.size() < 3) throw SchemaError(sub(f, "p"), "degree must be >= 2");
        out.emplace_back(std::move(p), delta, convention);
    }
    return HenonComposition(std::move(out));
}

Matrix matrix_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw SchemaError(field, "expected an array of rows");
    const std::size_t cols = j[0].size();
    Matrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw SchemaError(sub(field, r), "ragged row");
        for (std::size_t c = 0; c < cols; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                complex_from_json(j[r][c], sub(sub(field, r), c));
    }
    return m;
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(const std::vector<Complex>& zs) {
    json out = json::array();
    for (const Complex z : zs) out.push_back(to_json(z));
    return out;
}

json to_json(const Jet& jet, double drop_below) {
    json terms = json::array();
    const auto& table = jet.table();
    const auto c = jet.coefficients();
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (std::abs(c[i]) <= drop_below) continue;
        const auto e = table.index(i).entries();
        terms.push_back({{"alpha", std::vector<int>(e.begin(), e.end())}, {"re", c[i].real()}, {"im", c[i].imag()}});
    }
    return {{"dim", jet.dim()}, {"cap", jet.cap()}, {"base", to_json(jet.base())}, {"terms", terms}};
}

json to_json(const Tolerances& t) {
    return {{"base", t.base},         {"eig", t.eig},     {"orbit", t.orbit},     {"classify", t.classify},
            {"level", t.level},       {"rank", t.rank},   {"cluster", t.cluster}, {"vanish", t.vanish}};
}

json to_json(const PeriodicOrbit& o) {
    json pts = json::array();
    for (const auto& p : o.points) pts.push_back(to_json(p));
    return {{"points", pts},
            {"period", o.period},
            {"u_r", to_json(o.u_r)},
            {"multipliers", to_json(o.multipliers)},
            {"stability", to_string(o.stability)},
            {"residual", o.residual}};
}

json to_json(const ObstructionCertificate& c) {
    json w = json::object();
    const Witness& wt = c.witness;
    if (wt.orbit) w["orbit"] = to_json(*wt.orbit);
    if (wt.alpha) w["alpha"] = to_json(*wt.alpha);
    if (wt.u_r) w["u_r"] = to_json(*wt.u_r);
    if (wt.lambda) w["lambda"] = to_json(*wt.lambda);
    if (wt.count_infinite) {
        w["count"] = "infinite";
    } else if (wt.count) {
        w["count"] = *wt.count;
    }
    if (wt.period_bound) w["period_bound"] = *wt.period_bound;
    if (!wt.level_points.empty()) {
        json pts = json::array();
        for (const auto& p : wt.level_points) pts.push_back(to_json(p));
        w["level_points"] = pts;
    }
    if (!wt.level_multiplicities.empty()) w["level_multiplicities"] = wt.level_multiplicities;

    json implied = json::array();
    for (const auto& iv : c.implied) implied.push_back({{"verdict", to_string(iv.verdict)}, {"assumption", iv.assumption}});
    return {{"verdict", to_string(c.verdict)},
            {"witness", w},
            {"assumptions", c.assumptions},
            {"implied", implied},
            {"notes", c.notes},
            {"search_complete", c.search_complete},
            {"tolerances", to_json(c.tolerances)}};
}

json to_json(const GradedOperatorMatrix& m) {
    json basis = json::array();
    for (const auto& a : m.basis) {
        const auto e = a.entries();
        basis.push_back(std::vector<int>(e.begin(), e.end()));
    }
    return {{"n", m.n}, {"d", m.d}, {"basis", basis}, {"entries", to_json(m.entries)}};
}

json to_json(const SphereMaxProfile& p) {
    json rows = json::array();
    for (const auto& s : p.samples) {
        rows.push_back({{"s", s.s}, {"r", s.r}, {"M", s.M}, {"H", s.H}, {"dH", s.dH}, {"q", to_json(s.q)}});
    }
    return {{"samples", rows}, {"chosen", p.chosen}, {"min_second_difference", p.min_second_difference}};
}

json to_json(const RepellingConstruction& c) {
    return {{"s", c.s},
            {"r", c.r},
            {"M", c.M},
            {"M_prime", c.M_prime},
            {"a", c.a},
            {"U", to_json(c.U)},
            {"q", to_json(c.q)},
            {"p", to_json(c.p)},
            {"eta", c.eta},
            {"lambda", c.lambda},
            {"lambda_identity_error", c.lambda_identity_error},
            {"A", to_json(c.A)},
            {"eigenvalues", to_json(c.eigenvalues)},
            {"realized_eigenvalue", to_json(c.realized_eigenvalue)},
            {"residual_fix", c.residual_fix},
            {"residual_eigvec", c.residual_eigvec},
            {"unitarity_error", c.unitarity_error},
            {"det_error", c.det_error}};
}

json to_json(const FockOperatorMatrix& m) {
    return {{"d", m.d},
            {"N", m.N},
            {"truncation_loss", m.truncation_loss},
            {"fixes_origin", m.fixes_origin},
            {"entries", to_json(m.entries)}};
}

json to_json(const DualityResult& d) {
    return {{"image_cond", d.image_cond},
            {"kernel_cond", d.kernel_cond},
            {"equivalent", d.image_cond == d.kernel_cond},
            {"rank_b", d.rank_b},
            {"rank_b_with_l", d.rank_b_with_l},
            {"kernel_residual", d.kernel_residual}};
}

}  // namespace holodyn::json_io
