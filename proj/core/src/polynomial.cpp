#include "holodyn/polynomial.hpp"

#include <algorithm>
#include <string>

#include "holodyn/error.hpp"

namespace holodyn {

Polynomial::Polynomial(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
}

Polynomial::Polynomial(int dim, Terms terms) : Polynomial(dim) {
    for (const auto& [alpha, c] : terms) add_term(alpha, c);
}

Polynomial Polynomial::constant(int dim, Complex c) {
    Polynomial p(dim);
    p.add_term(MultiIndex::zero(dim), c);
    return p;
}

Polynomial Polynomial::variable(int dim, int i) {
    Polynomial p(dim);
    p.add_term(MultiIndex::unit(dim, i), 1.0);
    return p;
}

Polynomial Polynomial::univariate(const std::vector<Complex>& ascending) {
    Polynomial p(1);
    for (std::size_t k = 0; k < ascending.size(); ++k) p.add_term(MultiIndex{static_cast<int>(k)}, ascending[k]);
    return p;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

Complex Polynomial::coeff(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Complex{} : it->second;
}

void Polynomial::add_term(const MultiIndex& alpha, Complex c) {
    if (alpha.dim() != dim_) throw std::invalid_argument("term dimension does not match polynomial");
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw std::invalid_argument("polynomial coefficients must be finite");
    if (c == Complex{}) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex{}) terms_.erase(it);
    }
}

Complex Polynomial::operator()(const Vector& z) const {
    if (z.size() != dim_) throw std::invalid_argument("evaluation point has wrong dimension");
    const int deg = std::max(degree(), 0);
    // powers[i][k] = z_i^k
    std::vector<std::vector<Complex>> powers(dim_, std::vector<Complex>(deg + 1, 1.0));
    for (int i = 0; i < dim_; ++i) {
        for (int k = 1; k <= deg; ++k) powers[i][k] = powers[i][k - 1] * z[i];
    }
    Complex sum{};
    for (const auto& [alpha, c] : terms_) {
        Complex term = c;
        for (int i = 0; i < dim_; ++i) term *= powers[i][alpha[i]];
        sum += term;
    }
    return sum;
}

Complex Polynomial::operator()(Complex z) const {
    Vector v(1);
    v[0] = z;
    return (*this)(v);
}

Polynomial Polynomial::derivative(int i) const {
    Polynomial out(dim_);
    for (const auto& [alpha, c] : terms_) {
        if (alpha[i] == 0) continue;
        out.add_term(alpha.minus_unit(i), c * static_cast<double>(alpha[i]));
    }
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("polynomial dimension mismatch");
    Polynomial out(a.dim_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(Complex s) {
    if (s == Complex{}) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, c] : terms_) c *= s;
    return *this;
}

Polynomial Polynomial::compose(std::span<const Polynomial> subs, std::size_t max_terms) const {
    if (static_cast<int>(subs.size()) != dim_) throw std::invalid_argument("composition arity mismatch");
    const int out_dim = subs.front().dim();
    const auto check = [max_terms](const Polynomial& p) {
        if (p.term_count() > max_terms)
            throw TermOverflowError("expanded polynomial exceeds " + std::to_string(max_terms) +
                                    " terms; evaluate the iterate pointwise instead");
    };

    std::vector<std::vector<Polynomial>> powers(dim_);
    for (int i = 0; i < dim_; ++i) powers[i].push_back(Polynomial::constant(out_dim, 1.0));
    const auto power = [&](int i, int k) -> const Polynomial& {
        while (static_cast<int>(powers[i].size()) <= k) {
            powers[i].push_back(powers[i].back() * subs[i]);
            check(powers[i].back());
        }
        return powers[i][k];
    };

    Polynomial out(out_dim);
    for (const auto& [alpha, c] : terms_) {
        Polynomial term = Polynomial::constant(out_dim, c);
        for (int i = 0; i < dim_; ++i) {
            if (alpha[i] > 0) term = term * power(i, alpha[i]);
        }
        out += term;
        check(out);
    }
    return out;
}

Polynomial Polynomial::pruned(double tol) const {
    Polynomial out(dim_);
    for (const auto& [alpha, c] : terms_) {
        if (std::abs(c) > tol) out.add_term(alpha, c);
    }
    return out;
}

double Polynomial::max_nonconstant_coeff() const {
    double m = 0.0;
    for (const auto& [alpha, c] : terms_) {
        if (alpha.degree() > 0) m = std::max(m, std::abs(c));
    }
    return m;
}

std::vector<Complex> Polynomial::univariate_coefficients() const {
    if (dim_ != 1) throw std::invalid_argument("univariate_coefficients needs a one-variable polynomial");
    std::vector<Complex> out(std::max(degree(), 0) + 1, Complex{});
    for (const auto& [alpha, c] : terms_) out[alpha[0]] = c;
    return out;
}

Jet Polynomial::to_jet(const Vector& base, int cap) const {
    const int deg = std::max(degree(), 0);
    std::vector<std::vector<Jet>> powers(dim_);
    for (int i = 0; i < dim_; ++i) {
        const Jet zi = Jet::coordinate(dim_, cap, base, i);
        powers[i].push_back(Jet::constant(dim_, cap, base, 1.0));
        for (int k = 1; k <= deg; ++k) powers[i].push_back(powers[i].back() * zi);
    }
    Jet out(dim_, cap, base);
    for (const auto& [alpha, c] : terms_) {
        Jet term = powers[0][alpha[0]];
        for (int i = 1; i < dim_; ++i) {
            if (alpha[i] > 0) term = term * powers[i][alpha[i]];
        }
        out += term * c;
    }
    return out;
}

// --- PolyMap -----------------------------------------------------------------

PolyMap::PolyMap(std::vector<Polynomial> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw std::invalid_argument("polynomial map needs at least one component");
    for (const auto& c : comps_) {
        if (c.dim() != dim()) throw std::invalid_argument("polynomial map must be a self-map of C^d");
    }
    partials_.resize(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        for (int j = 0; j < dim(); ++j) partials_[i].push_back(comps_[i].derivative(j));
    }
}

PolyMap PolyMap::identity(int dim) {
    std::vector<Polynomial> comps;
    for (int i = 0; i < dim; ++i) comps.push_back(Polynomial::variable(dim, i));
    return PolyMap(std::move(comps));
}

PolyMap PolyMap::affine(const Matrix& A, const Vector& b) {
    const int d = static_cast<int>(A.rows());
    std::vector<Polynomial> comps;
    for (int i = 0; i < d; ++i) {
        Polynomial p = Polynomial::constant(d, b[i]);
        for (int j = 0; j < d; ++j) p.add_term(MultiIndex::unit(d, j), A(i, j));
        comps.push_back(std::move(p));
    }
    return PolyMap(std::move(comps));
}

int PolyMap::degree() const {
    int deg = 0;
    for (const auto& c : comps_) deg = std::max(deg, c.degree());
    return deg;
}

std::size_t PolyMap::term_count() const {
    std::size_t n = 0;
    for (const auto& c : comps_) n += c.term_count();
    return n;
}

Vector PolyMap::operator()(const Vector& z) const {
    Vector out(dim());
    for (int i = 0; i < dim(); ++i) out[i] = comps_[i](z);
    return out;
}

Matrix PolyMap::jacobian(const Vector& z) const {
    Matrix J(dim(), dim());
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) J(i, j) = partials_[i][j](z);
    }
    return J;
}

PolyMap PolyMap::compose(const PolyMap& inner, std::size_t max_terms) const {
    if (inner.dim() != dim()) throw std::invalid_argument("composition dimension mismatch");
    std::vector<Polynomial> comps;
    for (const auto& c : comps_) comps.push_back(c.compose(inner.comps_, max_terms));
    return PolyMap(std::move(comps));
}

bool PolyMap::is_affine() const { return degree() <= 1; }

JetMap PolyMap::to_jet_map(const Vector& base, int cap) const {
    std::vector<Jet> jets;
    for (const auto& c : comps_) jets.push_back(c.to_jet(base, cap));
    return JetMap(std::move(jets));
}

}  // namespace holodyn
