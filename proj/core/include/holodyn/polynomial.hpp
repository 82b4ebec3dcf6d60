#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "holodyn/jet.hpp"
#include "holodyn/multi_index.hpp"
#include "holodyn/types.hpp"

namespace holodyn {

inline constexpr std::size_t kDefaultTermCap = 4096;

/// Sparse polynomial in dim complex variables with double complex coefficients.
class Polynomial {
public:
    using Terms = std::map<MultiIndex, Complex>;

    explicit Polynomial(int dim);
    Polynomial(int dim, Terms terms);

    static Polynomial constant(int dim, Complex c);
    static Polynomial variable(int dim, int i);
    /// One-variable polynomial from ascending coefficients.
    static Polynomial univariate(const std::vector<Complex>& ascending);

    int dim() const noexcept { return dim_; }
    /// Maximal total degree of a stored term; -1 for the zero polynomial.
    int degree() const;
    std::size_t term_count() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Complex coeff(const MultiIndex& alpha) const;
    void add_term(const MultiIndex& alpha, Complex c);

    Complex operator()(const Vector& z) const;
    Complex operator()(Complex z) const;

    Polynomial derivative(int i) const;

    /// this(subs[0], ..., subs[dim-1]). Throws TermOverflowError once an
    /// intermediate result exceeds max_terms.
    Polynomial compose(std::span<const Polynomial> subs, std::size_t max_terms = kDefaultTermCap) const;

    /// Drops coefficients with modulus <= tol.
    Polynomial pruned(double tol) const;

    /// Largest coefficient modulus among terms of positive degree.
    double max_nonconstant_coeff() const;

    /// Dense ascending coefficients of a one-variable polynomial.
    std::vector<Complex> univariate_coefficients() const;

    /// Exact Taylor expansion at base, truncated to cap.
    Jet to_jet(const Vector& base, int cap) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(Complex s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, Complex s) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

private:
    int dim_;
    Terms terms_;
};

/// Polynomial self-map of C^d, one Polynomial per output coordinate.
class PolyMap {
public:
    explicit PolyMap(std::vector<Polynomial> components);

    static PolyMap identity(int dim);
    static PolyMap affine(const Matrix& A, const Vector& b);

    int dim() const noexcept { return static_cast<int>(comps_.size()); }
    int degree() const;
    std::size_t term_count() const;
    const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
    const std::vector<Polynomial>& components() const noexcept { return comps_; }

    Vector operator()(const Vector& z) const;
    Matrix jacobian(const Vector& z) const;

    /// this o inner.
    PolyMap compose(const PolyMap& inner, std::size_t max_terms = kDefaultTermCap) const;

    /// True when no component has a term of degree >= 2.
    bool is_affine() const;

    JetMap to_jet_map(const Vector& base, int cap) const;

private:
    std::vector<Polynomial> comps_;
    std::vector<std::vector<Polynomial>> partials_;  // partials_[i][j] = d comp_i / d z_j
};

}  // namespace holodyn
