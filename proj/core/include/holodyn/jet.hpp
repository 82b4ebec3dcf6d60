#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "holodyn/multi_index.hpp"
#include "holodyn/types.hpp"

namespace holodyn {

/// Dense graded-lex layout of all monomials of degree <= cap in dim variables,
/// with a precomputed product index. Tables are immutable and shared.
class MonomialTable {
public:
    static std::shared_ptr<const MonomialTable> get(int dim, int cap);

    int dim() const noexcept { return dim_; }
    int cap() const noexcept { return cap_; }
    std::size_t size() const noexcept { return indices_.size(); }
    const MultiIndex& index(std::size_t i) const { return indices_[i]; }
    int degree(std::size_t i) const { return indices_[i].degree(); }

    // [degree_begin(n), degree_end(n)) is the contiguous block of degree n.
    std::size_t degree_begin(int n) const { return offsets_[n]; }
    std::size_t degree_end(int n) const { return offsets_[n + 1]; }

    std::size_t position(const MultiIndex& alpha) const;
    // Position of index(i) + index(j), or -1 when the sum exceeds the cap.
    std::ptrdiff_t product(std::size_t i, std::size_t j) const;

    MonomialTable(int dim, int cap);

private:
    int dim_;
    int cap_;
    std::vector<MultiIndex> indices_;
    std::vector<std::size_t> offsets_;
    std::vector<std::int32_t> product_;  // empty when the table is too large
};

/// Truncated Taylor expansion at a base point: sum over |alpha| <= cap of
/// c_alpha * (z - base)^alpha. All arithmetic truncates eagerly to the cap.
class Jet {
public:
    Jet(int dim, int cap, Vector base);

    static Jet constant(int dim, int cap, const Vector& base, Complex c);
    /// The coordinate function z_i, i.e. base_i + w_i.
    static Jet coordinate(int dim, int cap, const Vector& base, int i);
    /// c * (z - base)^alpha; zero if |alpha| > cap.
    static Jet monomial(int dim, int cap, const Vector& base, const MultiIndex& alpha, Complex c = 1.0);

    int dim() const noexcept { return table_->dim(); }
    int cap() const noexcept { return table_->cap(); }
    const Vector& base() const noexcept { return base_; }
    const MonomialTable& table() const noexcept { return *table_; }

    Complex coeff(const MultiIndex& alpha) const;
    void set_coeff(const MultiIndex& alpha, Complex c);
    Complex value() const { return c_[0]; }

    std::span<const Complex> coefficients() const noexcept { return c_; }
    std::span<Complex> coefficients() noexcept { return c_; }

    /// Coefficients of the degree-n homogeneous part, ordered as multi_indices(dim, n).
    std::vector<Complex> homogeneous_part(int n) const;

    /// Lowest degree carrying a coefficient with modulus > tol; empty if none.
    std::optional<int> order(double tol = 0.0) const;

    /// Largest degree carrying a coefficient with modulus > tol; -1 if none.
    int top_degree(double tol = 0.0) const;

    Jet truncated(int new_cap) const;
    Jet with_constant(Complex c) const;

    Jet& operator+=(const Jet& other);
    Jet& operator-=(const Jet& other);
    Jet& operator*=(Complex s);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, Complex s) { return a *= s; }
    friend Jet operator*(Complex s, Jet a) { return a *= s; }
    Jet operator-() const;

private:
    std::shared_ptr<const MonomialTable> table_;
    Vector base_;
    std::vector<Complex> c_;

    void require_compatible(const Jet& other) const;
    friend Jet jet_multiply(const Jet&, const Jet&);
};

Jet jet_multiply(const Jet& a, const Jet& b);
inline Jet operator*(const Jet& a, const Jet& b) { return jet_multiply(a, b); }

/// exp of a jet: e^{a_0} * sum_k (a - a_0)^k / k!, truncated.
Jet jet_exp(const Jet& a);

/// A holomorphic map germ C^dim_in -> C^dim_out, one jet per output coordinate.
class JetMap {
public:
    explicit JetMap(std::vector<Jet> components);

    /// Linear map z -> A z + b expanded at `base`.
    static JetMap affine(const Matrix& A, const Vector& b, int cap, const Vector& base);

    int dim_in() const { return components_.front().dim(); }
    int dim_out() const { return static_cast<int>(components_.size()); }
    int cap() const { return components_.front().cap(); }
    const Vector& base() const { return components_.front().base(); }
    const Jet& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<Jet>& components() const noexcept { return components_; }

    /// f(base), the constant terms.
    Vector value() const;
    /// Jacobian at base: entry (i, j) is the coefficient of w_j in component i.
    Matrix linear_part() const;

private:
    std::vector<Jet> components_;
};

/// Taylor coefficients of h o f at f.base(), truncated to min(h.cap, f.cap).
/// h must be based at f(base) up to tol_base * (1 + |h.base|).
Jet jet_compose(const Jet& h, const JetMap& f, double tol_base = Tolerances{}.base);

/// g o f as a jet map at f.base().
JetMap jet_map_compose(const JetMap& g, const JetMap& f, double tol_base = Tolerances{}.base);

/// u * (h o f): the weighted pullback of h along f.
Jet weighted_pullback(const Jet& u, const JetMap& f, const Jet& h, double tol_base = Tolerances{}.base);

}  // namespace holodyn
