#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace holodyn {

/// Exponent vector of a monomial z^alpha in d variables.
///
/// Ordering is graded lexicographic: lower total degree first, and within a
/// degree the exponent vectors run lexicographically downwards, so for d = 2,
/// n = 2 the order is (2,0) < (1,1) < (0,2). Matrix bases throughout the
/// library use this order.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries);
    MultiIndex(std::initializer_list<int> entries);

    static MultiIndex zero(int dim);
    static MultiIndex unit(int dim, int i);

    int dim() const noexcept { return static_cast<int>(e_.size()); }
    int degree() const noexcept { return degree_; }
    int operator[](std::size_t i) const { return e_[i]; }
    std::span<const int> entries() const noexcept { return e_; }

    MultiIndex operator+(const MultiIndex& other) const;
    // Subtract a unit vector; requires entries()[i] > 0.
    MultiIndex minus_unit(int i) const;

    // log(alpha!) = sum log(alpha_i!)
    double log_factorial() const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

private:
    std::vector<int> e_;
    int degree_ = 0;
};

/// All multi-indices of length d and total degree exactly n, graded-lex order.
std::vector<MultiIndex> multi_indices(int d, int n);

/// All multi-indices of length d with total degree <= n, graded-lex order.
std::vector<MultiIndex> multi_indices_upto(int d, int n);

/// Binomial coefficient C(n, k) as an exact integer (0 when k < 0 or k > n).
std::size_t binomial(int n, int k);

/// Number of monomials of degree exactly n in d variables: C(n+d-1, d-1).
std::size_t homogeneous_count(int d, int n);

/// Position of alpha in multi_indices_upto(alpha.dim(), N) for any N >= |alpha|.
std::size_t grlex_rank(const MultiIndex& alpha);

/// Position of alpha inside multi_indices(alpha.dim(), |alpha|).
std::size_t grlex_rank_in_degree(const MultiIndex& alpha);

}  // namespace holodyn
