#include "holodyn/multi_index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace holodyn {

MultiIndex::MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
    for (int v : e_) {
        if (v < 0) throw std::invalid_argument("multi-index entries must be non-negative");
    }
    degree_ = std::accumulate(e_.begin(), e_.end(), 0);
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zero(int dim) { return MultiIndex(std::vector<int>(dim, 0)); }

MultiIndex MultiIndex::unit(int dim, int i) {
    std::vector<int> e(dim, 0);
    e[i] = 1;
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
    if (other.dim() != dim()) throw std::invalid_argument("multi-index dimension mismatch");
    MultiIndex out = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += other.e_[i];
    out.degree_ += other.degree_;
    return out;
}

MultiIndex MultiIndex::minus_unit(int i) const {
    if (e_[i] == 0) throw std::invalid_argument("multi-index entry already zero");
    MultiIndex out = *this;
    --out.e_[i];
    --out.degree_;
    return out;
}

double MultiIndex::log_factorial() const {
    double s = 0.0;
    for (int v : e_) s += std::lgamma(v + 1.0);
    return s;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // Within a degree: lexicographically larger exponent vector comes first.
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

namespace {

void enumerate(int d, int n, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
    if (static_cast<int>(prefix.size()) == d - 1) {
        prefix.push_back(n);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int k = n; k >= 0; --k) {
        prefix.push_back(k);
        enumerate(d, n - k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> multi_indices(int d, int n) {
    if (d < 1 || n < 0) throw std::invalid_argument("multi_indices requires d >= 1 and n >= 0");
    std::vector<MultiIndex> out;
    out.reserve(homogeneous_count(d, n));
    std::vector<int> prefix;
    prefix.reserve(d);
    enumerate(d, n, prefix, out);
    return out;
}

std::vector<MultiIndex> multi_indices_upto(int d, int n) {
    std::vector<MultiIndex> out;
    for (int k = 0; k <= n; ++k) {
        auto level = multi_indices(d, k);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::size_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

std::size_t homogeneous_count(int d, int n) {
    if (n < 0) return 0;
    return binomial(n + d - 1, d - 1);
}

std::size_t grlex_rank_in_degree(const MultiIndex& alpha) {
    const int d = alpha.dim();
    std::size_t rank = 0;
    int remaining = alpha.degree();
    // Skip every block whose leading exponent is larger than alpha's.
    for (int i = 0; i < d - 1; ++i) {
        const int vars_left = d - i;
        for (int k = remaining; k > alpha[i]; --k) rank += homogeneous_count(vars_left - 1, remaining - k);
        remaining -= alpha[i];
    }
    return rank;
}

std::size_t grlex_rank(const MultiIndex& alpha) {
    // Monomials of degree < n in d variables: C(n-1+d, d).
    const int n = alpha.degree();
    const std::size_t below = n == 0 ? 0 : binomial(n - 1 + alpha.dim(), alpha.dim());
    return below + grlex_rank_in_degree(alpha);
}

}  // namespace holodyn
