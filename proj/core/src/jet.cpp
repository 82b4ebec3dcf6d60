#include "holodyn/jet.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "holodyn/error.hpp"

namespace holodyn {

namespace {

constexpr std::size_t kMaxProductTable = 1500;

}  // namespace

MonomialTable::MonomialTable(int dim, int cap)
    : dim_(dim), cap_(cap), indices_(multi_indices_upto(dim, cap)) {
    offsets_.resize(cap + 2);
    for (int n = 0; n <= cap + 1; ++n) offsets_[n] = n == 0 ? 0 : binomial(n - 1 + dim, dim);

    const std::size_t t = indices_.size();
    if (t <= kMaxProductTable) {
        product_.assign(t * t, -1);
        for (std::size_t i = 0; i < t; ++i) {
            for (std::size_t j = i; j < t; ++j) {
                if (indices_[i].degree() + indices_[j].degree() > cap) break;
                const auto k = static_cast<std::int32_t>(grlex_rank(indices_[i] + indices_[j]));
                product_[i * t + j] = k;
                product_[j * t + i] = k;
            }
        }
    }
}

std::shared_ptr<const MonomialTable> MonomialTable::get(int dim, int cap) {
    if (dim < 1 || cap < 0) throw StructuralError("jet requires dim >= 1 and cap >= 0");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const MonomialTable>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{dim, cap}];
    if (!slot) slot = std::make_shared<const MonomialTable>(dim, cap);
    return slot;
}

std::size_t MonomialTable::position(const MultiIndex& alpha) const {
    if (alpha.dim() != dim_) throw StructuralError("multi-index dimension does not match jet");
    return grlex_rank(alpha);
}

std::ptrdiff_t MonomialTable::product(std::size_t i, std::size_t j) const {
    if (!product_.empty()) return product_[i * indices_.size() + j];
    if (indices_[i].degree() + indices_[j].degree() > cap_) return -1;
    return static_cast<std::ptrdiff_t>(grlex_rank(indices_[i] + indices_[j]));
}

// --- Jet ---------------------------------------------------------------------

Jet::Jet(int dim, int cap, Vector base)
    : table_(MonomialTable::get(dim, cap)), base_(std::move(base)), c_(table_->size(), Complex{}) {
    if (base_.size() != dim) throw StructuralError("jet base point has wrong dimension");
}

Jet Jet::constant(int dim, int cap, const Vector& base, Complex c) {
    Jet j(dim, cap, base);
    j.c_[0] = c;
    return j;
}

Jet Jet::coordinate(int dim, int cap, const Vector& base, int i) {
    Jet j(dim, cap, base);
    j.c_[0] = base[i];
    if (cap >= 1) j.c_[1 + i] = 1.0;
    return j;
}

Jet Jet::monomial(int dim, int cap, const Vector& base, const MultiIndex& alpha, Complex c) {
    Jet j(dim, cap, base);
    if (alpha.degree() <= cap) j.set_coeff(alpha, c);
    return j;
}

Complex Jet::coeff(const MultiIndex& alpha) const {
    if (alpha.dim() != dim()) throw StructuralError("multi-index dimension does not match jet");
    if (alpha.degree() > cap()) return {};
    return c_[table_->position(alpha)];
}

void Jet::set_coeff(const MultiIndex& alpha, Complex c) {
    if (alpha.degree() > cap()) throw StructuralError("multi-index degree exceeds jet cap");
    c_[table_->position(alpha)] = c;
}

std::vector<Complex> Jet::homogeneous_part(int n) const {
    if (n < 0 || n > cap()) throw InsufficientDegreeError("insufficient jet degree");
    return {c_.begin() + static_cast<std::ptrdiff_t>(table_->degree_begin(n)),
            c_.begin() + static_cast<std::ptrdiff_t>(table_->degree_end(n))};
}

std::optional<int> Jet::order(double tol) const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (std::abs(c_[i]) > tol) return table_->degree(i);
    }
    return std::nullopt;
}

int Jet::top_degree(double tol) const {
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (std::abs(c_[i]) > tol) return table_->degree(i);
    }
    return -1;
}

Jet Jet::truncated(int new_cap) const {
    Jet out(dim(), new_cap, base_);
    const std::size_t n = std::min(out.c_.size(), c_.size());
    std::copy_n(c_.begin(), n, out.c_.begin());
    return out;
}

Jet Jet::with_constant(Complex c) const {
    Jet out = *this;
    out.c_[0] = c;
    return out;
}

void Jet::require_compatible(const Jet& other) const {
    if (other.dim() != dim() || other.cap() != cap())
        throw StructuralError("jets differ in dimension or degree cap");
    const double tol = Tolerances{}.base * rel_scale(base_.norm());
    if ((other.base_ - base_).norm() > tol) throw StructuralError("jets are based at different points");
}

Jet& Jet::operator+=(const Jet& other) {
    require_compatible(other);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& other) {
    require_compatible(other);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
    return *this;
}

Jet& Jet::operator*=(Complex s) {
    for (auto& c : c_) c *= s;
    return *this;
}

Jet Jet::operator-() const {
    Jet out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Jet jet_multiply(const Jet& a, const Jet& b) {
    a.require_compatible(b);
    Jet out(a.dim(), a.cap(), a.base());
    const auto& table = *a.table_;
    const std::size_t t = table.size();
    for (std::size_t i = 0; i < t; ++i) {
        const Complex ai = a.c_[i];
        if (ai == Complex{}) continue;
        for (std::size_t j = 0; j < t; ++j) {
            const std::ptrdiff_t k = table.product(i, j);
            if (k < 0) break;  // degrees only grow along j
            out.c_[static_cast<std::size_t>(k)] += ai * b.c_[j];
        }
    }
    return out;
}

Jet jet_exp(const Jet& a) {
    const Jet nilpotent = a.with_constant(0.0);
    Jet term = Jet::constant(a.dim(), a.cap(), a.base(), 1.0);
    Jet sum = term;
    for (int k = 1; k <= a.cap(); ++k) {
        term = jet_multiply(term, nilpotent) * Complex(1.0 / k);
        sum += term;
    }
    return sum * std::exp(a.value());
}

// --- JetMap ------------------------------------------------------------------

JetMap::JetMap(std::vector<Jet> components) : components_(std::move(components)) {
    if (components_.empty()) throw StructuralError("jet map needs at least one component");
    const Jet& first = components_.front();
    for (const Jet& c : components_) {
        if (c.dim() != first.dim() || c.cap() != first.cap() ||
            (c.base() - first.base()).norm() > Tolerances{}.base * rel_scale(first.base().norm()))
            throw StructuralError("jet map components must share dimension, cap and base point");
    }
}

JetMap JetMap::affine(const Matrix& A, const Vector& b, int cap, const Vector& base) {
    const int d_in = static_cast<int>(A.cols());
    const Vector value = A * base + b;
    std::vector<Jet> comps;
    comps.reserve(A.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        Jet j = Jet::constant(d_in, cap, base, value[i]);
        if (cap >= 1) {
            for (int k = 0; k < d_in; ++k) j.set_coeff(MultiIndex::unit(d_in, k), A(i, k));
        }
        comps.push_back(std::move(j));
    }
    return JetMap(std::move(comps));
}

Vector JetMap::value() const {
    Vector v(dim_out());
    for (int i = 0; i < dim_out(); ++i) v[i] = components_[i].value();
    return v;
}

Matrix JetMap::linear_part() const {
    Matrix m = Matrix::Zero(dim_out(), dim_in());
    if (cap() < 1) return m;
    for (int i = 0; i < dim_out(); ++i) {
        for (int j = 0; j < dim_in(); ++j) m(i, j) = components_[i].coefficients()[1 + j];
    }
    return m;
}

Jet jet_compose(const Jet& h, const JetMap& f, double tol_base) {
    if (h.dim() != f.dim_out()) throw StructuralError("composition dimension mismatch");
    const double distance = (f.value() - h.base()).norm();
    if (distance > tol_base * rel_scale(h.base().norm())) throw BaseMismatchError(distance);

    const int cap = std::min(h.cap(), f.cap());
    // Displacements w_i = f_i - f_i(p); the constant is dropped so that
    // truncation stays exact.
    std::vector<Jet> disp;
    disp.reserve(f.dim_out());
    for (const Jet& comp : f.components()) disp.push_back(comp.truncated(cap).with_constant(0.0));

    const auto& htable = h.table();
    const auto& hc = h.coefficients();
    const std::size_t count = htable.degree_end(cap);

    // powers[k] = w^{alpha_k}, built by peeling one factor off alpha_k.
    std::vector<Jet> powers;
    powers.reserve(count);
    Jet result(f.dim_in(), cap, f.base());
    for (std::size_t k = 0; k < count; ++k) {
        const MultiIndex& alpha = htable.index(k);
        if (k == 0) {
            powers.push_back(Jet::constant(f.dim_in(), cap, f.base(), 1.0));
        } else {
            int i = 0;
            while (alpha[i] == 0) ++i;
            const std::size_t parent = htable.position(alpha.minus_unit(i));
            powers.push_back(jet_multiply(powers[parent], disp[i]));
        }
        if (hc[k] != Complex{}) result += powers.back() * hc[k];
    }
    return result;
}

JetMap jet_map_compose(const JetMap& g, const JetMap& f, double tol_base) {
    std::vector<Jet> comps;
    comps.reserve(g.dim_out());
    for (const Jet& gi : g.components()) comps.push_back(jet_compose(gi, f, tol_base));
    return JetMap(std::move(comps));
}

Jet weighted_pullback(const Jet& u, const JetMap& f, const Jet& h, double tol_base) {
    Jet composed = jet_compose(h, f, tol_base);
    const int cap = std::min(u.cap(), composed.cap());
    return jet_multiply(u.truncated(cap), composed.truncated(cap));
}

}  // namespace holodyn
