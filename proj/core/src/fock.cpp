#include "holodyn/fock.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "holodyn/error.hpp"
#include "holodyn/linalg.hpp"

namespace holodyn {

namespace {

constexpr double kLossThreshold = 1e-14;

std::string format_double(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

// Jet-side degree estimate: the top degree, or "unbounded" when the jet is
// populated all the way to its cap.
int apparent_degree(const Jet& j, bool* saturated) {
    const int top = j.top_degree(0.0);
    if (top >= j.cap()) *saturated = true;
    return std::max(top, 0);
}

}  // namespace

TruncatedSpaceModel::TruncatedSpaceModel(int d_, int N_) : d(d_), N(N_) {
    if (d < 1 || N < 0) throw std::invalid_argument("model needs d >= 1 and N >= 0");
    basis = multi_indices_upto(d, N);
    weights.reserve(basis.size());
    for (const auto& a : basis) weights.push_back(std::exp(0.5 * a.log_factorial()));
}

double fock_weight_ratio(const MultiIndex& alpha, const MultiIndex& beta) {
    double num = 1.0;
    double den = 1.0;
    for (int i = 0; i < alpha.dim(); ++i) {
        const int a = alpha[static_cast<std::size_t>(i)];
        const int b = beta[static_cast<std::size_t>(i)];
        for (int k = std::min(a, b) + 1; k <= std::max(a, b); ++k) (a > b ? num : den) *= k;
    }
    return std::sqrt(num / den);
}

FockOperatorMatrix operator_matrix(const Jet& u, const JetMap& f, int N) {
    const int d = u.dim();
    if (f.dim_in() != d || f.dim_out() != d) throw StructuralError("weight and map dimensions differ");
    if (u.base().norm() != 0.0 || f.base().norm() != 0.0) throw StructuralError("Fock model jets must be based at 0");
    const int cap = std::min(u.cap(), f.cap());
    if (cap < N) throw InsufficientDegreeError("jets must carry at least degree N");

    FockOperatorMatrix m;
    m.d = d;
    m.N = N;
    m.basis = multi_indices_upto(d, N);
    m.fixes_origin = f.value().norm() == 0.0;
    const std::size_t n = m.basis.size();
    m.entries = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));

    bool saturated = false;
    int deg_f = 0;
    for (const auto& c : f.components()) deg_f = std::max(deg_f, apparent_degree(c.truncated(cap), &saturated));
    const int deg_u = apparent_degree(u.truncated(cap), &saturated);
    m.truncation_loss = saturated ? true : cap < N * deg_f + deg_u;

    // f^beta from f^(beta - e_i) along the graded-lex order.
    std::vector<Jet> powers;
    powers.reserve(n);
    const Vector zero = Vector::Zero(d);
    for (std::size_t j = 0; j < n; ++j) {
        const MultiIndex& beta = m.basis[j];
        if (beta.degree() == 0) {
            powers.push_back(Jet::constant(d, cap, zero, 1.0));
            continue;
        }
        int i = 0;
        while (beta[static_cast<std::size_t>(i)] == 0) ++i;
        const std::size_t parent = grlex_rank(beta.minus_unit(i));
        powers.push_back(jet_multiply(powers[parent], f[static_cast<std::size_t>(i)].truncated(cap)));
    }

    const Jet ut = u.truncated(cap);
    const MonomialTable& table = ut.table();
    for (std::size_t j = 0; j < n; ++j) {
        const Jet col = jet_multiply(ut, powers[j]);
        const auto coeffs = col.coefficients();
        for (std::size_t i = 0; i < n; ++i) {
            const Complex c = coeffs[i];
            if (c != Complex{}) m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                c * fock_weight_ratio(m.basis[i], m.basis[j]);
        }
        if (N < cap) {
            for (std::size_t i = table.degree_begin(N + 1); i < table.size(); ++i) {
                if (std::abs(coeffs[i]) > kLossThreshold) {
                    m.truncation_loss = true;
                    break;
                }
            }
        }
    }
    return m;
}

FockOperatorMatrix operator_matrix(const Weight& u, const PolyMap& f, int N) {
    const int d = f.dim();
    if (u.dim() != d) throw StructuralError("weight and map dimensions differ");
    const int deg_f = std::max(f.degree(), 1);
    int deg_u = N;
    if (u.kind() == Weight::Kind::Polynomial) deg_u = std::max(u.polynomial().degree(), 0);
    // One degree of headroom so an exact polynomial never looks saturated.
    const int cap = std::max({N, N * deg_f + deg_u, deg_f}) + 1;
    const Vector zero = Vector::Zero(d);
    return operator_matrix(u.jet_at(zero, cap), f.to_jet_map(zero, cap), N);
}

double truncated_norm(const FockOperatorMatrix& m) { return spectral_norm(m.entries); }

RestrictionProfile restriction_norm_profile(const FockOperatorMatrix& m) {
    RestrictionProfile prof;
    prof.truncation_loss = m.truncation_loss;
    if (!m.fixes_origin) prof.warning = "f(0) != 0: the subspaces V_{0,n} are not invariant";
    const auto total = static_cast<Eigen::Index>(m.basis.size());
    for (int n = 0; n <= m.N; ++n) {
        const auto first = static_cast<Eigen::Index>(grlex_rank(multi_indices(m.d, n).front()));
        prof.levels.push_back(n);
        prof.norms.push_back(spectral_norm(m.entries.rightCols(total - first)));
    }
    return prof;
}

std::vector<NormSweepRow> norm_sweep(const Weight& u, const PolyMap& f, const std::vector<int>& caps) {
    std::vector<NormSweepRow> rows;
    for (int N : caps) {
        const auto m = operator_matrix(u, f, N);
        rows.push_back({N, truncated_norm(m), m.truncation_loss});
    }
    return rows;
}

std::vector<double> block_log_norms(const Weight& u, const PolyMap& f, int n, int shift, int k_max,
                                    BlockBasis basis) {
    if (n < 0 || shift < 0 || k_max < 1) throw std::invalid_argument("block_log_norms needs n, shift >= 0, k >= 1");
    const int d = f.dim();
    const int top = n + shift * k_max;
    const auto m = operator_matrix(u, f, top);

    // Graded block: columns of degree j, rows of degree j + shift.
    const auto block = [&](int j) {
        const auto cols = multi_indices(d, j);
        const auto rows = multi_indices(d, j + shift);
        Matrix b(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (std::size_t r = 0; r < rows.size(); ++r) {
                Complex v = m.entries(static_cast<Eigen::Index>(grlex_rank(rows[r])),
                                      static_cast<Eigen::Index>(grlex_rank(cols[c])));
                if (basis == BlockBasis::Coefficient) v /= fock_weight_ratio(rows[r], cols[c]);
                b(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
            }
        }
        return b;
    };

    std::vector<double> out;
    Matrix product = block(n);
    out.push_back(std::log(spectral_norm(product)));
    for (int k = 2; k <= k_max; ++k) {
        product = block(n + (k - 1) * shift) * product;
        out.push_back(std::log(spectral_norm(product)));
    }
    return out;
}

AssumptionReport assumption_witness(const TruncatedSpaceModel& model, int n_max) {
    AssumptionReport rep;
    for (int n = 0; n <= n_max; ++n) {
        LevelWitness lw;
        lw.n = n;
        lw.realized = n <= model.N;
        if (lw.realized) lw.witnesses = multi_indices(model.d, n);
        rep.levels.push_back(std::move(lw));
    }
    if (model.d == 1) {
        rep.trace.push_back("d = 1: m_0^n / m_0^{n+1} is spanned by z^n, so dim V_{0,n}/V_{0,n+1} is 0 or 1");
        rep.trace.push_back("V infinite-dimensional: V_{0,n} != 0 for every n, and the quotients are nonzero "
                            "infinitely often");
        rep.trace.push_back("in this model e_n realizes z^n for every n <= N");
    }
    return rep;
}

PolyMap conjugate_by_translation(const PolyMap& f, const Vector& c) {
    const int d = f.dim();
    if (c.size() != d) throw StructuralError("translation vector has the wrong dimension");
    const PolyMap shift_in = PolyMap::affine(Matrix::Identity(d, d), c);
    const PolyMap shifted = f.compose(shift_in);
    std::vector<Polynomial> comps;
    for (int i = 0; i < d; ++i)
        comps.push_back((shifted[static_cast<std::size_t>(i)] - Polynomial::constant(d, c[i])).pruned(0.0));
    return PolyMap(std::move(comps));
}

std::string norm_sweep_csv(const std::vector<NormSweepRow>& rows) {
    std::string out = "N,norm,loss\n";
    for (const auto& r : rows) out += std::to_string(r.N) + "," + format_double(r.norm) + "," +
                                      (r.truncation_loss ? "*" : "") + "\n";
    return out;
}

std::string restriction_profile_csv(const RestrictionProfile& profile) {
    std::string out = "n,restriction_norm,loss\n";
    for (std::size_t i = 0; i < profile.levels.size(); ++i)
        out += std::to_string(profile.levels[i]) + "," + format_double(profile.norms[i]) + "," +
               (profile.truncation_loss ? "*" : "") + "\n";
    return out;
}

}  // namespace holodyn
