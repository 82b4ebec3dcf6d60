#pragma once

#include <string>
#include <vector>

#include "holodyn/jet.hpp"
#include "holodyn/multi_index.hpp"
#include "holodyn/polynomial.hpp"
#include "holodyn/types.hpp"
#include "holodyn/weight.hpp"

namespace holodyn {

/// Polynomials of degree <= N in the Fock space of C^d, with orthonormal
/// basis e_alpha = z^alpha / sqrt(alpha!) in graded-lex order.
struct TruncatedSpaceModel {
    int d = 1;
    int N = 0;
    std::vector<MultiIndex> basis;
    std::vector<double> weights;  // sqrt(alpha!)

    TruncatedSpaceModel(int d, int N);
    std::size_t size() const { return basis.size(); }
};

struct FockOperatorMatrix {
    int d = 1;
    int N = 0;
    Matrix entries;  // entry(alpha, beta) = [z^alpha](u f^beta) sqrt(alpha!/beta!)
    std::vector<MultiIndex> basis;
    bool truncation_loss = false;
    bool fixes_origin = true;  // f(0) = 0, so V_{0,n} is invariant
};

/// sqrt(alpha!/beta!) as an exact running product (1 when alpha = beta).
double fock_weight_ratio(const MultiIndex& alpha, const MultiIndex& beta);

/// Matrix of h -> u (h o f) on the model, from jets based at 0. Entries are
/// exact up to degree N; loss is flagged when u f^beta has a coefficient
/// above degree N of modulus > 1e-14, or when the jet caps are too small to
/// tell.
FockOperatorMatrix operator_matrix(const Jet& u, const JetMap& f, int N);

/// Same, expanding a polynomial map and weight to the jet cap they need.
FockOperatorMatrix operator_matrix(const Weight& u, const PolyMap& f, int N);

/// Largest singular value; a lower bound for the norm of uC_f on the space.
double truncated_norm(const FockOperatorMatrix& m);

struct RestrictionProfile {
    std::vector<int> levels;
    std::vector<double> norms;
    bool truncation_loss = false;
    std::string warning;
};

/// Norm of the operator restricted to span{e_beta : |beta| >= n} for n <= N.
RestrictionProfile restriction_norm_profile(const FockOperatorMatrix& m);

struct NormSweepRow {
    int N = 0;
    double norm = 0.0;
    bool truncation_loss = false;
};

std::vector<NormSweepRow> norm_sweep(const Weight& u, const PolyMap& f, const std::vector<int>& caps);

enum class BlockBasis { Coefficient, Fock };

/// log of the norm of the k-fold product of graded blocks
/// (degree j -> degree j + shift) starting at level n, for k = 1..k_max.
/// In the coefficient basis the blocks are the raw Taylor coefficients.
std::vector<double> block_log_norms(const Weight& u, const PolyMap& f, int n, int shift, int k_max,
                                    BlockBasis basis);

struct LevelWitness {
    int n = 0;
    bool realized = false;
    std::vector<MultiIndex> witnesses;
};

struct AssumptionReport {
    std::vector<LevelWitness> levels;
    std::vector<std::string> trace;
};

/// For each n <= n_max, a basis vector of the model realizing every
/// degree-n monomial class (or "not realized at cap" when n > N).
AssumptionReport assumption_witness(const TruncatedSpaceModel& model, int n_max);

/// g(w) = f(w + c) - c, moving the point c to the origin.
PolyMap conjugate_by_translation(const PolyMap& f, const Vector& c);

/// CSV tables; rows with truncation loss carry "*" in the loss column.
std::string norm_sweep_csv(const std::vector<NormSweepRow>& rows);
std::string restriction_profile_csv(const RestrictionProfile& profile);

}  // namespace holodyn
