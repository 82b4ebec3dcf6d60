#include "holodyn/graded.hpp"

#include <map>

#include "holodyn/error.hpp"
#include "holodyn/linalg.hpp"

namespace holodyn {

namespace {

using HomogeneousPoly = std::map<MultiIndex, Complex>;

HomogeneousPoly multiply(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    HomogeneousPoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
    }
    return out;
}

}  // namespace

GradedOperatorMatrix graded_matrix_formula(Complex u_at_p, const Matrix& A, int n) {
    if (A.rows() != A.cols()) throw StructuralError("linear part must be square");
    if (n < 0) throw std::invalid_argument("graded degree must be non-negative");
    const int d = static_cast<int>(A.rows());

    // Row i of A as the linear form sum_j A_ij z_j.
    std::vector<HomogeneousPoly> forms(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (A(i, j) != Complex{}) forms[i][MultiIndex::unit(d, j)] = A(i, j);
        }
    }

    GradedOperatorMatrix out{n, d, Matrix::Zero(0, 0), multi_indices(d, n)};
    const auto size = static_cast<Eigen::Index>(out.basis.size());
    out.entries = Matrix::Zero(size, size);
    for (Eigen::Index col = 0; col < size; ++col) {
        const MultiIndex& beta = out.basis[col];
        HomogeneousPoly image{{MultiIndex::zero(d), u_at_p}};
        for (int i = 0; i < d; ++i) {
            for (int k = 0; k < beta[i]; ++k) image = multiply(image, forms[i]);
        }
        for (const auto& [alpha, c] : image) {
            out.entries(static_cast<Eigen::Index>(grlex_rank_in_degree(alpha)), col) = c;
        }
    }
    return out;
}

GradedOperatorMatrix graded_matrix_bruteforce(const Jet& u, const JetMap& f, int n, double tol_base) {
    if (u.cap() < n || f.cap() < n) throw InsufficientDegreeError("insufficient jet degree");
    if (f.dim_in() != f.dim_out()) throw StructuralError("graded matrices need a self-map");
    const int d = f.dim_in();

    const Jet u_n = u.truncated(n);
    std::vector<Jet> comps;
    for (const Jet& c : f.components()) comps.push_back(c.truncated(n));
    const JetMap f_n(std::move(comps));
    const Vector target = f_n.value();

    GradedOperatorMatrix out{n, d, Matrix::Zero(0, 0), multi_indices(d, n)};
    const auto size = static_cast<Eigen::Index>(out.basis.size());
    out.entries = Matrix::Zero(size, size);
    for (Eigen::Index col = 0; col < size; ++col) {
        const Jet h = Jet::monomial(d, n, target, out.basis[col]);
        const auto part = weighted_pullback(u_n, f_n, h, tol_base).homogeneous_part(n);
        for (Eigen::Index row = 0; row < size; ++row) out.entries(row, col) = part[row];
    }
    return out;
}

std::vector<Complex> graded_eigenvalues(const GradedOperatorMatrix& m) {
    if (m.entries.rows() != m.entries.cols()) throw StructuralError("eigenvalues need a square matrix");
    return eigenvalues(m.entries);
}

std::vector<Complex> graded_eigenvalue_law(Complex u_at_p, const std::vector<Complex>& lambdas, int n) {
    const int d = static_cast<int>(lambdas.size());
    std::vector<Complex> out;
    for (const MultiIndex& alpha : multi_indices(d, n)) {
        Complex v = u_at_p;
        for (int i = 0; i < d; ++i) {
            for (int k = 0; k < alpha[i]; ++k) v *= lambdas[i];
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace holodyn
