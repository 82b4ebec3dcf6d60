#include "holodyn/linalg.hpp"

#include <algorithm>
#include <limits>

namespace holodyn {

std::vector<Complex> eigenvalues(const Matrix& m) {
    if (m.rows() == 0) return {};
    Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> singular_values(const Matrix& m) {
    if (m.size() == 0) return {};
    Eigen::BDCSVD<Matrix> svd(m);
    const auto& sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

double spectral_norm(const Matrix& m) {
    const auto sv = singular_values(m);
    return sv.empty() ? 0.0 : sv.front();
}

int numerical_rank(const Matrix& m, double rel_tol) {
    const auto sv = singular_values(m);
    if (sv.empty() || sv.front() == 0.0) return 0;
    const double cut = rel_tol * sv.front();
    return static_cast<int>(std::count_if(sv.begin(), sv.end(), [cut](double s) { return s > cut; }));
}

Matrix null_space(const Matrix& m, double rel_tol) {
    const Eigen::Index cols = m.cols();
    if (m.rows() == 0) return Matrix::Identity(cols, cols);
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cut = sv.size() > 0 ? rel_tol * sv[0] : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv[i] > cut && sv[i] > 0.0) ++rank;
    }
    return svd.matrixV().rightCols(cols - rank);
}

double condition_number(const Matrix& m) {
    const auto sv = singular_values(m);
    if (sv.empty()) return 1.0;
    if (sv.back() == 0.0) return std::numeric_limits<double>::infinity();
    return sv.front() / sv.back();
}

double multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const Complex& x : a) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_j = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double dist = std::abs(x - b[j]) / std::max(1.0, std::abs(b[j]));
            if (dist < best) {
                best = dist;
                best_j = j;
            }
        }
        used[best_j] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace holodyn
