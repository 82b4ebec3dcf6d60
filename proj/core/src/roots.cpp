#include "holodyn/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "holodyn/linalg.hpp"

namespace holodyn {

namespace {

std::span<const Complex> trim(std::span<const Complex> a) {
    std::size_t n = a.size();
    while (n > 0 && a[n - 1] == Complex{}) --n;
    return a.first(n);
}

}  // namespace

Complex horner(std::span<const Complex> a, Complex z, Complex* derivative) {
    Complex p{};
    Complex dp{};
    for (std::size_t k = a.size(); k-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[k];
    }
    if (derivative) *derivative = dp;
    return p;
}

std::vector<Complex> companion_roots(std::span<const Complex> ascending) {
    const auto a = trim(ascending);
    if (a.size() <= 1) return {};
    const auto n = static_cast<Eigen::Index>(a.size() - 1);
    const Complex lead = a.back();
    Matrix c = Matrix::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) c(i, n - 1) = -a[static_cast<std::size_t>(i)] / lead;
    return eigenvalues(c);
}

DurandKernerResult durand_kerner_roots(std::span<const Complex> ascending, int max_iterations, double tol) {
    const auto a = trim(ascending);
    DurandKernerResult out;
    if (a.size() <= 1) {
        out.converged = true;
        return out;
    }
    const std::size_t n = a.size() - 1;
    const Complex lead = a.back();

    // Cauchy bound on the root moduli.
    double bound = 0.0;
    for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(a[k] / lead));
    const double radius = std::min(1.0 + bound, 1e6);

    out.roots.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        out.roots[k] = std::polar(radius * 0.9, angle);
    }

    for (int it = 1; it <= max_iterations; ++it) {
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            Complex denom = lead;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k) denom *= out.roots[k] - out.roots[j];
            }
            if (denom == Complex{}) denom = 1e-300;
            const Complex step = horner(a, out.roots[k]) / denom;
            out.roots[k] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(out.roots[k])));
        }
        out.iterations = it;
        if (worst <= tol) {
            out.converged = true;
            break;
        }
    }

    // Newton polish on the original coefficients.
    for (auto& z : out.roots) {
        for (int k = 0; k < 3; ++k) {
            Complex dp;
            const Complex p = horner(a, z, &dp);
            if (dp == Complex{}) break;
            z -= p / dp;
        }
    }
    return out;
}

}  // namespace holodyn
