#pragma once

#include <complex>

#include <Eigen/Dense>

namespace holodyn {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Default numerical tolerances. Every CLI flag that overrides one of these
// writes the effective value back into its output.
struct Tolerances {
    double base = 1e-9;      // relative; composition base-point match
    double eig = 1e-8;       // relative; eigenvalue multiset pairing
    double orbit = 1e-9;     // relative; periodicity residual
    double classify = 1e-9;  // band around |lambda| = 1 (and 0)
    double level = 1e-7;     // relative; grouping of u_r values
    double rank = 1e-9;      // singular values below rank * sigma_max are zero
    double cluster = 1e-6;   // relative; dedup radius for periodic points
    double vanish = 1e-12;   // |u_r(p)| below this counts as zero
};

inline double rel_scale(double norm) { return 1.0 + norm; }

}  // namespace holodyn
