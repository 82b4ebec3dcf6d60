#pragma once

#include <cmath>
#include <random>

#include "holodyn/jet.hpp"
#include "holodyn/polynomial.hpp"
#include "holodyn/types.hpp"

namespace holodyn::testing {

inline Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

inline Vector random_vector(std::mt19937_64& rng, int d, double scale = 1.0) {
    Vector v(d);
    for (int i = 0; i < d; ++i) v[i] = random_complex(rng, scale);
    return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, double scale = 1.0) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m(i, j) = random_complex(rng, scale);
    }
    return m;
}

/// Dense random polynomial of degree <= deg.
inline Polynomial random_polynomial(std::mt19937_64& rng, int d, int deg, double scale = 1.0) {
    Polynomial p(d);
    for (const auto& a : multi_indices_upto(d, deg)) p.add_term(a, random_complex(rng, scale));
    return p;
}

inline PolyMap random_map(std::mt19937_64& rng, int d, int deg, double scale = 1.0) {
    std::vector<Polynomial> comps;
    for (int i = 0; i < d; ++i) comps.push_back(random_polynomial(rng, d, deg, scale));
    return PolyMap(std::move(comps));
}

inline Jet random_jet(std::mt19937_64& rng, int d, int cap, const Vector& base, double scale = 1.0) {
    Jet j(d, cap, base);
    for (auto& c : j.coefficients()) c = random_complex(rng, scale);
    return j;
}

inline double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline Polynomial monomial(int d, std::initializer_list<int> alpha, Complex c = 1.0) {
    Polynomial p(d);
    p.add_term(MultiIndex(alpha), c);
    return p;
}

}  // namespace holodyn::testing

namespace holodyn::testing {

/// Taylor coefficient of w^alpha in P(base + w), expanded term by term with
/// binomial coefficients. Independent of the jet arithmetic.
inline Complex taylor_oracle(const Polynomial& p, const Vector& base, const MultiIndex& alpha) {
    Complex total = 0.0;
    for (const auto& [gamma, c] : p.terms()) {
        Complex term = c;
        for (int i = 0; i < p.dim() && term != Complex{}; ++i) {
            const int g = gamma[static_cast<std::size_t>(i)];
            const int a = alpha[static_cast<std::size_t>(i)];
            if (g < a) {
                term = 0.0;
                break;
            }
            term *= static_cast<double>(binomial(g, a)) * std::pow(base[i], g - a);
        }
        total += term;
    }
    return total;
}

inline Jet oracle_jet(const Polynomial& p, const Vector& base, int cap) {
    Jet j(p.dim(), cap, base);
    for (const auto& a : multi_indices_upto(p.dim(), cap)) j.set_coeff(a, taylor_oracle(p, base, a));
    return j;
}

inline JetMap oracle_jet_map(const PolyMap& f, const Vector& base, int cap) {
    std::vector<Jet> comps;
    for (const auto& c : f.components()) comps.push_back(oracle_jet(c, base, cap));
    return JetMap(std::move(comps));
}

}  // namespace holodyn::testing
