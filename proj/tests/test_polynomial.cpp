#include <gtest/gtest.h>

#include "holodyn/error.hpp"
#include "holodyn/polynomial.hpp"
#include "holodyn/weight.hpp"
#include "test_support.hpp"

using namespace holodyn;
using namespace holodyn::testing;

TEST(Polynomial, EvaluationAndDegree) {
    const Polynomial p = Polynomial::univariate({1.0, 0.0, 2.0});
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p(Complex(3.0)), Complex(19.0));
    EXPECT_EQ(Polynomial(2).degree(), -1);
    EXPECT_TRUE(Polynomial(2).is_zero());
    const auto coeffs = p.univariate_coefficients();
    ASSERT_EQ(coeffs.size(), 3u);
    EXPECT_EQ(coeffs[2], Complex(2.0));
}

TEST(Polynomial, ZeroCoefficientsAreDropped) {
    Polynomial p(1);
    p.add_term(MultiIndex{1}, 1.0);
    p.add_term(MultiIndex{1}, -1.0);
    EXPECT_TRUE(p.is_zero());
    EXPECT_THROW(p.add_term(MultiIndex{1}, Complex(std::nan(""), 0.0)), std::invalid_argument);
}

TEST(Polynomial, DerivativeMatchesFiniteDifference) {
    std::mt19937_64 rng(21);
    const Polynomial p = random_polynomial(rng, 2, 4);
    const Vector z = random_vector(rng, 2);
    const double h = 1e-6;
    for (int i = 0; i < 2; ++i) {
        Vector e = Vector::Zero(2);
        e[i] = h;
        const Complex fd = (p(Vector(z + e)) - p(Vector(z - e))) / (2.0 * h);
        EXPECT_LT(std::abs(p.derivative(i)(z) - fd), 1e-6);
    }
}

TEST(Polynomial, CompositionEvaluatesPointwise) {
    std::mt19937_64 rng(22);
    const PolyMap f = random_map(rng, 2, 3);
    const PolyMap g = random_map(rng, 2, 2);
    const PolyMap gf = g.compose(f);
    for (int k = 0; k < 20; ++k) {
        const Vector z = random_vector(rng, 2);
        EXPECT_LT((gf(z) - g(f(z))).norm(), 1e-10 * (1.0 + g(f(z)).norm()));
    }
}

TEST(Polynomial, TermCapOverflow) {
    std::mt19937_64 rng(23);
    const PolyMap f = random_map(rng, 2, 4);
    EXPECT_THROW(f.compose(f, 50), TermOverflowError);
}

TEST(PolyMap, JacobianAndAffine) {
    Matrix A(2, 2);
    A << 1.0, 2.0, 0.0, 3.0;
    Vector b(2);
    b << 1.0, -1.0;
    const PolyMap f = PolyMap::affine(A, b);
    EXPECT_TRUE(f.is_affine());
    const Vector z = Vector::Ones(2);
    EXPECT_LT((f(z) - (A * z + b)).norm(), 1e-15);
    EXPECT_LT((f.jacobian(z) - A).norm(), 1e-15);
    const PolyMap sq({monomial(2, {2, 0}), monomial(2, {0, 1})});
    EXPECT_FALSE(sq.is_affine());
    EXPECT_EQ(sq.degree(), 2);
}

TEST(Weight, CocycleMatchesOrbitProduct) {
    std::mt19937_64 rng(24);
    const PolyMap f({random_polynomial(rng, 1, 2, 0.5)});
    const Weight u = Weight::polynomial(random_polynomial(rng, 1, 2, 0.5));
    const Weight ue = Weight::exp_polynomial(random_polynomial(rng, 1, 1, 0.5));
    for (const Weight* w : {&u, &ue}) {
        const Weight u3 = cocycle_weight(*w, f, 3);
        for (int k = 0; k < 5; ++k) {
            const Vector z = random_vector(rng, 1, 0.5);
            Complex prod = 1.0;
            Vector x = z;
            for (int j = 0; j < 3; ++j) {
                prod *= (*w)(x);
                x = f(x);
            }
            EXPECT_LT(std::abs(u3(z) - prod), 1e-10 * (1.0 + std::abs(prod)));
        }
    }
}

TEST(Weight, KindsAndJets) {
    const Weight one = Weight::one(2);
    EXPECT_TRUE(one.is_constant());
    EXPECT_TRUE(one.is_nonvanishing());
    const Weight ev = Weight::evaluator(1, [](const Vector& z) { return z[0]; }, "z");
    EXPECT_FALSE(ev.has_jets());
    EXPECT_THROW(ev.jet_at(Vector::Zero(1), 2), PreconditionError);
    const Weight e = Weight::exp_polynomial(monomial(1, {1}));
    EXPECT_TRUE(e.is_nonvanishing());
    const Jet j = e.jet_at(Vector::Zero(1), 4);
    EXPECT_NEAR(j.coeff(MultiIndex{3}).real(), 1.0 / 6.0, 1e-15);
}
