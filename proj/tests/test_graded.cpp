#include <gtest/gtest.h>

#include "holodyn/dynamics.hpp"
#include "holodyn/graded.hpp"
#include "holodyn/linalg.hpp"
#include "holodyn/weight.hpp"
#include "test_support.hpp"

using namespace holodyn;
using namespace holodyn::testing;

namespace {

// A random jet map fixing `base`.
JetMap random_fixing_map(std::mt19937_64& rng, int d, int cap, const Vector& base) {
    std::vector<Jet> comps;
    for (int i = 0; i < d; ++i) {
        Jet j = random_jet(rng, d, cap, base, 0.8);
        comps.push_back(j.with_constant(base[i]));
    }
    return JetMap(std::move(comps));
}

}  // namespace

TEST(Graded, DiagonalExample) {
    Matrix A = Matrix::Zero(2, 2);
    A(0, 0) = 2.0;
    A(1, 1) = 0.5;
    const auto m = graded_matrix_formula(1.0, A, 2);
    const std::vector<Complex> expected{4.0, 1.0, 0.25};
    EXPECT_LT(multiset_distance(graded_eigenvalues(m), expected), 1e-14);
    EXPECT_LT(multiset_distance(graded_eigenvalue_law(1.0, {2.0, 0.5}, 2), expected), 1e-14);
}

TEST(Graded, ScalarExample) {
    Matrix A(1, 1);
    A(0, 0) = 2.0;
    const auto m = graded_matrix_formula(1.0, A, 3);
    ASSERT_EQ(m.entries.rows(), 1);
    EXPECT_EQ(m.entries(0, 0), Complex(8.0));
}

TEST(Graded, FormulaMatchesBruteForce) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 1 + trial % 3;
        const int cap = 4;
        const int n = trial % (cap + 1);
        const Vector p = random_vector(rng, d);
        const JetMap f = random_fixing_map(rng, d, cap, p);
        const Jet u = random_jet(rng, d, cap, p);
        const auto formula = graded_matrix_formula(u.value(), f.linear_part(), n);
        const auto brute = graded_matrix_bruteforce(u, f, n);
        EXPECT_LT((formula.entries - brute.entries).cwiseAbs().maxCoeff(), 1e-10) << "trial " << trial;
    }
}

TEST(Graded, EigenvalueLawForDiagonalizableParts) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 1 + trial % 3;
        const int n = trial % 5;
        const Matrix P = random_matrix(rng, d, d) + 2.0 * Matrix::Identity(d, d);
        std::vector<Complex> lambdas;
        Matrix D = Matrix::Zero(d, d);
        for (int i = 0; i < d; ++i) {
            lambdas.push_back(random_complex(rng, 1.5));
            D(i, i) = lambdas.back();
        }
        const Matrix A = P * D * P.inverse();
        const Complex up = random_complex(rng) + Complex(0.1, 0.0);
        const auto m = graded_matrix_formula(up, A, n);
        EXPECT_TRUE(multisets_match(graded_eigenvalues(m), graded_eigenvalue_law(up, lambdas, n), 1e-8));
    }
}

TEST(Graded, JordanBlockStillFollowsTheLaw) {
    Matrix A(2, 2);
    A << 1.5, 1.0, 0.0, 1.5;
    const auto m = graded_matrix_formula(1.0, A, 3);
    // Defective matrices lose accuracy in the eigenvalues; the law holds to
    // about sqrt(machine epsilon) relative.
    EXPECT_TRUE(multisets_match(graded_eigenvalues(m), graded_eigenvalue_law(1.0, {1.5, 1.5}, 3), 1e-4));
}

TEST(Graded, CocycleFunctoriality) {
    // (u f^*)(v g^*) = (u . v o f)(g o f)^* at a common fixed point.
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        const int d = 1 + trial % 2;
        const int cap = 4;
        const int n = 1 + trial % 3;
        const Vector p = random_vector(rng, d);
        const JetMap f = random_fixing_map(rng, d, cap, p);
        const JetMap g = random_fixing_map(rng, d, cap, p);
        const Jet u = random_jet(rng, d, cap, p);
        const Jet v = random_jet(rng, d, cap, p);
        const Matrix left = graded_matrix_bruteforce(u, f, n).entries * graded_matrix_bruteforce(v, g, n).entries;
        const Jet w = jet_multiply(u, jet_compose(v, f));
        const Matrix right = graded_matrix_bruteforce(w, jet_map_compose(g, f), n).entries;
        EXPECT_LT((left - right).cwiseAbs().maxCoeff(), 1e-9 * (1.0 + left.norm()));
    }
}

TEST(Graded, IterateMatchesOperatorPower) {
    // gr(u_r (f^r)^*) = gr(u f^*)^r at a fixed point.
    Polynomial c(1);
    c.add_term(MultiIndex{2}, 1.0);
    c.add_term(MultiIndex{1}, 0.5);
    c.add_term(MultiIndex{0}, -0.5);  // f(1) = 1
    const PolyMap f({c});
    const Weight u = Weight::polynomial(Polynomial::univariate({2.0, 0.5}));
    Vector p(1);
    p[0] = 1.0;
    const int r = 3;
    const int n = 2;
    const Matrix single = graded_matrix_bruteforce(u.jet_at(p, n), f.to_jet_map(p, n), n).entries;
    const PolyMap fr = iterate(f, r);
    const Weight ur = cocycle_weight(u, f, r);
    const Matrix power = graded_matrix_bruteforce(ur.jet_at(p, n), fr.to_jet_map(p, n), n).entries;
    const Matrix expected = single * single * single;
    EXPECT_LT((power - expected).cwiseAbs().maxCoeff(), 1e-9 * expected.norm());
}

TEST(Graded, NonFixedPointUsesBothBases) {
    Polynomial c(1);
    c.add_term(MultiIndex{2}, 1.0);
    const PolyMap f({c});
    Vector p(1);
    p[0] = 2.0;  // f(p) = 4
    const auto m = graded_matrix_bruteforce(Jet::constant(1, 2, p, 1.0), f.to_jet_map(p, 2), 1);
    // (z - 4) o f at 2: f(2 + w) - 4 = 4 w + w^2.
    EXPECT_NEAR(std::abs(m.entries(0, 0) - Complex(4.0)), 0.0, 1e-14);
}
