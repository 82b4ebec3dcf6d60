#include <gtest/gtest.h>

#include <numbers>

#include "holodyn/dynamics.hpp"
#include "holodyn/error.hpp"
#include "holodyn/henon.hpp"
#include "holodyn/linalg.hpp"
#include "test_support.hpp"

using namespace holodyn;
using namespace holodyn::testing;

namespace {

PolyMap one_var(std::vector<Complex> ascending) { return PolyMap({Polynomial::univariate(ascending)}); }

}  // namespace

TEST(Dynamics, SquaringPeriodTwoPoints) {
    const PolyMap f = one_var({0.0, 0.0, 1.0});
    const auto companion = periodic_points_1d(f, 2);
    const auto dk = periodic_points_1d(f, 2, {}, RootMethod::DurandKerner);
    ASSERT_EQ(companion.points.size(), 4u);
    ASSERT_EQ(dk.points.size(), 4u);
    EXPECT_TRUE(companion.complete);
    // z^4 = z: 0 and the cube roots of unity.
    const std::vector<Complex> expected{0.0, 1.0, std::polar(1.0, 2.0 * std::numbers::pi / 3.0),
                                        std::polar(1.0, -2.0 * std::numbers::pi / 3.0)};
    std::vector<Complex> got, got_dk;
    for (const auto& p : companion.points) got.push_back(p[0]);
    for (const auto& p : dk.points) got_dk.push_back(p[0]);
    EXPECT_LT(multiset_distance(got, expected), 1e-12);
    EXPECT_LT(multiset_distance(got_dk, expected), 1e-12);
}

TEST(Dynamics, IdentityIterateIsAllPoints) {
    const auto set = periodic_points_1d(one_var({0.0, -1.0}), 2);
    EXPECT_TRUE(set.all_points);
    EXPECT_TRUE(set.points.empty());
    EXPECT_FALSE(periodic_points_1d(one_var({0.0, -1.0}), 1).all_points);
}

TEST(Dynamics, TranslationHasNoPeriodicPoints) {
    const auto set = periodic_points_1d(one_var({1.0, 1.0}), 3);
    EXPECT_TRUE(set.points.empty());
    EXPECT_TRUE(set.complete);
    EXPECT_FALSE(set.all_points);
}

TEST(Dynamics, MultipleRootsAreCountedOnce) {
    // z + z^2 has a parabolic fixed point: z^2 = 0 is a double root.
    const auto set = periodic_points_1d(one_var({0.0, 1.0, 1.0}), 1);
    ASSERT_EQ(set.points.size(), 1u);
    EXPECT_EQ(set.multiplicity[0], 2);
}

TEST(Dynamics, IterateConsistency) {
    std::mt19937_64 rng(51);
    for (int d = 1; d <= 2; ++d) {
        const PolyMap f = random_map(rng, d, 2, 0.5);
        const PolyMap f3 = iterate(f, 3);
        for (int k = 0; k < 10; ++k) {
            const Vector z = random_vector(rng, d, 0.5);
            const Vector direct = iterate_point(f, z, 3);
            EXPECT_LT((f3(z) - direct).norm(), 1e-10 * (1.0 + direct.norm()));
        }
    }
}

TEST(Dynamics, OrbitJacobianByChainRule) {
    std::mt19937_64 rng(52);
    const PolyMap f = random_map(rng, 2, 2, 0.5);
    const Vector z = random_vector(rng, 2, 0.5);
    const Matrix chain = orbit_jacobian(f, z, 3);
    const Matrix direct = iterate(f, 3).jacobian(z);
    EXPECT_LT((chain - direct).norm(), 1e-10 * (1.0 + direct.norm()));
}

TEST(Dynamics, Classification) {
    EXPECT_EQ(classify({0.0}), Stability::Superattracting);
    EXPECT_EQ(classify({0.5}), Stability::Attracting);
    EXPECT_EQ(classify({2.0}), Stability::Repelling);
    EXPECT_EQ(classify({Complex(0.0, 1.0)}), Stability::Indifferent);
    EXPECT_EQ(classify({4.9, 0.06}), Stability::Saddle);
    EXPECT_EQ(classify({4.9, 1.0}), Stability::Inconclusive);
    EXPECT_EQ(to_string(Stability::Saddle), "saddle");
}

TEST(Dynamics, MultipliersRejectNonPeriodicPoints) {
    const PolyMap f = one_var({0.0, 0.0, 1.0});
    Vector p(1);
    p[0] = 2.0;
    EXPECT_THROW(multipliers(f, p, 1), NotPeriodicError);
    p[0] = 1.0;
    const auto m = multipliers(f, p, 1);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_NEAR(std::abs(m[0] - 2.0), 0.0, 1e-14);
}

TEST(Dynamics, OrbitTrimmedToExactPeriod) {
    const PolyMap f = one_var({0.0, 0.0, 1.0});
    Vector p(1);
    p[0] = 1.0;
    const auto orbit = make_orbit(f, p, 4, Weight::one(1));
    EXPECT_EQ(orbit.period, 1);
    EXPECT_EQ(orbit.points.size(), 1u);
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    p[0] = w;
    EXPECT_EQ(exact_period(f, p, 2), 2);
    const auto cycle = make_orbit(f, p, 2, Weight::polynomial(Polynomial::univariate({0.0, 1.0})));
    EXPECT_EQ(cycle.period, 2);
    EXPECT_NEAR(std::abs(cycle.u_r - 1.0), 0.0, 1e-12);  // w * w^2
    EXPECT_NEAR(std::abs(cycle.multipliers[0] - 4.0), 0.0, 1e-12);  // 2w * 2w^2
}

TEST(Dynamics, TwoVariableSearchIsDeterministic) {
    const PolyMap f = GeneralizedHenon({-3.0, 0.0, 1.0}, 0.3).to_polymap();
    SearchConfig cfg;
    cfg.starts = 300;
    cfg.seed = 7;
    const auto a = periodic_points_2d(f, 1, cfg);
    cfg.threads = 3;
    const auto b = periodic_points_2d(f, 1, cfg);
    ASSERT_EQ(a.points.size(), 2u);
    ASSERT_EQ(b.points.size(), a.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) EXPECT_EQ((a.points[i] - b.points[i]).norm(), 0.0);
    EXPECT_FALSE(a.complete);
    EXPECT_EQ(a.seed, 7u);
    EXPECT_EQ(a.starts, 300);
    for (const auto& p : a.points) EXPECT_LE(periodicity_residual(f, p, 1), 1e-9);
}

TEST(Dynamics, WeightCocycle) {
    const Weight u = Weight::polynomial(Polynomial::univariate({1.0, 1.0}));
    Vector a(1), b(1);
    a[0] = 1.0;
    b[0] = 2.0;
    const std::vector<Vector> orbit{a, b};
    EXPECT_EQ(weight_cocycle(u, orbit), Complex(6.0));
}
