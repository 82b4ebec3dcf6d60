#include <gtest/gtest.h>

#include <algorithm>

#include "holodyn/error.hpp"
#include "holodyn/linalg.hpp"
#include "holodyn/rigidity.hpp"
#include "test_support.hpp"

using namespace holodyn;
using namespace holodyn::testing;

namespace {

PolyMap one_var(std::vector<Complex> ascending) { return PolyMap({Polynomial::univariate(ascending)}); }

Vector point(Complex z) {
    Vector v(1);
    v[0] = z;
    return v;
}

bool lists(const ObstructionCertificate& c, const std::string& a) {
    return std::find(c.assumptions.begin(), c.assumptions.end(), a) != c.assumptions.end();
}

}  // namespace

TEST(Rigidity, SquaringIsUnbounded) {
    const PolyMap f = one_var({0.0, 0.0, 1.0});
    const auto orbit = make_orbit(f, point(1.0), 1, Weight::one(1));
    const auto cert = certify_bounded(f, Weight::one(1), orbit);
    EXPECT_EQ(cert.verdict, Verdict::Unbounded);
    ASSERT_TRUE(cert.witness.alpha);
    EXPECT_NEAR(std::abs(*cert.witness.alpha - 2.0), 0.0, 1e-12);
    EXPECT_TRUE(lists(cert, assumption::graded_image_condition()));
    EXPECT_TRUE(lists(cert, assumption::quasi_banach_space()));
}

TEST(Rigidity, ContractionHasNoObstruction) {
    const PolyMap f = one_var({0.0, 0.5});
    const auto orbit = make_orbit(f, point(0.0), 1, Weight::one(1));
    EXPECT_EQ(certify_bounded(f, Weight::one(1), orbit).verdict, Verdict::NoObstruction);
    EXPECT_EQ(certify_compact(f, Weight::one(1), orbit).verdict, Verdict::NoObstruction);
}

TEST(Rigidity, IndifferentMultiplierBlocksCompactness) {
    const PolyMap f = one_var({0.0, Complex(0.0, 1.0)});
    const auto orbit = make_orbit(f, point(0.0), 1, Weight::one(1));
    EXPECT_EQ(certify_bounded(f, Weight::one(1), orbit).verdict, Verdict::NoObstruction);
    EXPECT_EQ(certify_compact(f, Weight::one(1), orbit).verdict, Verdict::NonCompact);
}

TEST(Rigidity, VanishingWeightIsInapplicable) {
    const PolyMap f = one_var({0.0, 0.0, 1.0});
    const Weight u = Weight::polynomial(Polynomial::univariate({-1.0, 1.0}));  // u(1) = 0
    const auto orbit = make_orbit(f, point(1.0), 1, u);
    EXPECT_EQ(certify_bounded(f, u, orbit).verdict, Verdict::Inapplicable);
}

TEST(Rigidity, UnverifiedOrbitIsRejected) {
    const PolyMap f = one_var({0.0, 0.0, 1.0});
    PeriodicOrbit fake;
    fake.points = {point(2.0)};
    fake.period = 1;
    fake.multipliers = {4.0};
    EXPECT_THROW(certify_bounded(f, Weight::one(1), fake), NotPeriodicError);
}

TEST(Rigidity, CertificateRecomputesMultipliers) {
    const PolyMap f = one_var({0.0, 0.0, 1.0});
    auto orbit = make_orbit(f, point(1.0), 1, Weight::one(1));
    orbit.multipliers = {0.1};  // wrong on purpose
    EXPECT_EQ(certify_bounded(f, Weight::one(1), orbit).verdict, Verdict::Unbounded);
}

TEST(Rigidity, CyclicCountForSquaring) {
    const auto cert = certify_cyclic(one_var({0.0, 0.0, 1.0}), Weight::one(1), 2);
    EXPECT_EQ(cert.verdict, Verdict::NotCyclic);
    ASSERT_TRUE(cert.witness.count);
    EXPECT_EQ(*cert.witness.count, 4);
    EXPECT_NEAR(std::abs(*cert.witness.lambda - 1.0), 0.0, 1e-12);
    EXPECT_TRUE(lists(cert, assumption::evaluations_independent()));
}

TEST(Rigidity, CyclicAllPoints) {
    const auto cert = certify_cyclic(one_var({0.0, -1.0}), Weight::one(1), 2);
    EXPECT_EQ(cert.verdict, Verdict::NotCyclic);
    EXPECT_TRUE(cert.witness.count_infinite);
    // Nonconstant polynomial u_2 = u(z) u(-z) = 1 - z^2 has two points per level.
    const auto poly = certify_cyclic(one_var({0.0, -1.0}), Weight::polynomial(Polynomial::univariate({1.0, 1.0})), 2);
    EXPECT_EQ(poly.verdict, Verdict::NoObstruction);
    EXPECT_EQ(*poly.witness.count, 2);
    // exp(z) gives u_2 = exp(0) = 1 everywhere.
    const auto ex = certify_cyclic(one_var({0.0, -1.0}), Weight::exp_polynomial(Polynomial::univariate({0.0, 1.0})), 2);
    EXPECT_EQ(ex.verdict, Verdict::NotCyclic);
}

TEST(Rigidity, CyclicSoundnessOnRandomPointSets) {
    // The verdict is NotCyclic exactly when some level holds more than r points.
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        const int r = 1 + trial % 3;
        const int n = 1 + trial % 7;
        std::vector<Vector> pts;
        std::vector<Complex> vals;
        for (int k = 0; k < n; ++k) {
            pts.push_back(point(random_complex(rng)));
            vals.push_back(Complex(static_cast<double>(rng() % 2), 0.0));
        }
        const auto cert = certify_cyclic_points(pts, vals, r, true);
        const auto ones = std::count(vals.begin(), vals.end(), Complex(1.0, 0.0));
        const long long biggest = std::max<long long>(ones, n - ones);
        EXPECT_EQ(cert.verdict == Verdict::NotCyclic, biggest > r);
        EXPECT_EQ(*cert.witness.count, biggest);
    }
}

TEST(Rigidity, RequestedLevelWithoutPoints) {
    const auto cert = certify_cyclic(one_var({0.0, 0.0, 1.0}), Weight::one(1), 2, {Complex(3.0, 0.0)});
    EXPECT_EQ(cert.verdict, Verdict::NoObstruction);
    EXPECT_EQ(*cert.witness.count, 0);
}

TEST(Rigidity, HypercyclicVerdicts) {
    SearchConfig cfg;
    const PolyMap translation = one_var({1.0, 1.0});
    auto s = find_periodic_orbits(translation, Weight::one(1), 3, cfg);
    EXPECT_TRUE(s.orbits.empty());
    EXPECT_EQ(certify_hypercyclic(translation, s.orbits, s.complete).verdict, Verdict::NoObstruction);

    const PolyMap sq = one_var({0.0, 0.0, 1.0});
    s = find_periodic_orbits(sq, Weight::one(1), 2, cfg);
    EXPECT_EQ(s.orbits.size(), 3u);  // 0, 1 and the 2-cycle
    const auto cert = certify_hypercyclic(sq, s.orbits, s.complete);
    EXPECT_EQ(cert.verdict, Verdict::NotHypercyclic);
    ASSERT_EQ(cert.implied.size(), 1u);
    EXPECT_EQ(cert.implied[0].verdict, Verdict::NotSupercyclic);
    EXPECT_EQ(cert.implied[0].assumption, assumption::dim_at_least(2));
}

TEST(Rigidity, AffineVerdict) {
    const auto sq = affine_verdict_1d(one_var({0.0, 0.0, 1.0}));
    EXPECT_FALSE(sq.affine);
    ASSERT_TRUE(sq.witness);
    EXPECT_GT(std::abs(*sq.alpha), 1.0);
    const auto expand = affine_verdict_1d(one_var({1.0, 3.0}));
    EXPECT_TRUE(expand.affine);
    EXPECT_FALSE(expand.consistent_with_boundedness);
    EXPECT_NEAR(std::abs(expand.witness->points[0][0] + 0.5), 0.0, 1e-14);
    const auto rot = affine_verdict_1d(one_var({1.0, Complex(0.0, 1.0)}));
    EXPECT_TRUE(rot.consistent_with_boundedness);
}

TEST(Rigidity, GrowthDiagnosticForVanishingWeight) {
    // u = z, f = 2z at 0: quadratic exponent (1/2) log 2.
    const PolyMap f = one_var({0.0, 2.0});
    const Jet u = Polynomial::univariate({0.0, 1.0}).to_jet(Vector::Zero(1), 4);
    const auto g = growth_diagnostic_1d(f, u, 0.0);
    EXPECT_EQ(g.m, 1);
    EXPECT_TRUE(g.obstruction);
    EXPECT_NEAR(g.quad_coeff, 0.5 * std::log(2.0), 1e-15);
    // log |u_m|^k |f'|^{kn + m k(k-1)/2}
    EXPECT_NEAR(graded_transfer_log_norm(1.0, 2.0, 1, 3, 4), (12 + 6) * std::log(2.0), 1e-12);
    EXPECT_THROW(growth_diagnostic_1d(f, u, 1.0), NotPeriodicError);
}

TEST(Rigidity, DualityOnRandomInstances) {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + trial % 4;
        const int k = 1 + trial % (n - 1);
        const Matrix B = random_matrix(rng, n, k) + Matrix::Identity(n, k);
        ASSERT_LT(condition_number(B), 1e6);
        const Matrix L = trial % 2 == 0 ? Matrix(B * random_matrix(rng, k, 2)) : random_matrix(rng, n, 2);
        const auto res = duality_check(L, B);
        EXPECT_EQ(res.image_cond, res.kernel_cond) << "trial " << trial;
        EXPECT_EQ(res.image_cond, trial % 2 == 0);
    }
}
