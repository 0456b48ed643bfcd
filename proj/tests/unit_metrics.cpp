#include <gtest/gtest.h>

#include <algorithm>

#include "psmoa/metrics.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace psmoa;

namespace {

FrontArchive archive_of(std::vector<std::vector<double>> pts, const std::string& label = "t") {
    FrontArchive a;
    a.label = label;
    for (auto& p : pts) a.insert(p);
    return a;
}

std::vector<std::vector<double>> random_front(Rng& rng, int count, int dim) {
    // Non-dominated-ish cloud in (0,1)^dim; the archive filter finishes the job.
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < count; ++i) {
        std::vector<double> p(dim);
        for (auto& x : p) x = uniform_real(rng, 0.0, 1.0);
        pts.push_back(std::move(p));
    }
    return pts;
}

}  // namespace

TEST(FrontArchive, InsertKeepsNonDominatedSet) {
    FrontArchive a;
    EXPECT_TRUE(a.insert({1.0, 1.0}));
    EXPECT_TRUE(a.insert({0.5, 2.0}));
    EXPECT_FALSE(a.insert({1.5, 1.5}));  // dominated by (1,1)
    EXPECT_FALSE(a.insert({1.0, 1.0}));  // duplicate
    EXPECT_TRUE(a.insert({0.2, 0.2}));   // dominates both residents
    ASSERT_EQ(a.points.size(), 1u);
    EXPECT_EQ(a.points[0], (std::vector<double>{0.2, 0.2}));

    EXPECT_TRUE(a.insert({0.1, 0.9}));  // mutually non-dominated with (0.2,0.2)
    ASSERT_EQ(a.points.size(), 2u);
    for (const auto& p : a.points)
        for (const auto& q : a.points)
            if (p != q) EXPECT_FALSE(dominates_point(p, q));
}

TEST(Hypervolume, UnitBox) {
    const FrontArchive a = archive_of({{0.0, 0.0}});
    EXPECT_DOUBLE_EQ(hypervolume(a, {1.0, 1.0}), 1.0);
}

TEST(Hypervolume, TwoPointUnion) {
    const FrontArchive a = archive_of({{0.0, 0.5}, {0.5, 0.0}});
    EXPECT_NEAR(hypervolume(a, {1.0, 1.0}), 0.75, 1e-12);
    EXPECT_NEAR(oracle::mc_hypervolume(a.points, {1.0, 1.0}, 200000, 9), 0.75, 0.01);
}

TEST(Hypervolume, DominatedPointChangesNothing) {
    FrontArchive a = archive_of({{0.0, 0.5}, {0.5, 0.0}});
    const double before = hypervolume(a, {1.0, 1.0});
    a.insert({0.6, 0.6});  // dominated, filtered on insert
    EXPECT_DOUBLE_EQ(hypervolume(a, {1.0, 1.0}), before);
}

TEST(Hypervolume, RejectsNonDominatingPoint) {
    const FrontArchive a = archive_of({{0.5, 1.2}});
    try {
        hypervolume(a, {1.0, 1.0});
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("1.2"), std::string::npos);
    }
}

TEST(Hypervolume, MatchesMonteCarloOn4D) {
    Rng rng(123);
    for (int t = 0; t < 5; ++t) {
        FrontArchive a;
        for (auto& p : random_front(rng, 12, 4)) a.insert(p);
        const std::vector<double> ref(4, 1.1);
        const double exact = hypervolume(a, ref);
        const double mc = oracle::mc_hypervolume(a.points, ref, 200000, 1000 + t);
        EXPECT_NEAR(exact, mc, 0.01);
    }
}

TEST(Hypervolume, MonotoneUnderNonDominatedInsertion) {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        FrontArchive a;
        for (auto& p : random_front(rng, 8, 3)) a.insert(p);
        const std::vector<double> ref(3, 1.0);
        // Clip points beyond the reference for a valid HV call.
        FrontArchive clipped;
        for (auto p : a.points) {
            bool ok = true;
            for (double x : p)
                if (x > 1.0) ok = false;
            if (ok) clipped.insert(p);
        }
        if (clipped.points.empty()) continue;
        const double before = hypervolume(clipped, ref);
        std::vector<double> extra(3);
        for (auto& x : extra) x = uniform_real(rng, 0.0, 1.0);
        FrontArchive grown = clipped;
        grown.insert(extra);
        EXPECT_GE(hypervolume(grown, ref), before - 1e-12);
    }
}

TEST(GenerationalDistance, IdentityAndHandValues) {
    const FrontArchive truth = archive_of({{0.0, 1.0}, {1.0, 0.0}});
    EXPECT_DOUBLE_EQ(generational_distance(truth, truth), 0.0);

    const FrontArchive single = archive_of({{1.0, 1.0}});
    const FrontArchive origin = archive_of({{0.0, 0.0}});
    EXPECT_NEAR(generational_distance(single, origin), std::sqrt(2.0), 1e-12);
}

TEST(GenerationalDistance, MatchesBruteForce) {
    Rng rng(42);
    FrontArchive front, truth;
    for (auto& p : random_front(rng, 5, 3)) front.insert(p);
    for (auto& p : random_front(rng, 7, 3)) truth.insert(p);
    double acc = 0.0;
    for (const auto& p : front.points) {
        double best = 1e300;
        for (const auto& q : truth.points) {
            double d2 = 0.0;
            for (int k = 0; k < 3; ++k) d2 += (p[k] - q[k]) * (p[k] - q[k]);
            best = std::min(best, d2);
        }
        acc += best;
    }
    EXPECT_NEAR(generational_distance(front, truth),
                std::sqrt(acc / front.points.size()), 1e-12);
}

TEST(InvertedGenerationalDistance, CoverageAndHandValue) {
    const FrontArchive truth = archive_of({{0.0, 0.0}});
    FrontArchive cover = archive_of({{0.0, 0.0}, {1.0, -1.0}});
    EXPECT_DOUBLE_EQ(inverted_generational_distance(cover, truth), 0.0);

    // Truth {(0,0),(1,1)} built literally ((1,1) would be insert-filtered),
    // front {(0,0)}: IGD = sqrt((0 + 2)/2) = 1.
    FrontArchive literal;
    literal.points = {{0.0, 0.0}, {1.0, 1.0}};
    const FrontArchive front = archive_of({{0.0, 0.0}});
    EXPECT_NEAR(inverted_generational_distance(front, literal), 1.0, 1e-12);
}

TEST(Metrics, PermutationInvariant) {
    Rng rng(77);
    FrontArchive front, truth;
    for (auto& p : random_front(rng, 6, 4)) front.insert(p);
    for (auto& p : random_front(rng, 9, 4)) truth.insert(p);
    FrontArchive shuffled = front;
    std::reverse(shuffled.points.begin(), shuffled.points.end());
    EXPECT_DOUBLE_EQ(generational_distance(front, truth), generational_distance(shuffled, truth));
    EXPECT_DOUBLE_EQ(inverted_generational_distance(front, truth),
                     inverted_generational_distance(shuffled, truth));
    const std::vector<double> ref(4, 1.5);
    EXPECT_NEAR(hypervolume(front, ref), hypervolume(shuffled, ref), 1e-12);
}

TEST(Metrics, NormalizationInvariantUnderSharedRescale) {
    Rng rng(5);
    FrontArchive front, truth;
    for (auto& p : random_front(rng, 6, 2)) front.insert(p);
    for (auto& p : random_front(rng, 8, 2)) truth.insert(p);
    std::vector<FrontArchive> all = {front, truth};
    truth.normalization = objective_bounds(all);

    // Rescale objective 0 by 100x in both fronts and both bound entries.
    FrontArchive front2 = front, truth2 = truth;
    for (auto& p : front2.points) p[0] *= 100.0;
    for (auto& p : truth2.points) p[0] *= 100.0;
    (*truth2.normalization)[0].first *= 100.0;
    (*truth2.normalization)[0].second *= 100.0;

    EXPECT_NEAR(generational_distance(front, truth), generational_distance(front2, truth2), 1e-9);
    EXPECT_NEAR(inverted_generational_distance(front, truth),
                inverted_generational_distance(front2, truth2), 1e-9);
}

TEST(TruthFront, ExhaustiveTinyInstance) {
    const Scenario s = fixtures::tiny_scenario();
    int count = 0;
    enumerate_valid_plans(s, [&](const ReplicationPlan& p) {
        ++count;
        for (int i = 0; i < p.object_count; ++i) EXPECT_GE(p.replica_count(i), 1);
    });
    EXPECT_EQ(count, 49);  // (2^3 - 1)^2

    const FrontArchive truth = build_truth_front(s, TruthBudget::exhaustive);
    const auto expected = oracle::exact_pareto_front(s);
    ASSERT_EQ(truth.points.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        for (int k = 0; k < 4; ++k) EXPECT_DOUBLE_EQ(truth.points[i][k], expected[i][k]);

    // Determinism: construction is a pure function of the scenario.
    const FrontArchive again = build_truth_front(s, TruthBudget::exhaustive);
    EXPECT_EQ(truth.points, again.points);
}

TEST(TruthFront, ExhaustiveRefusesOversizedInstances) {
    const Scenario big = generate_scenario(Scale::small, 1);  // 20 x 10 bits
    try {
        build_truth_front(big, TruthBudget::exhaustive);
        FAIL() << "expected refusal";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("20x10"), std::string::npos);
    }
}

TEST(TruthFront, MergedRunsDominatesContributors) {
    Rng rng(31);
    std::vector<FrontArchive> contributed;
    for (int a = 0; a < 3; ++a) {
        FrontArchive arch;
        arch.label = "alg" + std::to_string(a);
        for (auto& p : random_front(rng, 10, 4)) arch.insert(p);
        contributed.push_back(std::move(arch));
    }
    const Scenario s = fixtures::tiny_scenario();
    const FrontArchive truth = build_truth_front(s, TruthBudget::merged_runs, contributed);
    for (const auto& arch : contributed)
        for (const auto& p : arch.points) {
            bool covered = false;
            for (const auto& q : truth.points)
                if (q == p || dominates_point(q, p)) {
                    covered = true;
                    break;
                }
            EXPECT_TRUE(covered);
        }
    EXPECT_THROW(build_truth_front(s, TruthBudget::merged_runs), std::invalid_argument);
}
