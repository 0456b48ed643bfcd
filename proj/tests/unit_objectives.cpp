#include <gtest/gtest.h>

#include "psmoa/objectives.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace psmoa;
using fixtures::make_node;
using fixtures::make_object;
using fixtures::plan_from_rows;

TEST(EvalTime, UnitRatioIdentity) {
    const Scenario s = fixtures::unit_scenario(1.0, 1.0, 0.0);
    const auto plan = plan_from_rows({{0}}, 1);
    EXPECT_DOUBLE_EQ(eval_time(plan, s), 1.0);
}

TEST(EvalTime, TwoNodeHandEvaluation) {
    // 2 GB onto two nodes, each 1 GB/s with RTT 0.1 s: (2/1 + 0.1) twice.
    Scenario s;
    s.nodes = {make_node(0, 100, 1.0, 0.1, 0.5), make_node(1, 100, 1.0, 0.1, 0.5)};
    s.objects = {make_object(0, 2.0)};
    validate(s);
    const auto plan = plan_from_rows({{0, 1}}, 2);
    EXPECT_NEAR(eval_time(plan, s), 4.2, 1e-12);
}

TEST(PlanValidate, EmptyRowRejected) {
    const Scenario s = fixtures::tiny_scenario();
    ReplicationPlan plan(2, 3);
    plan.set(0, 1, true);  // row 1 left empty
    EXPECT_THROW(validate(plan, s), std::invalid_argument);
    plan.set(1, 0, true);
    EXPECT_NO_THROW(validate(plan, s));
}

TEST(EvalCost, MinimalPlanClosedForm) {
    // One replica of a 100-byte object at c1 = c2 = 0.01 currency/byte -> 2.0.
    Scenario s;
    Node n = make_node(0, 1.0, 1.0, 0.0, 1.0);
    n.storage_cost_coeff = 0.01;
    n.transfer_cost_coeff = 0.01;
    s.nodes = {n};
    DataObject o;
    o.id = 0;
    o.size = 100.0;
    s.objects = {o};
    validate(s);
    const auto plan = plan_from_rows({{0}}, 1);
    EXPECT_NEAR(eval_cost(plan, s), 2.0, 1e-12);
}

TEST(EvalCost, LinearInReplicaCount) {
    const Scenario s = fixtures::tiny_scenario();
    const auto [c1, c2] = mean_cost_coeffs(s);
    const auto one = plan_from_rows({{0}, {0}}, 3);
    auto two = one;
    two.set(0, 1, true);
    // Adding a replica of object 0 adds exactly its per-replica cost.
    EXPECT_NEAR(eval_cost(two, s) - eval_cost(one, s), (c1 + c2) * s.objects[0].size, 1e-9);
    // Doubling object 0's replica set doubles that object's contribution.
    const double obj1_share = (c1 + c2) * s.objects[1].size;
    EXPECT_NEAR(eval_cost(two, s) - obj1_share, 2.0 * (eval_cost(one, s) - obj1_share), 1e-9);
}

TEST(EvalCost, ZeroCoefficients) {
    Scenario s = fixtures::tiny_scenario();
    for (auto& n : s.nodes) {
        n.storage_cost_coeff = 0.0;
        n.transfer_cost_coeff = 0.0;
    }
    const auto plan = plan_from_rows({{0, 1, 2}, {0, 1}}, 3);
    EXPECT_DOUBLE_EQ(eval_cost(plan, s), 0.0);
}

TEST(EvalPopularity, HandCases) {
    Scenario s;
    s.nodes = {make_node(0, 100, 1.0, 0.0, 0.5), make_node(1, 100, 1.0, 0.0, 0.3)};
    s.objects = {make_object(0, 1.0)};
    validate(s);
    EXPECT_NEAR(eval_popularity(plan_from_rows({{0, 1}}, 2), s), 0.8, 1e-12);

    Scenario zeros = s;
    for (auto& n : zeros.nodes) n.popularity_score = 0.0;
    EXPECT_DOUBLE_EQ(eval_popularity(plan_from_rows({{0, 1}}, 2), zeros), 0.0);

    // Adding a positive-score node strictly increases the value.
    const double before = eval_popularity(plan_from_rows({{0}}, 2), s);
    const double after = eval_popularity(plan_from_rows({{0, 1}}, 2), s);
    EXPECT_GT(after, before);
}

// Final variance step of the load objective, checked on hand numbers:
// loads (0,2) -> mean 1 -> variance 1.
TEST(EvalLoadBalance, VarianceArithmetic) {
    auto variance = [](const std::vector<double>& l) {
        double mean = 0.0;
        for (double x : l) mean += x;
        mean /= l.size();
        double v = 0.0;
        for (double x : l) v += (x - mean) * (x - mean);
        return v / l.size();
    };
    EXPECT_DOUBLE_EQ(variance({0.0, 2.0}), 1.0);
    EXPECT_DOUBLE_EQ(variance({1.0, 1.0, 1.0}), 0.0);
}

TEST(EvalLoadBalance, SymmetricPlanZeroVariance) {
    // Identical nodes, identical per-node placement: identical loads.
    Scenario s;
    s.nodes = {make_node(0, 100, 1.0, 0.0, 0.5), make_node(1, 100, 1.0, 0.0, 0.5)};
    s.objects = {make_object(0, 4.0, ObjectType::normal, 0), make_object(1, 4.0, ObjectType::normal, 0)};
    validate(s);
    const auto plan = plan_from_rows({{0}, {1}}, 2);
    EXPECT_NEAR(eval_load_balance(plan, s), 0.0, 1e-15);
}

TEST(EvalLoadBalance, PermutationInvariance) {
    const Scenario s = fixtures::tiny_scenario();
    // Swap node labels 0<->1 everywhere; variance is label-free.
    Scenario swapped = s;
    std::swap(swapped.nodes[0], swapped.nodes[1]);
    swapped.nodes[0].id = 0;
    swapped.nodes[1].id = 1;
    const auto plan = plan_from_rows({{0, 2}, {1}}, 3);
    const auto plan_swapped = plan_from_rows({{1, 2}, {0}}, 3);
    EXPECT_NEAR(eval_load_balance(plan, s), eval_load_balance(plan_swapped, swapped), 1e-15);
}

TEST(Evaluate, ComposesAndNegatesOnce) {
    const Scenario s = fixtures::tiny_scenario();
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto plan = fixtures::random_plan(s, rng);
        const ObjectiveVector v = evaluate(plan, s);
        EXPECT_DOUBLE_EQ(v.time, eval_time(plan, s));
        EXPECT_DOUBLE_EQ(v.cost, eval_cost(plan, s));
        EXPECT_DOUBLE_EQ(v.neg_popularity, -eval_popularity(plan, s));
        EXPECT_DOUBLE_EQ(v.load_variance, eval_load_balance(plan, s));
        EXPECT_TRUE(evaluate(plan, s) == v);  // deterministic
        EXPECT_GE(v.time, 0.0);
        EXPECT_GE(v.cost, 0.0);
        EXPECT_LE(v.neg_popularity, 0.0);
        EXPECT_GE(v.load_variance, 0.0);
    }
}

TEST(Evaluate, MatchesIndependentOracle) {
    const Scenario s = fixtures::tiny_scenario();
    Rng rng(99);
    for (int t = 0; t < 100; ++t) {
        const auto plan = fixtures::random_plan(s, rng);
        const ObjectiveVector v = evaluate(plan, s);
        EXPECT_NEAR(v.time, oracle::eval_time(plan, s), 1e-12 * std::max(1.0, v.time));
        EXPECT_NEAR(v.cost, oracle::eval_cost(plan, s), 1e-12 * std::max(1.0, v.cost));
        EXPECT_NEAR(-v.neg_popularity, oracle::eval_popularity(plan, s), 1e-12);
        EXPECT_NEAR(v.load_variance, oracle::eval_load_balance(plan, s), 1e-12);
    }
}

TEST(Objectives, AdditiveOverDisjointObjects) {
    // Evaluating the union of two disjoint-object plans = sum of the parts.
    const Scenario s = fixtures::tiny_scenario();
    const auto both = plan_from_rows({{0, 1}, {2}}, 3);

    Scenario only_first = s;
    only_first.objects = {s.objects[0]};
    Scenario only_second = s;
    only_second.objects = {s.objects[1]};
    only_second.objects[0].id = 0;
    const auto first = plan_from_rows({{0, 1}}, 3);
    const auto second = plan_from_rows({{2}}, 3);

    EXPECT_NEAR(eval_time(both, s), eval_time(first, only_first) + eval_time(second, only_second),
                1e-9);
    EXPECT_NEAR(eval_cost(both, s), eval_cost(first, only_first) + eval_cost(second, only_second),
                1e-9);
}

TEST(Objectives, CostClosedForm) {
    const Scenario s = fixtures::tiny_scenario();
    const auto [c1, c2] = mean_cost_coeffs(s);
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        const auto plan = fixtures::random_plan(s, rng);
        double expected = 0.0;
        for (int i = 0; i < plan.object_count; ++i)
            expected += plan.replica_count(i) * s.objects[i].size * (c1 + c2);
        EXPECT_NEAR(eval_cost(plan, s), expected, 1e-9);
    }
}

TEST(CheckFeasibility, TinyObjectOnHugeNode) {
    Scenario s;
    s.nodes = {make_node(0, 1000.0, 1.0, 0.0, 1.0)};
    s.objects = {make_object(0, 0.001)};
    validate(s);
    const auto rep = check_feasibility(plan_from_rows({{0}}, 1), s, PolicySpec{});
    EXPECT_TRUE(rep.feasible);
    EXPECT_EQ(rep.storage_violation, 0.0);
    EXPECT_EQ(rep.bandwidth_violation, 0.0);
    EXPECT_TRUE(rep.policy_violations.empty());
    EXPECT_EQ(rep.violation_score, 0.0);
}

TEST(CheckFeasibility, OversizedObjectAlwaysViolates) {
    Scenario s;
    s.nodes = {make_node(0, 1.0, 1.0, 0.0, 0.5), make_node(1, 2.0, 1.0, 0.0, 0.5)};
    s.objects = {make_object(0, 5.0)};  // larger than every node
    validate(s);
    for (const auto& plan : oracle::all_valid_plans(s)) {
        const auto rep = check_feasibility(plan, s, PolicySpec{});
        EXPECT_GT(rep.storage_violation, 0.0);
        EXPECT_FALSE(rep.feasible);
    }
}

TEST(CheckFeasibility, CriticalRuleRequiresThreeReplicas) {
    Scenario s = fixtures::tiny_scenario();
    s.objects[0].type_tag = ObjectType::critical;
    PolicySpec policy;
    ConditionalRule rule;
    rule.condition = {RuleCondition::Kind::type_is, ObjectType::critical, 0.0};
    rule.constraint_effects = {{ConstraintKind::min_replicas, 3.0}};
    policy.conditional_rules.push_back(rule);

    const auto two = plan_from_rows({{0, 1}, {0}}, 3);
    const auto rep = check_feasibility(two, s, policy);
    EXPECT_FALSE(rep.feasible);
    ASSERT_EQ(rep.policy_violations.size(), 1u);
    EXPECT_EQ(rep.policy_violations[0], "min_replicas:object0");

    const auto three = plan_from_rows({{0, 1, 2}, {0}}, 3);
    EXPECT_TRUE(check_feasibility(three, s, policy).feasible);
}

TEST(CheckFeasibility, MonotoneInCapacity) {
    const Scenario base = fixtures::tiny_scenario();
    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        auto s = base;
        // Shrink capacities to make some plans infeasible, then enlarge.
        for (auto& n : s.nodes) {
            n.storage_capacity *= uniform_real(rng, 0.01, 0.2);
            n.bandwidth *= uniform_real(rng, 0.01, 0.2);
        }
        auto bigger = s;
        for (auto& n : bigger.nodes) {
            n.storage_capacity *= uniform_real(rng, 1.0, 10.0);
            n.bandwidth *= uniform_real(rng, 1.0, 10.0);
        }
        const auto plan = fixtures::random_plan(s, rng);
        if (check_feasibility(plan, s, PolicySpec{}).feasible)
            EXPECT_TRUE(check_feasibility(plan, bigger, PolicySpec{}).feasible);
    }
}

TEST(CheckFeasibility, BandwidthWindowBindsTransfers) {
    Scenario s;
    s.nodes = {make_node(0, 10000.0, 1.0, 0.0, 1.0)};  // huge storage, 1 GB/s
    s.objects = {make_object(0, 7200.0)};              // 2 hours of transfer
    validate(s);
    const auto plan = plan_from_rows({{0}}, 1);
    const auto rep = check_feasibility(plan, s, PolicySpec{});  // window 3600 s
    EXPECT_FALSE(rep.feasible);
    EXPECT_GT(rep.bandwidth_violation, 0.0);
    EXPECT_EQ(rep.storage_violation, 0.0);
    const auto wide = check_feasibility(plan, s, PolicySpec{}, 7200.0);
    EXPECT_TRUE(wide.feasible);
}
