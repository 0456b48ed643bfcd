#include <gtest/gtest.h>

#include <algorithm>

#include "psmoa/policy.hpp"
#include "support/fixtures.hpp"

using namespace psmoa;

TEST(NormalizeAlpha, Cases) {
    const AlphaVector uniform = normalize_alpha({1, 1, 1, 1});
    for (double a : uniform) EXPECT_DOUBLE_EQ(a, 0.25);

    const AlphaVector kept = normalize_alpha({0.4, 0.2, 0.3, 0.1});
    EXPECT_NEAR(kept[0], 0.4, 1e-12);
    EXPECT_NEAR(kept[1], 0.2, 1e-12);
    EXPECT_NEAR(kept[2], 0.3, 1e-12);
    EXPECT_NEAR(kept[3], 0.1, 1e-12);

    const AlphaVector mass = normalize_alpha({2, 0, 0, 0});
    EXPECT_DOUBLE_EQ(mass[0], 1.0);
    EXPECT_DOUBLE_EQ(mass[1], 0.0);

    EXPECT_THROW(normalize_alpha({0, 0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(normalize_alpha({-1, 1, 1, 1}), std::invalid_argument);
}

TEST(Adapt, ZeroSignalsReturnBase) {
    AdaptationParams params;
    params.alpha_base = {0.4, 0.2, 0.3, 0.1};
    const AlphaVector out = adapt(params, {});
    EXPECT_NEAR(out[0], 0.4, 1e-12);
    EXPECT_NEAR(out[1], 0.2, 1e-12);
    EXPECT_NEAR(out[2], 0.3, 1e-12);
    EXPECT_NEAR(out[3], 0.1, 1e-12);
}

TEST(Adapt, LoadCapSaturates) {
    AdaptationParams params;
    params.lambda = 5.0;  // would push far past the cap
    params.alpha_max = 0.4;
    AdaptationSignals sig;
    sig.utilization_rate = 1.0;
    const AlphaVector pre = adapt_prenormalized(params, sig);
    EXPECT_DOUBLE_EQ(pre[kObjLoad], 0.4);
}

TEST(Adapt, HandComputedExample) {
    // base uniform, lambda 0.2, util 0.5, beta=gamma=0, cap 0.4:
    // pre-norm (0.25,0.25,0.25,0.35), normalized by 1.1.
    AdaptationParams params;
    params.lambda = 0.2;
    params.beta = 0.0;
    params.gamma = 0.0;
    params.alpha_max = 0.4;
    AdaptationSignals sig;
    sig.utilization_rate = 0.5;
    const AlphaVector out = adapt(params, sig);
    EXPECT_NEAR(out[0], 0.25 / 1.1, 1e-12);
    EXPECT_NEAR(out[1], 0.25 / 1.1, 1e-12);
    EXPECT_NEAR(out[2], 0.25 / 1.1, 1e-12);
    EXPECT_NEAR(out[3], 0.35 / 1.1, 1e-12);
}

TEST(Adapt, PropertySumsToOneAndMonotoneLoad) {
    AdaptationParams params;
    Rng rng(41);
    for (int t = 0; t < 1000; ++t) {
        AdaptationSignals sig;
        sig.utilization_rate = uniform01(rng);
        sig.budget_proximity = uniform01(rng);
        sig.access_frequency = uniform01(rng);
        const AlphaVector out = adapt(params, sig);
        double sum = 0.0;
        for (double a : out) {
            EXPECT_GE(a, 0.0);
            EXPECT_LE(a, 1.0);
            sum += a;
        }
        EXPECT_NEAR(sum, 1.0, 1e-9);

        // Pre-normalization load component is non-decreasing in utilization.
        AdaptationSignals bumped = sig;
        bumped.utilization_rate = std::min(1.0, sig.utilization_rate + uniform01(rng) * 0.3);
        EXPECT_GE(adapt_prenormalized(params, bumped)[kObjLoad],
                  adapt_prenormalized(params, sig)[kObjLoad]);
    }
}

TEST(Adapt, RejectsOutOfRangeSignals) {
    AdaptationParams params;
    AdaptationSignals sig;
    sig.utilization_rate = 1.5;
    EXPECT_THROW(adapt(params, sig), std::invalid_argument);
    sig.utilization_rate = 0.0;
    sig.budget_proximity = -0.1;
    EXPECT_THROW(adapt(params, sig), std::invalid_argument);
    sig.budget_proximity = 0.0;
    sig.access_frequency = -1.0;
    EXPECT_THROW(adapt(params, sig), std::invalid_argument);
}

TEST(Classify, Cases) {
    PolicySpec p;
    p.alpha = {1, 0, 0, 0};
    const PolicyClass single = classify(p);
    EXPECT_EQ(single.kind, PolicyMode::single_objective);
    EXPECT_EQ(single.objective_index, kObjTime);

    PolicySpec none;
    EXPECT_EQ(classify(none).kind, PolicyMode::none);

    PolicySpec multi;
    multi.alpha = {0.2, 0.4, 0.2, 0.2};
    EXPECT_EQ(classify(multi).kind, PolicyMode::multi_objective);

    PolicySpec forced;
    forced.mode = PolicyMode::single_objective;
    forced.single_objective_index = kObjCost;
    EXPECT_EQ(classify(forced).objective_index, kObjCost);
}

TEST(Classify, ScaleInvariant) {
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        PolicySpec p;
        for (auto& a : p.alpha) a = uniform01(rng);
        if (p.alpha[0] + p.alpha[1] + p.alpha[2] + p.alpha[3] == 0.0) continue;
        PolicySpec scaled = p;
        const double c = uniform_real(rng, 0.1, 10.0);
        for (auto& a : scaled.alpha) a *= c;
        PolicySpec normalized = p;
        normalized.alpha = normalize_alpha(p.alpha);
        EXPECT_EQ(classify(normalized).kind, classify(scaled).kind);
    }
}

namespace {

PolicySpec paper_example_policy() {
    PolicySpec policy;
    ConditionalRule rule;
    rule.condition = {RuleCondition::Kind::type_is, ObjectType::critical, 0.0};
    rule.constraint_effects = {{ConstraintKind::min_replicas, 3.0},
                               {ConstraintKind::max_replication_time, 3600.0}};
    policy.conditional_rules.push_back(rule);
    return policy;
}

}  // namespace

TEST(ApplyConditionalRules, CriticalObjectsGetTightenedConstraints) {
    Scenario s = fixtures::tiny_scenario();
    s.objects[0].type_tag = ObjectType::critical;
    s.objects[1].type_tag = ObjectType::normal;
    const EffectivePolicy eff = apply_conditional_rules(paper_example_policy(), s);
    ASSERT_EQ(eff.per_object.size(), 2u);
    ASSERT_TRUE(eff.per_object[0].min_replicas.has_value());
    EXPECT_EQ(*eff.per_object[0].min_replicas, 3);
    ASSERT_TRUE(eff.per_object[0].max_replication_time.has_value());
    EXPECT_DOUBLE_EQ(*eff.per_object[0].max_replication_time, 3600.0);
    EXPECT_FALSE(eff.per_object[1].min_replicas.has_value());
    EXPECT_FALSE(eff.per_object[1].max_replication_time.has_value());
}

TEST(ApplyConditionalRules, NoRulesMeansGlobalOnly) {
    const Scenario s = fixtures::tiny_scenario();
    PolicySpec policy;
    policy.hard_constraints = {{ConstraintKind::min_replicas, 2.0}};
    const EffectivePolicy eff = apply_conditional_rules(policy, s);
    for (const auto& oc : eff.per_object) {
        ASSERT_TRUE(oc.min_replicas.has_value());
        EXPECT_EQ(*oc.min_replicas, 2);
        EXPECT_FALSE(oc.max_replication_time.has_value());
    }
    EXPECT_FALSE(eff.alpha_override.has_value());
}

TEST(ApplyConditionalRules, MostRestrictiveWinsAndOrderIndependent) {
    Scenario s = fixtures::tiny_scenario();
    s.objects[0].type_tag = ObjectType::critical;
    PolicySpec policy;
    ConditionalRule two;
    two.condition = {RuleCondition::Kind::type_is, ObjectType::critical, 0.0};
    two.constraint_effects = {{ConstraintKind::min_replicas, 2.0}};
    ConditionalRule three;
    three.condition = {RuleCondition::Kind::size_at_least, ObjectType::normal, 0.0};
    three.constraint_effects = {{ConstraintKind::min_replicas, 3.0}};
    policy.conditional_rules = {two, three};

    const EffectivePolicy forward = apply_conditional_rules(policy, s);
    EXPECT_EQ(*forward.per_object[0].min_replicas, 3);

    std::swap(policy.conditional_rules[0], policy.conditional_rules[1]);
    const EffectivePolicy backward = apply_conditional_rules(policy, s);
    EXPECT_EQ(*backward.per_object[0].min_replicas, 3);
    EXPECT_EQ(*forward.per_object[1].min_replicas, *backward.per_object[1].min_replicas);
}

TEST(ApplyConditionalRules, ConflictingAlphaOverridesThrow) {
    Scenario s = fixtures::tiny_scenario();
    s.objects[0].type_tag = ObjectType::critical;
    PolicySpec policy;
    ConditionalRule a;
    a.condition = {RuleCondition::Kind::type_is, ObjectType::critical, 0.0};
    a.alpha_override = AlphaVector{0.4, 0.2, 0.2, 0.2};
    ConditionalRule b;
    b.condition = {RuleCondition::Kind::size_at_least, ObjectType::normal, 1.0};
    b.alpha_override = AlphaVector{0.1, 0.3, 0.3, 0.3};
    policy.conditional_rules = {a, b};
    EXPECT_THROW(apply_conditional_rules(policy, s), PolicyConflictError);

    // Identical overrides agree: no conflict.
    policy.conditional_rules[1].alpha_override = AlphaVector{0.4, 0.2, 0.2, 0.2};
    const EffectivePolicy eff = apply_conditional_rules(policy, s);
    ASSERT_TRUE(eff.alpha_override.has_value());
    EXPECT_NEAR((*eff.alpha_override)[0], 0.4, 1e-12);
}

TEST(PolicyValidate, RejectsBrokenSpecs) {
    PolicySpec p;
    p.alpha = {0.5, 0.5, 0.5, 0.5};  // sums to 2
    EXPECT_THROW(validate(p), std::invalid_argument);

    PolicySpec c;
    c.hard_constraints = {{ConstraintKind::min_replicas, 0.0}};
    EXPECT_THROW(validate(c), std::invalid_argument);

    PolicySpec r;
    r.conditional_rules.push_back(ConditionalRule{});
    EXPECT_THROW(validate(r), std::invalid_argument);

    PolicySpec ok;
    ok.alpha = normalize_alpha({1, 2, 3, 4});
    EXPECT_NO_THROW(validate(ok));
}
