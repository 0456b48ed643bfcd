// Organizational policies: preference weight vectors over the four
// objectives, hard constraints, conditional if-then rules, and the dynamic
// adaptation that rewrites the preference vector from live signals.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psmoa/model.hpp"

namespace psmoa {

// Objective indexing shared across the project: [time, cost, popularity, load].
enum ObjectiveIndex : int {
    kObjTime = 0,
    kObjCost = 1,
    kObjPopularity = 2,
    kObjLoad = 3,
};
constexpr int kObjectiveCount = 4;

inline const char* objective_name(int idx) {
    switch (idx) {
        case kObjTime: return "time";
        case kObjCost: return "cost";
        case kObjPopularity: return "popularity";
        case kObjLoad: return "load";
    }
    return "?";
}

using AlphaVector = std::array<double, kObjectiveCount>;

enum class ConstraintKind {
    max_storage_per_node,
    max_replication_rate,
    monthly_cost_cap,
    max_replication_time,
    min_replicas,
    min_regions,
};

inline const char* to_string(ConstraintKind k) {
    switch (k) {
        case ConstraintKind::max_storage_per_node: return "max_storage_per_node";
        case ConstraintKind::max_replication_rate: return "max_replication_rate";
        case ConstraintKind::monthly_cost_cap: return "monthly_cost_cap";
        case ConstraintKind::max_replication_time: return "max_replication_time";
        case ConstraintKind::min_replicas: return "min_replicas";
        case ConstraintKind::min_regions: return "min_regions";
    }
    return "?";
}

inline ConstraintKind constraint_kind_from_string(const std::string& s) {
    if (s == "max_storage_per_node") return ConstraintKind::max_storage_per_node;
    if (s == "max_replication_rate") return ConstraintKind::max_replication_rate;
    if (s == "monthly_cost_cap") return ConstraintKind::monthly_cost_cap;
    if (s == "max_replication_time") return ConstraintKind::max_replication_time;
    if (s == "min_replicas") return ConstraintKind::min_replicas;
    if (s == "min_regions") return ConstraintKind::min_regions;
    throw std::invalid_argument("unknown constraint kind: " + s);
}

struct ConstraintRule {
    ConstraintKind kind = ConstraintKind::min_replicas;
    double threshold = 1.0;  // kind-specific units; must be > 0
};

// Predicate over a data object. Exactly the two supported forms: a type-tag
// equality test or a minimum-size threshold.
struct RuleCondition {
    enum class Kind { type_is, size_at_least };
    Kind kind = Kind::type_is;
    ObjectType type_tag = ObjectType::critical;
    double size_threshold = 0.0;  // bytes, for size_at_least

    bool matches(const DataObject& o) const {
        if (kind == Kind::type_is) return o.type_tag == type_tag;
        return o.size >= size_threshold;
    }
};

struct ConditionalRule {
    RuleCondition condition;
    std::vector<ConstraintRule> constraint_effects;
    std::optional<AlphaVector> alpha_override;

    bool has_effects() const { return !constraint_effects.empty() || alpha_override.has_value(); }
};

struct AdaptationParams {
    double lambda = 0.1;    // load adaptation rate
    double beta = 0.3;      // cost sensitivity
    double gamma = 0.2;     // popularity sensitivity coefficient
    double alpha_max = 0.4; // cap applied to the load component before renormalization
    AlphaVector alpha_base{0.25, 0.25, 0.25, 0.25};
};

enum class PolicyMode { none, single_objective, multi_objective };

struct PolicySpec {
    AlphaVector alpha{0.25, 0.25, 0.25, 0.25};
    PolicyMode mode = PolicyMode::none;
    int single_objective_index = -1;  // meaningful when mode == single_objective
    std::vector<ConstraintRule> hard_constraints;
    std::vector<ConditionalRule> conditional_rules;
    AdaptationParams adaptation;
};

inline AlphaVector normalize_alpha(const AlphaVector& alpha) {
    double sum = 0.0;
    for (double a : alpha) {
        if (a < 0.0) throw std::invalid_argument("alpha components must be >= 0");
        sum += a;
    }
    if (!(sum > 0.0)) throw std::invalid_argument("alpha vector must have positive mass");
    AlphaVector out;
    for (int i = 0; i < kObjectiveCount; ++i) out[i] = alpha[i] / sum;
    return out;
}

// Checks PolicySpec invariants; alpha is expected normalized (callers load
// policies through normalize on read).
inline void validate(const PolicySpec& p) {
    double sum = 0.0;
    for (double a : p.alpha) {
        if (a < 0.0 || a > 1.0) throw std::invalid_argument("alpha components must lie in [0,1]");
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("alpha must sum to 1");
    for (const auto& c : p.hard_constraints)
        if (!(c.threshold > 0.0)) throw std::invalid_argument("constraint threshold must be > 0");
    for (const auto& r : p.conditional_rules) {
        if (!r.has_effects()) throw std::invalid_argument("conditional rule with no effects");
        for (const auto& c : r.constraint_effects)
            if (!(c.threshold > 0.0)) throw std::invalid_argument("constraint threshold must be > 0");
    }
    const auto& ad = p.adaptation;
    if (ad.lambda < 0 || ad.beta < 0 || ad.gamma < 0)
        throw std::invalid_argument("adaptation rates must be >= 0");
    if (!(ad.alpha_max > 0.0 && ad.alpha_max <= 1.0))
        throw std::invalid_argument("alpha_max must lie in (0,1]");
    if (p.mode == PolicyMode::single_objective &&
        (p.single_objective_index < 0 || p.single_objective_index >= kObjectiveCount))
        throw std::invalid_argument("single-objective policy needs an objective index in [0,3]");
}

struct AdaptationSignals {
    double utilization_rate = 0.0;  // [0,1]
    double budget_proximity = 0.0;  // [0,1]
    double access_frequency = 0.0;  // >= 0, normalized against trace history
};

// Dynamic adaptation: raise the load weight with utilization (capped at
// alpha_max), scale cost with budget proximity and popularity with access
// frequency, keep time at its base, then renormalize to sum 1.
inline AlphaVector adapt(const AdaptationParams& params, const AdaptationSignals& signals) {
    if (signals.utilization_rate < 0.0 || signals.utilization_rate > 1.0)
        throw std::invalid_argument("utilization_rate must lie in [0,1]");
    if (signals.budget_proximity < 0.0 || signals.budget_proximity > 1.0)
        throw std::invalid_argument("budget_proximity must lie in [0,1]");
    if (signals.access_frequency < 0.0)
        throw std::invalid_argument("access_frequency must be >= 0");
    AlphaVector pre;
    pre[kObjTime] = params.alpha_base[kObjTime];
    pre[kObjCost] = params.alpha_base[kObjCost] * (1.0 + params.beta * signals.budget_proximity);
    pre[kObjPopularity] =
        params.alpha_base[kObjPopularity] * (1.0 + params.gamma * signals.access_frequency);
    pre[kObjLoad] = std::min(params.alpha_base[kObjLoad] + params.lambda * signals.utilization_rate,
                             params.alpha_max);
    return normalize_alpha(pre);
}

// Pre-normalization adaptation vector; exposed for monotonicity checks.
inline AlphaVector adapt_prenormalized(const AdaptationParams& params,
                                       const AdaptationSignals& signals) {
    AlphaVector pre;
    pre[kObjTime] = params.alpha_base[kObjTime];
    pre[kObjCost] = params.alpha_base[kObjCost] * (1.0 + params.beta * signals.budget_proximity);
    pre[kObjPopularity] =
        params.alpha_base[kObjPopularity] * (1.0 + params.gamma * signals.access_frequency);
    pre[kObjLoad] = std::min(params.alpha_base[kObjLoad] + params.lambda * signals.utilization_rate,
                             params.alpha_max);
    return pre;
}

struct PolicyClass {
    PolicyMode kind = PolicyMode::none;
    int objective_index = -1;  // set when kind == single_objective
};

// A policy is single-objective when one alpha component carries all the mass
// (or the mode says so explicitly); no_policy when mode is none and alpha is
// uniform; multi-objective otherwise.
inline PolicyClass classify(const PolicySpec& p) {
    if (p.mode == PolicyMode::single_objective)
        return {PolicyMode::single_objective, p.single_objective_index};
    const AlphaVector a = normalize_alpha(p.alpha);
    int carrier = -1;
    int nonzero = 0;
    for (int i = 0; i < kObjectiveCount; ++i) {
        if (a[i] >= 1e-9) {
            ++nonzero;
            carrier = i;
        }
    }
    if (nonzero == 1) return {PolicyMode::single_objective, carrier};
    bool uniform = true;
    for (int i = 0; i < kObjectiveCount; ++i)
        if (std::abs(a[i] - 1.0 / kObjectiveCount) > 1e-9) uniform = false;
    if (p.mode == PolicyMode::none && uniform) return {PolicyMode::none, -1};
    return {PolicyMode::multi_objective, -1};
}

struct PolicyConflictError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Effective constraint thresholds for one object after rule merging.
// "Most restrictive wins": minima tighten caps, maxima tighten floors.
struct EffectiveConstraints {
    std::optional<double> max_storage_per_node;   // bytes per node
    std::optional<double> max_replication_rate;   // bytes/second per node
    std::optional<double> monthly_cost_cap;       // currency
    std::optional<double> max_replication_time;   // seconds, per object
    std::optional<int> min_replicas;
    std::optional<int> min_regions;

    void merge(const ConstraintRule& rule) {
        auto tighten_cap = [](std::optional<double>& slot, double v) {
            slot = slot ? std::min(*slot, v) : v;
        };
        auto tighten_floor = [](std::optional<int>& slot, double v) {
            const int iv = static_cast<int>(std::lround(v));
            slot = slot ? std::max(*slot, iv) : iv;
        };
        switch (rule.kind) {
            case ConstraintKind::max_storage_per_node: tighten_cap(max_storage_per_node, rule.threshold); break;
            case ConstraintKind::max_replication_rate: tighten_cap(max_replication_rate, rule.threshold); break;
            case ConstraintKind::monthly_cost_cap: tighten_cap(monthly_cost_cap, rule.threshold); break;
            case ConstraintKind::max_replication_time: tighten_cap(max_replication_time, rule.threshold); break;
            case ConstraintKind::min_replicas: tighten_floor(min_replicas, rule.threshold); break;
            case ConstraintKind::min_regions: tighten_floor(min_regions, rule.threshold); break;
        }
    }
};

struct EffectivePolicy {
    std::vector<EffectiveConstraints> per_object;  // dense by object id
    std::optional<AlphaVector> alpha_override;     // from triggered conditional rules
};

// Expands global hard constraints plus triggered conditional rules into a
// per-object constraint table. Alpha overrides from different triggered
// rules must agree; disagreement raises PolicyConflictError.
inline EffectivePolicy apply_conditional_rules(const PolicySpec& policy, const Scenario& scenario) {
    EffectiveConstraints global;
    for (const auto& c : policy.hard_constraints) global.merge(c);

    EffectivePolicy out;
    out.per_object.assign(scenario.objects.size(), global);
    for (const auto& rule : policy.conditional_rules) {
        if (!rule.has_effects()) throw std::invalid_argument("conditional rule with no effects");
        bool triggered_any = false;
        for (std::size_t i = 0; i < scenario.objects.size(); ++i) {
            if (!rule.condition.matches(scenario.objects[i])) continue;
            triggered_any = true;
            for (const auto& c : rule.constraint_effects) out.per_object[i].merge(c);
        }
        if (triggered_any && rule.alpha_override) {
            const AlphaVector next = normalize_alpha(*rule.alpha_override);
            if (out.alpha_override) {
                for (int k = 0; k < kObjectiveCount; ++k)
                    if (std::abs((*out.alpha_override)[k] - next[k]) > 1e-9)
                        throw PolicyConflictError("conflicting alpha overrides from conditional rules");
            } else {
                out.alpha_override = next;
            }
        }
    }
    return out;
}

}  // namespace psmoa
