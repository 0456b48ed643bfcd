// Plan evaluation: the four replication objectives (time, cost, popularity,
// load variance) in minimization convention, plus storage/bandwidth/policy
// feasibility checking.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "psmoa/model.hpp"
#include "psmoa/policy.hpp"

namespace psmoa {

// Binary decision matrix: rows are data objects, columns are nodes,
// bit (i,j) set iff node j holds a replica of object i. Every row must keep
// at least one replica.
struct ReplicationPlan {
    int object_count = 0;
    int node_count = 0;
    std::vector<std::uint8_t> bits;  // row-major, values strictly 0/1

    ReplicationPlan() = default;
    ReplicationPlan(int objects, int nodes)
        : object_count(objects), node_count(nodes),
          bits(static_cast<std::size_t>(objects) * static_cast<std::size_t>(nodes), 0) {}

    bool at(int object, int node) const {
        return bits[static_cast<std::size_t>(object) * node_count + node] != 0;
    }
    void set(int object, int node, bool value) {
        bits[static_cast<std::size_t>(object) * node_count + node] = value ? 1 : 0;
    }
    int replica_count(int object) const {
        int c = 0;
        for (int j = 0; j < node_count; ++j) c += at(object, j);
        return c;
    }
    int total_replicas() const {
        int c = 0;
        for (auto b : bits) c += b;
        return c;
    }
    bool operator==(const ReplicationPlan& other) const = default;
};

inline void validate(const ReplicationPlan& plan, const Scenario& scenario) {
    if (plan.object_count != static_cast<int>(scenario.objects.size()) ||
        plan.node_count != static_cast<int>(scenario.nodes.size()))
        throw std::invalid_argument("plan dimensions do not match scenario");
    for (auto b : plan.bits)
        if (b > 1) throw std::invalid_argument("plan entries must be 0 or 1");
    for (int i = 0; i < plan.object_count; ++i)
        if (plan.replica_count(i) == 0)
            throw std::invalid_argument("plan row " + std::to_string(i) + " selects no node");
}

// Objective vector in minimization convention; popularity enters negated
// here and only here.
struct ObjectiveVector {
    double time = 0.0;            // seconds
    double cost = 0.0;            // currency
    double neg_popularity = 0.0;  // dimensionless, <= 0
    double load_variance = 0.0;   // dimensionless

    std::array<double, kObjectiveCount> as_array() const {
        return {time, cost, neg_popularity, load_variance};
    }
    double operator[](int idx) const { return as_array()[idx]; }
    bool operator==(const ObjectiveVector& other) const = default;
};

struct FeasibilityReport {
    bool feasible = true;
    double storage_violation = 0.0;    // bytes of total overrun, 0 if none
    double bandwidth_violation = 0.0;  // bytes of total overrun, 0 if none
    std::vector<std::string> policy_violations;
    // Scale-free magnitude used by feasibility-first dominance: byte overruns
    // normalized by total object size, plus one unit per policy violation.
    double violation_score = 0.0;
};

// Total replication time, Eq-style sum over objects and their selected
// nodes of size/bandwidth + round-trip latency.
inline double eval_time(const ReplicationPlan& plan, const Scenario& scenario) {
    double total = 0.0;
    for (int i = 0; i < plan.object_count; ++i) {
        const double size = scenario.objects[i].size;
        for (int j = 0; j < plan.node_count; ++j) {
            if (!plan.at(i, j)) continue;
            const Node& n = scenario.nodes[j];
            total += size / n.bandwidth + n.rtt_to_user;
        }
    }
    return total;
}

// Scenario-level mean storage/transfer coefficients; the cost model uses
// global coefficients rather than per-node ones.
inline std::pair<double, double> mean_cost_coeffs(const Scenario& scenario) {
    double c1 = 0.0, c2 = 0.0;
    for (const auto& n : scenario.nodes) {
        c1 += n.storage_cost_coeff;
        c2 += n.transfer_cost_coeff;
    }
    const double inv = 1.0 / static_cast<double>(scenario.nodes.size());
    return {c1 * inv, c2 * inv};
}

// Replica-count-linear storage+transfer cost: sum_i |S_i| * size_i * (c1+c2).
inline double eval_cost(const ReplicationPlan& plan, const Scenario& scenario) {
    const auto [c1, c2] = mean_cost_coeffs(scenario);
    double total = 0.0;
    for (int i = 0; i < plan.object_count; ++i) {
        const double per_replica = c1 * scenario.objects[i].size + c2 * scenario.objects[i].size;
        total += static_cast<double>(plan.replica_count(i)) * per_replica;
    }
    return total;
}

// Raw popularity mass of all selected replica nodes (maximization value;
// callers negate for the minimization convention).
inline double eval_popularity(const ReplicationPlan& plan, const Scenario& scenario) {
    double total = 0.0;
    for (int i = 0; i < plan.object_count; ++i)
        for (int j = 0; j < plan.node_count; ++j)
            if (plan.at(i, j)) total += scenario.nodes[j].popularity_score;
    return total;
}

// Per-node load induced by a plan: the mean of a storage fraction
// (bytes stored / capacity) and a request fraction (requests served / the
// phase table's maximum hourly total). Each object's requests are served by
// its selected node with the highest popularity score (ties: lowest index).
inline std::vector<double> node_loads(const ReplicationPlan& plan, const Scenario& scenario) {
    const int n = plan.node_count;
    std::vector<double> stored(n, 0.0);
    std::vector<double> served(n, 0.0);
    for (int i = 0; i < plan.object_count; ++i) {
        int best = -1;
        for (int j = 0; j < n; ++j) {
            if (!plan.at(i, j)) continue;
            stored[j] += scenario.objects[i].size;
            if (best < 0 || scenario.nodes[j].popularity_score > scenario.nodes[best].popularity_score)
                best = j;
        }
        if (best >= 0) served[best] += static_cast<double>(scenario.objects[i].request_count);
    }
    double req_den = static_cast<double>(scenario.max_phase_requests());
    if (req_den <= 0.0) req_den = static_cast<double>(std::max(1, scenario.total_request_count()));
    std::vector<double> loads(n, 0.0);
    for (int j = 0; j < n; ++j) {
        const double storage_frac = stored[j] / scenario.nodes[j].storage_capacity;
        const double request_frac = served[j] / req_den;
        loads[j] = 0.5 * (storage_frac + request_frac);
    }
    return loads;
}

// Population variance of the induced node loads.
inline double eval_load_balance(const ReplicationPlan& plan, const Scenario& scenario) {
    const auto loads = node_loads(plan, scenario);
    const double n = static_cast<double>(loads.size());
    double mean = 0.0;
    for (double l : loads) mean += l;
    mean /= n;
    double var = 0.0;
    for (double l : loads) var += (l - mean) * (l - mean);
    return var / n;
}

inline ObjectiveVector evaluate(const ReplicationPlan& plan, const Scenario& scenario) {
    ObjectiveVector v;
    v.time = eval_time(plan, scenario);
    v.cost = eval_cost(plan, scenario);
    v.neg_popularity = -eval_popularity(plan, scenario);
    v.load_variance = eval_load_balance(plan, scenario);
    return v;
}

// Bandwidth is compared against bytes transferable within one replication
// round; default round length one hour.
constexpr double kDefaultBandwidthWindow = 3600.0;

// Replication time for a single object's row, for max_replication_time rules.
inline double object_replication_time(const ReplicationPlan& plan, const Scenario& scenario,
                                      int object) {
    double t = 0.0;
    for (int j = 0; j < plan.node_count; ++j) {
        if (!plan.at(object, j)) continue;
        const Node& n = scenario.nodes[j];
        t += scenario.objects[object].size / n.bandwidth + n.rtt_to_user;
    }
    return t;
}

// Storage, bandwidth, and policy-rule feasibility against a pre-expanded
// constraint table. Infeasibility is reported, never thrown.
inline FeasibilityReport check_feasibility(const ReplicationPlan& plan, const Scenario& scenario,
                                           const EffectivePolicy& eff,
                                           double bandwidth_window = kDefaultBandwidthWindow) {
    FeasibilityReport rep;

    std::vector<double> bytes_on_node(plan.node_count, 0.0);
    for (int i = 0; i < plan.object_count; ++i)
        for (int j = 0; j < plan.node_count; ++j)
            if (plan.at(i, j)) bytes_on_node[j] += scenario.objects[i].size;

    // Per-node storage and bandwidth caps; per-object rules may tighten the
    // node-level caps globally (they are node constraints, so the tightest
    // triggered threshold applies everywhere).
    std::optional<double> storage_rule, rate_rule, cost_cap;
    for (const auto& oc : eff.per_object) {
        if (oc.max_storage_per_node)
            storage_rule = storage_rule ? std::min(*storage_rule, *oc.max_storage_per_node)
                                        : *oc.max_storage_per_node;
        if (oc.max_replication_rate)
            rate_rule = rate_rule ? std::min(*rate_rule, *oc.max_replication_rate)
                                  : *oc.max_replication_rate;
        if (oc.monthly_cost_cap)
            cost_cap = cost_cap ? std::min(*cost_cap, *oc.monthly_cost_cap) : *oc.monthly_cost_cap;
    }

    for (int j = 0; j < plan.node_count; ++j) {
        double storage_cap = scenario.nodes[j].storage_capacity;
        if (storage_rule) storage_cap = std::min(storage_cap, *storage_rule);
        if (bytes_on_node[j] > storage_cap) rep.storage_violation += bytes_on_node[j] - storage_cap;

        double rate = scenario.nodes[j].bandwidth;
        if (rate_rule) rate = std::min(rate, *rate_rule);
        const double bw_cap = rate * bandwidth_window;
        if (bytes_on_node[j] > bw_cap) rep.bandwidth_violation += bytes_on_node[j] - bw_cap;
    }

    static const EffectiveConstraints kNoConstraints;
    for (int i = 0; i < plan.object_count; ++i) {
        const EffectiveConstraints& oc =
            i < static_cast<int>(eff.per_object.size()) ? eff.per_object[i] : kNoConstraints;
        if (oc.min_replicas && plan.replica_count(i) < *oc.min_replicas)
            rep.policy_violations.push_back("min_replicas:object" + std::to_string(i));
        if (oc.min_regions) {
            std::set<std::string> regions;
            for (int j = 0; j < plan.node_count; ++j)
                if (plan.at(i, j)) regions.insert(scenario.nodes[j].region);
            if (static_cast<int>(regions.size()) < *oc.min_regions)
                rep.policy_violations.push_back("min_regions:object" + std::to_string(i));
        }
        if (oc.max_replication_time &&
            object_replication_time(plan, scenario, i) > *oc.max_replication_time)
            rep.policy_violations.push_back("max_replication_time:object" + std::to_string(i));
    }

    if (cost_cap && eval_cost(plan, scenario) > *cost_cap)
        rep.policy_violations.push_back("monthly_cost_cap");

    rep.feasible = rep.storage_violation == 0.0 && rep.bandwidth_violation == 0.0 &&
                   rep.policy_violations.empty();
    const double byte_scale = std::max(scenario.total_object_bytes(), 1.0);
    rep.violation_score = (rep.storage_violation + rep.bandwidth_violation) / byte_scale +
                          static_cast<double>(rep.policy_violations.size());
    return rep;
}

inline FeasibilityReport check_feasibility(const ReplicationPlan& plan, const Scenario& scenario,
                                           const PolicySpec& policy,
                                           double bandwidth_window = kDefaultBandwidthWindow) {
    return check_feasibility(plan, scenario, apply_conditional_rules(policy, scenario),
                             bandwidth_window);
}

}  // namespace psmoa
