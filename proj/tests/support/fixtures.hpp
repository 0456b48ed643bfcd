// Hand-built scenarios and plan helpers shared across test suites.

#pragma once

#include <vector>

#include "psmoa/psmoa.hpp"

namespace fixtures {

inline psmoa::Node make_node(int id, double capacity_gb, double bandwidth_gbps, double rtt_s,
                             double pop, const std::string& region = "r0") {
    psmoa::Node n;
    n.id = id;
    n.storage_capacity = capacity_gb * psmoa::kGB;
    n.bandwidth = bandwidth_gbps * psmoa::kGB;
    n.rtt_to_user = rtt_s;
    n.storage_cost_coeff = 0.01 / psmoa::kGB;
    n.transfer_cost_coeff = 0.01 / psmoa::kGB;
    n.popularity_score = pop;
    n.region = region;
    return n;
}

inline psmoa::DataObject make_object(int id, double size_gb,
                                     psmoa::ObjectType type = psmoa::ObjectType::normal,
                                     int requests = 10) {
    psmoa::DataObject o;
    o.id = id;
    o.size = size_gb * psmoa::kGB;
    o.type_tag = type;
    o.request_count = requests;
    return o;
}

// 3 nodes / 2 objects, generous capacity: every valid plan is feasible.
// (2^3 - 1)^2 = 49 valid plans; used with the exhaustive oracle.
inline psmoa::Scenario tiny_scenario() {
    psmoa::Scenario s;
    s.seed = 0;
    s.user_node = 0;
    s.nodes = {
        make_node(0, 100.0, 1.0, 0.010, 0.5, "r0"),
        make_node(1, 120.0, 0.5, 0.050, 0.3, "r1"),
        make_node(2, 150.0, 0.25, 0.020, 0.2, "r2"),
    };
    s.nodes[0].storage_cost_coeff = 0.008 / psmoa::kGB;
    s.nodes[1].transfer_cost_coeff = 0.015 / psmoa::kGB;
    s.objects = {
        make_object(0, 2.0, psmoa::ObjectType::normal, 30),
        make_object(1, 5.0, psmoa::ObjectType::large, 12),
    };
    s.workload_phases = psmoa::default_workload_phases();
    psmoa::validate(s);
    return s;
}

// Single-node / single-object scenario with unit-friendly numbers.
inline psmoa::Scenario unit_scenario(double size_gb = 1.0, double bandwidth_gbps = 1.0,
                                     double rtt_s = 0.0) {
    psmoa::Scenario s;
    s.nodes = {make_node(0, 1000.0, bandwidth_gbps, rtt_s, 1.0)};
    s.objects = {make_object(0, size_gb)};
    s.workload_phases = psmoa::default_workload_phases();
    psmoa::validate(s);
    return s;
}

inline psmoa::ReplicationPlan plan_from_rows(const std::vector<std::vector<int>>& rows,
                                             int node_count) {
    psmoa::ReplicationPlan plan(static_cast<int>(rows.size()), node_count);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j : rows[i]) plan.set(static_cast<int>(i), j, true);
    return plan;
}

// Random valid plan with per-bit density 0.5 and guaranteed non-empty rows.
inline psmoa::ReplicationPlan random_plan(const psmoa::Scenario& s, psmoa::Rng& rng) {
    psmoa::ReplicationPlan plan(static_cast<int>(s.objects.size()),
                                static_cast<int>(s.nodes.size()));
    for (int i = 0; i < plan.object_count; ++i) {
        for (int j = 0; j < plan.node_count; ++j) plan.set(i, j, psmoa::bernoulli(rng, 0.5));
        if (plan.replica_count(i) == 0)
            plan.set(i, static_cast<int>(psmoa::uniform_int(rng, 0, plan.node_count - 1)), true);
    }
    return plan;
}

}  // namespace fixtures
