// Domain model of the decentralized replication system: storage nodes,
// data objects, daily workload phases, and seeded scenario generation at
// three study scales (10/30/80 nodes).

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "psmoa/rand.hpp"

namespace psmoa {

constexpr double kGB = 1e9;  // bytes per gigabyte; all byte fields are doubles

struct Node {
    int id = 0;
    double storage_capacity = 0.0;    // bytes
    double bandwidth = 0.0;           // bytes/second
    double rtt_to_user = 0.0;         // seconds
    double storage_cost_coeff = 0.0;  // currency per byte
    double transfer_cost_coeff = 0.0; // currency per byte
    double popularity_score = 0.0;    // normalized share of routed requests
    double current_load = 0.0;
    std::string region;
};

enum class ObjectType { critical, normal, large };

inline const char* to_string(ObjectType t) {
    switch (t) {
        case ObjectType::critical: return "critical";
        case ObjectType::normal: return "normal";
        case ObjectType::large: return "large";
    }
    return "normal";
}

inline ObjectType object_type_from_string(const std::string& s) {
    if (s == "critical") return ObjectType::critical;
    if (s == "normal") return ObjectType::normal;
    if (s == "large") return ObjectType::large;
    throw std::invalid_argument("unknown object type: " + s);
}

struct DataObject {
    int id = 0;
    double size = 0.0;  // bytes
    ObjectType type_tag = ObjectType::normal;
    int request_count = 0;  // historical hourly request share for this object
};

enum class PhaseLabel { peak, off_peak, night };

inline const char* to_string(PhaseLabel l) {
    switch (l) {
        case PhaseLabel::peak: return "peak";
        case PhaseLabel::off_peak: return "off_peak";
        case PhaseLabel::night: return "night";
    }
    return "night";
}

inline PhaseLabel phase_label_from_string(const std::string& s) {
    if (s == "peak") return PhaseLabel::peak;
    if (s == "off_peak") return PhaseLabel::off_peak;
    if (s == "night") return PhaseLabel::night;
    throw std::invalid_argument("unknown phase label: " + s);
}

struct WorkloadPhase {
    PhaseLabel label = PhaseLabel::night;
    int start_hour = 0;  // in [0,24)
    int end_hour = 24;   // in (0,24]
    int requests_min = 0;
    int requests_max = 0;
    double cost_strictness = 0.0;  // in [0,1]
};

struct Scenario {
    std::vector<Node> nodes;
    std::vector<DataObject> objects;
    int user_node = 0;
    std::vector<WorkloadPhase> workload_phases;
    std::uint64_t seed = 0;

    double total_object_bytes() const {
        double t = 0.0;
        for (const auto& o : objects) t += o.size;
        return t;
    }
    double total_storage_bytes() const {
        double t = 0.0;
        for (const auto& n : nodes) t += n.storage_capacity;
        return t;
    }
    // Largest per-hour request total any phase allows; load normalization anchor.
    int max_phase_requests() const {
        int m = 0;
        for (const auto& p : workload_phases) m = std::max(m, p.requests_max);
        return m;
    }
    int total_request_count() const {
        int t = 0;
        for (const auto& o : objects) t += o.request_count;
        return t;
    }
};

// Throws std::invalid_argument when a structural invariant is broken.
inline void validate(const Scenario& s) {
    if (s.nodes.empty()) throw std::invalid_argument("scenario has no nodes");
    if (s.objects.empty()) throw std::invalid_argument("scenario has no objects");
    if (s.user_node < 0 || s.user_node >= static_cast<int>(s.nodes.size()))
        throw std::invalid_argument("user_node out of range");
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
        const Node& n = s.nodes[i];
        if (n.id != static_cast<int>(i)) throw std::invalid_argument("node ids must be dense and zero-based");
        if (!(n.storage_capacity > 0.0)) throw std::invalid_argument("node storage_capacity must be > 0");
        if (!(n.bandwidth > 0.0)) throw std::invalid_argument("node bandwidth must be > 0");
        if (n.rtt_to_user < 0.0) throw std::invalid_argument("node rtt_to_user must be >= 0");
        if (n.popularity_score < 0.0) throw std::invalid_argument("node popularity_score must be >= 0");
        if (n.current_load < 0.0) throw std::invalid_argument("node current_load must be >= 0");
    }
    for (std::size_t i = 0; i < s.objects.size(); ++i) {
        const DataObject& o = s.objects[i];
        if (o.id != static_cast<int>(i)) throw std::invalid_argument("object ids must be dense and zero-based");
        if (!(o.size > 0.0)) throw std::invalid_argument("object size must be > 0");
        if (o.request_count < 0) throw std::invalid_argument("object request_count must be >= 0");
    }
    if (!s.workload_phases.empty()) {
        auto phases = s.workload_phases;
        std::sort(phases.begin(), phases.end(),
                  [](const WorkloadPhase& a, const WorkloadPhase& b) { return a.start_hour < b.start_hour; });
        int cursor = 0;
        for (const auto& p : phases) {
            if (p.start_hour != cursor)
                throw std::invalid_argument("workload phases must partition [0,24) without gaps or overlap");
            if (p.end_hour <= p.start_hour || p.end_hour > 24)
                throw std::invalid_argument("phase end_hour must lie in (start_hour, 24]");
            if (p.requests_min > p.requests_max || p.requests_min < 0)
                throw std::invalid_argument("phase request range invalid");
            if (p.cost_strictness < 0.0 || p.cost_strictness > 1.0)
                throw std::invalid_argument("phase cost_strictness must be in [0,1]");
            cursor = p.end_hour;
        }
        if (cursor != 24) throw std::invalid_argument("workload phases must cover all 24 hours");
    }
}

enum class Scale { small, medium, large };

inline const char* to_string(Scale s) {
    switch (s) {
        case Scale::small: return "small";
        case Scale::medium: return "medium";
        case Scale::large: return "large";
    }
    return "small";
}

inline Scale scale_from_string(const std::string& s) {
    if (s == "small") return Scale::small;
    if (s == "medium") return Scale::medium;
    if (s == "large") return Scale::large;
    throw std::invalid_argument("unknown scale: " + s);
}

// Default daily phase table: night 22:00-08:00 (split at midnight so the
// phase list partitions [0,24)), peak 08:00-17:00, off-peak 17:00-22:00.
inline std::vector<WorkloadPhase> default_workload_phases() {
    return {
        {PhaseLabel::night, 0, 8, 50, 70, 0.2},
        {PhaseLabel::peak, 8, 17, 200, 300, 0.9},
        {PhaseLabel::off_peak, 17, 22, 100, 150, 0.5},
        {PhaseLabel::night, 22, 24, 50, 70, 0.2},
    };
}

inline const WorkloadPhase& phase_for_hour(const Scenario& s, int hour) {
    for (const auto& p : s.workload_phases)
        if (hour >= p.start_hour && hour < p.end_hour) return p;
    throw std::invalid_argument("no workload phase covers hour " + std::to_string(hour));
}

namespace detail {
inline const char* kRegions[4] = {"us-east", "us-west", "eu", "asia"};
}

// Seeded scenario generator. Pure function of (scale, seed): two calls with
// the same arguments build identical scenarios. Node parameter ranges:
// object sizes U[1,10] GB, bandwidth U[0.1,1.25] GB/s, RTT U[5,200] ms,
// storage U[50,500] GB rescaled so total capacity >= 3x total object size,
// cost coefficients U[0.005,0.02] currency/GB.
inline Scenario generate_scenario(Scale scale, std::uint64_t seed) {
    int node_count = 10, object_count = 20;
    if (scale == Scale::medium) { node_count = 30; object_count = 60; }
    if (scale == Scale::large) { node_count = 80; object_count = 150; }

    Rng rng(seed);
    Scenario s;
    s.seed = seed;
    s.user_node = 0;
    s.workload_phases = default_workload_phases();

    s.objects.reserve(object_count);
    for (int i = 0; i < object_count; ++i) {
        DataObject o;
        o.id = i;
        o.size = uniform_real(rng, 1.0, 10.0) * kGB;
        if (o.size >= 8.0 * kGB)
            o.type_tag = ObjectType::large;
        else
            o.type_tag = bernoulli(rng, 0.2) ? ObjectType::critical : ObjectType::normal;
        s.objects.push_back(o);
    }

    // Requests: skewed shares of an hourly-scale volume (~250 total), so the
    // request component of node load stays within the phase-table maximum.
    {
        std::vector<double> w(object_count);
        double total_w = 0.0;
        for (auto& x : w) { double u = uniform01(rng); x = u * u + 1e-3; total_w += x; }
        for (int i = 0; i < object_count; ++i)
            s.objects[i].request_count = static_cast<int>(std::lround(250.0 * w[i] / total_w));
    }

    s.nodes.reserve(node_count);
    for (int j = 0; j < node_count; ++j) {
        Node n;
        n.id = j;
        n.bandwidth = uniform_real(rng, 0.1, 1.25) * kGB;
        n.rtt_to_user = uniform_real(rng, 0.005, 0.200);
        n.storage_capacity = uniform_real(rng, 50.0, 500.0) * kGB;
        n.storage_cost_coeff = uniform_real(rng, 0.005, 0.02) / kGB;
        n.transfer_cost_coeff = uniform_real(rng, 0.005, 0.02) / kGB;
        n.current_load = 0.0;
        n.region = detail::kRegions[j % 4];
        s.nodes.push_back(n);
    }

    // Guarantee headroom for at least one feasible plan: total capacity must
    // reach 3x total object size.
    const double need = 3.0 * s.total_object_bytes();
    const double have = s.total_storage_bytes();
    if (have < need) {
        const double f = need / have;
        for (auto& n : s.nodes) n.storage_capacity *= f;
    }

    // Popularity: share proportional to bandwidth rank plus noise, normalized
    // to sum 1 (a share of historically routed requests).
    {
        std::vector<int> order(node_count);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return s.nodes[a].bandwidth < s.nodes[b].bandwidth; });
        std::vector<double> raw(node_count);
        for (int r = 0; r < node_count; ++r)
            raw[order[r]] = static_cast<double>(r + 1) + uniform_real(rng, 0.0, node_count / 2.0);
        double total = std::accumulate(raw.begin(), raw.end(), 0.0);
        for (int j = 0; j < node_count; ++j) s.nodes[j].popularity_score = raw[j] / total;
    }

    validate(s);
    return s;
}

struct HourlyWorkload {
    int hour = 0;
    std::vector<int> requests;       // per-object request counts, dense by id
    double utilization_rate = 0.0;   // hour total / max phase-table total
};

// One day of per-hour, per-object request traffic. Hourly totals are drawn
// uniformly from the covering phase's declared range; requests are then
// spread over objects in proportion to their historical request shares.
// Deterministic for a fixed (scenario, seed).
inline std::vector<HourlyWorkload> generate_daily_workload(const Scenario& s, std::uint64_t seed) {
    validate(s);
    if (s.workload_phases.empty())
        throw std::invalid_argument("generate_daily_workload requires workload phases");
    Rng rng(seed);
    const int denom = std::max(1, s.max_phase_requests());
    std::vector<double> weights(s.objects.size());
    for (std::size_t i = 0; i < s.objects.size(); ++i)
        weights[i] = static_cast<double>(s.objects[i].request_count) + 1.0;

    std::vector<HourlyWorkload> day;
    day.reserve(24);
    for (int h = 0; h < 24; ++h) {
        const WorkloadPhase& phase = phase_for_hour(s, h);
        HourlyWorkload w;
        w.hour = h;
        w.requests.assign(s.objects.size(), 0);
        const int total = static_cast<int>(uniform_int(rng, phase.requests_min, phase.requests_max));
        for (int r = 0; r < total; ++r) w.requests[discrete(rng, weights)] += 1;
        w.utilization_rate = static_cast<double>(total) / static_cast<double>(denom);
        day.push_back(std::move(w));
    }
    return day;
}

}  // namespace psmoa
