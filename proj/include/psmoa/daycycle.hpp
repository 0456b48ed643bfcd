// 24-hour adaptation experiment: derives hourly adaptation signals from a
// generated workload trace, runs one PSMOA process whose schedule fires every
// hour, and reports hourly weight trajectories plus per-objective performance
// relative to the hour-0 baseline (100 = baseline, above = improvement).

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "psmoa/optimizer.hpp"

namespace psmoa {

// Hours before the adaptation loop is expected to hold performance at or
// above the hour-0 baseline (regression checks start after this window).
inline constexpr int kDaycycleWarmupHours = 4;

struct DaycycleHour {
    int hour = 0;
    AlphaVector alpha{};
    std::array<double, kObjectiveCount> performance{};  // percent of hour-0 baseline
    AdaptationSignals signals;
    int total_requests = 0;
};

struct DaycycleResult {
    std::vector<DaycycleHour> hours;
    RunResult run;
    std::vector<HourlyWorkload> workload;
};

// Hourly adaptation signals from a workload trace. Budget proximity models
// operational spend accumulating with request traffic (requests transfer the
// mean-size object at the mean transfer coefficient), measured against the
// monthly cost cap prorated to one day; without a cap the signal stays 0.
inline std::vector<AdaptationSignals> daycycle_signals(const Scenario& scenario,
                                                       const std::vector<HourlyWorkload>& workload,
                                                       const PolicySpec& policy) {
    double max_total = 1.0;
    std::vector<double> totals(workload.size(), 0.0);
    for (std::size_t h = 0; h < workload.size(); ++h) {
        for (int r : workload[h].requests) totals[h] += r;
        max_total = std::max(max_total, totals[h]);
    }

    std::optional<double> cap;
    for (const auto& rule : policy.hard_constraints)
        if (rule.kind == ConstraintKind::monthly_cost_cap)
            cap = cap ? std::min(*cap, rule.threshold) : rule.threshold;

    const auto [c1, c2] = mean_cost_coeffs(scenario);
    (void)c1;
    const double mean_size = scenario.total_object_bytes() / scenario.objects.size();
    const double daily_cap = cap ? *cap / 30.0 : 0.0;

    std::vector<AdaptationSignals> signals(workload.size());
    double spent = 0.0;
    for (std::size_t h = 0; h < workload.size(); ++h) {
        signals[h].utilization_rate = std::clamp(workload[h].utilization_rate, 0.0, 1.0);
        signals[h].access_frequency = totals[h] / max_total;
        signals[h].budget_proximity =
            daily_cap > 0.0 ? std::clamp(spent / daily_cap, 0.0, 1.0) : 0.0;
        spent += totals[h] * mean_size * c2;
    }
    return signals;
}

inline PolicySchedule daycycle_schedule(const std::vector<AdaptationSignals>& signals) {
    PolicySchedule schedule;
    for (std::size_t h = 0; h < signals.size(); ++h) {
        ScheduleEntry e;
        e.trigger = ScheduleEntry::Trigger::hour;
        e.at = static_cast<double>(h);
        e.signals = signals[h];
        schedule.entries.push_back(e);
    }
    return schedule;
}

// Runs the 24-hour experiment on the given scenario (the reference setup uses
// the 10-node scale). Hour h's weights and metrics are read from the last
// generation inside hour h's share of the generation budget.
inline DaycycleResult run_daycycle(const Scenario& scenario, const PolicySpec& policy,
                                   const EvolutionConfig& config, std::uint64_t workload_seed) {
    DaycycleResult result;
    result.workload = generate_daily_workload(scenario, workload_seed);
    const auto signals = daycycle_signals(scenario, result.workload, policy);
    const PolicySchedule schedule = daycycle_schedule(signals);

    EvolutionConfig cfg = config;
    cfg.algorithm = Algorithm::psmoa;
    if (cfg.max_generations < 24)
        throw std::invalid_argument("daycycle needs at least 24 generations");
    result.run = run(scenario, policy, schedule, cfg);

    auto hour_end_generation = [&](int hour) {
        const int next = detail::generation_for_hour(hour + 1.0, cfg.max_generations);
        return std::clamp(next - 1, 0, cfg.max_generations - 1);
    };

    constexpr double kEps = 1e-12;
    const GenerationTrace& base = result.run.trace[hour_end_generation(0)];
    for (int h = 0; h < 24; ++h) {
        const GenerationTrace& rec = result.run.trace[hour_end_generation(h)];
        DaycycleHour out;
        out.hour = h;
        out.alpha = rec.alpha;
        out.signals = signals[h];
        for (int r : result.workload[h].requests) out.total_requests += r;
        // Minimization objectives improve when the best value shrinks;
        // popularity improves when its raw magnitude grows.
        for (int k = 0; k < kObjectiveCount; ++k) {
            if (k == kObjPopularity) {
                const double raw_base = -base.best[k];
                const double raw_now = -rec.best[k];
                out.performance[k] = 100.0 * (raw_now + kEps) / (raw_base + kEps);
            } else {
                out.performance[k] = 100.0 * (base.best[k] + kEps) / (rec.best[k] + kEps);
            }
        }
        result.hours.push_back(out);
    }
    return result;
}

}  // namespace psmoa
