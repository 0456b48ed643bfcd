// Run orchestration. PSMOA wires entropy weighting, policy classification,
// preference-adjusted reference points, and per-generation policy-change
// handling around the shared evolutionary core; the NSGA-II/III baselines
// reuse the identical genome, operators, and evaluation.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psmoa/entropy_topsis.hpp"
#include "psmoa/metrics.hpp"
#include "psmoa/moea.hpp"
#include "psmoa/model.hpp"
#include "psmoa/objectives.hpp"
#include "psmoa/policy.hpp"

namespace psmoa {

// One schedule entry: at an hour (mapped onto generations) or an explicit
// generation, replace the policy's alpha and/or feed new adaptation signals.
struct ScheduleEntry {
    enum class Trigger { hour, generation };
    Trigger trigger = Trigger::hour;
    double at = 0.0;  // hour in [0,24) or generation index
    std::optional<AlphaVector> alpha;          // new explicit preference vector
    std::optional<AdaptationSignals> signals;  // new adaptation inputs
};

struct PolicySchedule {
    std::vector<ScheduleEntry> entries;
};

inline void validate(const PolicySchedule& schedule) {
    double last_hour = -1.0, last_gen = -1.0;
    for (const auto& e : schedule.entries) {
        if (!e.alpha && !e.signals)
            throw std::invalid_argument("schedule entry carries neither alpha nor signals");
        if (e.trigger == ScheduleEntry::Trigger::hour) {
            if (e.at < 0.0 || e.at >= 24.0)
                throw std::invalid_argument("schedule hour must lie in [0,24)");
            if (e.at <= last_hour) throw std::invalid_argument("schedule hours must increase");
            last_hour = e.at;
        } else {
            if (e.at < 0.0) throw std::invalid_argument("schedule generation must be >= 0");
            if (e.at <= last_gen) throw std::invalid_argument("schedule generations must increase");
            last_gen = e.at;
        }
    }
}

// Per-generation run record; streamed to the CLI run log as JSON lines.
struct GenerationTrace {
    int generation = 0;
    int policy_epoch = 1;
    AlphaVector alpha{0.25, 0.25, 0.25, 0.25};
    std::vector<double> adjusted_weights;  // empty for baselines
    int front0_size = 0;
    double feasible_fraction = 0.0;
    std::array<double, kObjectiveCount> best{};    // per-objective minima, front 0
    std::array<double, kObjectiveCount> median{};  // per-objective medians, population
    int reference_point_count = -1;  // -1 when the algorithm has no reference set
};

struct RunResult {
    FrontArchive archive;                 // non-dominated feasible set of the final population
    std::vector<GenerationTrace> trace;
    std::vector<Individual> final_population;
    WeightVector raw_entropy_weights;     // populated by the psmoa path
    int policy_epochs = 1;
    bool found_feasible = true;   // false: archive holds the least-violation set instead
    std::uint64_t evaluations = 0;
};

namespace detail {

inline void fill_trace_stats(GenerationTrace& rec, std::vector<Individual>& population) {
    const auto fronts = non_dominated_sort(population);
    rec.front0_size = static_cast<int>(fronts.front().size());
    int feasible = 0;
    for (const auto& ind : population)
        if (ind.feasibility.feasible) ++feasible;
    rec.feasible_fraction = static_cast<double>(feasible) / population.size();
    for (int k = 0; k < kObjectiveCount; ++k) {
        double best = std::numeric_limits<double>::infinity();
        for (int idx : fronts.front()) best = std::min(best, population[idx].objectives[k]);
        rec.best[k] = best;
        std::vector<double> vals;
        vals.reserve(population.size());
        for (const auto& ind : population) vals.push_back(ind.objectives[k]);
        std::sort(vals.begin(), vals.end());
        const std::size_t n = vals.size();
        rec.median[k] = n % 2 ? vals[n / 2] : 0.5 * (vals[n / 2 - 1] + vals[n / 2]);
    }
}

// Archive = non-dominated feasible members of the final population; when no
// feasible member exists, the least-violation non-dominated set is returned
// and flagged.
inline void fill_archive(RunResult& result, const std::string& label) {
    std::vector<Individual>& pop = result.final_population;
    const auto fronts = non_dominated_sort(pop);
    result.archive.label = label;
    bool any_feasible = false;
    for (const auto& ind : pop)
        if (ind.feasibility.feasible) { any_feasible = true; break; }
    result.found_feasible = any_feasible;
    for (int idx : fronts.front()) {
        if (any_feasible && !pop[idx].feasibility.feasible) continue;
        const auto arr = pop[idx].objectives.as_array();
        result.archive.insert(std::vector<double>(arr.begin(), arr.end()));
    }
    result.archive.sort_points();
}

// Performance ratings for the entropy stage: the population's objective
// matrix with popularity as its raw (positive) magnitude, min-max scaled per
// column so that no objective's unit magnitude distorts the information
// shares. Uninformative constant columns become all-ones, which entropy
// weighting already treats as zero-divergence.
inline Matrix performance_matrix(const std::vector<Individual>& population) {
    Matrix perf(population.size(), std::vector<double>(kObjectiveCount));
    for (std::size_t i = 0; i < population.size(); ++i) {
        const auto& o = population[i].objectives;
        perf[i][kObjTime] = o.time;
        perf[i][kObjCost] = o.cost;
        perf[i][kObjPopularity] = -o.neg_popularity;
        perf[i][kObjLoad] = o.load_variance;
    }
    for (int k = 0; k < kObjectiveCount; ++k) {
        double lo = perf[0][k], hi = perf[0][k];
        for (const auto& row : perf) {
            lo = std::min(lo, row[k]);
            hi = std::max(hi, row[k]);
        }
        if (hi - lo <= 0.0) {
            for (auto& row : perf) row[k] = 1.0;
        } else {
            for (auto& row : perf) row[k] = (row[k] - lo) / (hi - lo);
        }
    }
    return perf;
}

inline int generation_for_hour(double hour, int max_generations) {
    return static_cast<int>(std::floor(hour * max_generations / 24.0));
}

}  // namespace detail

// Scalar evolutionary search on one objective (minimization convention;
// popularity is already negated inside ObjectiveVector). Identical genome,
// operators, and repair as the multi-objective paths; selection is
// feasibility-first scalar comparison.
struct SingleObjectiveResult {
    Individual best;
    std::vector<GenerationTrace> trace;
};

inline SingleObjectiveResult run_single_objective(const Scenario& scenario, int objective_index,
                                                  const PolicySpec& policy,
                                                  const EvolutionConfig& config) {
    if (objective_index < 0 || objective_index >= kObjectiveCount)
        throw std::invalid_argument("objective index must lie in [0,3]");
    validate(config);
    validate(scenario);
    Rng rng(config.seed);
    const EffectivePolicy effective = apply_conditional_rules(policy, scenario);

    auto better = [&](const Individual& a, const Individual& b) {
        if (a.feasibility.feasible != b.feasibility.feasible) return a.feasibility.feasible;
        if (!a.feasibility.feasible)
            return a.feasibility.violation_score < b.feasibility.violation_score;
        return a.objectives[objective_index] < b.objectives[objective_index];
    };

    std::vector<Individual> population = initialize_population(scenario, config, effective, rng);
    SingleObjectiveResult result;
    for (int gen = 0; gen < config.max_generations; ++gen) {
        auto offspring = make_offspring(population, scenario, effective, config, rng);
        for (auto& child : offspring) population.push_back(std::move(child));
        std::stable_sort(population.begin(), population.end(),
                         [&](const Individual& a, const Individual& b) { return better(a, b); });
        population.resize(config.population_size);

        GenerationTrace rec;
        rec.generation = gen;
        detail::fill_trace_stats(rec, population);
        result.trace.push_back(rec);
    }
    result.best = population.front();
    return result;
}

// NSGA-II / NSGA-III baselines: no policy machinery, uniform (unbiased)
// reference points for NSGA-III, crowding selection for NSGA-II.
inline RunResult run_baseline(const Scenario& scenario, const EvolutionConfig& config) {
    if (config.algorithm != Algorithm::nsga2 && config.algorithm != Algorithm::nsga3)
        throw std::invalid_argument("run_baseline expects algorithm nsga2 or nsga3");
    validate(config);
    validate(scenario);
    Rng rng(config.seed);
    const PolicySpec no_policy;
    const EffectivePolicy effective = apply_conditional_rules(no_policy, scenario);

    ReferencePointSet refs;
    if (config.algorithm == Algorithm::nsga3) {
        WeightVector uniform;
        uniform.kind = WeightKind::policy_adjusted;
        uniform.weights.assign(kObjectiveCount, 1.0 / kObjectiveCount);
        refs = generate_reference_points(uniform, config.reference_divisions);
    }

    RunResult result;
    std::vector<Individual> population = initialize_population(scenario, config, effective, rng);
    result.evaluations = population.size();
    for (int gen = 0; gen < config.max_generations; ++gen) {
        auto offspring = make_offspring(population, scenario, effective, config, rng);
        result.evaluations += offspring.size();
        std::vector<Individual> merged = std::move(population);
        for (auto& child : offspring) merged.push_back(std::move(child));
        population = select_with_duplicate_padding(
            std::move(merged), config.population_size, [&](std::vector<Individual> pool, int n) {
                return config.algorithm == Algorithm::nsga2 ? nsga2_select(std::move(pool), n, rng)
                                                            : nsga3_select(std::move(pool), n, refs, rng);
            });

        GenerationTrace rec;
        rec.generation = gen;
        rec.reference_point_count =
            config.algorithm == Algorithm::nsga3 ? static_cast<int>(refs.points.size()) : -1;
        detail::fill_trace_stats(rec, population);
        result.trace.push_back(rec);
    }
    result.final_population = std::move(population);
    detail::fill_archive(result, std::string(to_string(config.algorithm)));
    return result;
}

// PSMOA. Entropy weights come from the initial population's objective
// matrix, once; policy preferences adjust them and bias the reference
// points. Single-objective policies short-circuit to the scalar path (the
// returned archive then holds that one solution). Schedule entries fire at
// generation boundaries (hours map proportionally onto the generation
// budget), re-adjust the stored raw entropy weights with the new alpha, and
// regenerate reference points; each firing increments policy_epoch.
inline RunResult run(const Scenario& scenario, const PolicySpec& policy,
                     const std::optional<PolicySchedule>& schedule, const EvolutionConfig& config) {
    if (config.algorithm != Algorithm::psmoa)
        throw std::invalid_argument("run expects algorithm psmoa");
    validate(config);
    validate(scenario);
    validate(policy);
    if (schedule) validate(*schedule);

    Rng rng(config.seed);
    const EffectivePolicy effective = apply_conditional_rules(policy, scenario);

    // Explicit alpha first (conditional overrides beat the file-level vector),
    // then dynamic adaptation on top of that base.
    AlphaVector explicit_alpha =
        effective.alpha_override ? *effective.alpha_override : normalize_alpha(policy.alpha);
    AdaptationParams adapt_params = policy.adaptation;
    adapt_params.alpha_base = explicit_alpha;
    AlphaVector current_alpha = adapt(adapt_params, AdaptationSignals{});

    const PolicyClass cls = classify(policy);
    if (cls.kind == PolicyMode::single_objective) {
        auto single = run_single_objective(scenario, cls.objective_index, policy, config);
        RunResult result;
        result.trace = std::move(single.trace);
        result.final_population.push_back(single.best);
        result.found_feasible = single.best.feasibility.feasible;
        result.archive.label = "psmoa";
        const auto arr = single.best.objectives.as_array();
        result.archive.insert(std::vector<double>(arr.begin(), arr.end()));
        return result;
    }

    std::vector<Individual> population = initialize_population(scenario, config, effective, rng);

    const WeightVector raw_entropy = entropy_weights(detail::performance_matrix(population));
    std::vector<double> alpha_vec(current_alpha.begin(), current_alpha.end());
    WeightVector adjusted = adjust_weights(raw_entropy, alpha_vec);
    ReferencePointSet refs = generate_reference_points(adjusted, config.reference_divisions);

    // Pending schedule triggers, mapped to generation indices.
    struct PendingChange {
        int generation;
        const ScheduleEntry* entry;
    };
    std::vector<PendingChange> pending;
    if (schedule)
        for (const auto& e : schedule->entries) {
            const int gen = e.trigger == ScheduleEntry::Trigger::hour
                                ? detail::generation_for_hour(e.at, config.max_generations)
                                : static_cast<int>(e.at);
            pending.push_back({std::min(gen, config.max_generations - 1), &e});
        }

    RunResult result;
    result.raw_entropy_weights = raw_entropy;
    result.evaluations = population.size();
    int policy_epoch = 1;
    std::size_t next_change = 0;
    for (int gen = 0; gen < config.max_generations; ++gen) {
        while (next_change < pending.size() && pending[next_change].generation <= gen) {
            const ScheduleEntry& entry = *pending[next_change].entry;
            if (entry.alpha) {
                explicit_alpha = normalize_alpha(*entry.alpha);
                adapt_params.alpha_base = explicit_alpha;
                current_alpha = adapt(adapt_params, AdaptationSignals{});
            }
            if (entry.signals) current_alpha = adapt(adapt_params, *entry.signals);
            alpha_vec.assign(current_alpha.begin(), current_alpha.end());
            adjusted = adjust_weights(raw_entropy, alpha_vec);
            refs = generate_reference_points(adjusted, config.reference_divisions);
            ++policy_epoch;
            ++next_change;
        }

        auto offspring = make_offspring(population, scenario, effective, config, rng);
        result.evaluations += offspring.size();
        std::vector<Individual> merged = std::move(population);
        for (auto& child : offspring) merged.push_back(std::move(child));
        population = select_with_duplicate_padding(
            std::move(merged), config.population_size, [&](std::vector<Individual> pool, int n) {
                return nsga3_select(std::move(pool), n, refs, rng);
            });

        GenerationTrace rec;
        rec.generation = gen;
        rec.policy_epoch = policy_epoch;
        rec.alpha = current_alpha;
        rec.adjusted_weights = adjusted.weights;
        rec.reference_point_count = static_cast<int>(refs.points.size());
        detail::fill_trace_stats(rec, population);
        result.trace.push_back(rec);
    }
    result.policy_epochs = policy_epoch;
    result.final_population = std::move(population);
    detail::fill_archive(result, "psmoa");
    return result;
}

// Dispatch by config.algorithm: baselines ignore policy and schedule.
inline RunResult run_algorithm(const Scenario& scenario, const PolicySpec& policy,
                               const std::optional<PolicySchedule>& schedule,
                               const EvolutionConfig& config) {
    if (config.algorithm == Algorithm::psmoa) return run(scenario, policy, schedule, config);
    return run_baseline(scenario, config);
}

}  // namespace psmoa
