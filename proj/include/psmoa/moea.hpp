// Evolutionary machinery shared by all three algorithms: population
// initialization, matrix genome operators with constraint repair, fast
// non-dominated sorting under feasibility-first dominance, NSGA-II crowding
// selection, and NSGA-III normalization/association/niching.

#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "psmoa/entropy_topsis.hpp"
#include "psmoa/objectives.hpp"
#include "psmoa/rand.hpp"

namespace psmoa {

struct Individual {
    ReplicationPlan plan;
    ObjectiveVector objectives;     // cached; recomputed on any plan change
    FeasibilityReport feasibility;  // cached alongside objectives
    int rank = 0;                   // non-dominated front index
    double diversity_key = 0.0;     // crowding distance / niche distance
};

enum class Algorithm { nsga2, nsga3, psmoa };

inline const char* to_string(Algorithm a) {
    switch (a) {
        case Algorithm::nsga2: return "nsga2";
        case Algorithm::nsga3: return "nsga3";
        case Algorithm::psmoa: return "psmoa";
    }
    return "?";
}

inline Algorithm algorithm_from_string(const std::string& s) {
    if (s == "nsga2") return Algorithm::nsga2;
    if (s == "nsga3") return Algorithm::nsga3;
    if (s == "psmoa") return Algorithm::psmoa;
    throw std::invalid_argument("unknown algorithm: " + s + " (valid: nsga2, nsga3, psmoa)");
}

struct EvolutionConfig {
    int population_size = 100;
    int max_generations = 200;
    double crossover_rate = 0.9;
    double mutation_rate = 1.0;  // per-bit flip probability is rate / node_count
    std::uint64_t seed = 0;
    Algorithm algorithm = Algorithm::psmoa;
    int reference_divisions = 6;          // simplex lattice density for 4 objectives
    double bandwidth_window = kDefaultBandwidthWindow;
};

inline void validate(const EvolutionConfig& c) {
    if (c.population_size < 4 || c.population_size % 2 != 0)
        throw std::invalid_argument("population_size must be >= 4 and even");
    if (c.max_generations < 1) throw std::invalid_argument("max_generations must be >= 1");
    if (c.crossover_rate < 0.0 || c.crossover_rate > 1.0)
        throw std::invalid_argument("crossover_rate must lie in [0,1]");
    if (c.mutation_rate < 0.0 || c.mutation_rate > 1.0)
        throw std::invalid_argument("mutation_rate must lie in [0,1]");
    if (c.reference_divisions < 1) throw std::invalid_argument("reference_divisions must be >= 1");
}

// Feasibility-first dominance: feasible beats infeasible; two infeasibles
// compare by violation magnitude; two feasibles by objective dominance.
inline bool dominates_objectives(const ObjectiveVector& a, const ObjectiveVector& b) {
    const auto av = a.as_array();
    const auto bv = b.as_array();
    bool strict = false;
    for (int k = 0; k < kObjectiveCount; ++k) {
        if (av[k] > bv[k]) return false;
        if (av[k] < bv[k]) strict = true;
    }
    return strict;
}

inline bool constrained_dominates(const Individual& a, const Individual& b) {
    if (a.feasibility.feasible != b.feasibility.feasible) return a.feasibility.feasible;
    if (!a.feasibility.feasible)
        return a.feasibility.violation_score < b.feasibility.violation_score;
    return dominates_objectives(a.objectives, b.objectives);
}

// Constraint repair. Empty rows gain one random replica; then, while any
// node holds more bytes than its effective cap min(storage, bandwidth x
// window), the replica whose object is most replicated is removed from the
// most overloaded node. Rows are never emptied, so a residual overrun can
// survive when every replica on an overloaded node is its object's last;
// feasibility-first dominance penalizes those plans downstream.
inline ReplicationPlan repair(ReplicationPlan plan, const Scenario& scenario, Rng& rng,
                              double bandwidth_window = kDefaultBandwidthWindow) {
    const int m = plan.object_count;
    const int n = plan.node_count;
    for (int i = 0; i < m; ++i)
        if (plan.replica_count(i) == 0)
            plan.set(i, static_cast<int>(uniform_int(rng, 0, n - 1)), true);

    std::vector<double> cap(n);
    for (int j = 0; j < n; ++j)
        cap[j] = std::min(scenario.nodes[j].storage_capacity,
                          scenario.nodes[j].bandwidth * bandwidth_window);

    std::vector<double> bytes_on(n, 0.0);
    std::vector<int> replicas(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (plan.at(i, j)) {
                bytes_on[j] += scenario.objects[i].size;
                replicas[i] += 1;
            }

    std::vector<bool> stuck(n, false);
    while (true) {
        int worst = -1;
        double worst_over = 0.0;
        for (int j = 0; j < n; ++j) {
            if (stuck[j]) continue;
            const double over = bytes_on[j] - cap[j];
            if (over > 0.0 && over > worst_over) {
                worst = j;
                worst_over = over;
            }
        }
        if (worst < 0) break;
        int victim = -1;
        for (int i = 0; i < m; ++i)
            if (plan.at(i, worst) && replicas[i] >= 2 &&
                (victim < 0 || replicas[i] > replicas[victim]))
                victim = i;
        if (victim < 0) {
            stuck[worst] = true;  // only last replicas remain here
            continue;
        }
        plan.set(victim, worst, false);
        bytes_on[worst] -= scenario.objects[victim].size;
        replicas[victim] -= 1;
    }
    return plan;
}

inline Individual make_individual(ReplicationPlan plan, const Scenario& scenario,
                                  const EffectivePolicy& effective,
                                  double bandwidth_window = kDefaultBandwidthWindow) {
    Individual ind;
    ind.plan = std::move(plan);
    ind.objectives = evaluate(ind.plan, scenario);
    ind.feasibility = check_feasibility(ind.plan, scenario, effective, bandwidth_window);
    return ind;
}

// Population of uniformly random non-empty row subsets, repaired and
// evaluated. Deterministic for a fixed generator state.
inline std::vector<Individual> initialize_population(const Scenario& scenario,
                                                     const EvolutionConfig& config,
                                                     const EffectivePolicy& effective, Rng& rng) {
    validate(config);
    const int m = static_cast<int>(scenario.objects.size());
    const int n = static_cast<int>(scenario.nodes.size());
    std::vector<Individual> population;
    population.reserve(config.population_size);
    for (int k = 0; k < config.population_size; ++k) {
        ReplicationPlan plan(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) plan.set(i, j, bernoulli(rng, 0.5));
        plan = repair(std::move(plan), scenario, rng, config.bandwidth_window);
        population.push_back(make_individual(std::move(plan), scenario, effective,
                                             config.bandwidth_window));
    }
    return population;
}

// Convenience overload matching the (scenario, config) contract; seeds a
// fresh generator from config.seed.
inline std::vector<Individual> initialize_population(const Scenario& scenario,
                                                     const EvolutionConfig& config,
                                                     const PolicySpec& policy = {}) {
    Rng rng(config.seed);
    return initialize_population(scenario, config, apply_conditional_rules(policy, scenario), rng);
}

// Row-uniform crossover: with probability `rate` the parents exchange whole
// object rows, each row swapped with probability 1/2; otherwise the children
// are copies. Children are repaired and re-evaluated.
inline std::pair<Individual, Individual> crossover(const Individual& parent_a,
                                                   const Individual& parent_b,
                                                   const Scenario& scenario,
                                                   const EffectivePolicy& effective, double rate,
                                                   Rng& rng,
                                                   double bandwidth_window = kDefaultBandwidthWindow) {
    ReplicationPlan a = parent_a.plan;
    ReplicationPlan b = parent_b.plan;
    if (bernoulli(rng, rate)) {
        for (int i = 0; i < a.object_count; ++i) {
            if (!bernoulli(rng, 0.5)) continue;
            for (int j = 0; j < a.node_count; ++j) {
                const bool va = a.at(i, j);
                const bool vb = b.at(i, j);
                a.set(i, j, vb);
                b.set(i, j, va);
            }
        }
    }
    a = repair(std::move(a), scenario, rng, bandwidth_window);
    b = repair(std::move(b), scenario, rng, bandwidth_window);
    return {make_individual(std::move(a), scenario, effective, bandwidth_window),
            make_individual(std::move(b), scenario, effective, bandwidth_window)};
}

// Bit-flip mutation at probability rate/node_count per entry, followed by
// repair and re-evaluation.
inline Individual mutate(const Individual& individual, const Scenario& scenario,
                         const EffectivePolicy& effective, double rate, Rng& rng,
                         double bandwidth_window = kDefaultBandwidthWindow) {
    if (rate < 0.0 || rate > 1.0) throw std::invalid_argument("mutation rate must lie in [0,1]");
    ReplicationPlan plan = individual.plan;
    const double per_bit = rate / static_cast<double>(plan.node_count);
    bool changed = false;
    for (int i = 0; i < plan.object_count; ++i)
        for (int j = 0; j < plan.node_count; ++j)
            if (bernoulli(rng, per_bit)) {
                plan.set(i, j, !plan.at(i, j));
                changed = true;
            }
    if (!changed) return individual;
    plan = repair(std::move(plan), scenario, rng, bandwidth_window);
    return make_individual(std::move(plan), scenario, effective, bandwidth_window);
}

// Deb's fast non-dominated sort under feasibility-first dominance. Returns
// fronts of population indices; assigns Individual::rank.
inline std::vector<std::vector<int>> non_dominated_sort(std::vector<Individual>& population) {
    const int n = static_cast<int>(population.size());
    std::vector<std::vector<int>> dominated(n);
    std::vector<int> domination_count(n, 0);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            if (constrained_dominates(population[p], population[q])) {
                dominated[p].push_back(q);
                ++domination_count[q];
            } else if (constrained_dominates(population[q], population[p])) {
                dominated[q].push_back(p);
                ++domination_count[p];
            }
        }
    std::vector<std::vector<int>> fronts;
    std::vector<int> current;
    for (int p = 0; p < n; ++p)
        if (domination_count[p] == 0) current.push_back(p);
    while (!current.empty()) {
        for (int p : current) population[p].rank = static_cast<int>(fronts.size());
        fronts.push_back(current);
        std::vector<int> next;
        for (int p : current)
            for (int q : dominated[p])
                if (--domination_count[q] == 0) next.push_back(q);
        current = std::move(next);
    }
    return fronts;
}

// Crowding distance within one front (NSGA-II); boundary points get
// +infinity.
inline std::vector<double> crowding_distances(const std::vector<Individual>& population,
                                              const std::vector<int>& front) {
    const int size = static_cast<int>(front.size());
    std::vector<double> distance(size, 0.0);
    if (size <= 2) {
        std::fill(distance.begin(), distance.end(), std::numeric_limits<double>::infinity());
        return distance;
    }
    std::vector<int> order(size);
    std::iota(order.begin(), order.end(), 0);
    for (int k = 0; k < kObjectiveCount; ++k) {
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return population[front[a]].objectives[k] < population[front[b]].objectives[k];
        });
        const double lo = population[front[order.front()]].objectives[k];
        const double hi = population[front[order.back()]].objectives[k];
        distance[order.front()] = std::numeric_limits<double>::infinity();
        distance[order.back()] = std::numeric_limits<double>::infinity();
        if (hi <= lo) continue;
        for (int r = 1; r + 1 < size; ++r) {
            const double below = population[front[order[r - 1]]].objectives[k];
            const double above = population[front[order[r + 1]]].objectives[k];
            distance[order[r]] += (above - below) / (hi - lo);
        }
    }
    return distance;
}

// NSGA-II environmental selection: fill whole fronts, truncate the boundary
// front by descending crowding distance. Equal distances break by the seeded
// generator.
inline std::vector<Individual> nsga2_select(std::vector<Individual> merged, int survivors,
                                            Rng& rng) {
    if (static_cast<int>(merged.size()) < survivors)
        throw std::invalid_argument("nsga2_select needs |merged| >= N");
    const auto fronts = non_dominated_sort(merged);
    std::vector<Individual> next;
    next.reserve(survivors);
    for (const auto& front : fronts) {
        const auto distance = crowding_distances(merged, front);
        for (std::size_t i = 0; i < front.size(); ++i) merged[front[i]].diversity_key = distance[i];
        if (static_cast<int>(next.size() + front.size()) <= survivors) {
            for (int idx : front) next.push_back(merged[idx]);
            if (static_cast<int>(next.size()) == survivors) break;
            continue;
        }
        std::vector<int> order(front.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<double> tiebreak(front.size());
        for (auto& t : tiebreak) t = uniform01(rng);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (distance[a] != distance[b]) return distance[a] > distance[b];
            return tiebreak[a] < tiebreak[b];
        });
        for (int r = 0; static_cast<int>(next.size()) < survivors; ++r)
            next.push_back(merged[front[order[r]]]);
        break;
    }
    return next;
}

// ---- NSGA-III internals (dimension-agnostic; unit-tested in isolation) ----

namespace nsga3 {

// Gaussian elimination with partial pivoting; returns false when singular.
inline bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                         std::vector<double>& x) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < 1e-12) return false;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
        x[r] = acc / a[r][r];
    }
    return true;
}

// Adaptive normalization: translate by the ideal point, pick extreme points
// by the achievement scalarizing function per axis, and divide by the
// intercepts of the hyperplane through them. Falls back to the first front's
// per-objective maxima when the extreme-point system is singular or yields
// non-positive intercepts.
inline std::vector<std::vector<double>> normalize_objectives(
    const std::vector<std::vector<double>>& points, const std::vector<int>& first_front) {
    if (points.empty()) return {};
    const std::size_t m = points.front().size();
    std::vector<double> ideal(m, std::numeric_limits<double>::infinity());
    for (const auto& p : points)
        for (std::size_t k = 0; k < m; ++k) ideal[k] = std::min(ideal[k], p[k]);

    std::vector<std::vector<double>> translated(points.size(), std::vector<double>(m));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t k = 0; k < m; ++k) translated[i][k] = points[i][k] - ideal[k];

    std::vector<std::vector<double>> extremes(m);
    for (std::size_t axis = 0; axis < m; ++axis) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_idx = 0;
        for (std::size_t i = 0; i < translated.size(); ++i) {
            double asf = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const double w = (k == axis) ? 1.0 : 1e-6;
                asf = std::max(asf, translated[i][k] / w);
            }
            if (asf < best) {
                best = asf;
                best_idx = i;
            }
        }
        extremes[axis] = translated[best_idx];
    }

    std::vector<double> intercepts;
    bool ok = solve_linear(extremes, std::vector<double>(m, 1.0), intercepts);
    if (ok)
        for (double& v : intercepts) {
            if (v <= 1e-12) { ok = false; break; }
            v = 1.0 / v;
        }
    if (!ok) {
        intercepts.assign(m, 0.0);
        for (int idx : first_front)
            for (std::size_t k = 0; k < m; ++k)
                intercepts[k] = std::max(intercepts[k], translated[idx][k]);
    }
    for (double& v : intercepts)
        if (v <= 1e-12) v = 1.0;

    for (auto& p : translated)
        for (std::size_t k = 0; k < m; ++k) p[k] /= intercepts[k];
    return translated;
}

inline double perpendicular_distance(const std::vector<double>& direction,
                                     const std::vector<double>& point) {
    double dot = 0.0, norm2 = 0.0;
    for (std::size_t k = 0; k < direction.size(); ++k) {
        dot += direction[k] * point[k];
        norm2 += direction[k] * direction[k];
    }
    const double t = dot / norm2;
    double dist2 = 0.0;
    for (std::size_t k = 0; k < direction.size(); ++k) {
        const double d = point[k] - t * direction[k];
        dist2 += d * d;
    }
    return std::sqrt(std::max(dist2, 0.0));
}

struct Association {
    int reference = 0;
    double distance = 0.0;
};

inline std::vector<Association> associate(const std::vector<std::vector<double>>& normalized,
                                          const std::vector<std::vector<double>>& refs) {
    std::vector<Association> out(normalized.size());
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        int best_ref = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < refs.size(); ++r) {
            const double d = perpendicular_distance(refs[r], normalized[i]);
            if (d < best) {
                best = d;
                best_ref = static_cast<int>(r );
            }
        }
        out[i] = {best_ref, best};
    }
    return out;
}

// Niche-preserving boundary selection: repeatedly take the reference point
// with the lowest niche count and admit its closest unassigned boundary
// member; ties (among reference points and among equally close members)
// break by the seeded generator. A reference point with no remaining
// candidates leaves the pool.
inline std::vector<int> niche_select(const std::vector<Association>& assoc,
                                     const std::vector<int>& boundary,
                                     std::vector<int> niche_counts, int to_pick, Rng& rng) {
    std::vector<std::vector<int>> candidates(niche_counts.size());
    for (int idx : boundary) candidates[assoc[idx].reference].push_back(idx);
    std::vector<bool> active(niche_counts.size());
    for (std::size_t r = 0; r < candidates.size(); ++r) active[r] = !candidates[r].empty();

    std::vector<int> picked;
    picked.reserve(to_pick);
    while (static_cast<int>(picked.size()) < to_pick) {
        int best_ref = -1;
        int ties = 0;
        for (std::size_t r = 0; r < niche_counts.size(); ++r) {
            if (!active[r]) continue;
            if (best_ref < 0 || niche_counts[r] < niche_counts[best_ref]) {
                best_ref = static_cast<int>(r);
                ties = 1;
            } else if (niche_counts[r] == niche_counts[best_ref]) {
                ++ties;
                if (uniform_int(rng, 1, ties) == 1) best_ref = static_cast<int>(r);
            }
        }
        if (best_ref < 0) break;  // no candidates anywhere (caller picks too few)
        auto& pool = candidates[best_ref];
        int best_pos = 0;
        int close_ties = 0;
        for (std::size_t c = 0; c < pool.size(); ++c) {
            const double d = assoc[pool[c]].distance;
            const double cur = assoc[pool[best_pos]].distance;
            if (c == 0 || d < cur) {
                best_pos = static_cast<int>(c);
                close_ties = 1;
            } else if (d == cur) {
                ++close_ties;
                if (uniform_int(rng, 1, close_ties) == 1) best_pos = static_cast<int>(c);
            }
        }
        picked.push_back(pool[best_pos]);
        pool.erase(pool.begin() + best_pos);
        niche_counts[best_ref] += 1;
        if (pool.empty()) active[best_ref] = false;
    }
    return picked;
}

}  // namespace nsga3

// NSGA-III environmental selection against a fixed reference point set.
inline std::vector<Individual> nsga3_select(std::vector<Individual> merged, int survivors,
                                            const ReferencePointSet& refs, Rng& rng) {
    if (static_cast<int>(merged.size()) < survivors)
        throw std::invalid_argument("nsga3_select needs |merged| >= N");
    if (refs.points.empty()) throw std::invalid_argument("nsga3_select needs reference points");
    const auto fronts = non_dominated_sort(merged);

    std::vector<int> chosen;
    std::size_t boundary = 0;
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        if (static_cast<int>(chosen.size() + fronts[f].size()) <= survivors) {
            chosen.insert(chosen.end(), fronts[f].begin(), fronts[f].end());
            boundary = f + 1;
            if (static_cast<int>(chosen.size()) == survivors) break;
        } else {
            boundary = f;
            break;
        }
    }

    if (static_cast<int>(chosen.size()) < survivors) {
        // Normalize over the candidate set (selected fronts + boundary front).
        std::vector<int> pool = chosen;
        pool.insert(pool.end(), fronts[boundary].begin(), fronts[boundary].end());
        std::vector<std::vector<double>> points(pool.size());
        std::vector<int> pool_first_front;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            const auto arr = merged[pool[i]].objectives.as_array();
            points[i].assign(arr.begin(), arr.end());
            if (merged[pool[i]].rank == 0) pool_first_front.push_back(static_cast<int>(i));
        }
        const auto normalized = nsga3::normalize_objectives(points, pool_first_front);
        const auto assoc = nsga3::associate(normalized, refs.points);
        for (std::size_t i = 0; i < pool.size(); ++i)
            merged[pool[i]].diversity_key = assoc[i].distance;

        std::vector<int> niche_counts(refs.points.size(), 0);
        for (std::size_t i = 0; i < chosen.size(); ++i) niche_counts[assoc[i].reference] += 1;

        std::vector<int> boundary_local(fronts[boundary].size());
        std::iota(boundary_local.begin(), boundary_local.end(), static_cast<int>(chosen.size()));
        const int to_pick = survivors - static_cast<int>(chosen.size());
        for (int local : nsga3::niche_select(assoc, boundary_local, niche_counts, to_pick, rng))
            chosen.push_back(pool[local]);
    }

    std::vector<Individual> next;
    next.reserve(survivors);
    for (int idx : chosen) next.push_back(merged[idx]);
    return next;
}

// Partitions a merged population into distinct-plan individuals (encounter
// order) and exact duplicates. Selection runs on the distinct pool: duplicate
// copies add no information and would dilute crowding/niche pressure on small
// discrete instances, where they can crowd distinct Pareto plans out of the
// niche loop. Duplicates pad the survivor set only when distinct plans run
// short of the population size.
inline std::pair<std::vector<Individual>, std::vector<Individual>> split_duplicates(
    std::vector<Individual> merged) {
    std::vector<Individual> unique, dupes;
    std::set<std::vector<std::uint8_t>> seen;
    for (auto& ind : merged) {
        if (seen.insert(ind.plan.bits).second)
            unique.push_back(std::move(ind));
        else
            dupes.push_back(std::move(ind));
    }
    return {std::move(unique), std::move(dupes)};
}

// Environmental selection with duplicate handling shared by both baselines
// and PSMOA: select N from the distinct pool, padding from duplicates when
// fewer than N distinct plans exist.
template <typename SelectFn>
std::vector<Individual> select_with_duplicate_padding(std::vector<Individual> merged, int survivors,
                                                      SelectFn&& select) {
    auto [unique, dupes] = split_duplicates(std::move(merged));
    if (static_cast<int>(unique.size()) >= survivors)
        return select(std::move(unique), survivors);
    std::vector<Individual> next = std::move(unique);
    for (auto& d : dupes) {
        if (static_cast<int>(next.size()) >= survivors) break;
        next.push_back(std::move(d));
    }
    non_dominated_sort(next);  // refresh ranks for downstream consumers
    return next;
}

// Offspring creation shared by all algorithms: parents are recombined with
// row-uniform crossover and bit-flip mutation into N children. Mating order
// is a uniform shuffle unless a per-individual preference score is supplied,
// in which case parents come from binary tournaments on that score (higher
// wins, ties by the seeded generator); the preference-guided variant is how
// per-solution closeness scores steer the search between survivals.
inline std::vector<Individual> make_offspring(const std::vector<Individual>& population,
                                              const Scenario& scenario,
                                              const EffectivePolicy& effective,
                                              const EvolutionConfig& config, Rng& rng,
                                              const std::vector<double>* preference = nullptr) {
    const std::size_t n = population.size();
    std::vector<int> order;
    if (preference == nullptr) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        shuffle(rng, order);
    } else {
        order.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            const int a = static_cast<int>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1));
            const int b = static_cast<int>(uniform_int(rng, 0, static_cast<std::int64_t>(n) - 1));
            if ((*preference)[a] != (*preference)[b])
                order.push_back((*preference)[a] > (*preference)[b] ? a : b);
            else
                order.push_back(bernoulli(rng, 0.5) ? a : b);
        }
    }
    std::vector<Individual> offspring;
    offspring.reserve(n);
    for (std::size_t k = 0; k + 1 < order.size(); k += 2) {
        auto [a, b] = crossover(population[order[k]], population[order[k + 1]], scenario, effective,
                                config.crossover_rate, rng, config.bandwidth_window);
        offspring.push_back(mutate(a, scenario, effective, config.mutation_rate, rng,
                                   config.bandwidth_window));
        offspring.push_back(mutate(b, scenario, effective, config.mutation_rate, rng,
                                   config.bandwidth_window));
    }
    return offspring;
}

}  // namespace psmoa
