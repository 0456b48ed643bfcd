// Pareto front quality metrics: exact hypervolume by dimension sweep,
// generational distance, inverted generational distance, and reference
// ("truth") front construction by exhaustive enumeration or archive merging.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "psmoa/objectives.hpp"

namespace psmoa {

// Minimization dominance on raw vectors: a <= b everywhere, a < b somewhere.
inline bool dominates_point(const std::vector<double>& a, const std::vector<double>& b) {
    bool strict = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) return false;
        if (a[k] < b[k]) strict = true;
    }
    return strict;
}

// A set of mutually non-dominated objective vectors (minimization
// convention). insert() keeps the set non-dominated and drops exact
// duplicates. Optional per-objective (min,max) bounds make metric
// computations scale-free.
struct FrontArchive {
    std::vector<std::vector<double>> points;
    std::string label;
    std::optional<std::vector<std::pair<double, double>>> normalization;

    bool insert(const std::vector<double>& p) {
        for (const auto& q : points) {
            if (q == p || dominates_point(q, p)) return false;
        }
        points.erase(std::remove_if(points.begin(), points.end(),
                                    [&](const std::vector<double>& q) { return dominates_point(p, q); }),
                     points.end());
        points.push_back(p);
        return true;
    }

    // Lexicographic order gives deterministic downstream serialization.
    void sort_points() {
        std::sort(points.begin(), points.end());
    }

    std::size_t dimension() const { return points.empty() ? 0 : points.front().size(); }
};

namespace detail {

// Hypervolume of the region dominated by `pts` and bounded by `ref`,
// by recursive slicing along the last coordinate (exact, any dimension;
// intended for m <= 4 fronts at desk scale).
inline double hv_recurse(std::vector<std::vector<double>> pts, const std::vector<double>& ref,
                         std::size_t dim) {
    if (pts.empty()) return 0.0;
    if (dim == 1) {
        double lo = ref[0];
        for (const auto& p : pts) lo = std::min(lo, p[0]);
        return ref[0] - lo;
    }
    const std::size_t d = dim - 1;
    std::sort(pts.begin(), pts.end(),
              [d](const std::vector<double>& a, const std::vector<double>& b) { return a[d] < b[d]; });
    double volume = 0.0;
    std::vector<std::vector<double>> prefix;
    prefix.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        prefix.push_back(pts[i]);
        const double z_lo = pts[i][d];
        const double z_hi = (i + 1 < pts.size()) ? pts[i + 1][d] : ref[d];
        if (z_hi <= z_lo) continue;
        volume += (z_hi - z_lo) * hv_recurse(prefix, ref, d);
    }
    return volume;
}

inline std::string point_to_string(const std::vector<double>& p) {
    std::ostringstream oss;
    oss << "(";
    for (std::size_t k = 0; k < p.size(); ++k) oss << (k ? "," : "") << p[k];
    oss << ")";
    return oss.str();
}

// Applies an archive's normalization bounds (when present) to a point set.
inline std::vector<std::vector<double>> normalized_points(
    const std::vector<std::vector<double>>& pts,
    const std::optional<std::vector<std::pair<double, double>>>& bounds) {
    if (!bounds) return pts;
    auto out = pts;
    for (auto& p : out)
        for (std::size_t k = 0; k < p.size(); ++k) {
            const auto [lo, hi] = (*bounds)[k];
            const double span = hi - lo;
            p[k] = span > 0.0 ? (p[k] - lo) / span : 0.0;
        }
    return out;
}

}  // namespace detail

// Exact hypervolume dominated by the front and bounded above by `reference`.
// Every front point must dominate the reference (component-wise <=).
inline double hypervolume(const FrontArchive& front, const std::vector<double>& reference) {
    if (front.points.empty()) throw std::invalid_argument("hypervolume of an empty front");
    const std::size_t m = reference.size();
    for (const auto& p : front.points) {
        if (p.size() != m) throw std::invalid_argument("front/reference dimension mismatch");
        for (std::size_t k = 0; k < m; ++k)
            if (p[k] > reference[k])
                throw std::invalid_argument("point does not dominate the reference point: " +
                                            detail::point_to_string(p));
    }
    return detail::hv_recurse(front.points, reference, m);
}

namespace detail {

inline double nearest_distance(const std::vector<double>& p,
                               const std::vector<std::vector<double>>& set) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : set) {
        double d2 = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k) d2 += (p[k] - q[k]) * (p[k] - q[k]);
        best = std::min(best, d2);
    }
    return std::sqrt(best);
}

inline double rms_nearest(const std::vector<std::vector<double>>& from,
                          const std::vector<std::vector<double>>& to) {
    double acc = 0.0;
    for (const auto& p : from) {
        const double d = nearest_distance(p, to);
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(from.size()));
}

}  // namespace detail

// Root-mean-square distance from obtained points to their nearest truth
// point (p = 2). Computed on normalized objectives when either archive
// carries bounds (truth bounds win).
inline double generational_distance(const FrontArchive& front, const FrontArchive& truth) {
    if (front.points.empty() || truth.points.empty())
        throw std::invalid_argument("generational_distance needs non-empty fronts");
    const auto& bounds = truth.normalization ? truth.normalization : front.normalization;
    return detail::rms_nearest(detail::normalized_points(front.points, bounds),
                               detail::normalized_points(truth.points, bounds));
}

// Root-mean-square distance from each truth point to the nearest obtained
// point (p = 2); low values need both convergence and coverage.
inline double inverted_generational_distance(const FrontArchive& front, const FrontArchive& truth) {
    if (front.points.empty() || truth.points.empty())
        throw std::invalid_argument("inverted_generational_distance needs non-empty fronts");
    const auto& bounds = truth.normalization ? truth.normalization : front.normalization;
    return detail::rms_nearest(detail::normalized_points(truth.points, bounds),
                               detail::normalized_points(front.points, bounds));
}

enum class TruthBudget { exhaustive, merged_runs };

// Every valid plan (all rows non-empty) for exhaustive enumeration;
// refuses instances whose search space exceeds 2^24 plans.
inline void enumerate_valid_plans(const Scenario& scenario,
                                  const std::function<void(const ReplicationPlan&)>& visit) {
    const int m = static_cast<int>(scenario.objects.size());
    const int n = static_cast<int>(scenario.nodes.size());
    if (m * n > 24)
        throw std::invalid_argument("exhaustive enumeration refused: 2^(" + std::to_string(m) + "x" +
                                    std::to_string(n) + ") plans exceed the 2^24 budget");
    const std::uint32_t row_max = (1u << n) - 1;  // nonzero row patterns are 1..row_max
    std::vector<std::uint32_t> rows(m, 1);
    ReplicationPlan plan(m, n);
    while (true) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) plan.set(i, j, (rows[i] >> j) & 1u);
        visit(plan);
        int carry = 0;
        while (carry < m) {
            if (rows[carry] < row_max) {
                ++rows[carry];
                break;
            }
            rows[carry] = 1;
            ++carry;
        }
        if (carry == m) break;
    }
}

// Reference front for metric evaluation. `exhaustive` enumerates every valid
// plan, keeps the feasible ones (storage/bandwidth under an empty policy),
// and Pareto-filters their objective vectors. `merged_runs` takes the
// non-dominated union of contributed archives (surrogate truth).
inline FrontArchive build_truth_front(const Scenario& scenario, TruthBudget budget,
                                      std::span<const FrontArchive> contributed = {}) {
    FrontArchive truth;
    if (budget == TruthBudget::exhaustive) {
        truth.label = "truth:exhaustive";
        const PolicySpec no_policy;
        enumerate_valid_plans(scenario, [&](const ReplicationPlan& plan) {
            if (!check_feasibility(plan, scenario, no_policy).feasible) return;
            const auto v = evaluate(plan, scenario).as_array();
            truth.insert(std::vector<double>(v.begin(), v.end()));
        });
    } else {
        if (contributed.empty())
            throw std::invalid_argument("merged_runs truth needs contributed archives");
        truth.label = "truth:merged_runs";
        for (const auto& archive : contributed)
            for (const auto& p : archive.points) truth.insert(p);
    }
    truth.sort_points();
    return truth;
}

// Component-wise extrema over a family of archives; the shared normalization
// bounds for scale-free metric reporting.
inline std::vector<std::pair<double, double>> objective_bounds(
    std::span<const FrontArchive> archives) {
    std::vector<std::pair<double, double>> bounds;
    for (const auto& a : archives)
        for (const auto& p : a.points) {
            if (bounds.empty())
                bounds.assign(p.size(), {std::numeric_limits<double>::infinity(),
                                         -std::numeric_limits<double>::infinity()});
            for (std::size_t k = 0; k < p.size(); ++k) {
                bounds[k].first = std::min(bounds[k].first, p[k]);
                bounds[k].second = std::max(bounds[k].second, p[k]);
            }
        }
    return bounds;
}

}  // namespace psmoa
