// Entropy-based objective weighting, preference adjustment, TOPSIS closeness
// scoring, and weight-biased reference point generation for the
// reference-point selection stage.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace psmoa {

using Matrix = std::vector<std::vector<double>>;  // rows = alternatives/solutions

enum class WeightKind { raw_entropy, policy_adjusted };

struct WeightVector {
    std::vector<double> weights;  // one per objective, sums to 1
    WeightKind kind = WeightKind::raw_entropy;

    std::size_t size() const { return weights.size(); }
    double operator[](std::size_t i) const { return weights[i]; }
};

inline void validate(const WeightVector& w) {
    double sum = 0.0;
    for (double x : w.weights) {
        if (x < -1e-12 || x > 1.0 + 1e-12) throw std::invalid_argument("weight outside [0,1]");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("weights must sum to 1");
}

// Shannon-entropy objective weights from a non-negative performance matrix.
// Columns are normalized to shares p_ij; entropy e_j = -(1/ln m) sum p ln p
// with 0 ln 0 := 0; divergence d_j = 1 - e_j; weights are d_j shares. All
// zero divergences (every column uninformative) degrade to uniform weights.
inline WeightVector entropy_weights(const Matrix& performance) {
    const std::size_t m_alt = performance.size();
    if (m_alt < 2) throw std::invalid_argument("entropy_weights needs at least 2 alternatives");
    const std::size_t m_obj = performance.front().size();
    if (m_obj == 0) throw std::invalid_argument("entropy_weights needs at least 1 objective");
    for (const auto& row : performance)
        if (row.size() != m_obj) throw std::invalid_argument("ragged performance matrix");

    std::vector<double> col_sum(m_obj, 0.0);
    for (const auto& row : performance)
        for (std::size_t j = 0; j < m_obj; ++j) {
            if (row[j] < 0.0) throw std::invalid_argument("performance ratings must be non-negative");
            col_sum[j] += row[j];
        }
    for (std::size_t j = 0; j < m_obj; ++j)
        if (!(col_sum[j] > 0.0))
            throw std::invalid_argument("objective column " + std::to_string(j) + " is all zero");

    const double inv_ln_m = 1.0 / std::log(static_cast<double>(m_alt));
    std::vector<double> divergence(m_obj, 0.0);
    double total_divergence = 0.0;
    for (std::size_t j = 0; j < m_obj; ++j) {
        double entropy = 0.0;
        for (const auto& row : performance) {
            const double p = row[j] / col_sum[j];
            if (p > 0.0) entropy -= p * std::log(p);
        }
        entropy *= inv_ln_m;
        divergence[j] = 1.0 - entropy;
        if (divergence[j] < 0.0) divergence[j] = 0.0;  // guard f.p. dust above max entropy
        total_divergence += divergence[j];
    }

    WeightVector w;
    w.kind = WeightKind::raw_entropy;
    w.weights.resize(m_obj);
    if (total_divergence <= 1e-12) {
        std::fill(w.weights.begin(), w.weights.end(), 1.0 / static_cast<double>(m_obj));
    } else {
        for (std::size_t j = 0; j < m_obj; ++j) w.weights[j] = divergence[j] / total_divergence;
    }
    return w;
}

// Preference adjustment w'_j = alpha_j w_j / sum_k alpha_k w_k. A constant
// alpha vector is the identity (scale invariance), handled exactly.
inline WeightVector adjust_weights(const WeightVector& w, const std::vector<double>& alpha) {
    if (alpha.size() != w.size()) throw std::invalid_argument("alpha size mismatch");
    double mass = 0.0;
    bool constant_alpha = true;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] < 0.0) throw std::invalid_argument("alpha components must be >= 0");
        if (alpha[j] != alpha[0]) constant_alpha = false;
        mass += alpha[j] * w.weights[j];
    }
    if (!(mass > 0.0)) throw std::invalid_argument("adjusted weights have zero mass");
    WeightVector out;
    out.kind = WeightKind::policy_adjusted;
    if (constant_alpha) {
        out.weights = w.weights;
        return out;
    }
    out.weights.resize(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) out.weights[j] = alpha[j] * w.weights[j] / mass;
    return out;
}

enum class Sense { minimize, maximize };

struct TopsisScores {
    std::vector<double> ideal;       // Z+ per objective
    std::vector<double> anti_ideal;  // Z- per objective
    std::vector<double> d_plus;      // distance to ideal, per solution
    std::vector<double> d_minus;     // distance to anti-ideal, per solution
    std::vector<double> closeness;   // C_i in [0,1]
};

// Weighted-distance closeness to the ideal solution. The ideal takes the
// best value per column (min or max by sense), the anti-ideal the worst.
// When a solution set is fully degenerate (every solution identical) the
// closeness convention is 0.5 for all.
inline TopsisScores topsis_score(const Matrix& objectives, const WeightVector& w,
                                 const std::vector<Sense>& sense) {
    if (objectives.empty()) throw std::invalid_argument("topsis_score needs at least one solution");
    const std::size_t m_obj = w.size();
    if (sense.size() != m_obj) throw std::invalid_argument("sense size mismatch");
    for (const auto& row : objectives)
        if (row.size() != m_obj) throw std::invalid_argument("objective row size mismatch");

    TopsisScores out;
    out.ideal.resize(m_obj);
    out.anti_ideal.resize(m_obj);
    for (std::size_t j = 0; j < m_obj; ++j) {
        double lo = objectives[0][j], hi = objectives[0][j];
        for (const auto& row : objectives) {
            lo = std::min(lo, row[j]);
            hi = std::max(hi, row[j]);
        }
        if (sense[j] == Sense::maximize) {
            out.ideal[j] = hi;
            out.anti_ideal[j] = lo;
        } else {
            out.ideal[j] = lo;
            out.anti_ideal[j] = hi;
        }
    }

    const std::size_t count = objectives.size();
    out.d_plus.resize(count);
    out.d_minus.resize(count);
    out.closeness.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        double dp = 0.0, dm = 0.0;
        for (std::size_t j = 0; j < m_obj; ++j) {
            const double zp = out.ideal[j] - objectives[i][j];
            const double zm = out.anti_ideal[j] - objectives[i][j];
            dp += w.weights[j] * zp * zp;
            dm += w.weights[j] * zm * zm;
        }
        out.d_plus[i] = std::sqrt(dp);
        out.d_minus[i] = std::sqrt(dm);
        const double denom = out.d_plus[i] + out.d_minus[i];
        out.closeness[i] = denom > 0.0 ? out.d_minus[i] / denom : 0.5;
    }
    return out;
}

struct ReferencePointSet {
    std::vector<std::vector<double>> points;  // unit-simplex directions
    int divisions = 0;
    WeightVector bias_weights;
};

namespace detail {

inline void das_dennis_recurse(int remaining, int depth, int m, int divisions,
                               std::vector<int>& partial, std::vector<std::vector<double>>& out) {
    if (depth == m - 1) {
        partial[depth] = remaining;
        std::vector<double> p(m);
        for (int k = 0; k < m; ++k) p[k] = static_cast<double>(partial[k]) / divisions;
        out.push_back(std::move(p));
        return;
    }
    for (int take = 0; take <= remaining; ++take) {
        partial[depth] = take;
        das_dennis_recurse(remaining - take, depth + 1, m, divisions, partial, out);
    }
}

}  // namespace detail

// Simplex lattice with the given number of divisions per objective
// (C(divisions + m - 1, m - 1) points).
inline std::vector<std::vector<double>> das_dennis_points(int m, int divisions) {
    if (m < 1 || divisions < 1) throw std::invalid_argument("das_dennis_points needs m,p >= 1");
    std::vector<std::vector<double>> out;
    std::vector<int> partial(m, 0);
    detail::das_dennis_recurse(divisions, 0, m, divisions, partial, out);
    return out;
}

// Biased reference directions: the uniform simplex lattice, warped toward
// the adjusted weights by coordinate-wise multiplication and renormalization.
// Lattice points with no mass on any weighted coordinate are dropped;
// near-duplicates (within 1e-9, max-norm) merge. The optional closeness
// vector is accepted for interface stability but does not yet steer
// placement; only the weights bias the lattice.
inline ReferencePointSet generate_reference_points(
    const WeightVector& w_adj, int divisions,
    const std::optional<std::vector<double>>& closeness = std::nullopt) {
    if (divisions < 1) throw std::invalid_argument("divisions must be >= 1");
    validate(w_adj);
    if (closeness)
        for (double c : *closeness)
            if (c < 0.0 || c > 1.0) throw std::invalid_argument("closeness values must lie in [0,1]");

    const int m = static_cast<int>(w_adj.size());
    ReferencePointSet set;
    set.divisions = divisions;
    set.bias_weights = w_adj;

    for (auto& p : das_dennis_points(m, divisions)) {
        double mass = 0.0;
        for (int k = 0; k < m; ++k) {
            p[k] *= w_adj.weights[k];
            mass += p[k];
        }
        if (mass <= 1e-15) continue;
        for (int k = 0; k < m; ++k) p[k] /= mass;
        bool duplicate = false;
        for (const auto& q : set.points) {
            double diff = 0.0;
            for (int k = 0; k < m; ++k) diff = std::max(diff, std::abs(q[k] - p[k]));
            if (diff <= 1e-9) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) set.points.push_back(std::move(p));
    }
    return set;
}

}  // namespace psmoa
