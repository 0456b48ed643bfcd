// Text serialization for PolicySpec ("psmoa-policy/1") and PolicySchedule
// ("psmoa-schedule/1"). Same line-oriented key/value grammar as scenario
// files. Alpha vectors are renormalized on load.
//
// Policy records:
//   alpha <t> <c> <p> <l>
//   mode none | multi_objective | single_objective <time|cost|popularity|load>
//   adapt lambda|beta|gamma|alpha_max <value>
//   adapt base <t> <c> <p> <l>
//   constraint <kind> <threshold>
//   rule if type <critical|normal|large> then <effects...>
//   rule if size_at_least <bytes> then <effects...>
// where effects are `<constraint-kind> <threshold>` pairs and/or
// `alpha <t> <c> <p> <l>`.
//
// Schedule records:
//   at hour <h> [alpha <4 values>] [signals <utilization> <budget> <access>]
//   at generation <g> [alpha ...] [signals ...]

#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "psmoa/optimizer.hpp"
#include "psmoa/policy.hpp"
#include "psmoa/scenario_io.hpp"

namespace psmoa {

inline constexpr const char* kPolicyFormat = "psmoa-policy/1";
inline constexpr const char* kScheduleFormat = "psmoa-schedule/1";

namespace ioutil {

inline AlphaVector parse_alpha4(const std::vector<std::string>& toks, std::size_t offset,
                                int line) {
    if (toks.size() < offset + 4)
        throw std::runtime_error("line " + std::to_string(line) + ": alpha needs 4 values");
    AlphaVector a;
    for (int k = 0; k < kObjectiveCount; ++k) a[k] = parse_double(toks[offset + k], line);
    return a;
}

inline int objective_index_from_token(const std::string& tok, int line) {
    for (int k = 0; k < kObjectiveCount; ++k)
        if (tok == objective_name(k)) return k;
    if (tok == "0" || tok == "1" || tok == "2" || tok == "3") return tok[0] - '0';
    throw std::runtime_error("line " + std::to_string(line) + ": unknown objective '" + tok + "'");
}

}  // namespace ioutil

inline void write_policy(std::ostream& os, const PolicySpec& p) {
    using ioutil::format_double;
    os << "format " << kPolicyFormat << "\n";
    os << "alpha";
    for (double a : p.alpha) os << ' ' << format_double(a);
    os << "\n";
    os << "mode ";
    switch (p.mode) {
        case PolicyMode::none: os << "none"; break;
        case PolicyMode::multi_objective: os << "multi_objective"; break;
        case PolicyMode::single_objective:
            os << "single_objective " << objective_name(p.single_objective_index);
            break;
    }
    os << "\n";
    os << "adapt lambda " << format_double(p.adaptation.lambda) << "\n";
    os << "adapt beta " << format_double(p.adaptation.beta) << "\n";
    os << "adapt gamma " << format_double(p.adaptation.gamma) << "\n";
    os << "adapt alpha_max " << format_double(p.adaptation.alpha_max) << "\n";
    os << "adapt base";
    for (double a : p.adaptation.alpha_base) os << ' ' << format_double(a);
    os << "\n";
    for (const auto& c : p.hard_constraints)
        os << "constraint " << to_string(c.kind) << ' ' << format_double(c.threshold) << "\n";
    for (const auto& r : p.conditional_rules) {
        os << "rule if ";
        if (r.condition.kind == RuleCondition::Kind::type_is)
            os << "type " << to_string(r.condition.type_tag);
        else
            os << "size_at_least " << format_double(r.condition.size_threshold);
        os << " then";
        for (const auto& c : r.constraint_effects)
            os << ' ' << to_string(c.kind) << ' ' << format_double(c.threshold);
        if (r.alpha_override) {
            os << " alpha";
            for (double a : *r.alpha_override) os << ' ' << format_double(a);
        }
        os << "\n";
    }
}

inline PolicySpec read_policy(std::istream& is) {
    using namespace ioutil;
    PolicySpec p;
    std::string line;
    int lineno = 0;
    bool saw_format = false;
    auto fail = [&](const std::string& msg) -> std::runtime_error {
        return std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];
        if (key == "format") {
            if (toks.size() != 2 || toks[1] != kPolicyFormat)
                throw fail("expected 'format " + std::string(kPolicyFormat) + "'");
            saw_format = true;
        } else if (!saw_format) {
            throw fail("first record must declare the format version");
        } else if (key == "alpha") {
            p.alpha = parse_alpha4(toks, 1, lineno);
        } else if (key == "mode") {
            if (toks.size() < 2) throw fail("mode needs a value");
            if (toks[1] == "none") {
                p.mode = PolicyMode::none;
            } else if (toks[1] == "multi_objective") {
                p.mode = PolicyMode::multi_objective;
            } else if (toks[1] == "single_objective") {
                if (toks.size() != 3) throw fail("single_objective mode needs an objective");
                p.mode = PolicyMode::single_objective;
                p.single_objective_index = objective_index_from_token(toks[2], lineno);
            } else {
                throw fail("unknown mode '" + toks[1] + "'");
            }
        } else if (key == "adapt") {
            if (toks.size() < 3) throw fail("adapt needs a parameter and value");
            if (toks[1] == "lambda") p.adaptation.lambda = parse_double(toks[2], lineno);
            else if (toks[1] == "beta") p.adaptation.beta = parse_double(toks[2], lineno);
            else if (toks[1] == "gamma") p.adaptation.gamma = parse_double(toks[2], lineno);
            else if (toks[1] == "alpha_max") p.adaptation.alpha_max = parse_double(toks[2], lineno);
            else if (toks[1] == "base") p.adaptation.alpha_base = parse_alpha4(toks, 2, lineno);
            else throw fail("unknown adapt parameter '" + toks[1] + "'");
        } else if (key == "constraint") {
            if (toks.size() != 3) throw fail("constraint needs kind and threshold");
            ConstraintRule c;
            try {
                c.kind = constraint_kind_from_string(toks[1]);
            } catch (const std::invalid_argument& e) {
                throw fail(e.what());
            }
            c.threshold = parse_double(toks[2], lineno);
            p.hard_constraints.push_back(c);
        } else if (key == "rule") {
            if (toks.size() < 5 || toks[1] != "if") throw fail("rule must read 'rule if ... then ...'");
            ConditionalRule r;
            std::size_t cursor = 2;
            if (toks[cursor] == "type") {
                r.condition.kind = RuleCondition::Kind::type_is;
                try {
                    r.condition.type_tag = object_type_from_string(toks.at(cursor + 1));
                } catch (const std::invalid_argument& e) {
                    throw fail(e.what());
                }
                cursor += 2;
            } else if (toks[cursor] == "size_at_least") {
                r.condition.kind = RuleCondition::Kind::size_at_least;
                r.condition.size_threshold = parse_double(toks.at(cursor + 1), lineno);
                cursor += 2;
            } else {
                throw fail("rule condition must be 'type <tag>' or 'size_at_least <bytes>'");
            }
            if (cursor >= toks.size() || toks[cursor] != "then") throw fail("rule missing 'then'");
            ++cursor;
            while (cursor < toks.size()) {
                if (toks[cursor] == "alpha") {
                    r.alpha_override = parse_alpha4(toks, cursor + 1, lineno);
                    cursor += 5;
                } else {
                    if (cursor + 1 >= toks.size()) throw fail("rule effect missing threshold");
                    ConstraintRule c;
                    try {
                        c.kind = constraint_kind_from_string(toks[cursor]);
                    } catch (const std::invalid_argument& e) {
                        throw fail(e.what());
                    }
                    c.threshold = parse_double(toks[cursor + 1], lineno);
                    r.constraint_effects.push_back(c);
                    cursor += 2;
                }
            }
            if (!r.has_effects()) throw fail("rule has no effects");
            p.conditional_rules.push_back(std::move(r));
        } else {
            throw fail("unknown record '" + key + "'");
        }
    }
    if (!saw_format) throw std::runtime_error("empty policy file");
    p.alpha = normalize_alpha(p.alpha);
    validate(p);
    return p;
}

inline void write_schedule(std::ostream& os, const PolicySchedule& s) {
    using ioutil::format_double;
    os << "format " << kScheduleFormat << "\n";
    for (const auto& e : s.entries) {
        os << "at " << (e.trigger == ScheduleEntry::Trigger::hour ? "hour " : "generation ")
           << format_double(e.at);
        if (e.alpha) {
            os << " alpha";
            for (double a : *e.alpha) os << ' ' << format_double(a);
        }
        if (e.signals) {
            os << " signals " << format_double(e.signals->utilization_rate) << ' '
               << format_double(e.signals->budget_proximity) << ' '
               << format_double(e.signals->access_frequency);
        }
        os << "\n";
    }
}

inline PolicySchedule read_schedule(std::istream& is) {
    using namespace ioutil;
    PolicySchedule s;
    std::string line;
    int lineno = 0;
    bool saw_format = false;
    auto fail = [&](const std::string& msg) -> std::runtime_error {
        return std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "format") {
            if (toks.size() != 2 || toks[1] != kScheduleFormat)
                throw fail("expected 'format " + std::string(kScheduleFormat) + "'");
            saw_format = true;
            continue;
        }
        if (!saw_format) throw fail("first record must declare the format version");
        if (toks[0] != "at" || toks.size() < 3) throw fail("schedule records read 'at hour|generation N ...'");
        ScheduleEntry e;
        if (toks[1] == "hour") e.trigger = ScheduleEntry::Trigger::hour;
        else if (toks[1] == "generation") e.trigger = ScheduleEntry::Trigger::generation;
        else throw fail("trigger must be 'hour' or 'generation'");
        e.at = parse_double(toks[2], lineno);
        std::size_t cursor = 3;
        while (cursor < toks.size()) {
            if (toks[cursor] == "alpha") {
                e.alpha = parse_alpha4(toks, cursor + 1, lineno);
                cursor += 5;
            } else if (toks[cursor] == "signals") {
                if (cursor + 3 >= toks.size()) throw fail("signals need 3 values");
                AdaptationSignals sig;
                sig.utilization_rate = parse_double(toks[cursor + 1], lineno);
                sig.budget_proximity = parse_double(toks[cursor + 2], lineno);
                sig.access_frequency = parse_double(toks[cursor + 3], lineno);
                e.signals = sig;
                cursor += 4;
            } else {
                throw fail("unknown schedule field '" + toks[cursor] + "'");
            }
        }
        if (!e.alpha && !e.signals) throw fail("schedule entry needs alpha and/or signals");
        s.entries.push_back(e);
    }
    if (!saw_format) throw std::runtime_error("empty schedule file");
    validate(s);
    return s;
}

inline std::string policy_to_string(const PolicySpec& p) {
    std::ostringstream oss;
    write_policy(oss, p);
    return oss.str();
}

inline PolicySpec policy_from_string(const std::string& text) {
    std::istringstream iss(text);
    return read_policy(iss);
}

inline std::string schedule_to_string(const PolicySchedule& s) {
    std::ostringstream oss;
    write_schedule(oss, s);
    return oss.str();
}

inline PolicySchedule schedule_from_string(const std::string& text) {
    std::istringstream iss(text);
    return read_schedule(iss);
}

}  // namespace psmoa
