// Text serialization for Scenario ("psmoa-scenario/1").
//
// Line-oriented key/value format, one record per line, '#' comments allowed.
// Doubles are written with std::to_chars shortest form, so write->read
// round-trips bit-exactly. Region tags must be whitespace-free tokens.

#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "psmoa/model.hpp"

namespace psmoa {

inline constexpr const char* kScenarioFormat = "psmoa-scenario/1";

namespace ioutil {

inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& tok, int line) {
    double v = 0.0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        throw std::runtime_error("line " + std::to_string(line) + ": bad number '" + tok + "'");
    return v;
}

inline long long parse_int(const std::string& tok, int line) {
    long long v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        throw std::runtime_error("line " + std::to_string(line) + ": bad integer '" + tok + "'");
    return v;
}

inline std::uint64_t parse_u64(const std::string& tok, int line) {
    std::uint64_t v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        throw std::runtime_error("line " + std::to_string(line) + ": bad unsigned integer '" + tok + "'");
    return v;
}

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream iss(line);
    std::string t;
    while (iss >> t) {
        if (!t.empty() && t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

}  // namespace ioutil

inline void write_scenario(std::ostream& os, const Scenario& s) {
    using ioutil::format_double;
    os << "format " << kScenarioFormat << "\n";
    os << "seed " << s.seed << "\n";
    os << "user_node " << s.user_node << "\n";
    os << "nodes " << s.nodes.size() << "\n";
    os << "# node <id> <capacity> <bandwidth> <rtt> <c1> <c2> <popularity> <load> <region>\n";
    for (const auto& n : s.nodes) {
        os << "node " << n.id << ' ' << format_double(n.storage_capacity) << ' '
           << format_double(n.bandwidth) << ' ' << format_double(n.rtt_to_user) << ' '
           << format_double(n.storage_cost_coeff) << ' ' << format_double(n.transfer_cost_coeff) << ' '
           << format_double(n.popularity_score) << ' ' << format_double(n.current_load) << ' '
           << n.region << "\n";
    }
    os << "objects " << s.objects.size() << "\n";
    os << "# object <id> <size> <type> <request_count>\n";
    for (const auto& o : s.objects) {
        os << "object " << o.id << ' ' << format_double(o.size) << ' ' << to_string(o.type_tag)
           << ' ' << o.request_count << "\n";
    }
    os << "phases " << s.workload_phases.size() << "\n";
    os << "# phase <label> <start_hour> <end_hour> <requests_min> <requests_max> <cost_strictness>\n";
    for (const auto& p : s.workload_phases) {
        os << "phase " << to_string(p.label) << ' ' << p.start_hour << ' ' << p.end_hour << ' '
           << p.requests_min << ' ' << p.requests_max << ' ' << format_double(p.cost_strictness)
           << "\n";
    }
}

inline Scenario read_scenario(std::istream& is) {
    using namespace ioutil;
    Scenario s;
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
            if (toks.size() != 2 || toks[1] != kScenarioFormat)
                throw fail("expected 'format " + std::string(kScenarioFormat) + "'");
            saw_format = true;
        } else if (!saw_format) {
            throw fail("first record must declare the format version");
        } else if (key == "seed") {
            if (toks.size() != 2) throw fail("seed takes one value");
            s.seed = parse_u64(toks[1], lineno);
        } else if (key == "user_node") {
            if (toks.size() != 2) throw fail("user_node takes one value");
            s.user_node = static_cast<int>(parse_int(toks[1], lineno));
        } else if (key == "nodes" || key == "objects" || key == "phases") {
            if (toks.size() != 2) throw fail(key + " takes one count");
            // counts are advisory; record lines carry the data
        } else if (key == "node") {
            if (toks.size() != 10) throw fail("node record needs 9 fields");
            Node n;
            n.id = static_cast<int>(parse_int(toks[1], lineno));
            n.storage_capacity = parse_double(toks[2], lineno);
            n.bandwidth = parse_double(toks[3], lineno);
            n.rtt_to_user = parse_double(toks[4], lineno);
            n.storage_cost_coeff = parse_double(toks[5], lineno);
            n.transfer_cost_coeff = parse_double(toks[6], lineno);
            n.popularity_score = parse_double(toks[7], lineno);
            n.current_load = parse_double(toks[8], lineno);
            n.region = toks[9];
            s.nodes.push_back(std::move(n));
        } else if (key == "object") {
            if (toks.size() != 5) throw fail("object record needs 4 fields");
            DataObject o;
            o.id = static_cast<int>(parse_int(toks[1], lineno));
            o.size = parse_double(toks[2], lineno);
            try {
                o.type_tag = object_type_from_string(toks[3]);
            } catch (const std::invalid_argument& e) {
                throw fail(e.what());
            }
            o.request_count = static_cast<int>(parse_int(toks[4], lineno));
            s.objects.push_back(o);
        } else if (key == "phase") {
            if (toks.size() != 7) throw fail("phase record needs 6 fields");
            WorkloadPhase p;
            try {
                p.label = phase_label_from_string(toks[1]);
            } catch (const std::invalid_argument& e) {
                throw fail(e.what());
            }
            p.start_hour = static_cast<int>(parse_int(toks[2], lineno));
            p.end_hour = static_cast<int>(parse_int(toks[3], lineno));
            p.requests_min = static_cast<int>(parse_int(toks[4], lineno));
            p.requests_max = static_cast<int>(parse_int(toks[5], lineno));
            p.cost_strictness = parse_double(toks[6], lineno);
            s.workload_phases.push_back(p);
        } else {
            throw fail("unknown record '" + key + "'");
        }
    }
    if (!saw_format) throw std::runtime_error("empty scenario file");
    validate(s);
    return s;
}

inline std::string scenario_to_string(const Scenario& s) {
    std::ostringstream oss;
    write_scenario(oss, s);
    return oss.str();
}

inline Scenario scenario_from_string(const std::string& text) {
    std::istringstream iss(text);
    return read_scenario(iss);
}

}  // namespace psmoa
