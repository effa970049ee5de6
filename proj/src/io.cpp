#include "mpp/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "mpp/feasibility.hpp"

namespace mpp {

namespace {

using nlohmann::json;

json factor_to_json(const NearOneFactor& f) {
    NearOneFactor sorted = f;
    sorted.sort_edges();
    json edges = json::array();
    for (const Edge& e : sorted.edges) edges.push_back({e.lo, e.hi});
    return json{{"v", sorted.v}, {"edges", edges}, {"isolated", sorted.isolated}};
}

json realization_to_json(const Realization& r) {
    json j = factor_to_json(r.factor);
    j["kind"] = kind_name(r.kind);
    j["list"] = r.list.to_string();
    return j;
}

json trace_to_json(const Trace& trace) {
    json steps = json::array();
    for (const TraceStep& s : trace) steps.push_back({{"op", s.op}, {"detail", s.detail}});
    return steps;
}

json feasibility_to_json(const FeasibilityVerdict& fv) {
    json j{{"feasible", fv.feasible}};
    if (!fv.feasible) {
        j["divisor"] = fv.divisor;
        j["multiples"] = fv.multiples;
        j["bound"] = fv.bound;
    }
    return j;
}

}  // namespace

NearOneFactor read_factor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open factor file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        throw invalid_input("factor file " + path + ": " + ex.what());
    }
    if (!j.is_object() || !j.contains("v") || !j.contains("edges") || !j.contains("isolated"))
        throw invalid_input("factor file " + path +
                            ": expected fields v, edges, isolated");
    NearOneFactor f;
    try {
        f.v = j.at("v").get<int>();
        f.isolated = j.at("isolated").get<int>();
        for (const auto& pair : j.at("edges")) {
            if (!pair.is_array() || pair.size() != 2)
                throw invalid_input("factor file " + path +
                                    ": each edge must be a two-integer array");
            f.edges.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
        }
    } catch (const json::exception& ex) {
        throw invalid_input("factor file " + path + ": " + ex.what());
    }
    return f;
}

std::string factor_to_structured(const NearOneFactor& f) {
    return factor_to_json(f).dump(2) + "\n";
}

void write_factor_file(const std::string& path, const NearOneFactor& f) {
    std::ofstream out(path);
    if (!out) throw invalid_input("cannot write factor file: " + path);
    out << factor_to_structured(f);
}

std::vector<int> parse_slot_word(const std::string& text) {
    std::vector<int> slots;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            size_t used = 0;
            int value = std::stoi(cur, &used);
            if (used != cur.size() || value < 0) throw std::invalid_argument(cur);
            slots.push_back(value);
        } catch (const std::exception&) {
            throw invalid_input("slot word: bad entry '" + cur + "'");
        }
        cur.clear();
    };
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            cur += ch;
        } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)) || ch == '(' ||
                   ch == ')' || ch == '[' || ch == ']') {
            flush();
        } else {
            throw invalid_input(std::string("slot word: unexpected character '") + ch + "'");
        }
    }
    flush();
    if (slots.empty()) throw invalid_input("slot word: no entries");
    return slots;
}

std::string render_slot_word(const std::vector<int>& slots) {
    std::string out = "(";
    for (size_t i = 0; i < slots.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(slots[i]);
    }
    return out + ")";
}

std::string render_factor(const NearOneFactor& f) {
    NearOneFactor sorted = f;
    sorted.sort_edges();
    std::ostringstream out;
    out << "v = " << sorted.v << "\nedges =";
    for (const Edge& e : sorted.edges) out << " [" << e.lo << "," << e.hi << "]";
    out << "\nisolated = " << sorted.isolated << "\n";
    return out.str();
}

std::string render_trace(const Trace& trace) {
    std::ostringstream out;
    for (const TraceStep& s : trace) out << "  " << s.op << ": " << s.detail << "\n";
    return out.str();
}

std::string render_result_text(const LengthList& list, const SolveResult& res) {
    std::ostringstream out;
    out << "list = " << list.to_string() << "  (v = " << list.v() << ")\n";
    out << "verdict = " << verdict_name(res.verdict) << "\n";
    if (res.feasibility && !res.feasibility->feasible)
        out << "reason = " << describe(*res.feasibility) << "\n";
    if (res.realization) {
        out << render_factor(res.realization->factor);
        out << "kind = " << kind_name(res.realization->kind) << "\n";
    }
    if (res.search_nodes) out << "search nodes = " << res.search_nodes << "\n";
    if (!res.trace.empty()) out << "trace:\n" << render_trace(res.trace);
    return out.str();
}

std::string render_result_structured(const LengthList& list, const SolveResult& res) {
    json j{{"list", list.to_string()},
           {"v", list.v()},
           {"verdict", verdict_name(res.verdict)}};
    if (res.feasibility) j["feasibility"] = feasibility_to_json(*res.feasibility);
    if (res.realization) j["realization"] = realization_to_json(*res.realization);
    if (res.search_nodes) j["search_nodes"] = res.search_nodes;
    j["trace"] = trace_to_json(res.trace);
    return j.dump(2) + "\n";
}

std::string render_sweep(const SweepReport& report) {
    std::ostringstream out;
    out << "    v      lists   feasible   realized  violating  confirmed      ms\n";
    for (const SweepRow& row : report.rows) {
        out << std::setw(5) << row.v << std::setw(11) << row.lists << std::setw(11)
            << row.feasible << std::setw(11) << row.realized << std::setw(11)
            << row.violating << std::setw(11) << row.infeasible_verified << std::setw(8)
            << static_cast<long long>(row.wall_ms) << "\n";
        for (const std::string& bad : row.counterexamples)
            out << "      counterexample: " << bad << "\n";
        if (row.indeterminate)
            out << "      indeterminate searches: " << row.indeterminate << "\n";
    }
    out << (report.ok() ? "no counterexamples\n" : "COUNTEREXAMPLES FOUND\n");
    return out.str();
}

}  // namespace mpp
