//
// mpp — decide and construct near 1-factors of K_{2n+1} with prescribed
// edge lengths.
//
//   check    decide the divisor condition for a length list
//   realize  construct a realization (constructive solvers + search fallback)
//   verify   validate a factor file against a list
//   search   run the exhaustive backtracking search directly
//   sweep    conjecture check over every list up to a bound
//   skolem   convert between slot words and factors
//
// Exit codes: 0 realized / verified / clean sweep, 1 infeasible or not
// verified, 2 invalid input or unmet method precondition, 3 internal
// validation failure (a bug), 4 indeterminate (node budget exhausted).
//
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mpp/blocks.hpp"
#include "mpp/feasibility.hpp"
#include "mpp/grid.hpp"
#include "mpp/io.hpp"
#include "mpp/oracle.hpp"
#include "mpp/solve.hpp"

namespace {

constexpr int kExitRealized = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;
constexpr int kExitIndeterminate = 4;

int verdict_exit(mpp::Verdict w) {
    switch (w) {
        case mpp::Verdict::Realized:
        case mpp::Verdict::UnsupportedConstructively:
            return kExitRealized;
        case mpp::Verdict::Infeasible:
            return kExitInfeasible;
        case mpp::Verdict::Indeterminate:
            return kExitIndeterminate;
    }
    return kExitInternal;
}

// Rebuilds and prints the vertex grid a construction worked on, recognized
// from its trace (the two-length column/row grid, the shared-divisor
// alternating grid, or the ragged grid of the coprime/pattern/small cases).
void show_grids(const mpp::LengthList& list, const mpp::SolveResult& res) {
    for (const mpp::TraceStep& step : res.trace) {
        int v = static_cast<int>(list.v());
        if (step.op == "grid") {
            int rows = 0, cols = 0, cs = 0, rs = 0;
            if (std::sscanf(step.detail.c_str(),
                            "grid %dx%d, column step %d, row step %d", &rows, &cols, &cs,
                            &rs) == 4) {
                std::cout << "grid (" << rows << "x" << cols << ", column step " << cs
                          << ", row step " << rs << "):\n"
                          << mpp::build_xy_grid(v, cs, rs, rows).render();
            }
        } else if (step.op == "shared-grid") {
            int t = list.max_length();
            std::cout << "alternating grid (t = " << t << "):\n"
                      << mpp::build_alternating_grid(v, t, std::gcd(t, v)).render();
            break;
        } else if (step.op == "coprime-grid" || step.op == "pattern" ||
                   step.op == "small") {
            int t = list.max_length();
            if (std::gcd(t, v) != 1) continue;  // "small" may note non-grid families
            std::cout << "ragged grid (t = " << t << "):\n"
                      << mpp::build_ragged_grid(v, t).render();
            break;
        }
    }
}

int cmd_check(const std::string& list_text) {
    mpp::LengthList list = mpp::LengthList::parse(list_text);
    auto violations = mpp::check_condition_all(list);
    std::cout << "list = " << list.to_string() << "  (v = " << list.v() << ")\n";
    if (violations.empty()) {
        std::cout << "feasible: the divisor condition holds\n";
        return kExitRealized;
    }
    std::cout << "infeasible:\n";
    for (const auto& fv : violations) std::cout << "  " << mpp::describe(fv) << "\n";
    return kExitInfeasible;
}

int cmd_realize(const std::string& list_text, const std::string& method,
                const std::string& format, std::optional<std::uint64_t> node_limit,
                bool show_grid) {
    mpp::LengthList list = mpp::LengthList::parse(list_text);
    mpp::SolveOptions opts;
    opts.method = mpp::parse_method(method);
    opts.node_limit = node_limit;
    mpp::SolveResult res = mpp::solve(list, opts);
    if (format == "json-like")
        std::cout << mpp::render_result_structured(list, res);
    else
        std::cout << mpp::render_result_text(list, res);
    if (show_grid) show_grids(list, res);
    return verdict_exit(res.verdict);
}

int cmd_verify(const std::string& list_text, const std::string& factor_path, bool linear) {
    mpp::LengthList list = mpp::LengthList::parse(list_text);
    mpp::NearOneFactor f = mpp::read_factor_file(factor_path);
    mpp::Mode mode = linear ? mpp::Mode::Linear : mpp::Mode::Cyclic;
    mpp::ValidationResult check = mpp::validate(f, list, mode);
    if (check.ok) {
        std::cout << "verified: the factor realizes " << list.to_string() << " ("
                  << (linear ? "linear" : "cyclic");
        if (check.kind && *check.kind != mpp::Kind::Linear &&
            *check.kind != mpp::Kind::Cyclic)
            std::cout << ", " << mpp::kind_name(*check.kind);
        std::cout << ")\n";
        return kExitRealized;
    }
    std::cout << "not verified: " << check.reason << "\n";
    return kExitInfeasible;
}

int cmd_search(const std::string& list_text, bool linear, std::optional<int> isolated,
               std::optional<std::uint64_t> node_limit) {
    mpp::LengthList list = mpp::LengthList::parse(list_text);
    mpp::SearchOptions opts;
    opts.mode = linear ? mpp::Mode::Linear : mpp::Mode::Cyclic;
    opts.required_isolated = isolated;
    opts.node_limit = node_limit;
    mpp::SearchResult res = mpp::search_realization(list, opts);
    std::cout << "list = " << list.to_string() << "  (v = " << list.v() << ", "
              << (linear ? "linear" : "cyclic") << ")\n";
    std::cout << "nodes = " << res.nodes << "\n";
    switch (res.status) {
        case mpp::SearchStatus::Found:
            std::cout << "found:\n" << mpp::render_factor(*res.factor);
            return kExitRealized;
        case mpp::SearchStatus::Exhausted:
            std::cout << "exhausted: no realization exists\n";
            return kExitInfeasible;
        case mpp::SearchStatus::Indeterminate:
            std::cout << "indeterminate: node budget exhausted\n";
            return kExitIndeterminate;
    }
    return kExitInternal;
}

int cmd_sweep(int max_v, int workers, bool verify_infeasible) {
    mpp::SweepOptions opts;
    opts.workers = workers;
    opts.verify_infeasible = verify_infeasible;
    mpp::SweepReport report = mpp::sweep(max_v, opts);
    std::cout << mpp::render_sweep(report);
    return report.ok() ? kExitRealized : kExitInfeasible;
}

// Sequence <-> factor conversion.  A literal that parses as a slot word is
// converted to the factor it encodes; otherwise the argument is read as a
// factor file and its slot word is printed (the factor must be linear-grade:
// plain differences within range, which to_sequence checks).
int cmd_skolem(const std::string& arg) {
    std::vector<int> slots;
    bool is_word = false;
    try {
        slots = mpp::parse_slot_word(arg);
        is_word = true;
    } catch (const mpp::invalid_input&) {
        if (!std::filesystem::exists(arg)) throw;
    }
    if (is_word) {
        mpp::Realization r = mpp::from_sequence(slots);
        std::cout << "word = " << mpp::render_slot_word(slots) << "\n"
                  << mpp::render_factor(r.factor) << "kind = " << mpp::kind_name(r.kind)
                  << "\nlist = " << r.list.to_string() << "\n";
        return kExitRealized;
    }
    mpp::NearOneFactor f = mpp::read_factor_file(arg);
    mpp::LengthList list{mpp::diff_multiset(f)};
    if (!list.linear_range())
        throw mpp::invalid_input("factor is not linear-grade: a difference exceeds 2n");
    mpp::Realization r{f, mpp::classify_kind(f.isolated, f.v), list};
    mpp::SlotSequence seq = mpp::to_sequence(r);
    std::cout << mpp::render_factor(f) << "list = " << list.to_string() << "\nword = "
              << mpp::render_slot_word(seq.slots) << "\n";
    return kExitRealized;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"near 1-factors of K_{2n+1} with prescribed edge lengths"};
    app.require_subcommand(1);

    std::string list_text, factor_path, method = "auto", format = "text", skolem_arg;
    bool linear = false, verify_infeasible = false, show_grid = false;
    std::optional<std::uint64_t> node_limit;
    std::optional<int> isolated;
    int max_v = 0, workers = 0;

    auto* check = app.add_subcommand("check", "decide the divisor condition");
    check->add_option("list", list_text, "length list, e.g. 1^2,4^3,6")->required();

    auto* realize = app.add_subcommand("realize", "construct a realization");
    realize->add_option("list", list_text)->required();
    realize->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "constant", "starter", "two", "big", "shared",
                               "coprime", "pattern", "small", "oracle"}));
    realize->add_option("--format", format)->check(CLI::IsMember({"text", "json-like"}));
    realize->add_option("--node-limit", node_limit, "search budget (oracle paths)");
    realize->add_flag("--show-grid", show_grid, "print the construction's vertex grid");

    auto* verify = app.add_subcommand("verify", "validate a factor file against a list");
    verify->add_option("--list", list_text)->required();
    verify->add_option("factor-file", factor_path)->required();
    verify->add_flag("--linear", linear, "validate plain differences instead of lengths");

    auto* search = app.add_subcommand("search", "exhaustive backtracking search");
    search->add_option("list", list_text)->required();
    search->add_flag("--linear", linear);
    search->add_option("--isolated", isolated, "require this isolated vertex");
    search->add_option("--node-limit", node_limit);

    auto* sweep = app.add_subcommand("sweep", "conjecture check up to a bound");
    sweep->add_option("--max-v", max_v, "largest odd order (<= 27)")->required();
    sweep->add_option("--workers", workers, "0: MPP_WORKERS env var or hardware");
    sweep->add_flag("--verify-infeasible", verify_infeasible,
                    "exhaust violating lists too (v <= 15)");

    auto* skolem = app.add_subcommand("skolem", "slot word <-> factor conversion");
    skolem->add_option("word-or-factor-file", skolem_arg)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(list_text);
        if (realize->parsed())
            return cmd_realize(list_text, method, format, node_limit, show_grid);
        if (verify->parsed()) return cmd_verify(list_text, factor_path, linear);
        if (search->parsed()) return cmd_search(list_text, linear, isolated, node_limit);
        if (sweep->parsed()) return cmd_sweep(max_v, workers, verify_infeasible);
        if (skolem->parsed()) return cmd_skolem(skolem_arg);
    } catch (const mpp::infeasible_error& ex) {
        std::cout << "infeasible: " << ex.what() << "\n";
        return kExitInfeasible;
    } catch (const mpp::precondition_violation& ex) {
        std::cerr << "precondition violation: " << ex.what() << "\n";
        return kExitInvalid;
    } catch (const mpp::invalid_input& ex) {
        std::cerr << "invalid input: " << ex.what() << "\n";
        return kExitInvalid;
    } catch (const mpp::internal_error& ex) {
        std::cerr << "internal error (please report): " << ex.what() << "\n";
        return kExitInternal;
    }
    return kExitInvalid;
}
