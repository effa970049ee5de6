#include "mpp/solve.hpp"

#include <algorithm>
#include <map>

#include "mpp/blocks.hpp"
#include "mpp/one_two_t.hpp"
#include "mpp/oracle.hpp"
#include "mpp/two_lengths.hpp"

namespace mpp {

namespace {

void note(Trace& trace, std::string op, std::string detail) {
    trace.push_back({std::move(op), std::move(detail)});
}

// Shape of a {1,2,t} (or degenerate {1,t} / {2,t} / {t}) list.
struct Shape12t {
    long long a = 0, b = 0, c = 0;
    int t = 0;
};

// Extracts (a, b, t, c) when every length is in {1, 2, t} for some t >= 3.
std::optional<Shape12t> as_12t(const LengthList& list) {
    Shape12t s;
    s.t = list.max_length();
    if (s.t < 3) return std::nullopt;
    s.a = list.count(1);
    s.b = list.count(2);
    s.c = list.count(s.t);
    if (s.a + s.b + s.c != list.n()) return std::nullopt;
    return s;
}

bool is_full_range(const LengthList& list) {
    if (list.max_length() != list.n()) return false;
    for (const auto& [len, cnt] : list.counts())
        if (cnt != 1) return false;
    return static_cast<long long>(list.counts().size()) == list.n();
}

SolveResult realized(Realization r, Trace trace, Verdict w = Verdict::Realized) {
    SolveResult res;
    res.verdict = w;
    res.realization = std::move(r);
    res.trace = std::move(trace);
    return res;
}

SolveResult run_oracle(const LengthList& list, const SolveOptions& opts, Trace trace,
                       Verdict found_verdict) {
    SearchOptions so;
    so.mode = Mode::Cyclic;
    so.node_limit = opts.node_limit;
    note(trace, "search", "exhaustive backtracking over K_" + std::to_string(list.v()));
    SearchResult sr = search_realization(list, so);
    SolveResult res;
    res.trace = std::move(trace);
    res.search_nodes = sr.nodes;
    switch (sr.status) {
        case SearchStatus::Found: {
            Realization r;
            r.factor = *sr.factor;
            r.kind = Kind::Cyclic;
            r.list = list;
            auto check = validate(r.factor, r.list, Mode::Cyclic);
            if (!check.ok)
                throw internal_error("search produced an invalid factor: " + check.reason);
            res.verdict = found_verdict;
            res.realization = std::move(r);
            break;
        }
        case SearchStatus::Exhausted:
            // The condition held, yet no factor exists: settled negatively
            // by exhaustion, with no divisor to blame.
            note(res.trace, "search",
                 "search space exhausted: no realization exists for " + list.to_string());
            res.verdict = Verdict::Infeasible;
            break;
        case SearchStatus::Indeterminate:
            note(res.trace, "search", "node budget exhausted before an answer");
            res.verdict = Verdict::Indeterminate;
            break;
    }
    return res;
}

// Reads a linear-grade realization cyclically (valid since max length <= n).
Realization as_cyclic(Realization r) {
    if (r.kind == Kind::Cyclic) return r;
    r.kind = Kind::Cyclic;
    auto check = validate(r.factor, r.list, Mode::Cyclic);
    if (!check.ok) throw internal_error("cyclic reading failed: " + check.reason);
    return r;
}

Shape12t need_12t(const LengthList& list, Method m) {
    auto s = as_12t(list);
    if (!s)
        throw precondition_violation(std::string(method_name(m)) +
                                     " needs a list over {1, 2, t}");
    return *s;
}

SolveResult solve_forced(const LengthList& list, const SolveOptions& opts) {
    Trace trace;
    note(trace, "dispatch", std::string("forced method: ") + method_name(opts.method));
    switch (opts.method) {
        case Method::Constant: {
            auto d = list.distinct();
            if (d.size() != 1)
                throw precondition_violation("constant needs a single distinct length");
            return realized(realize_constant(d[0], list.n()), std::move(trace));
        }
        case Method::Starter: {
            if (!is_full_range(list))
                throw precondition_violation("starter needs the list {1, 2, ..., n}");
            return realized(patterned_starter(static_cast<int>(list.n())), std::move(trace));
        }
        case Method::Two: {
            auto d = list.distinct();
            if (d.size() != 2)
                throw precondition_violation("two needs exactly two distinct lengths");
            Realization r = realize_two(d[0], list.count(d[0]), d[1], list.count(d[1]), &trace);
            return realized(std::move(r), std::move(trace));
        }
        case Method::Big: {
            Shape12t s = need_12t(list, opts.method);
            Realization r = as_cyclic(realize_12t_big(s.a, s.b, s.t, s.c, &trace));
            return realized(std::move(r), std::move(trace));
        }
        case Method::Shared: {
            Shape12t s = need_12t(list, opts.method);
            Realization r = realize_12t_shared(s.a, s.b, s.t, s.c, &trace);
            return realized(std::move(r), std::move(trace));
        }
        case Method::Coprime: {
            Shape12t s = need_12t(list, opts.method);
            Realization r = realize_12t_coprime(s.a, s.b, s.t, s.c, &trace);
            return realized(std::move(r), std::move(trace));
        }
        case Method::Pattern: {
            Shape12t s = need_12t(list, opts.method);
            Realization r = realize_12t_pattern(s.a, s.b, s.t, s.c, &trace);
            return realized(std::move(r), std::move(trace));
        }
        case Method::Small: {
            Shape12t s = need_12t(list, opts.method);
            Realization r = as_cyclic(realize_12t_small(s.a, s.b, s.t, s.c, &trace));
            return realized(std::move(r), std::move(trace));
        }
        case Method::Oracle:
            return run_oracle(list, opts, std::move(trace), Verdict::Realized);
        case Method::Automatic:
            break;  // unreachable; handled by solve()
    }
    throw internal_error("unhandled forced method");
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::Automatic: return "auto";
        case Method::Constant: return "constant";
        case Method::Starter: return "starter";
        case Method::Two: return "two";
        case Method::Big: return "big";
        case Method::Shared: return "shared";
        case Method::Coprime: return "coprime";
        case Method::Pattern: return "pattern";
        case Method::Small: return "small";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    for (Method m : {Method::Automatic, Method::Constant, Method::Starter, Method::Two,
                     Method::Big, Method::Shared, Method::Coprime, Method::Pattern,
                     Method::Small, Method::Oracle})
        if (name == method_name(m)) return m;
    throw invalid_input("unknown method: " + name);
}

const char* verdict_name(Verdict w) {
    switch (w) {
        case Verdict::Realized: return "realized";
        case Verdict::UnsupportedConstructively: return "realized-by-search";
        case Verdict::Infeasible: return "infeasible";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

SolveResult solve(const LengthList& list, const SolveOptions& opts) {
    if (!list.cyclic_range())
        throw invalid_input("list contains a length above n = " + std::to_string(list.n()));

    if (list.empty()) {
        // K_1: the empty factor realizes the empty list.
        Trace trace;
        note(trace, "dispatch", "empty list: the empty factor of K_1");
        Realization r;
        r.kind = Kind::Cyclic;
        return realized(std::move(r), std::move(trace));
    }

    // Necessity first: a violated divisor settles the list immediately.
    FeasibilityVerdict fv = check_condition(list);
    if (!fv.feasible) {
        SolveResult res;
        res.verdict = Verdict::Infeasible;
        res.feasibility = fv;
        note(res.trace, "condition", describe(fv));
        return res;
    }

    if (opts.method != Method::Automatic) {
        SolveResult res = solve_forced(list, opts);
        res.feasibility = fv;
        return res;
    }

    Trace trace;
    try {
        auto d = list.distinct();
        if (d.size() == 1) {
            note(trace, "dispatch", "single length: multiplied all-ones factor");
            SolveResult res = realized(realize_constant(d[0], list.n()), std::move(trace));
            res.feasibility = fv;
            return res;
        }
        if (is_full_range(list)) {
            note(trace, "dispatch", "full range {1..n}: patterned starter");
            SolveResult res =
                realized(patterned_starter(static_cast<int>(list.n())), std::move(trace));
            res.feasibility = fv;
            return res;
        }
        if (d.size() == 2) {
            note(trace, "dispatch", "two distinct lengths");
            Realization r =
                realize_two(d[0], list.count(d[0]), d[1], list.count(d[1]), &trace);
            SolveResult res = realized(std::move(r), std::move(trace));
            res.feasibility = fv;
            return res;
        }
        if (auto s = as_12t(list); s && s->a > 0 && s->b > 0) {
            note(trace, "dispatch", "shape {1^a, 2^b, t^c}, t = " + std::to_string(s->t));
            try {
                Realization r = realize_12t(s->a, s->b, s->t, s->c, &trace);
                SolveResult res = realized(std::move(r), std::move(trace));
                res.feasibility = fv;
                return res;
            } catch (const precondition_violation& ex) {
                note(trace, "dispatch",
                     std::string("no three-length construction applies: ") + ex.what());
            }
        }
    } catch (const infeasible_error& ex) {
        SolveResult res;
        res.verdict = Verdict::Infeasible;
        res.feasibility = ex.verdict;
        res.trace = std::move(trace);
        note(res.trace, "condition", describe(ex.verdict));
        return res;
    }

    note(trace, "dispatch", "no construction covers this shape");
    SolveResult res =
        run_oracle(list, opts, std::move(trace), Verdict::UnsupportedConstructively);
    res.feasibility = fv;
    return res;
}

}  // namespace mpp
