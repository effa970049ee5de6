//
// Python bindings for the main operations: feasibility checking, realization
// (automatic or forced method), validation, and slot-word conversion.
//
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "mpp/core.hpp"
#include "mpp/feasibility.hpp"
#include "mpp/solve.hpp"

namespace py = pybind11;
using namespace mpp;

namespace {

py::dict verdict_dict(const FeasibilityVerdict& fv) {
    py::dict d;
    d["feasible"] = fv.feasible;
    d["divisor"] = fv.divisor;
    d["multiples"] = fv.multiples;
    d["bound"] = fv.bound;
    d["description"] = describe(fv);
    return d;
}

std::vector<std::pair<int, int>> edge_pairs(const NearOneFactor& f) {
    std::vector<std::pair<int, int>> out;
    out.reserve(f.edges.size());
    for (const Edge& e : f.edges) out.emplace_back(e.lo, e.hi);
    return out;
}

NearOneFactor factor_from(int v, const std::vector<std::pair<int, int>>& edges,
                          int isolated) {
    NearOneFactor f;
    f.v = v;
    f.isolated = isolated;
    f.edges.reserve(edges.size());
    for (const auto& [a, b] : edges) f.edges.emplace_back(a, b);
    return f;
}

py::dict realization_dict(const Realization& r) {
    py::dict d;
    d["v"] = r.factor.v;
    d["edges"] = edge_pairs(r.factor);
    d["isolated"] = r.factor.isolated;
    d["kind"] = kind_name(r.kind);
    d["list"] = r.list.to_string();
    return d;
}

py::dict check_py(const std::string& list) {
    return verdict_dict(check_condition(LengthList::parse(list)));
}

py::dict solve_py(const std::string& list, const std::string& method,
                  std::optional<std::uint64_t> node_limit) {
    SolveOptions opts;
    opts.method = parse_method(method);
    opts.node_limit = node_limit;
    SolveResult res = solve(LengthList::parse(list), opts);
    py::dict d;
    d["verdict"] = verdict_name(res.verdict);
    d["search_nodes"] = res.search_nodes;
    d["realization"] =
        res.realization ? py::object(realization_dict(*res.realization)) : py::none();
    d["feasibility"] =
        res.feasibility ? py::object(verdict_dict(*res.feasibility)) : py::none();
    py::list trace;
    for (const TraceStep& step : res.trace)
        trace.append(py::make_tuple(step.op, step.detail));
    d["trace"] = trace;
    return d;
}

py::dict validate_py(int v, const std::vector<std::pair<int, int>>& edges, int isolated,
                     const std::string& list, bool linear) {
    ValidationResult res = validate(factor_from(v, edges, isolated),
                                    LengthList::parse(list),
                                    linear ? Mode::Linear : Mode::Cyclic);
    py::dict d;
    d["ok"] = res.ok;
    d["reason"] = res.reason;
    d["kind"] = res.kind ? py::object(py::str(kind_name(*res.kind))) : py::none();
    return d;
}

py::dict from_word_py(const std::vector<int>& word) {
    return realization_dict(from_sequence(word));
}

std::vector<int> to_word_py(int v, const std::vector<std::pair<int, int>>& edges,
                            int isolated) {
    NearOneFactor f = factor_from(v, edges, isolated);
    Realization r{f, classify_kind(f.isolated, f.v), diff_multiset(f)};
    return to_sequence(r).slots;
}

}  // namespace

PYBIND11_MODULE(_mpp, m) {
    m.doc() = "Edge-length multisets of near 1-factors: feasibility and realization";

    py::register_exception<invalid_input>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<precondition_violation>(m, "PreconditionViolation",
                                                   PyExc_ValueError);
    py::register_exception<infeasible_error>(m, "Infeasible", PyExc_ValueError);
    py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

    m.def("check", &check_py, py::arg("list"),
          "Feasibility condition verdict for a length list (grammar: \"1^2,4^3,6\").");
    m.def("solve", &solve_py, py::arg("list"), py::arg("method") = "auto",
          py::arg("node_limit") = py::none(),
          "Decide and realize a length list; methods: auto, constant, starter, two, "
          "big, shared, coprime, pattern, small, oracle.");
    m.def("validate", &validate_py, py::arg("v"), py::arg("edges"), py::arg("isolated"),
          py::arg("list"), py::arg("linear") = false,
          "Check that a factor is a near 1-factor realizing the list.");
    m.def("from_word", &from_word_py, py::arg("word"),
          "Decode a slot word into a linear realization.");
    m.def("to_word", &to_word_py, py::arg("v"), py::arg("edges"), py::arg("isolated"),
          "Encode a linear realization as its slot word.");
}
