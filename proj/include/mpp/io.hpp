#pragma once
//
// Serialization for the command-line front end: factor files (structured
// text with fields v, edges, isolated), slot-word literals, and the two
// output formats (human text and machine structured text).
//
#include <string>
#include <vector>

#include "mpp/core.hpp"
#include "mpp/oracle.hpp"
#include "mpp/solve.hpp"

namespace mpp {

// Reads a factor file: an object with integer field "v", array field
// "edges" of two-integer arrays, and integer field "isolated".  Throws
// invalid_input on unreadable paths, malformed syntax, or invariant
// violations (the NearOneFactor constructor checks disjointness).
NearOneFactor read_factor_file(const std::string& path);

// Serializes a factor in the same structured-text form read_factor_file
// accepts (edges sorted by smaller endpoint).
std::string factor_to_structured(const NearOneFactor& f);
void write_factor_file(const std::string& path, const NearOneFactor& f);

// Parses a slot-word literal: comma- or space-separated non-negative
// integers, optional surrounding parentheses or brackets, e.g.
// "(6,6,0,1,1,3,6,6,3)".  A valid word has exactly one zero slot; that is
// checked by from_sequence, not here.
std::vector<int> parse_slot_word(const std::string& text);
std::string render_slot_word(const std::vector<int>& slots);

// Human-readable rendering: edges sorted by smaller endpoint, one factor
// per line group.
std::string render_factor(const NearOneFactor& f);
std::string render_trace(const Trace& trace);

// Full solve-result rendering in the two CLI formats.
std::string render_result_text(const LengthList& list, const SolveResult& res);
std::string render_result_structured(const LengthList& list, const SolveResult& res);

// Sweep report table (one row per odd v, plus a verdict line).
std::string render_sweep(const SweepReport& report);

}  // namespace mpp
