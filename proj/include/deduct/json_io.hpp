#pragma once

#include <json.hpp>

#include "deduct/dynamics.hpp"
#include "deduct/engine.hpp"
#include "deduct/families.hpp"
#include "deduct/pruning.hpp"
#include "deduct/solver.hpp"

namespace deduct {

/// JSON views of the result types. Keys keep insertion order and vertex
/// lists are ascending, so serializations are byte-stable across runs and
/// thread counts.
using ordered_json = nlohmann::ordered_json;

/// {"0": 1, "2": 3}: occupied vertices as string keys, ascending.
ordered_json layout_json(const Layout& layout);

/// A standard layout as a plain vertex array.
ordered_json layout_vertex_array(const Layout& layout);

ordered_json trace_json(const GameTrace& trace);
ordered_json bounds_json(const BoundsReport& bounds);
ordered_json solve_json(const SolveResult& result, const BoundsReport& bounds);
ordered_json prune_json(int n, const PruneResult& result);
ordered_json orbit_json(int n, const Layout& start, const OrbitReport& report);
ordered_json survey_json(const OrbitSurvey& survey);
ordered_json family_json(const FamilyAnswer& answer, int order);

}  // namespace deduct
