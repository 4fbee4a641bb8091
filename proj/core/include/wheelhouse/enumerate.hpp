#pragma once

#include "preset.hpp"
#include <optional>
#include <map>

namespace wheelhouse {

struct EnumOptions {
    // Per-vertex arity cap (m_v + n_v).  The generator families are
    // unbounded, so a vertex-count basis is finite only after fixing this.
    // -1 selects m + n + max_vertices + 1.
    int max_arity = -1;
    // Cap on the number of internal edges (-1: unbounded).
    int max_edges = -1;
    // Restrict to a cohomological degree (used by the slice assembly; in
    // that case arities are intrinsically bounded and max_arity is ignored
    // for the degree-bounded presets).
    std::optional<int> degree;
    // Exact vertex count instead of "at most max_vertices".
    bool exact_vertices = false;
    int hbar_cap = 3;
};

// All canonical nonzero graphs of the preset with <= max_vertices vertices
// (or exactly, per options), m outputs and n inputs, respecting the wheel
// mode.  Deterministic order: lexicographic on the canonical encoding.
std::vector<DecoratedGraph> enumerate_basis(const Preset& preset, int m, int n,
                                            int max_vertices, WheelMode mode,
                                            const EnumOptions& opt = {});

// Whether the preset's degree bookkeeping bounds vertex arities at fixed
// (m, n, degree, vertex count); true for everything but DefQ.
bool degree_bounds_arity(const Preset& preset);

} // namespace wheelhouse

namespace wheelhouse {

// All canonical nonzero graphs with exactly the given decoration multiset.
void enumerate_decorated(const GenTable& table, const std::vector<int>& multiset, int m, int n,
                         WheelMode mode, std::map<std::string, DecoratedGraph>& found);

} // namespace wheelhouse
