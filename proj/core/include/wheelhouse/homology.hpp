#pragma once

#include "delta.hpp"
#include "enumerate.hpp"
#include "linalg.hpp"
#include <map>

namespace wheelhouse {

// A chain-complex slice at fixed biarity.  Components are bigraded by
// (cohomological degree, vertex count); the differential raises both by
// one for every preset this supports, so each component's kernel and
// image are computed exactly (no window truncation inside a component).
struct ComplexSlice {
    const Preset* preset = nullptr;
    int m = 0, n = 0;
    int max_vertices = 0;
    WheelMode mode = WheelMode::None;
    int deg_lo = 0, deg_hi = 0;

    // (degree, vertices) -> ordered canonical basis
    std::map<std::pair<int, int>, std::vector<DecoratedGraph>> bases;
    // (degree, vertices) -> matrix of delta into (degree+1, vertices+1)
    std::map<std::pair<int, int>, SparseMatrix> deltas;

    const std::vector<DecoratedGraph>& basis(int d, int v) const;
};

// Degree window defaults wide enough for the acceptance strata.
ComplexSlice assemble(const Preset& preset, int m, int n, int max_vertices, WheelMode mode,
                      std::optional<std::pair<int, int>> degree_window = std::nullopt);

// Exact cohomology dimension per (degree, vertex) component.
std::map<std::pair<int, int>, int> cohomology_dims(const ComplexSlice& slice);

// Aggregate over vertex strata at each degree within the slice window.
std::map<int, int> cohomology_dims_by_degree(const ComplexSlice& slice);

bool is_cocycle(const Preset& preset, const GraphSum& x, DeltaOptions opt = {});

struct ExactnessResult {
    bool exact = false;
    GraphSum preimage;      // certificate when exact
    bool window_complete = true;
};

// Solves delta y = x over the (deg-1, vertices-1) component of the slice.
ExactnessResult is_exact(const ComplexSlice& slice, const GraphSum& x);

// Coordinates of x in the slice component basis; throws if a term of x
// is not in the enumerated basis.
std::vector<Rat> coordinates(const std::vector<DecoratedGraph>& basis, const GraphSum& x);

} // namespace wheelhouse
