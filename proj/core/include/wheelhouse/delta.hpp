#pragma once

#include "preset.hpp"
#include <map>

namespace wheelhouse {

// Substitute the rule graph T for vertex i of g: T's legs are matched to
// the slots of vertex i, T's vertices are spliced in at position i.
DecoratedGraph substitute(const DecoratedGraph& g, int vertex, const DecoratedGraph& T);

// The degree +1 derivation extending the preset's corolla rule, with rule
// caching.  apply() canonicalizes and collects terms.
class DeltaEngine {
public:
    DeltaEngine(const Preset& preset, DeltaOptions opt = {}) : preset_(preset), opt_(opt) {}

    GraphSum apply(const GraphSum& x);
    GraphSum apply_graph(const DecoratedGraph& g, const Rat& coeff = 1);

    // The marked-wheel derivation: equals delta away from the input-marked
    // cyclic vertex, where the vertical splittings acquire re-marked twins.
    GraphSum apply_b(const GraphSum& x);
    GraphSum apply_b_graph(const DecoratedGraph& g, const Rat& coeff = 1);

    const std::vector<GraphSum::Term>& rule(int gen_index);

    const Preset& preset() const { return preset_; }
    const DeltaOptions& options() const { return opt_; }

private:
    const Preset& preset_;
    DeltaOptions opt_;
    std::map<int, std::vector<GraphSum::Term>> rules_;
    GraphSum apply_impl(const DecoratedGraph& g, const Rat& coeff, bool marked_b);
    std::vector<GraphSum::Term> solve_rule_signs(std::vector<GraphSum::Term> cand);
};

GraphSum apply_delta(const Preset& preset, const GraphSum& x, DeltaOptions opt = {});
GraphSum apply_b(const Preset& preset, const GraphSum& x, DeltaOptions opt = {});

struct D2Report {
    bool pass = true;
    int basis_size = 0;
    int window_edges = -1; // complete-window bound used for DefQ (else -1)
    std::vector<std::string> witnesses;
};

// Applies delta twice to every basis graph at (m,n) with <= max_vertices
// vertices and reports any non-zero result.  For the DefQ presets the
// check is exact on the complete window of result graphs with at most
// edges(g) + opt.max_new_edges internal edges.
D2Report check_d_squared(const Preset& preset, int m, int n, int max_vertices,
                         int max_arity = -1, DeltaOptions opt = {});

} // namespace wheelhouse
