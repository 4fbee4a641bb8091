#pragma once

#include "generator.hpp"
#include "rational.hpp"
#include <cstdint>
#include <vector>

namespace wheelhouse {

enum class WheelMode {
    None,         // acyclic graphs only
    Unrestricted, // oriented wheels allowed
    AtMostOne,    // first Betti number <= 1
    Marked,       // every directed cycle carries exactly one marked edge
    OperadicOnly, // all wheels operadic
};

WheelMode wheel_mode_parse(const std::string& s);
std::string wheel_mode_name(WheelMode m);

struct GEdge {
    int sv, ss; // source vertex, output slot
    int tv, ts; // target vertex, input slot
    bool mark = false;
    auto key() const { return std::tuple(sv, ss, tv, ts, (int)mark); }
    bool operator<(const GEdge& o) const { return key() < o.key(); }
    bool operator==(const GEdge& o) const { return key() == o.key(); }
};

struct VertexDec {
    int gen = -1; // index into the GenTable
    bool operator==(const VertexDec&) const = default;
};

// A decorated directed graph.  Leg labels are explicit: inputs[i] is the
// (vertex, input slot) carrying global input label i+1, and likewise for
// outputs.  Every vertex slot is used by exactly one edge or one leg.
struct DecoratedGraph {
    const GenTable* table = nullptr;
    std::vector<VertexDec> vertices;
    std::vector<GEdge> edges;
    std::vector<std::pair<int, int>> inputs;  // label order
    std::vector<std::pair<int, int>> outputs; // label order

    const GeneratorSpec& gen(int v) const { return table->at(vertices[v].gen); }
    int num_vertices() const { return (int)vertices.size(); }
    int num_inputs() const { return (int)inputs.size(); }
    int num_outputs() const { return (int)outputs.size(); }

    int degree() const;
    void validate() const; // structural invariants (slot usage, ranges)

    // Oriented wheels as edge-index sequences, each starting from its
    // least edge; deterministic order.
    std::vector<std::vector<int>> wheels() const;
    bool wheel_is_operadic(const std::vector<int>& cycle) const;
    bool is_acyclic() const;
    int first_betti() const;
    bool connected() const;
    bool satisfies(WheelMode mode) const;

    // Break the selected edges into an extra output leg (at the source)
    // and an extra input leg (at the target); new legs are appended after
    // the existing labels in ascending edge order.
    DecoratedGraph break_edges(const std::vector<int>& edge_indices) const;

    // Glue output leg (label out_label, 1-based) onto input leg in_label.
    DecoratedGraph glue_legs(int out_label, int in_label) const;

    // Disjoint union; other's vertices and leg labels are appended.
    DecoratedGraph disjoint_union(const DecoratedGraph& other) const;
};

// Grafting g2's output leg j into g1's input leg i (1-based labels); the
// remaining labels keep their relative order, g2's appended after g1's.
DecoratedGraph graft_raw(const DecoratedGraph& g1, int i, int j, const DecoratedGraph& g2);

DecoratedGraph corolla(const GenTable& table, int gen_index);

} // namespace wheelhouse
