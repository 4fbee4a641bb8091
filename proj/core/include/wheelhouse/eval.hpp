#pragma once

#include "preset.hpp"
#include "rational.hpp"
#include <optional>
#include <random>

namespace wheelhouse {

// Dense tensor of exact rationals in Hom(M^{otimes n}, M^{otimes m}):
// indices ordered outputs first, all of dimension `dim`.
struct Tensor {
    int dim = 0;
    int m = 0, n = 0;
    std::vector<Rat> entries; // row-major over (out_1..out_m, in_1..in_n)

    Tensor() = default;
    Tensor(int dim, int m, int n);
    size_t index(const std::vector<int>& idx) const;
    Rat& at(const std::vector<int>& idx);
    const Rat& at(const std::vector<int>& idx) const;
    bool operator==(const Tensor& o) const;
};

// Generator assignments, symmetrized against each generator's symmetry
// datum on construction.
class RepAssignment {
public:
    RepAssignment(const GenTable& table, int dim) : table_(&table), dim_(dim) {}

    // Projects onto the (sign-)invariants of the generator's symmetry
    // group before storing.
    void assign(int gen_index, Tensor t);
    const Tensor& tensor(int gen_index) const;
    int dim() const { return dim_; }
    bool invariant(int gen_index) const; // exact invariance check

private:
    const GenTable* table_;
    int dim_;
    std::map<int, Tensor> tensors_;
};

// Contract the decorated graph in End<M>: internal edges contract, wheels
// become traces, free indices are ordered by leg labels.  Per-vertex
// overrides replace the assignment tensor (used by the collapse axiom).
Tensor evaluate(const DecoratedGraph& g, const RepAssignment& rep,
                const std::map<int, Tensor>* overrides = nullptr,
                bool reverse_schedule = false);

struct AxiomReport {
    int trials = 0;
    int failures = 0;
    std::vector<std::string> witnesses;
};

// Evaluate after collapsing the vertex subset H (per connected component)
// and compare with the direct evaluation.
bool collapse_axiom_holds(const DecoratedGraph& g, const RepAssignment& rep,
                          const std::vector<int>& H);

// Randomized mu_G = mu_{G/H} o mu_H collapse tests on small wheeled
// graphs over the assignment's generators.
AxiomReport check_wheeled_axioms(const Preset& preset, const RepAssignment& rep, int trials,
                                 unsigned seed);

} // namespace wheelhouse
