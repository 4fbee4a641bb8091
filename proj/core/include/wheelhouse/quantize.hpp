#pragma once

#include "delta.hpp"
#include "graph_sum.hpp"
#include <map>

namespace wheelhouse {

// The low-order lifting of the quantization morphism on the hbar-labeled
// star-product generators.  Generators are keyed by (hbar label a, output
// bunch sizes, input count); values live in the wheeled Lie 1-bialgebra
// complex.  Levels are indexed by the weight s = 2a + k - 2.
struct DefqGenKey {
    int a = 1;
    std::vector<int> bunches;
    int n = 0;
    bool operator<(const DefqGenKey& o) const {
        return std::tie(a, bunches, n) < std::tie(o.a, o.bunches, o.n);
    }
};

struct LiftEntry {
    DefqGenKey key;
    GraphSum value;       // the chosen Q-value in the wheeled complex
    GraphSum rhs;         // Q(delta corolla), the equation's right side
    bool solved = false;  // rhs was delta of the particular part
    bool from_seed = false; // value fixed by the star-product morphism data
};

class LiftQ {
public:
    LiftQ();

    // Compute (and cache) the table rows at the given level s <= 6.
    // Throws when an equation has no solution (an obstruction, which must
    // not occur at these levels).
    std::vector<LiftEntry> level(int s);

    const Preset& target() const { return *lieb_; }
    const Preset& source() const { return *defq_; }

private:
    std::shared_ptr<Preset> defq_;
    std::shared_ptr<Preset> lieb_;
    std::map<DefqGenKey, GraphSum> table_;
    std::map<int, std::vector<LiftEntry>> levels_;

    GraphSum q_value(const DefqGenKey& key) const; // the classical morphism data
    GraphSum apply_Q(const GraphSum& defq_elt) const;
    GraphSum solve_exact(const GraphSum& rhs, int m, int n, int degree, int vertices);
};

} // namespace wheelhouse
