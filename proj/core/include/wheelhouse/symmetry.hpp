#pragma once

#include "perm.hpp"
#include <vector>
#include <string>

namespace wheelhouse {

// Leg symmetries of a corolla.  The group acts on the m output slots and
// n input slots simultaneously; each element carries a sign in {+1,-1}
// and the signs form a character of the group.
//
// Two internal representations:
//   - `blocks`: a product of symmetric groups acting within contiguous
//     slot blocks, each block either trivial or sign (skew).  Used by all
//     the Lie/IB/DefQ type generators; canonicalization normalizes these
//     without enumerating group elements.
//   - `generic`: an explicit closed element list (small groups such as the
//     cyclic symmetries of the wheel generators).
struct SlotBlock {
    int offset = 0;
    int size = 1;
    bool skew = false;
    bool operator==(const SlotBlock&) const = default;
};

struct SymElem {
    Perm out, in;
    int sign = 1;
};

class SymmetryDatum {
public:
    // Spec-level generator list (permutation pair + sign).
    std::vector<SymElem> generators;

    // Internal structure.
    bool block_kind = true;
    std::vector<SlotBlock> out_blocks, in_blocks; // cover all slots, in order
    std::vector<SymElem> elements;                // closure, generic kind only

    int m = 0, n = 0;

    static SymmetryDatum blocks(int m, int n,
                                std::vector<SlotBlock> out_blocks,
                                std::vector<SlotBlock> in_blocks);

    // Convenience: fully symmetric inputs / outputs in a single block.
    static SymmetryDatum simple(int m, int n, bool out_skew, bool in_skew);

    // Trivial group (planar corolla, regular representation).
    static SymmetryDatum planar(int m, int n);

    // Closure of arbitrary generators; throws if the sign map is not a
    // character of the generated group.
    static SymmetryDatum from_generators(int m, int n, std::vector<SymElem> gens);

    // Which block a slot belongs to (index into out_blocks / in_blocks).
    int out_block_of(int slot) const;
    int in_block_of(int slot) const;

    size_t group_order() const;
};

} // namespace wheelhouse
