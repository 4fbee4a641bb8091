#pragma once

#include "graph.hpp"
#include <optional>

namespace wheelhouse {

struct CanonResult {
    bool zero = false;
    DecoratedGraph graph; // canonical representative (when !zero)
    int sign = 1;         // [input] = sign * [canonical]
};

// Lexicographically minimal encoding over all vertex reorderings and all
// leg-symmetry moves.  Sign accumulates the Koszul cost of reordering
// odd-degree decorations and the character values of applied symmetry
// elements.  Returns zero when some automorphism acts with sign -1.
CanonResult canonicalize(const DecoratedGraph& g);

// Deterministic integer encoding of a concrete (slot-resolved) graph.
std::vector<int> encode(const DecoratedGraph& g);

// Byte string key of encode(); usable as a map key / stable sort key.
std::string encode_key(const DecoratedGraph& g);

} // namespace wheelhouse
