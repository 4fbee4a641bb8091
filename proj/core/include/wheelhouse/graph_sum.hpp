#pragma once

#include "canonical.hpp"
#include "rational.hpp"
#include <map>

namespace wheelhouse {

// A formal linear combination of canonical decorated graphs with exact
// rational coefficients.  Terms are keyed (and ordered) by the canonical
// encoding, so iteration order is deterministic.
class GraphSum {
public:
    struct Term {
        DecoratedGraph graph;
        Rat coeff;
    };

    GraphSum() = default;

    // Adds coeff * [g]; g is canonicalized (and may vanish).
    void add(const DecoratedGraph& g, const Rat& coeff);

    // Adds coeff * [g] for an already-canonical g.
    void add_canonical(const DecoratedGraph& g, const Rat& coeff);

    void add(const GraphSum& other, const Rat& scale = 1);

    GraphSum operator+(const GraphSum& o) const;
    GraphSum operator-(const GraphSum& o) const;
    GraphSum operator*(const Rat& c) const;

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    bool operator==(const GraphSum& o) const;

    const std::map<std::string, Term>& terms() const { return terms_; }

    // All terms share a biarity / degree in well-formed contexts; these
    // throw when the sum is inhomogeneous.
    int common_degree() const;
    std::pair<int, int> common_biarity() const;

private:
    std::map<std::string, Term> terms_;
};

GraphSum singleton(const DecoratedGraph& g, const Rat& coeff = 1);

} // namespace wheelhouse
