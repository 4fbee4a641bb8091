#pragma once

#include "graph_sum.hpp"
#include "preset.hpp"
#include "rational.hpp"
#include <optional>

namespace wheelhouse {

// The degree of the (wheeled) ideal generated by the preset's relations
// at biarity (m,n) and vertex count V: all graphs with exactly one vertex
// decorated by a relator and the others by generators, in the given wheel
// mode.  Each element is a canonical GraphSum obtained by substituting a
// relator into an ambient graph.
std::vector<GraphSum> relation_span(const Preset& quadratic, int m, int n, int vertices,
                                    WheelMode mode);

struct MembershipResult {
    bool member = false;
    // coefficients over the relation_span elements, in span order
    std::vector<Rat> certificate;
    std::vector<GraphSum> span; // the span elements the certificate refers to
};

// Ideal membership with certificate; the certificate re-substitutes to x
// exactly (checked before returning member = true).
MembershipResult wheeled_ideal_membership(const Preset& quadratic, const GraphSum& x,
                                          WheelMode mode);

// dim of (graphs at (m,n,V) modulo the relation span): the presentation
// oracle for the quotient (wheeled) prop.
int quotient_dim(const Preset& quadratic, int m, int n, int vertices, WheelMode mode);

} // namespace wheelhouse
