#pragma once

#include "delta.hpp"
#include "homology.hpp"

namespace wheelhouse {

// Operators on the single-wheel marked graph space: t moves the mark one
// cyclic edge forward, N is the cyclic norm on each stratum.
GraphSum op_t(const GraphSum& x);
GraphSum op_N(const GraphSum& x, bool paper_upper_limit = false);

// Marked single-wheel membership (exactly one wheel, one marked edge on it).
bool in_marked_single_wheel_space(const DecoratedGraph& g);

struct CyclicLemmaReport {
    bool b_squared = true;
    bool delta_one_minus_t = true; // delta(1-t) = (1-t) b
    bool norm_delta = true;        // N delta = b N
    bool rows_exact = true;        // ker(1-t) = im N and ker N = im(1-t)
    int basis_size = 0;
    std::vector<std::string> witnesses;
};

// Verify the marked-wheel identities on every single-wheel marked basis
// graph at (m,n) with at most max_vertices vertices.
CyclicLemmaReport check_cyclic_lemmas(const Preset& preset, int m, int n, int max_vertices);

struct TotalComplexReport {
    // degree -> dim of the total-complex cohomology at that degree
    std::map<int, int> total_dims;
    // degree -> dim of the unmarked single-wheel cohomology
    std::map<int, int> unmarked_dims;
    std::map<int, bool> stabilized; // column truncation stabilized per degree
    bool equal = true;              // equality on the stabilized interior degrees
    std::vector<int> compared_degrees;
};

// Total complex of the cyclic bicomplex (columns alternate b and delta,
// rows alternate 1-t and N) truncated at the given column width, compared
// against the unmarked single-wheel cohomology computed directly.
TotalComplexReport total_complex_cohomology(const Preset& preset, int m, int n,
                                            int max_vertices, int width = 6);

} // namespace wheelhouse
