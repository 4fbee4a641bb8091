#pragma once

#include "rational.hpp"
#include <map>
#include <optional>
#include <vector>

namespace wheelhouse {

// Exact rational sparse matrix.  No stored zeros; everything over Q.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rat& v);
    void add(int r, int c, const Rat& v);
    Rat get(int r, int c) const;
    const std::map<int, Rat>& row(int r) const { return data_[r]; }
    size_t nnz() const;

    SparseMatrix transpose() const;

    // Rank over Q via fraction-free (Bareiss-style) elimination on the
    // denominator-cleared integer matrix.
    int rank() const;

    // Any exact solution x of Mx = y, or nullopt (certified by elimination).
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& y) const;

    // Basis of the right kernel.
    std::vector<std::vector<Rat>> kernel() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, Rat>> data_;
};

// Span membership with certificate: coefficients c with sum c_i v_i = target.
std::optional<std::vector<Rat>> in_span(const std::vector<std::vector<Rat>>& vectors,
                                        const std::vector<Rat>& target);

} // namespace wheelhouse
