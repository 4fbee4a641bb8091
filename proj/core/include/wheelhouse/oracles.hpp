#pragma once

#include "preset.hpp"

namespace wheelhouse {
namespace oracle {

// Number of multilinear Lyndon words on n distinct letters, counted by
// direct enumeration over permutations; equals dim of the multilinear
// part of the free Lie algebra.
long lyndon_count(int n);

// Presentation oracle for the quadratic wheeled Lie prop: graphs on the
// binary generator modulo the wheeled Jacobi ideal, at (m,n) with the
// given vertex count.
int lie_wheeled_dim(int m, int n, int vertices);

// Presentation oracle for the quadratic Lie 1-bialgebra prop: free
// graphs on the two binary generators modulo the R1-R3 ideal.
int lieb_dim(int m, int n, int vertices);

} // namespace oracle
} // namespace wheelhouse
