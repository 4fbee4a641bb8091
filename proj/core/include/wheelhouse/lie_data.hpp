#pragma once

#include "pbw.hpp"
#include <string>

namespace wheelhouse {

// Structure constants of a finite-dimensional Lie 1-bialgebra: a linear
// super Poisson bracket {x^a, x^b} = hbar Phi^{ab}_c x^c together with a
// quadratic odd vector field xi(x^c) = hbar C^c_{ab} x^a x^b, compatible
// in the Lie-derivative sense.  Plain Lie algebras are the C = 0 case.
struct LieOneBialgebraData {
    std::string name;
    int dim = 0;
    std::vector<int> degrees;   // degree of each coordinate function
    std::vector<Rat> C;         // C[(g*dim+a)*dim+b] = C^g_{ab}
    std::vector<Rat> Phi;       // Phi[(a*dim+b)*dim+g] = Phi^{ab}_g

    Rat c(int g, int a, int b) const { return C[(g * dim + a) * dim + b]; }
    Rat phi(int a, int b, int g) const { return Phi[(a * dim + b) * dim + g]; }
    void set_c(int g, int a, int b, const Rat& v);
    void set_phi(int a, int b, int g, const Rat& v);
    bool odd(int i) const { return degrees[i] & 1; }

    // Structural invariants: graded symmetry of C, graded antisymmetry of
    // Phi, degree homogeneity.
    void check_structure() const;

    // R1: super Jacobi for the bracket.  R2: xi^2 = 0.  R3: xi is a
    // derivation of the bracket.  Throws with the failing relation name.
    void check_relations() const;

    std::vector<Rat> theta() const; // Theta^g = C^g_{ab} Phi^{am}_n Phi^{bn}_m
    std::vector<Rat> xi_vec() const; // Xi_g = C^m_{ab} C^b_{mn} Phi^{na}_g

    static LieOneBialgebraData sl2();
    static LieOneBialgebraData heisenberg3();
    // Graded example with nonzero quantization wheels (sl2 with its
    // principal grading plus a compatible cobracket).
    static LieOneBialgebraData graded_example();
};

struct Step1Report {
    bool structure = false;
    bool relations = false;
    bool derivation_on_ideal = false; // Gamma_1 respects the enveloping ideal
    bool gamma1_gamma0 = false;
    bool main_identity = false;       // Gamma_1^2(x) + [Gamma_0, x]_* = 0
    // residual decomposition: residual = (4a - 1/6) A + (2b + 1/6) B
    bool residual_affine = false;
    bool wheels_nonzero = false;      // both A and B nonzero for this data
    std::vector<PolySeries> residual; // per generator
};

Step1Report verify_step1(const LieOneBialgebraData& data, const Rat& a, const Rat& b,
                         int truncation);

struct ResidualStructure {
    bool affine_ok = false;  // residual == (4a - 1/6) A + (2b + 1/6) B at samples
    bool wheels_nonzero = false;
    std::vector<PolySeries> A, B;
};

// Decompose the Step I residual by sampling (a, b); checks the affine
// structure at three points and reports whether both wheel tensors are
// nonzero for this data.
ResidualStructure step1_residual_structure(const LieOneBialgebraData& data, int truncation);

// The PBW machine of the data's bracket (hbar tracked separately).
Pbw make_pbw(const LieOneBialgebraData& data, PolyCtx& ctx, int truncation);

} // namespace wheelhouse
