#pragma once

#include "rational.hpp"
#include <functional>
#include <map>
#include <vector>

namespace wheelhouse {

// Super-commutative polynomial coefficients over Q[hbar], truncated in
// both the polynomial degree and the hbar power.  Generators carry
// integer degrees; odd generators square to zero.
struct PolyCtx {
    int dim = 0;
    std::vector<int> degrees; // degree of each coordinate
    int trunc_poly = 8;       // monomial length cap
    int trunc_hbar = 8;       // hbar power cap

    bool odd(int i) const { return degrees[i] & 1; }
    int parity_sum(const std::vector<int>& letters) const {
        int s = 0;
        for (int a : letters) s += degrees[a];
        return s;
    }
};

using Mono = std::vector<int>; // weakly increasing letters
using Word = std::vector<int>; // tensor word, arbitrary order

class PolySeries {
public:
    const PolyCtx* ctx = nullptr;
    // (monomial, hbar power) -> coefficient
    std::map<std::pair<Mono, int>, Rat> coeffs;

    PolySeries() = default;
    explicit PolySeries(const PolyCtx& c) : ctx(&c) {}

    void add(const Mono& m, int h, const Rat& c);
    void add(const PolySeries& other, const Rat& scale = 1);
    PolySeries operator+(const PolySeries& o) const;
    PolySeries operator-(const PolySeries& o) const;
    PolySeries operator*(const Rat& c) const;
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const PolySeries& o) const { return coeffs == o.coeffs; }

    // graded parity of a homogeneous series (throws when mixed)
    int parity() const;
};

PolySeries poly_one(const PolyCtx& ctx);
PolySeries poly_gen(const PolyCtx& ctx, int i);

// Super-commutative product.
PolySeries poly_mul(const PolySeries& a, const PolySeries& b);

// The PBW machine for a linear super Poisson bracket
//   {x_a, x_b} = hbar-free linear combination bracket(a,b).
class Pbw {
public:
    using Bracket = std::function<std::vector<std::pair<int, Rat>>(int, int)>;

    Pbw(const PolyCtx& ctx, Bracket bracket) : ctx_(&ctx), bracket_(std::move(bracket)) {}

    // Normal form of a tensor word (coefficient and hbar power attached):
    // the image of the word in the enveloping algebra, written through the
    // symmetrization isomorphism.
    PolySeries word_nf(const Word& w, int h, const Rat& coeff);

    // Star product f * g = s^{-1}(s(f) s(g)).
    PolySeries star(const PolySeries& f, const PolySeries& g);

    // Super Poisson bracket extended to polynomials as a biderivation.
    PolySeries poisson(const PolySeries& f, const PolySeries& g);

    const PolyCtx& ctx() const { return *ctx_; }

private:
    const PolyCtx* ctx_;
    Bracket bracket_;
    std::map<Mono, PolySeries> std_cache_; // nf of the sorted word of a monomial

    PolySeries standard_nf(const Mono& m);
};

} // namespace wheelhouse
