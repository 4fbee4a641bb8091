#include "wheelhouse/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace wheelhouse {

void PolySeries::add(const Mono& m, int h, const Rat& c) {
    if (c == 0) return;
    if ((int)m.size() > ctx->trunc_poly || h > ctx->trunc_hbar) return;
    auto key = std::make_pair(m, h);
    auto it = coeffs.find(key);
    if (it == coeffs.end())
        coeffs.emplace(std::move(key), c);
    else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

void PolySeries::add(const PolySeries& other, const Rat& scale) {
    for (const auto& [k, c] : other.coeffs) add(k.first, k.second, c * scale);
}

PolySeries PolySeries::operator+(const PolySeries& o) const {
    PolySeries r = *this;
    r.add(o);
    return r;
}

PolySeries PolySeries::operator-(const PolySeries& o) const {
    PolySeries r = *this;
    r.add(o, -1);
    return r;
}

PolySeries PolySeries::operator*(const Rat& c) const {
    PolySeries r(*ctx);
    r.add(*this, c);
    return r;
}

int PolySeries::parity() const {
    int p = -1;
    for (const auto& [k, c] : coeffs) {
        int q = ctx->parity_sum(k.first) & 1;
        if (p < 0)
            p = q;
        else if (p != q)
            throw std::logic_error("mixed-parity series");
    }
    return p < 0 ? 0 : p;
}

PolySeries poly_one(const PolyCtx& ctx) {
    PolySeries s(ctx);
    s.add({}, 0, 1);
    return s;
}

PolySeries poly_gen(const PolyCtx& ctx, int i) {
    PolySeries s(ctx);
    s.add({i}, 0, 1);
    return s;
}

namespace {

// Sort a word into a monomial with the Koszul sign; false when an odd
// letter repeats (the square vanishes in the symmetric algebra).
bool word_to_mono(const PolyCtx& ctx, const Word& w, Mono& m, int& sign) {
    m = w;
    sign = 1;
    for (size_t i = 1; i < m.size(); ++i)
        for (size_t j = i; j > 0 && m[j] < m[j - 1]; --j) {
            if (ctx.odd(m[j]) && ctx.odd(m[j - 1])) sign = -sign;
            std::swap(m[j], m[j - 1]);
        }
    for (size_t i = 1; i < m.size(); ++i)
        if (m[i] == m[i - 1] && ctx.odd(m[i])) return false;
    return true;
}

// Distinct arrangements of a monomial's letters with their Koszul signs;
// the symmetrization s(m) is their average.
std::vector<std::pair<Word, int>> sym_words(const PolyCtx& ctx, const Mono& m) {
    std::vector<std::pair<Word, int>> out;
    Word w = m;
    std::sort(w.begin(), w.end());
    do {
        Mono back;
        int sgn;
        word_to_mono(ctx, w, back, sgn);
        out.emplace_back(w, sgn);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace

PolySeries poly_mul(const PolySeries& a, const PolySeries& b) {
    PolySeries r(*a.ctx);
    for (const auto& [ka, ca] : a.coeffs)
        for (const auto& [kb, cb] : b.coeffs) {
            Word w = ka.first;
            w.insert(w.end(), kb.first.begin(), kb.first.end());
            Mono m;
            int sgn;
            if (!word_to_mono(*a.ctx, w, m, sgn)) continue;
            r.add(m, ka.second + kb.second, ca * cb * sgn);
        }
    return r;
}

// ---- PBW ----

PolySeries Pbw::word_nf(const Word& w, int h, const Rat& coeff) {
    PolySeries out(*ctx_);
    if (coeff == 0 || h > ctx_->trunc_hbar || (int)w.size() > ctx_->trunc_poly) return out;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        int a = w[i], b = w[i + 1];
        bool swap_needed = a > b;
        bool odd_square = (a == b) && ctx_->odd(a);
        if (!swap_needed && !odd_square) continue;
        // x_a (x) x_b = sign x_b (x) x_a + hbar {x_a, x_b}
        int sgn = (ctx_->odd(a) && ctx_->odd(b)) ? -1 : 1;
        PolySeries br(*ctx_);
        for (auto [c, coef] : bracket_(a, b)) {
            Word shorter;
            shorter.insert(shorter.end(), w.begin(), w.begin() + i);
            shorter.push_back(c);
            shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
            br.add(word_nf(shorter, h + 1, coeff * coef));
        }
        if (odd_square) {
            out.add(br * Rat(1, 2));
        } else {
            Word swapped = w;
            std::swap(swapped[i], swapped[i + 1]);
            out.add(word_nf(swapped, h, coeff * sgn));
            out.add(br);
        }
        return out;
    }
    // weakly increasing, no odd squares: express through the symmetrized basis
    PolySeries base = standard_nf(w);
    for (const auto& [k, c] : base.coeffs) out.add(k.first, k.second + h, c * coeff);
    return out;
}

PolySeries Pbw::standard_nf(const Mono& m) {
    auto it = std_cache_.find(m);
    if (it != std_cache_.end()) return it->second;
    PolySeries r(*ctx_);
    if (m.size() <= 1) {
        r.add(m, 0, 1);
        std_cache_.emplace(m, r);
        return r;
    }
    // s(m) expands into the average of its arrangements; every arrangement
    // straightens to (Koszul sign) * (sorted word) + hbar corrections in
    // strictly shorter words.  Hence
    //   nf(sorted word) = m - average of (sign * corrections).
    auto arrangements = sym_words(*ctx_, m);
    PolySeries acc(*ctx_);
    for (const auto& [w0, eps] : arrangements) {
        // collect the bracket corrections along the straightening path
        Word w = w0;
        int path_sign = 1;
        bool more = true;
        while (more) {
            more = false;
            for (size_t i = 0; i + 1 < w.size(); ++i) {
                if (w[i] <= w[i + 1]) continue;
                int a = w[i], b = w[i + 1];
                int sgn = (ctx_->odd(a) && ctx_->odd(b)) ? -1 : 1;
                for (auto [c, coef] : bracket_(a, b)) {
                    Word shorter;
                    shorter.insert(shorter.end(), w.begin(), w.begin() + i);
                    shorter.push_back(c);
                    shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
                    acc.add(word_nf(shorter, 1, Rat(eps) * path_sign * coef));
                }
                std::swap(w[i], w[i + 1]);
                path_sign *= sgn;
                more = true;
                break;
            }
        }
    }
    Rat inv(1, (long)arrangements.size());
    r.add(m, 0, 1);
    r.add(acc * inv, Rat(-1));
    std_cache_.emplace(m, r);
    return r;
}

PolySeries Pbw::star(const PolySeries& f, const PolySeries& g) {
    PolySeries out(*ctx_);
    for (const auto& [kf, cf] : f.coeffs)
        for (const auto& [kg, cg] : g.coeffs) {
            auto words_f = sym_words(*ctx_, kf.first);
            auto words_g = sym_words(*ctx_, kg.first);
            Rat norm = Rat(1) / (Rat((long)words_f.size()) * Rat((long)words_g.size()));
            for (const auto& [wf, sf] : words_f)
                for (const auto& [wg, sg] : words_g) {
                    Word w = wf;
                    w.insert(w.end(), wg.begin(), wg.end());
                    out.add(word_nf(w, kf.second + kg.second, cf * cg * norm * sf * sg));
                }
        }
    return out;
}

PolySeries Pbw::poisson(const PolySeries& f, const PolySeries& g) {
    PolySeries out(*ctx_);
    for (const auto& [kf, cf] : f.coeffs)
        for (const auto& [kg, cg] : g.coeffs) {
            const Mono& a = kf.first;
            const Mono& b = kg.first;
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = 0; j < b.size(); ++j) {
                    // move x_{a_i} to the right end of a and x_{b_j} to the
                    // left end of b
                    int s = 1;
                    for (size_t k = i + 1; k < a.size(); ++k)
                        if (ctx_->odd(a[i]) && ctx_->odd(a[k])) s = -s;
                    for (size_t k = 0; k < j; ++k)
                        if (ctx_->odd(b[j]) && ctx_->odd(b[k])) s = -s;
                    for (auto [c, coef] : bracket_(a[i], b[j])) {
                        Word w;
                        for (size_t k = 0; k < a.size(); ++k)
                            if (k != i) w.push_back(a[k]);
                        w.push_back(c);
                        for (size_t k = 0; k < b.size(); ++k)
                            if (k != j) w.push_back(b[k]);
                        Mono m;
                        int sgn2;
                        if (!word_to_mono(*ctx_, w, m, sgn2)) continue;
                        out.add(m, kf.second + kg.second + 1, cf * cg * coef * s * sgn2);
                    }
                }
        }
    return out;
}

} // namespace wheelhouse
