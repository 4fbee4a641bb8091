#include "wheelhouse/symmetry.hpp"

#include <map>
#include <stdexcept>

namespace wheelhouse {

static void check_cover(const std::vector<SlotBlock>& blocks, int count, const char* what) {
    int at = 0;
    for (const auto& b : blocks) {
        if (b.offset != at || b.size < 1)
            throw std::invalid_argument(std::string("symmetry blocks must tile the ") + what + " slots");
        at += b.size;
    }
    if (at != count)
        throw std::invalid_argument(std::string("symmetry blocks must cover all ") + what + " slots");
}

SymmetryDatum SymmetryDatum::blocks(int m, int n,
                                    std::vector<SlotBlock> ob,
                                    std::vector<SlotBlock> ib) {
    check_cover(ob, m, "output");
    check_cover(ib, n, "input");
    SymmetryDatum d;
    d.m = m;
    d.n = n;
    d.block_kind = true;
    d.out_blocks = std::move(ob);
    d.in_blocks = std::move(ib);
    // Record adjacent transpositions as the spec-level generator list.
    auto add_gens = [&](const std::vector<SlotBlock>& bl, bool on_out) {
        for (const auto& b : bl)
            for (int k = 0; k + 1 < b.size; ++k) {
                SymElem e{identity_perm(m), identity_perm(n), b.skew ? -1 : 1};
                Perm& p = on_out ? e.out : e.in;
                std::swap(p[b.offset + k], p[b.offset + k + 1]);
                d.generators.push_back(std::move(e));
            }
    };
    add_gens(d.out_blocks, true);
    add_gens(d.in_blocks, false);
    return d;
}

SymmetryDatum SymmetryDatum::simple(int m, int n, bool out_skew, bool in_skew) {
    std::vector<SlotBlock> ob, ib;
    if (m > 0) ob.push_back({0, m, out_skew});
    if (n > 0) ib.push_back({0, n, in_skew});
    return blocks(m, n, std::move(ob), std::move(ib));
}

SymmetryDatum SymmetryDatum::planar(int m, int n) {
    std::vector<SlotBlock> ob, ib;
    for (int i = 0; i < m; ++i) ob.push_back({i, 1, false});
    for (int i = 0; i < n; ++i) ib.push_back({i, 1, false});
    return blocks(m, n, std::move(ob), std::move(ib));
}

SymmetryDatum SymmetryDatum::from_generators(int m, int n, std::vector<SymElem> gens) {
    SymmetryDatum d;
    d.m = m;
    d.n = n;
    d.block_kind = false;
    // Generic slots: every slot its own block (used for key construction).
    for (int i = 0; i < m; ++i) d.out_blocks.push_back({i, 1, false});
    for (int i = 0; i < n; ++i) d.in_blocks.push_back({i, 1, false});
    d.generators = gens;

    // Orbit closure with character-consistency verification.
    std::map<std::pair<Perm, Perm>, int> seen;
    std::vector<SymElem> frontier;
    SymElem id{identity_perm(m), identity_perm(n), 1};
    seen[{id.out, id.in}] = 1;
    frontier.push_back(id);
    while (!frontier.empty()) {
        SymElem cur = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            SymElem nxt{compose(g.out, cur.out), compose(g.in, cur.in), g.sign * cur.sign};
            auto key = std::make_pair(nxt.out, nxt.in);
            auto it = seen.find(key);
            if (it == seen.end()) {
                seen.emplace(key, nxt.sign);
                frontier.push_back(nxt);
                if (seen.size() > 100000)
                    throw std::runtime_error("symmetry group closure too large");
            } else if (it->second != nxt.sign) {
                throw std::invalid_argument("signs do not form a character of the leg-symmetry group");
            }
        }
    }
    for (auto& [key, sign] : seen)
        d.elements.push_back({key.first, key.second, sign});
    return d;
}

int SymmetryDatum::out_block_of(int slot) const {
    for (size_t i = 0; i < out_blocks.size(); ++i)
        if (slot >= out_blocks[i].offset && slot < out_blocks[i].offset + out_blocks[i].size)
            return (int)i;
    throw std::out_of_range("output slot out of range");
}

int SymmetryDatum::in_block_of(int slot) const {
    for (size_t i = 0; i < in_blocks.size(); ++i)
        if (slot >= in_blocks[i].offset && slot < in_blocks[i].offset + in_blocks[i].size)
            return (int)i;
    throw std::out_of_range("input slot out of range");
}

size_t SymmetryDatum::group_order() const {
    if (!block_kind) return elements.size();
    size_t order = 1;
    auto fact = [](int k) { size_t f = 1; for (int i = 2; i <= k; ++i) f *= i; return f; };
    for (const auto& b : out_blocks) order *= fact(b.size);
    for (const auto& b : in_blocks) order *= fact(b.size);
    return order;
}

} // namespace wheelhouse
