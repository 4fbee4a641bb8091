#include "wheelhouse/enumerate.hpp"
#include "wheelhouse/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace wheelhouse {

bool degree_bounds_arity(const Preset& preset) {
    switch (preset.kind) {
        case PresetKind::Defq:
        case PresetKind::DefqHbar:
            return false;
        default:
            return true;
    }
}

namespace {

struct BlockRef {
    int vertex;
    int offset;
    int size;
};

void collect_blocks(const GenTable& T, const std::vector<int>& multiset,
                    std::vector<BlockRef>& ob, std::vector<BlockRef>& ib) {
    for (int v = 0; v < (int)multiset.size(); ++v) {
        const auto& sym = T.at(multiset[v]).symmetry;
        for (const auto& b : sym.out_blocks) ob.push_back({v, b.offset, b.size});
        for (const auto& b : sym.in_blocks) ib.push_back({v, b.offset, b.size});
    }
}

} // namespace

void enumerate_decorated(const GenTable& T, const std::vector<int>& multiset, int m, int n,
                         WheelMode mode, std::map<std::string, DecoratedGraph>& found) {
    int sm = 0, sn = 0;
    for (int g : multiset) {
        sm += T.at(g).m;
        sn += T.at(g).n;
    }
    int E = sm - m;
    if (E < 0 || sn - n != E) return;

    std::vector<BlockRef> ob, ib;
    collect_blocks(T, multiset, ob, ib);
    std::vector<int> ofree(ob.size()), ifree(ib.size());
    for (size_t i = 0; i < ob.size(); ++i) ofree[i] = ob[i].size;
    for (size_t i = 0; i < ib.size(); ++i) ifree[i] = ib[i].size;

    std::vector<int> out_leg_block(m), in_leg_block(n);
    std::vector<std::vector<int>> M(ob.size(), std::vector<int>(ib.size(), 0));

    std::function<void()> realize = [&]() {
        DecoratedGraph g;
        g.table = &T;
        for (int gi : multiset) g.vertices.push_back({gi});
        g.outputs.resize(m);
        g.inputs.resize(n);
        std::vector<int> onext(ob.size()), inext(ib.size());
        for (size_t i = 0; i < ob.size(); ++i) onext[i] = ob[i].offset;
        for (size_t i = 0; i < ib.size(); ++i) inext[i] = ib[i].offset;
        for (int L = 0; L < m; ++L) {
            int b = out_leg_block[L];
            g.outputs[L] = {ob[b].vertex, onext[b]++};
        }
        for (int L = 0; L < n; ++L) {
            int b = in_leg_block[L];
            g.inputs[L] = {ib[b].vertex, inext[b]++};
        }
        for (size_t r = 0; r < ob.size(); ++r)
            for (size_t c = 0; c < ib.size(); ++c)
                for (int t = 0; t < M[r][c]; ++t)
                    g.edges.push_back({ob[r].vertex, onext[r]++, ib[c].vertex, inext[c]++, false});

        if (mode == WheelMode::Marked) {
            auto ws = g.wheels();
            if (ws.empty()) {
                if (g.satisfies(mode)) {
                    auto cr = canonicalize(g);
                    if (!cr.zero) found.emplace(encode_key(cr.graph), cr.graph);
                }
                return;
            }
            std::vector<size_t> pick(ws.size(), 0);
            std::function<void(size_t)> mk = [&](size_t wi) {
                if (wi == ws.size()) {
                    DecoratedGraph h = g;
                    for (size_t w2 = 0; w2 < ws.size(); ++w2)
                        h.edges[ws[w2][pick[w2]]].mark = true;
                    if (h.satisfies(mode)) {
                        auto cr = canonicalize(h);
                        if (!cr.zero) found.emplace(encode_key(cr.graph), cr.graph);
                    }
                    return;
                }
                for (pick[wi] = 0; pick[wi] < ws[wi].size(); ++pick[wi]) mk(wi + 1);
            };
            mk(0);
            return;
        }

        if (!g.satisfies(mode)) return;
        auto cr = canonicalize(g);
        if (!cr.zero) found.emplace(encode_key(cr.graph), cr.graph);
    };

    std::function<void(size_t, size_t)> fill_matrix = [&](size_t r, size_t c) {
        if (r == ob.size()) {
            for (size_t i = 0; i < ib.size(); ++i)
                if (ifree[i]) return;
            realize();
            return;
        }
        if (c == ib.size()) {
            if (ofree[r]) return;
            fill_matrix(r + 1, 0);
            return;
        }
        int hi = std::min(ofree[r], ifree[c]);
        for (int t = 0; t <= hi; ++t) {
            M[r][c] = t;
            ofree[r] -= t;
            ifree[c] -= t;
            fill_matrix(r, c + 1);
            ofree[r] += t;
            ifree[c] += t;
        }
        M[r][c] = 0;
    };

    std::function<void(int)> place_in_legs = [&](int L) {
        if (L == n) {
            fill_matrix(0, 0);
            return;
        }
        for (size_t b = 0; b < ib.size(); ++b) {
            if (!ifree[b]) continue;
            ifree[b]--;
            in_leg_block[L] = (int)b;
            place_in_legs(L + 1);
            ifree[b]++;
        }
    };
    std::function<void(int)> place_out_legs = [&](int L) {
        if (L == m) {
            place_in_legs(0);
            return;
        }
        for (size_t b = 0; b < ob.size(); ++b) {
            if (!ofree[b]) continue;
            ofree[b]--;
            out_leg_block[L] = (int)b;
            place_out_legs(L + 1);
            ofree[b]++;
        }
    };
    place_out_legs(0);
}

std::vector<DecoratedGraph> enumerate_basis(const Preset& P, int m, int n,
                                            int max_vertices, WheelMode mode,
                                            const EnumOptions& opt) {
    int cap = opt.max_arity > 0 ? opt.max_arity : m + n + max_vertices + 1;
    std::vector<int> gens = P.instantiate_up_to(cap, opt.hbar_cap);

    std::map<std::string, DecoratedGraph> found;

    int v_lo = opt.exact_vertices ? max_vertices : 1;
    for (int V = v_lo; V <= max_vertices; ++V) {
        std::vector<int> multiset;
        std::function<void(size_t)> choose = [&](size_t from) {
            if ((int)multiset.size() == V) {
                int sm = 0, sn = 0, sd = 0;
                for (int g : multiset) {
                    sm += P.table().at(g).m;
                    sn += P.table().at(g).n;
                    sd += P.table().at(g).degree;
                }
                int E = sm - m;
                if (E < 0 || sn - n != E) return;
                if (opt.max_edges >= 0 && E > opt.max_edges) return;
                if (opt.degree && sd != *opt.degree) return;
                enumerate_decorated(P.table(), multiset, m, n, mode, found);
                return;
            }
            for (size_t i = from; i < gens.size(); ++i) {
                multiset.push_back(gens[i]);
                choose(i);
                multiset.pop_back();
            }
        };
        choose(0);
    }

    std::vector<DecoratedGraph> out;
    out.reserve(found.size());
    for (auto& [k, g] : found) out.push_back(std::move(g));
    return out;
}

} // namespace wheelhouse
