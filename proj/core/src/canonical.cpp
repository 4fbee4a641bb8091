#include "wheelhouse/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <functional>
#include <map>
#include <stdexcept>

namespace wheelhouse {

std::vector<int> encode(const DecoratedGraph& g) {
    std::vector<int> out;
    out.reserve(8 + 5 * g.edges.size() + 2 * (g.inputs.size() + g.outputs.size()) + g.vertices.size());
    out.push_back(g.num_vertices());
    out.push_back(g.num_outputs());
    out.push_back(g.num_inputs());
    for (const auto& v : g.vertices) out.push_back(v.gen);
    std::vector<GEdge> es = g.edges;
    std::sort(es.begin(), es.end());
    out.push_back((int)es.size());
    for (const auto& e : es) {
        out.push_back(e.sv);
        out.push_back(e.ss);
        out.push_back(e.tv);
        out.push_back(e.ts);
        out.push_back(e.mark ? 1 : 0);
    }
    for (auto [v, s] : g.outputs) {
        out.push_back(v);
        out.push_back(s);
    }
    for (auto [v, s] : g.inputs) {
        out.push_back(v);
        out.push_back(s);
    }
    return out;
}

std::string encode_key(const DecoratedGraph& g) {
    auto e = encode(g);
    std::string s(e.size() * sizeof(int), '\0');
    std::memcpy(s.data(), e.data(), s.size());
    return s;
}

namespace {

// A connection descriptor used to sort slots inside a symmetric block.
// Fields: kind (0 = edge, 1 = leg), a, b, c, tiebreak.
struct ConnKey {
    std::array<int, 4> k{};
    int tiebreak = 0;
    bool same(const ConnKey& o) const { return k == o.k; }
    bool operator<(const ConnKey& o) const {
        if (k != o.k) return k < o.k;
        return tiebreak < o.tiebreak;
    }
};

struct Workspace {
    const DecoratedGraph* g = nullptr;
    std::vector<int> rank;                    // old vertex -> new position
    std::vector<const SymElem*> elem;         // per old vertex (generic), or null
    std::vector<std::vector<int>> out_slot;   // old vertex, old slot -> new slot
    std::vector<std::vector<int>> in_slot;
    // edge -> slot of endpoints after generic elements (pre block-normalization)
};

} // namespace

CanonResult canonicalize(const DecoratedGraph& g) {
    g.validate();
    const GenTable& table = *g.table;
    const int V = g.num_vertices();
    const int E = (int)g.edges.size();

    // Vertex colors; candidate orders keep colors ascending.
    std::vector<int> verts(V);
    for (int i = 0; i < V; ++i) verts[i] = i;
    std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) {
        return g.vertices[a].gen < g.vertices[b].gen;
    });

    std::vector<int> degs(V);
    for (int i = 0; i < V; ++i) degs[i] = table.at(g.vertices[i].gen).degree;

    // Group boundaries of equal colors in `verts`.
    std::vector<std::pair<int, int>> groups;
    for (int i = 0; i < V;) {
        int j = i;
        while (j < V && g.vertices[verts[j]].gen == g.vertices[verts[i]].gen) ++j;
        groups.emplace_back(i, j);
        i = j;
    }

    // Generic-kind vertices get an element loop.
    std::vector<int> generic_vertices;
    for (int v = 0; v < V; ++v)
        if (!table.at(g.vertices[v].gen).symmetry.block_kind) generic_vertices.push_back(v);

    bool have_best = false;
    std::vector<int> best_enc;
    int best_sign = 1;
    DecoratedGraph best_graph;
    bool zero = false;

    std::vector<int> order = verts; // order[newpos] = old vertex

    auto consider = [&](const std::vector<const SymElem*>& elem_of) {
        // order and elem_of fixed; normalize blocks, build encoding.
        std::vector<int> rank(V);
        for (int p = 0; p < V; ++p) rank[order[p]] = p;

        int sign = 1;
        // Koszul reorder sign: decoration at old index i moves to rank[i].
        sign *= koszul_sign(rank, degs);
        for (int v : generic_vertices)
            if (elem_of[v]) sign *= elem_of[v]->sign;

        // Slot maps.  Generic vertices: the chosen element.  Block vertices:
        // start unresolved (-1) and fill by block sorting.
        std::vector<std::vector<int>> out_slot(V), in_slot(V);
        for (int v = 0; v < V; ++v) {
            const auto& spec = table.at(g.vertices[v].gen);
            out_slot[v].assign(spec.m, -1);
            in_slot[v].assign(spec.n, -1);
            if (!spec.symmetry.block_kind) {
                const SymElem* el = elem_of[v];
                for (int s = 0; s < spec.m; ++s) out_slot[v][s] = el->out[s];
                for (int s = 0; s < spec.n; ++s) in_slot[v][s] = el->in[s];
            }
        }

        // Connection lookup per (vertex, slot).
        std::vector<std::vector<int>> out_conn(V), in_conn(V); // edge idx or ~leg label index
        for (int v = 0; v < V; ++v) {
            const auto& spec = table.at(g.vertices[v].gen);
            out_conn[v].assign(spec.m, -1);
            in_conn[v].assign(spec.n, -1);
        }
        for (int e = 0; e < E; ++e) {
            out_conn[g.edges[e].sv][g.edges[e].ss] = e;
            in_conn[g.edges[e].tv][g.edges[e].ts] = e;
        }
        for (int L = 0; L < g.num_outputs(); ++L) out_conn[g.outputs[L].first][g.outputs[L].second] = E + L;
        for (int L = 0; L < g.num_inputs(); ++L) in_conn[g.inputs[L].first][g.inputs[L].second] = E + L;

        // Key of the far end of an edge, as seen from the out side / in side.
        auto in_end_key = [&](int e) -> std::array<int, 4> {
            const GEdge& ed = g.edges[e];
            const auto& sym = table.at(g.vertices[ed.tv].gen).symmetry;
            int tk = sym.block_kind ? sym.in_block_of(ed.ts) : in_slot[ed.tv][ed.ts];
            int exact = sym.block_kind ? 0 : 1; // generic slots are exact already
            return {0, rank[ed.tv], tk * 2 + exact, ed.mark ? 1 : 0};
        };
        auto out_end_key = [&](int e) -> std::array<int, 4> {
            const GEdge& ed = g.edges[e];
            const auto& sym = table.at(g.vertices[ed.sv].gen).symmetry;
            int sk = sym.block_kind ? sym.out_block_of(ed.ss) : out_slot[ed.sv][ed.ss];
            int exact = sym.block_kind ? 0 : 1;
            return {0, rank[ed.sv], sk * 2 + exact, ed.mark ? 1 : 0};
        };

        // Normalize one block of one vertex; returns false when the graph is
        // zero by an odd parallel-bundle automorphism.
        auto normalize_block = [&](int v, const SlotBlock& blk, bool is_out) -> bool {
            std::vector<ConnKey> keys(blk.size);
            for (int r = 0; r < blk.size; ++r) {
                int s = blk.offset + r;
                int c = is_out ? out_conn[v][s] : in_conn[v][s];
                ConnKey ck;
                if (c >= E) {
                    ck.k = {1, c - E, 0, 0};
                    ck.tiebreak = c;
                } else {
                    ck.k = is_out ? in_end_key(c) : out_end_key(c);
                    ck.tiebreak = c;
                }
                keys[r] = ck;
            }
            // Detect odd bundles: equal keys must pair skew vs skew.
            if (blk.size > 1) {
                std::vector<ConnKey> sorted = keys;
                std::sort(sorted.begin(), sorted.end());
                for (size_t i = 0; i + 1 < sorted.size(); ++i) {
                    if (!sorted[i].same(sorted[i + 1])) continue;
                    // Parallel connections; both are edges into one block of
                    // one vertex.  Exchanging the pair is an automorphism of
                    // sign char(here) * char(there).
                    int e = sorted[i].tiebreak;
                    const GEdge& ed = g.edges[e];
                    bool here_skew = blk.skew;
                    const auto& osym = table.at(g.vertices[is_out ? ed.tv : ed.sv].gen).symmetry;
                    bool there_skew;
                    if (is_out)
                        there_skew = osym.in_blocks[osym.in_block_of(ed.ts)].skew;
                    else
                        there_skew = osym.out_blocks[osym.out_block_of(ed.ss)].skew;
                    if (here_skew != there_skew) return false; // odd automorphism
                    if (here_skew && there_skew) {
                        // even; fine
                    }
                    if (!here_skew && !there_skew) {
                        // even; fine
                    }
                }
            }
            // Sort and assign slots; accumulate the sign on skew blocks.
            std::vector<int> idx(blk.size);
            for (int r = 0; r < blk.size; ++r) idx[r] = r;
            std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
            if (blk.skew) {
                // Sign of the permutation r -> position of r in idx.
                Perm p(blk.size);
                for (int pos = 0; pos < blk.size; ++pos) p[idx[pos]] = pos;
                sign *= perm_sign(p);
            }
            for (int pos = 0; pos < blk.size; ++pos) {
                int s = blk.offset + idx[pos];
                if (is_out)
                    out_slot[v][s] = blk.offset + pos;
                else
                    in_slot[v][s] = blk.offset + pos;
            }
            return true;
        };

        for (int v = 0; v < V; ++v) {
            const auto& sym = table.at(g.vertices[v].gen).symmetry;
            if (!sym.block_kind) continue;
            for (const auto& blk : sym.out_blocks)
                if (!normalize_block(v, blk, true)) { zero = true; return; }
            for (const auto& blk : sym.in_blocks)
                if (!normalize_block(v, blk, false)) { zero = true; return; }
        }

        // Build the relabeled graph.
        DecoratedGraph h;
        h.table = g.table;
        h.vertices.resize(V);
        for (int p = 0; p < V; ++p) h.vertices[p] = g.vertices[order[p]];
        h.edges.reserve(E);
        for (const auto& e : g.edges)
            h.edges.push_back({rank[e.sv], out_slot[e.sv][e.ss], rank[e.tv], in_slot[e.tv][e.ts], e.mark});
        std::sort(h.edges.begin(), h.edges.end());
        for (auto [v, s] : g.outputs) h.outputs.emplace_back(rank[v], out_slot[v][s]);
        for (auto [v, s] : g.inputs) h.inputs.emplace_back(rank[v], in_slot[v][s]);

        auto enc = encode(h);
        if (!have_best || enc < best_enc) {
            have_best = true;
            best_enc = std::move(enc);
            best_sign = sign;
            best_graph = std::move(h);
        } else if (enc == best_enc && sign != best_sign) {
            zero = true;
        }
    };

    // Iterate vertex orders (permutations within color groups) and, inside,
    // the product of generic symmetry elements.
    std::vector<const SymElem*> elem_of(V, nullptr);
    std::function<void(size_t)> elem_loop = [&](size_t gi) {
        if (zero) return;
        if (gi == generic_vertices.size()) {
            consider(elem_of);
            return;
        }
        int v = generic_vertices[gi];
        for (const auto& el : table.at(g.vertices[v].gen).symmetry.elements) {
            elem_of[v] = &el;
            elem_loop(gi + 1);
            if (zero) return;
        }
    };

    std::function<void(size_t)> order_loop = [&](size_t gidx) {
        if (zero) return;
        if (gidx == groups.size()) {
            elem_loop(0);
            return;
        }
        auto [lo, hi] = groups[gidx];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            order_loop(gidx + 1);
            if (zero) return;
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    order_loop(0);

    CanonResult r;
    if (zero) {
        r.zero = true;
        return r;
    }
    r.graph = best_graph;
    r.sign = best_sign;
    return r;
}

} // namespace wheelhouse
