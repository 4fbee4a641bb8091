#include "wheelhouse/eval.hpp"
#include "wheelhouse/preset.hpp"
#include "wheelhouse/canonical.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace wheelhouse {

Tensor::Tensor(int dim, int m, int n) : dim(dim), m(m), n(n) {
    size_t total = 1;
    for (int i = 0; i < m + n; ++i) total *= dim;
    entries.assign(total, Rat(0));
}

size_t Tensor::index(const std::vector<int>& idx) const {
    if ((int)idx.size() != m + n) throw std::invalid_argument("tensor index arity");
    size_t at = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim) throw std::out_of_range("tensor index");
        at = at * dim + i;
    }
    return at;
}

Rat& Tensor::at(const std::vector<int>& idx) { return entries[index(idx)]; }
const Rat& Tensor::at(const std::vector<int>& idx) const { return entries[index(idx)]; }

bool Tensor::operator==(const Tensor& o) const {
    return dim == o.dim && m == o.m && n == o.n && entries == o.entries;
}

namespace {

// Apply a symmetry element to a tensor: T^g with indices permuted.
Tensor act(const Tensor& t, const SymElem& e) {
    Tensor r(t.dim, t.m, t.n);
    std::vector<int> idx(t.m + t.n, 0), src(t.m + t.n, 0);
    size_t total = t.entries.size();
    for (size_t flat = 0; flat < total; ++flat) {
        size_t rest = flat;
        for (int i = t.m + t.n - 1; i >= 0; --i) {
            idx[i] = (int)(rest % t.dim);
            rest /= t.dim;
        }
        // the element relabels slots: source slot s maps to e.out[s]
        for (int s = 0; s < t.m; ++s) src[s] = idx[e.out[s]];
        for (int s = 0; s < t.n; ++s) src[t.m + s] = idx[t.m + e.in[s]];
        r.entries[flat] += Rat(e.sign) * t.at(src);
    }
    return r;
}

std::vector<SymElem> group_elements(const SymmetryDatum& sym) {
    if (!sym.block_kind) return sym.elements;
    // expand block products
    std::vector<SymElem> elems;
    elems.push_back({identity_perm(sym.m), identity_perm(sym.n), 1});
    auto expand = [&](const SlotBlock& blk, bool is_out) {
        std::vector<SymElem> next;
        std::vector<int> perm(blk.size);
        for (int i = 0; i < blk.size; ++i) perm[i] = i;
        do {
            Perm local(perm.begin(), perm.end());
            int sgn = blk.skew ? perm_sign(local) : 1;
            for (const auto& base : elems) {
                SymElem e = base;
                Perm& p = is_out ? e.out : e.in;
                Perm q = p;
                for (int i = 0; i < blk.size; ++i) q[blk.offset + i] = p[blk.offset + local[i]];
                p = std::move(q);
                e.sign *= sgn;
                next.push_back(std::move(e));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        elems = std::move(next);
    };
    for (const auto& b : sym.out_blocks) expand(b, true);
    for (const auto& b : sym.in_blocks) expand(b, false);
    return elems;
}

} // namespace

void RepAssignment::assign(int gen_index, Tensor t) {
    const GeneratorSpec& spec = table_->at(gen_index);
    if (t.m != spec.m || t.n != spec.n || t.dim != dim_)
        throw std::invalid_argument("assignment shape mismatch for " + spec.id);
    auto elems = group_elements(spec.symmetry);
    Tensor proj(dim_, t.m, t.n);
    for (const auto& e : elems) {
        Tensor a = act(t, e);
        for (size_t i = 0; i < proj.entries.size(); ++i) proj.entries[i] += a.entries[i];
    }
    Rat inv = Rat(1) / Rat((long)elems.size());
    for (auto& v : proj.entries) v *= inv;
    tensors_[gen_index] = std::move(proj);
}

const Tensor& RepAssignment::tensor(int gen_index) const {
    auto it = tensors_.find(gen_index);
    if (it == tensors_.end())
        throw std::invalid_argument("no tensor assigned to " + table_->at(gen_index).id);
    return it->second;
}

bool RepAssignment::invariant(int gen_index) const {
    const Tensor& t = tensor(gen_index);
    for (const auto& e : group_elements(table_->at(gen_index).symmetry))
        if (!(act(t, e) == t)) return false;
    return true;
}

Tensor evaluate(const DecoratedGraph& g, const RepAssignment& rep,
                const std::map<int, Tensor>* overrides, bool reverse_schedule) {
    g.validate();
    int dim = rep.dim();
    // Index variables: one per edge, one per leg.
    int E = (int)g.edges.size();
    int nv = E + g.num_outputs() + g.num_inputs();
    auto var_of_out = [&](int v, int s) -> int {
        for (int e = 0; e < E; ++e)
            if (g.edges[e].sv == v && g.edges[e].ss == s) return e;
        for (int L = 0; L < g.num_outputs(); ++L)
            if (g.outputs[L] == std::make_pair(v, s)) return E + L;
        throw std::logic_error("unconnected output slot");
    };
    auto var_of_in = [&](int v, int s) -> int {
        for (int e = 0; e < E; ++e)
            if (g.edges[e].tv == v && g.edges[e].ts == s) return e;
        for (int L = 0; L < g.num_inputs(); ++L)
            if (g.inputs[L] == std::make_pair(v, s)) return E + g.num_outputs() + L;
        throw std::logic_error("unconnected input slot");
    };

    // Factor list: per vertex, its tensor and the variables of its slots.
    struct Factor {
        const Tensor* t;
        std::vector<int> vars; // outputs then inputs
    };
    std::vector<Factor> factors;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const GeneratorSpec& spec = g.gen(v);
        Factor f;
        if (overrides && overrides->count(v))
            f.t = &overrides->at(v);
        else
            f.t = &rep.tensor(g.vertices[v].gen);
        for (int s = 0; s < spec.m; ++s) f.vars.push_back(var_of_out(v, s));
        for (int s = 0; s < spec.n; ++s) f.vars.push_back(var_of_in(v, s));
        factors.push_back(std::move(f));
    }
    if (reverse_schedule) std::reverse(factors.begin(), factors.end());

    // Free variables in output order: outputs by label, then inputs.
    std::vector<int> free_vars;
    for (int L = 0; L < g.num_outputs(); ++L) free_vars.push_back(E + L);
    for (int L = 0; L < g.num_inputs(); ++L) free_vars.push_back(E + g.num_outputs() + L);

    Tensor result(dim, g.num_outputs(), g.num_inputs());
    std::vector<int> assign(nv, -1);
    std::function<void(size_t, Rat)> walk = [&](size_t fi, Rat coeff) {
        if (coeff == 0) return;
        if (fi == factors.size()) {
            std::vector<int> out_idx;
            for (int v : free_vars) out_idx.push_back(assign[v] < 0 ? 0 : assign[v]);
            // all free vars are bound once every factor is consumed
            result.at(out_idx) += coeff;
            return;
        }
        const Factor& f = factors[fi];
        std::vector<int> unbound;
        for (int v : f.vars)
            if (assign[v] < 0) unbound.push_back(v);
        std::sort(unbound.begin(), unbound.end());
        unbound.erase(std::unique(unbound.begin(), unbound.end()), unbound.end());
        std::vector<int> idx(f.vars.size());
        std::function<void(size_t)> enumerate = [&](size_t ui) {
            if (ui == unbound.size()) {
                for (size_t i = 0; i < f.vars.size(); ++i) idx[i] = assign[f.vars[i]];
                walk(fi + 1, coeff * f.t->at(idx));
                return;
            }
            for (int val = 0; val < dim; ++val) {
                assign[unbound[ui]] = val;
                enumerate(ui + 1);
            }
            assign[unbound[ui]] = -1;
        };
        enumerate(0);
    };
    walk(0, Rat(1));
    return result;
}

bool collapse_axiom_holds(const DecoratedGraph& g, const RepAssignment& rep,
                          const std::vector<int>& H) {
    const GenTable& T = *g.table;
    std::set<int> hset(H.begin(), H.end());
    // connected components of H under g's edges
    std::map<int, int> comp;
    int ncomp = 0;
    for (int v : H) {
        if (comp.count(v)) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& e : g.edges) {
                int w = -1;
                if (e.sv == u && hset.count(e.tv)) w = e.tv;
                if (e.tv == u && hset.count(e.sv)) w = e.sv;
                if (w >= 0 && !comp.count(w)) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }

    // boundary slots of each component, in (vertex, slot) order
    struct Boundary {
        std::vector<std::pair<int, int>> outs, ins;
    };
    std::vector<Boundary> bd(ncomp);
    auto internal = [&](const GEdge& e) {
        return hset.count(e.sv) && hset.count(e.tv) && comp[e.sv] == comp[e.tv];
    };
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!hset.count(v)) continue;
        const GeneratorSpec& spec = g.gen(v);
        for (int s = 0; s < spec.m; ++s) {
            bool keep = true;
            for (const auto& e : g.edges)
                if (e.sv == v && e.ss == s && internal(e)) keep = false;
            if (keep) bd[comp[v]].outs.emplace_back(v, s);
        }
        for (int s = 0; s < spec.n; ++s) {
            bool keep = true;
            for (const auto& e : g.edges)
                if (e.tv == v && e.ts == s && internal(e)) keep = false;
            if (keep) bd[comp[v]].ins.emplace_back(v, s);
        }
    }

    // evaluate each component with its boundary as legs
    std::vector<Tensor> collapsed(ncomp);
    for (int c = 0; c < ncomp; ++c) {
        DecoratedGraph h;
        h.table = &T;
        std::map<int, int> vmap;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (hset.count(v) && comp[v] == c) {
                vmap[v] = (int)h.vertices.size();
                h.vertices.push_back(g.vertices[v]);
            }
        for (const auto& e : g.edges)
            if (internal(e) && comp[e.sv] == c)
                h.edges.push_back({vmap[e.sv], e.ss, vmap[e.tv], e.ts, false});
        for (auto [v, s] : bd[c].outs) h.outputs.emplace_back(vmap[v], s);
        for (auto [v, s] : bd[c].ins) h.inputs.emplace_back(vmap[v], s);
        collapsed[c] = evaluate(h, rep);
    }

    // build G/H with one placeholder vertex per component
    DecoratedGraph q;
    q.table = &T;
    std::map<int, int> vmap;           // old vertex -> new index (non-H)
    std::vector<int> comp_vertex(ncomp);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!hset.count(v)) {
            vmap[v] = (int)q.vertices.size();
            q.vertices.push_back(g.vertices[v]);
        }
    std::map<int, Tensor> overrides;
    for (int c = 0; c < ncomp; ++c) {
        GeneratorSpec ph;
        ph.m = (int)bd[c].outs.size();
        ph.n = (int)bd[c].ins.size();
        ph.id = "!collapse" + std::to_string(ph.m) + "_" + std::to_string(ph.n);
        ph.symmetry = SymmetryDatum::planar(ph.m, ph.n);
        int gi = T.intern(ph);
        comp_vertex[c] = (int)q.vertices.size();
        overrides[comp_vertex[c]] = collapsed[c];
        q.vertices.push_back({gi});
    }
    auto map_out = [&](int v, int s) -> std::pair<int, int> {
        if (!hset.count(v)) return {vmap[v], s};
        int c = comp[v];
        for (size_t i = 0; i < bd[c].outs.size(); ++i)
            if (bd[c].outs[i] == std::make_pair(v, s)) return {comp_vertex[c], (int)i};
        throw std::logic_error("collapse: missing boundary output");
    };
    auto map_in = [&](int v, int s) -> std::pair<int, int> {
        if (!hset.count(v)) return {vmap[v], s};
        int c = comp[v];
        for (size_t i = 0; i < bd[c].ins.size(); ++i)
            if (bd[c].ins[i] == std::make_pair(v, s)) return {comp_vertex[c], (int)i};
        throw std::logic_error("collapse: missing boundary input");
    };
    for (const auto& e : g.edges) {
        if (internal(e)) continue;
        auto [sv, ss] = map_out(e.sv, e.ss);
        auto [tv, ts] = map_in(e.tv, e.ts);
        q.edges.push_back({sv, ss, tv, ts, false});
    }
    for (auto [v, s] : g.outputs) q.outputs.push_back(map_out(v, s));
    for (auto [v, s] : g.inputs) q.inputs.push_back(map_in(v, s));

    Tensor direct = evaluate(g, rep);
    Tensor via = evaluate(q, rep, &overrides);
    return direct == via;
}

AxiomReport check_wheeled_axioms(const Preset& preset, const RepAssignment& rep, int trials,
                                 unsigned seed) {
    AxiomReport rep_out;
    std::mt19937 rng(seed);
    std::vector<int> gens = preset.instantiate_up_to(4);
    auto rnd = [&](int lo, int hi) { return lo + (int)(rng() % (unsigned)(hi - lo + 1)); };

    for (int trial = 0; trial < trials; ++trial) {
        // random small graph: 2..4 vertices, random matching with loops allowed
        int V = rnd(2, 4);
        DecoratedGraph g;
        g.table = &preset.table();
        std::vector<std::pair<int, int>> open_out, open_in;
        for (int v = 0; v < V; ++v) {
            int gi = gens[rng() % gens.size()];
            g.vertices.push_back({gi});
            for (int s = 0; s < preset.table().at(gi).m; ++s) open_out.emplace_back(v, s);
            for (int s = 0; s < preset.table().at(gi).n; ++s) open_in.emplace_back(v, s);
        }
        std::shuffle(open_out.begin(), open_out.end(), rng);
        std::shuffle(open_in.begin(), open_in.end(), rng);
        size_t edges = std::min(open_out.size(), open_in.size());
        edges = rng() % (edges + 1);
        for (size_t e = 0; e < edges; ++e)
            g.edges.push_back({open_out[e].first, open_out[e].second, open_in[e].first,
                               open_in[e].second, false});
        for (size_t i = edges; i < open_out.size(); ++i) g.outputs.push_back(open_out[i]);
        for (size_t i = edges; i < open_in.size(); ++i) g.inputs.push_back(open_in[i]);

        // random subgraph H: a nonempty vertex subset (collapse components)
        std::vector<int> H;
        for (int v = 0; v < V; ++v)
            if (rng() % 2) H.push_back(v);
        if (H.empty()) H.push_back(rnd(0, V - 1));

        ++rep_out.trials;
        if (!collapse_axiom_holds(g, rep, H)) {
            ++rep_out.failures;
            rep_out.witnesses.push_back(encode_key(g));
        }
    }
    return rep_out;
}

} // namespace wheelhouse
