#include "wheelhouse/cyclic.hpp"
#include "wheelhouse/enumerate.hpp"

#include <functional>

#include <set>
#include <stdexcept>

namespace wheelhouse {

namespace {

// The unique wheel of a single-wheel graph, as an edge sequence.
std::vector<int> the_wheel(const DecoratedGraph& g) {
    auto ws = g.wheels();
    if (ws.size() != 1) throw std::invalid_argument("not a single-wheel graph");
    return ws[0];
}

DecoratedGraph move_mark(const DecoratedGraph& g) {
    auto cyc = the_wheel(g);
    int at = -1;
    for (size_t i = 0; i < cyc.size(); ++i)
        if (g.edges[cyc[i]].mark) at = (int)i;
    if (at < 0) throw std::invalid_argument("unmarked input to t");
    DecoratedGraph h = g;
    h.edges[cyc[at]].mark = false;
    h.edges[cyc[(at + 1) % cyc.size()]].mark = true;
    return h;
}

} // namespace

bool in_marked_single_wheel_space(const DecoratedGraph& g) {
    auto ws = g.wheels();
    if (ws.size() != 1) return false;
    int marks = 0;
    for (const auto& e : g.edges) marks += e.mark ? 1 : 0;
    if (marks != 1) return false;
    for (int e : ws[0])
        if (g.edges[e].mark) return true;
    return false;
}

GraphSum op_t(const GraphSum& x) {
    GraphSum out;
    for (const auto& [k, t] : x.terms()) out.add(move_mark(t.graph), t.coeff);
    return out;
}

GraphSum op_N(const GraphSum& x, bool paper_upper_limit) {
    GraphSum out;
    for (const auto& [k, t] : x.terms()) {
        DecoratedGraph cur = t.graph;
        int len = (int)the_wheel(cur).size();
        int upper = paper_upper_limit ? len + 1 : len;
        for (int i = 0; i < upper; ++i) {
            out.add(cur, t.coeff);
            cur = move_mark(cur);
        }
    }
    return out;
}

namespace {

std::vector<DecoratedGraph> marked_single_wheel_basis(const Preset& P, int m, int n,
                                                      int max_vertices) {
    EnumOptions eo;
    auto all = enumerate_basis(P, m, n, max_vertices, WheelMode::Marked, eo);
    std::vector<DecoratedGraph> out;
    for (auto& g : all)
        if (g.wheels().size() == 1) out.push_back(std::move(g));
    return out;
}

} // namespace

CyclicLemmaReport check_cyclic_lemmas(const Preset& P, int m, int n, int max_vertices) {
    CyclicLemmaReport rep;
    DeltaEngine eng(P);
    auto basis = marked_single_wheel_basis(P, m, n, max_vertices);
    rep.basis_size = (int)basis.size();
    for (const auto& g : basis) {
        GraphSum x = singleton(g);
        GraphSum bx = eng.apply_b(x);
        if (!eng.apply_b(bx).is_zero()) {
            rep.b_squared = false;
            rep.witnesses.push_back("b^2 != 0 on " + encode_key(g));
        }
        GraphSum lhs1 = eng.apply(x - op_t(x));
        GraphSum rhs1 = bx - op_t(bx);
        if (!(lhs1 == rhs1)) {
            rep.delta_one_minus_t = false;
            rep.witnesses.push_back("delta(1-t) != (1-t)b on " + encode_key(g));
        }
        GraphSum lhs2 = op_N(eng.apply(x));
        GraphSum rhs2 = eng.apply_b(op_N(x));
        if (!(lhs2 == rhs2)) {
            rep.norm_delta = false;
            rep.witnesses.push_back("N delta != b N on " + encode_key(g));
        }
    }

    // Row exactness per (non-cyclic, cyclic) stratum: ker(1-t) = im N and
    // ker N = im(1-t) as rank identities.
    std::map<std::pair<int, int>, std::vector<const DecoratedGraph*>> strata;
    for (const auto& g : basis) {
        std::set<int> cyc;
        for (int e : the_wheel(g)) cyc.insert(g.edges[e].sv);
        strata[{g.num_vertices() - (int)cyc.size(), (int)cyc.size()}].push_back(&g);
    }
    for (const auto& [key, vec] : strata) {
        std::map<std::string, int> index;
        for (size_t i = 0; i < vec.size(); ++i) index[encode_key(*vec[i])] = (int)i;
        auto op_matrix = [&](const std::function<GraphSum(const GraphSum&)>& f) {
            SparseMatrix M((int)vec.size(), (int)vec.size());
            for (size_t j = 0; j < vec.size(); ++j) {
                GraphSum img = f(singleton(*vec[j]));
                for (const auto& [k, t] : img.terms()) {
                    auto it = index.find(k);
                    if (it == index.end()) throw std::logic_error("t leaves the stratum");
                    M.add(it->second, (int)j, t.coeff);
                }
            }
            return M;
        };
        SparseMatrix Mt = op_matrix([](const GraphSum& s) { return op_t(s); });
        SparseMatrix M1t((int)vec.size(), (int)vec.size());
        SparseMatrix Mn((int)vec.size(), (int)vec.size());
        for (int i = 0; i < (int)vec.size(); ++i) M1t.set(i, i, 1);
        for (int r = 0; r < Mt.rows(); ++r)
            for (const auto& [c, v] : Mt.row(r)) M1t.add(r, c, -v);
        {
            SparseMatrix Nn = op_matrix([](const GraphSum& s) { return op_N(s); });
            Mn = std::move(Nn);
        }
        int dim = (int)vec.size();
        int r1t = M1t.rank(), rn = Mn.rank();
        if (dim - r1t != rn || dim - rn != r1t) {
            rep.rows_exact = false;
            rep.witnesses.push_back("row exactness fails on a stratum");
        }
    }
    return rep;
}

TotalComplexReport total_complex_cohomology(const Preset& P, int m, int n, int max_vertices,
                                            int width) {
    if (P.kind != PresetKind::LieInfWheeled && P.kind != PresetKind::AssInfWheeled)
        throw std::invalid_argument("total complex supported for operadic wheeled presets only");
    TotalComplexReport rep;
    DeltaEngine eng(P);

    // marked bases per degree (degree = vertex count for these presets)
    std::map<int, std::vector<DecoratedGraph>> marked;
    for (int v = 1; v <= max_vertices; ++v) {
        EnumOptions eo;
        eo.exact_vertices = true;
        auto b = enumerate_basis(P, m, n, v, WheelMode::Marked, eo);
        std::vector<DecoratedGraph> keep;
        for (auto& g : b)
            if (g.wheels().size() == 1) keep.push_back(std::move(g));
        if (!keep.empty()) marked[v] = std::move(keep);
    }

    auto dims_with_width = [&](int W) {
        // Tot^k = sum over columns j < W of the degree (k+j) marked space.
        // d(x at column j) = vert_j(x) at column j  +  (-1)^deg horiz_j(x)
        // at column j-1, with vert = delta (j even) / b (j odd) and horiz =
        // (1-t) (j odd) / N (j even, j >= 1).
        struct Key {
            int col;
            std::string graph;
            bool operator<(const Key& o) const { return std::tie(col, graph) < std::tie(o.col, o.graph); }
        };
        auto component = [&](int k) {
            std::vector<std::pair<int, const DecoratedGraph*>> basis;
            for (int j = 0; j < W; ++j) {
                auto it = marked.find(k + j);
                if (it == marked.end()) continue;
                for (const auto& g : it->second) basis.emplace_back(j, &g);
            }
            return basis;
        };
        auto d_tot = [&](int j, const DecoratedGraph& g) {
            std::vector<std::pair<int, GraphSum>> out; // (column, value)
            GraphSum x = singleton(g);
            out.emplace_back(j, (j % 2 == 0) ? eng.apply(x) : eng.apply_b(x));
            if (j >= 1) {
                GraphSum h = (j % 2 == 1) ? x - op_t(x) : op_N(x);
                int sgn = (g.degree() % 2) ? -1 : 1;
                out.emplace_back(j - 1, h * Rat(sgn));
            }
            return out;
        };
        std::map<int, int> dims;
        std::map<int, SparseMatrix> dmat;
        std::map<int, std::map<Key, int>> index;
        int k_lo = 1 - W, k_hi = max_vertices;
        for (int k = k_lo; k <= k_hi; ++k) {
            auto bas = component(k);
            auto& idx = index[k];
            for (size_t i = 0; i < bas.size(); ++i)
                idx[{bas[i].first, encode_key(*bas[i].second)}] = (int)i;
        }
        for (int k = k_lo; k < k_hi; ++k) {
            auto bas = component(k);
            SparseMatrix M((int)index[k + 1].size(), (int)bas.size());
            for (size_t jcol = 0; jcol < bas.size(); ++jcol) {
                for (auto& [col, val] : d_tot(bas[jcol].first, *bas[jcol].second)) {
                    for (const auto& [kk, t] : val.terms()) {
                        auto it = index[k + 1].find({col, kk});
                        if (it == index[k + 1].end()) continue; // truncated boundary
                        M.add(it->second, (int)jcol, t.coeff);
                    }
                }
            }
            dmat.emplace(k, std::move(M));
        }
        for (int k = k_lo + 1; k < k_hi; ++k) {
            int dim = (int)index[k].size();
            int rout = dmat.count(k) ? dmat.at(k).rank() : 0;
            int rin = dmat.count(k - 1) ? dmat.at(k - 1).rank() : 0;
            dims[k] = dim - rout - rin;
        }
        return dims;
    };

    auto dims_w = dims_with_width(width);
    auto dims_w1 = dims_with_width(width - 1);

    // unmarked single-wheel cohomology, by vertex-count grading
    std::map<int, std::vector<DecoratedGraph>> unmarked;
    for (int v = 1; v <= max_vertices + 1; ++v) {
        EnumOptions eo;
        eo.exact_vertices = true;
        auto b = enumerate_basis(P, m, n, v, WheelMode::Unrestricted, eo);
        std::vector<DecoratedGraph> keep;
        for (auto& g : b)
            if (g.wheels().size() == 1) keep.push_back(std::move(g));
        unmarked[v] = std::move(keep);
    }
    std::map<int, SparseMatrix> umat;
    for (int v = 1; v <= max_vertices; ++v) {
        const auto& src = unmarked[v];
        const auto& dst = unmarked[v + 1];
        std::map<std::string, int> idx;
        for (size_t i = 0; i < dst.size(); ++i) idx[encode_key(dst[i])] = (int)i;
        SparseMatrix M((int)dst.size(), (int)src.size());
        for (size_t j = 0; j < src.size(); ++j) {
            GraphSum img = eng.apply_graph(src[j]);
            for (const auto& [k, t] : img.terms()) {
                auto it = idx.find(k);
                if (it == idx.end()) throw std::logic_error("single-wheel space not preserved");
                M.add(it->second, (int)j, t.coeff);
            }
        }
        umat.emplace(v, std::move(M));
    }
    for (int v = 2; v < max_vertices; ++v) {
        int dim = (int)unmarked[v].size();
        int rout = umat.count(v) ? umat.at(v).rank() : 0;
        int rin = umat.count(v - 1) ? umat.at(v - 1).rank() : 0;
        rep.unmarked_dims[v] = dim - rout - rin;
    }

    for (auto& [k, d] : dims_w) {
        rep.total_dims[k] = d;
        bool stab = dims_w1.count(k) && dims_w1[k] == d;
        rep.stabilized[k] = stab;
        if (k >= 2 && k < max_vertices && stab && rep.unmarked_dims.count(k)) {
            rep.compared_degrees.push_back(k);
            if (rep.unmarked_dims[k] != d) rep.equal = false;
        }
    }
    return rep;
}

} // namespace wheelhouse
