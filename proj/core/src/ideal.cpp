#include "wheelhouse/ideal.hpp"
#include "wheelhouse/delta.hpp"
#include "wheelhouse/enumerate.hpp"
#include "wheelhouse/linalg.hpp"

#include <functional>

namespace wheelhouse {

std::vector<GraphSum> relation_span(const Preset& P, int m, int n, int vertices,
                                    WheelMode mode) {
    std::vector<GraphSum> out;
    if (P.relations().empty() || vertices < 2) return out;
    const GenTable& T = P.table();
    std::vector<int> gens = P.instantiate_up_to(m + n + 3 * vertices);

    for (size_t ri = 0; ri < P.relations().size(); ++ri) {
        const GraphSum& rel = P.relations()[ri];
        auto [rm, rn] = rel.common_biarity();
        // placeholder generator standing for the relator
        GeneratorSpec ph;
        ph.id = "!rel" + std::to_string(ri);
        ph.m = rm;
        ph.n = rn;
        ph.degree = rel.common_degree();
        ph.symmetry = SymmetryDatum::planar(rm, rn);
        int ph_idx = T.intern(ph);

        // ambient graphs: vertices-1 slots, exactly one of them the placeholder
        std::map<std::string, DecoratedGraph> ambients;
        std::vector<int> multiset{ph_idx};
        std::function<void(size_t, int)> choose = [&](size_t from, int left) {
            if (left == 0) {
                enumerate_decorated(T, multiset, m, n, mode, ambients);
                return;
            }
            for (size_t i = from; i < gens.size(); ++i) {
                multiset.push_back(gens[i]);
                choose(i, left - 1);
                multiset.pop_back();
            }
        };
        choose(0, vertices - 2);

        for (const auto& [key, amb] : ambients) {
            int at = -1;
            for (int v = 0; v < amb.num_vertices(); ++v)
                if (amb.vertices[v].gen == ph_idx) at = v;
            if (at < 0) continue;
            GraphSum subst;
            for (const auto& [rk, rt] : rel.terms())
                subst.add(substitute(amb, at, rt.graph), rt.coeff);
            if (!subst.is_zero()) out.push_back(std::move(subst));
        }
    }
    return out;
}

MembershipResult wheeled_ideal_membership(const Preset& P, const GraphSum& x, WheelMode mode) {
    MembershipResult r;
    if (x.is_zero()) {
        r.member = true;
        return r;
    }
    auto [m, n] = x.common_biarity();
    int V = x.terms().begin()->second.graph.num_vertices();
    for (const auto& [k, t] : x.terms())
        if (t.graph.num_vertices() != V)
            throw std::invalid_argument("ideal membership needs a vertex-homogeneous element");
    r.span = relation_span(P, m, n, V, mode);

    // common coordinate space over all canonical keys
    std::map<std::string, int> index;
    auto index_of = [&](const GraphSum& s) {
        for (const auto& [k, t] : s.terms()) index.emplace(k, (int)index.size());
    };
    for (const auto& s : r.span) index_of(s);
    index_of(x);

    SparseMatrix M((int)index.size(), (int)r.span.size());
    for (size_t j = 0; j < r.span.size(); ++j)
        for (const auto& [k, t] : r.span[j].terms()) M.add(index[k], (int)j, t.coeff);
    std::vector<Rat> target(index.size(), 0);
    for (const auto& [k, t] : x.terms()) target[index[k]] = t.coeff;

    auto sol = M.solve(target);
    if (!sol) return r;
    // re-substitute the certificate and verify exact reproduction
    GraphSum rebuilt;
    for (size_t j = 0; j < sol->size(); ++j) rebuilt.add(r.span[j], (*sol)[j]);
    if (!(rebuilt == x)) return r;
    r.member = true;
    r.certificate = std::move(*sol);
    return r;
}

int quotient_dim(const Preset& P, int m, int n, int vertices, WheelMode mode) {
    EnumOptions eo;
    eo.exact_vertices = true;
    eo.max_arity = m + n + 3 * vertices; // quadratic generators are tiny anyway
    auto basis = enumerate_basis(P, m, n, vertices, mode, eo);
    auto span = relation_span(P, m, n, vertices, mode);
    std::map<std::string, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[encode_key(basis[i])] = (int)i;
    SparseMatrix M((int)basis.size(), (int)span.size());
    for (size_t j = 0; j < span.size(); ++j)
        for (const auto& [k, t] : span[j].terms()) {
            auto it = index.find(k);
            if (it == index.end()) throw std::logic_error("relation span leaves the basis");
            M.add(it->second, (int)j, t.coeff);
        }
    return (int)basis.size() - M.rank();
}

} // namespace wheelhouse
