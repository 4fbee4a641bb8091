#include "wheelhouse/quantize.hpp"
#include "wheelhouse/certificates.hpp"
#include "wheelhouse/enumerate.hpp"
#include "wheelhouse/linalg.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace wheelhouse {

namespace {

DefqGenKey key_of(const GeneratorSpec& spec) {
    DefqGenKey k;
    k.a = spec.hbar_weight;
    k.bunches = spec.out_bunches;
    k.n = spec.n;
    return k;
}

int weight(const DefqGenKey& k) { return 2 * k.a + (int)k.bunches.size() - 2; }

} // namespace

LiftQ::LiftQ() {
    defq_ = std::make_shared<Preset>(Preset::make("defq_hbar"));
    lieb_ = std::make_shared<Preset>(Preset::make("lieb_inf_wheeled"));
}

GraphSum LiftQ::q_value(const DefqGenKey& key) const {
    const Preset& L = *lieb_;
    if (key.a == 2 && key.bunches == std::vector<int>{2} && key.n == 2) {
        // the hbar^2 second-order part of the star-product derivation:
        // minus the four bracket-over-cobracket redistributions
        GraphSum v;
        auto term = [&](int cob_out_label, int br_out_label, int cob_in_label, int br_in_label) {
            DecoratedGraph g;
            g.table = &L.table();
            g.vertices = {{L.gen_lieb(2, 1)}, {L.gen_lieb(1, 2)}};
            g.edges = {{0, 1, 1, 0, false}}; // cobracket's second leg into the bracket
            g.outputs.resize(2);
            g.outputs[cob_out_label - 1] = {0, 0};
            g.outputs[br_out_label - 1] = {1, 0};
            g.inputs.resize(2);
            g.inputs[cob_in_label - 1] = {0, 0};
            g.inputs[br_in_label - 1] = {1, 1};
            return g;
        };
        v.add(term(1, 2, 1, 2), -1);
        v.add(term(2, 1, 1, 2), -1);
        v.add(term(1, 2, 2, 1), -1);
        v.add(term(2, 1, 2, 1), -1);
        return v;
    }
    if (key.a == 3 && key.bunches.empty() && key.n == 1)
        return singleton(xi_wheel_graph(L), Rat(-1, 12));
    if (key.a == 3 && key.bunches == std::vector<int>{1} && key.n == 0)
        return singleton(theta_wheel_graph(L), Rat(1, 24));
    return {};
}

GraphSum LiftQ::apply_Q(const GraphSum& x) const {
    GraphSum out;
    for (const auto& [k, t] : x.terms()) {
        std::vector<std::pair<DecoratedGraph, Rat>> working{{t.graph, t.coeff}};
        for (int v = t.graph.num_vertices() - 1; v >= 0; --v) {
            std::vector<std::pair<DecoratedGraph, Rat>> next;
            DefqGenKey key = key_of(t.graph.gen(v));
            auto it = table_.find(key);
            if (it == table_.end() || it->second.is_zero()) {
                working.clear();
                break;
            }
            for (const auto& [g, c] : working)
                for (const auto& [vk, vt] : it->second.terms())
                    next.emplace_back(substitute(g, v, vt.graph), c * vt.coeff);
            working = std::move(next);
        }
        for (const auto& [g, c] : working) out.add(g, c);
    }
    return out;
}

GraphSum LiftQ::solve_exact(const GraphSum& rhs, int m, int n, int degree, int) {
    // unknown components: (degree, V) with V = (vertex count of the rhs
    // component) - 1
    std::vector<DecoratedGraph> basis;
    std::set<int> vcounts;
    for (const auto& [k, t] : rhs.terms()) vcounts.insert(t.graph.num_vertices() - 1);
    for (int v : vcounts) {
        if (v < 1) continue;
        EnumOptions eo;
        eo.exact_vertices = true;
        eo.degree = degree;
        eo.max_arity = std::abs(degree) + m + n + 3 * (v + 1);
        for (auto& g : enumerate_basis(*lieb_, m, n, v, WheelMode::Unrestricted, eo))
            basis.push_back(std::move(g));
    }
    DeltaEngine eng(*lieb_);
    std::map<std::string, int> index;
    std::vector<GraphSum> images(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        images[j] = eng.apply_graph(basis[j]);
        for (const auto& [k, t] : images[j].terms()) index.emplace(k, (int)index.size());
    }
    for (const auto& [k, t] : rhs.terms()) index.emplace(k, (int)index.size());
    SparseMatrix A((int)index.size(), (int)basis.size());
    for (size_t j = 0; j < basis.size(); ++j)
        for (const auto& [k, t] : images[j].terms()) A.add(index[k], (int)j, t.coeff);
    std::vector<Rat> b(index.size(), 0);
    for (const auto& [k, t] : rhs.terms()) b[index[k]] = t.coeff;
    auto x = A.solve(b);
    if (!x) throw std::runtime_error("lift obstruction: the lifting equation has no solution");
    // support reduction over the kernel, deterministic greedy pass
    auto ker = A.kernel();
    auto support = [&](const std::vector<Rat>& v) {
        int s = 0;
        for (const auto& c : v)
            if (c != 0) ++s;
        return s;
    };
    bool improved = true;
    while (improved) {
        improved = false;
        for (const auto& kv : ker) {
            for (size_t i = 0; i < x->size(); ++i) {
                if ((*x)[i] == 0 || kv[i] == 0) continue;
                Rat f = (*x)[i] / kv[i];
                std::vector<Rat> cand = *x;
                for (size_t j = 0; j < cand.size(); ++j) cand[j] -= f * kv[j];
                if (support(cand) < support(*x)) {
                    *x = std::move(cand);
                    improved = true;
                }
            }
        }
    }
    GraphSum out;
    for (size_t j = 0; j < basis.size(); ++j)
        if ((*x)[j] != 0) out.add_canonical(basis[j], (*x)[j]);
    return out;
}

std::vector<LiftEntry> LiftQ::level(int s) {
    auto it = levels_.find(s);
    if (it != levels_.end()) return it->second;
    if (s < 0 || s > 6) throw std::invalid_argument("lift levels up to 6 only");
    for (int lower = 0; lower < s; ++lower) level(lower);

    std::vector<LiftEntry> entries;
    // enumerate keys of this weight within the artifact bounds
    std::vector<DefqGenKey> keys;
    for (int a = 1; 2 * a - 2 <= s; ++a) {
        int k = s + 2 - 2 * a;
        if (k < 0) continue;
        std::vector<std::vector<int>> bunches;
        std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur, int left) {
            if ((int)cur.size() == k) {
                if (left == 0) bunches.push_back(cur);
                return;
            }
            for (int sz = 1; sz <= left; ++sz) {
                cur.push_back(sz);
                rec(cur, left - sz);
                cur.pop_back();
            }
        };
        for (int m = (k == 0 ? 0 : k); m <= 4; ++m) {
            std::vector<int> cur;
            if (k == 0) {
                if (m == 0) bunches.push_back({});
            } else {
                rec(cur, m);
            }
        }
        for (auto& bs : bunches)
            for (int n = 0; n <= 4; ++n) {
                int m = 0;
                for (int x : bs) m += x;
                if (m + n < 1) continue;
                keys.push_back({a, bs, n});
            }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end(),
                           [](const DefqGenKey& x, const DefqGenKey& y) { return !(x < y) && !(y < x); }),
               keys.end());

    DeltaEngine defq_eng(*defq_, DeltaOptions{4});
    DeltaEngine lieb_eng(*lieb_);
    for (const auto& key : keys) {
        if (weight(key) != s) continue;
        LiftEntry e;
        e.key = key;
        if (s <= 2) {
            // base of the induction: the star-product morphism data
            const Preset& L = *lieb_;
            if (key.a == 1 && key.bunches == std::vector<int>{1} && key.n == 2)
                e.value = singleton(corolla(L.table(), L.gen_lieb(1, 2)));
            else if (key.a == 1 && key.bunches == std::vector<int>{1, 1} && key.n == 1)
                e.value = singleton(corolla(L.table(), L.gen_lieb(2, 1)));
            e.from_seed = true;
        } else {
            int gi = defq_->gen_defq(key.bunches, key.n, key.a);
            GraphSum dc = defq_eng.apply_graph(corolla(defq_->table(), gi));
            e.rhs = apply_Q(dc);
            GraphSum particular = q_value(key);
            e.from_seed = !particular.is_zero();
            GraphSum residual = e.rhs - lieb_eng.apply(particular);
            if (residual.is_zero()) {
                e.value = particular;
            } else {
                auto [m, n] = residual.common_biarity();
                int deg = residual.common_degree() - 1;
                GraphSum corr = solve_exact(residual, m, n, deg, 0);
                e.value = particular + corr;
                e.solved = true;
            }
            // chain-map check
            if (!(lieb_eng.apply(e.value) == e.rhs))
                throw std::logic_error("lift is not a chain map");
        }
        table_[key] = e.value;
        entries.push_back(std::move(e));
    }
    levels_[s] = entries;
    return entries;
}

} // namespace wheelhouse
