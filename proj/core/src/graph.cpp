#include "wheelhouse/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace wheelhouse {

WheelMode wheel_mode_parse(const std::string& s) {
    if (s == "none") return WheelMode::None;
    if (s == "unrestricted") return WheelMode::Unrestricted;
    if (s == "at-most-one") return WheelMode::AtMostOne;
    if (s == "marked") return WheelMode::Marked;
    if (s == "operadic-only") return WheelMode::OperadicOnly;
    throw std::invalid_argument("unknown wheel mode: " + s);
}

std::string wheel_mode_name(WheelMode m) {
    switch (m) {
        case WheelMode::None: return "none";
        case WheelMode::Unrestricted: return "unrestricted";
        case WheelMode::AtMostOne: return "at-most-one";
        case WheelMode::Marked: return "marked";
        case WheelMode::OperadicOnly: return "operadic-only";
    }
    return "?";
}

int DecoratedGraph::degree() const {
    int d = 0;
    for (const auto& v : vertices) d += table->at(v.gen).degree;
    return d;
}

void DecoratedGraph::validate() const {
    if (!table) throw std::logic_error("graph without generator table");
    int V = num_vertices();
    // slot usage maps: -1 free
    std::vector<std::vector<int>> out_used(V), in_used(V);
    for (int v = 0; v < V; ++v) {
        const auto& g = gen(v);
        out_used[v].assign(g.m, 0);
        in_used[v].assign(g.n, 0);
    }
    auto touch = [](std::vector<int>& a, int s, const char* what) {
        if (s < 0 || s >= (int)a.size()) throw std::invalid_argument(std::string("slot out of range: ") + what);
        if (a[s]++) throw std::invalid_argument(std::string("slot used twice: ") + what);
    };
    for (const auto& e : edges) {
        if (e.sv < 0 || e.sv >= V || e.tv < 0 || e.tv >= V)
            throw std::invalid_argument("edge endpoint out of range");
        touch(out_used[e.sv], e.ss, "edge source");
        touch(in_used[e.tv], e.ts, "edge target");
    }
    for (const auto& [v, s] : outputs) {
        if (v < 0 || v >= V) throw std::invalid_argument("output leg vertex out of range");
        touch(out_used[v], s, "output leg");
    }
    for (const auto& [v, s] : inputs) {
        if (v < 0 || v >= V) throw std::invalid_argument("input leg vertex out of range");
        touch(in_used[v], s, "input leg");
    }
    for (int v = 0; v < V; ++v) {
        for (int u : out_used[v])
            if (u != 1) throw std::invalid_argument("unused output slot");
        for (int u : in_used[v])
            if (u != 1) throw std::invalid_argument("unused input slot");
    }
}

std::vector<std::vector<int>> DecoratedGraph::wheels() const {
    // All simple directed cycles on the vertex-level graph, reported as
    // edge sequences.  Graphs are tiny; plain DFS enumeration is fine.
    std::vector<std::vector<int>> out;
    int E = (int)edges.size();
    std::vector<std::vector<int>> out_edges(num_vertices());
    for (int e = 0; e < E; ++e) out_edges[edges[e].sv].push_back(e);

    // For every edge e0, find the simple cycles whose smallest edge index
    // is e0, by DFS over edges with index > e0.
    for (int e0 = 0; e0 < E; ++e0) {
        std::vector<int> stack_path{e0};
        std::vector<char> visited_vertex(num_vertices(), 0);
        int root = edges[e0].sv;
        visited_vertex[root] = 1;
        std::function<void(int)> go = [&](int v) {
            if (v == root) {
                out.push_back(stack_path);
                return;
            }
            if (visited_vertex[v]) return;
            visited_vertex[v] = 1;
            for (int e : out_edges[v]) {
                if (e <= e0) continue;
                stack_path.push_back(e);
                go(edges[e].tv);
                stack_path.pop_back();
            }
            visited_vertex[v] = 0;
        };
        go(edges[e0].tv);
    }
    return out;
}

bool DecoratedGraph::wheel_is_operadic(const std::vector<int>& cycle) const {
    bool all_m1 = true, all_n1 = true;
    std::set<int> vs;
    for (int e : cycle) vs.insert(edges[e].sv);
    for (int v : vs) {
        if (gen(v).m != 1) all_m1 = false;
        if (gen(v).n != 1) all_n1 = false;
    }
    return all_m1 || all_n1;
}

bool DecoratedGraph::is_acyclic() const {
    // Kahn toposort on the vertex graph.
    int V = num_vertices();
    std::vector<int> indeg(V, 0);
    for (const auto& e : edges) indeg[e.tv]++;
    std::vector<int> q;
    for (int v = 0; v < V; ++v)
        if (!indeg[v]) q.push_back(v);
    int seen = 0;
    while (!q.empty()) {
        int v = q.back();
        q.pop_back();
        ++seen;
        for (const auto& e : edges)
            if (e.sv == v && --indeg[e.tv] == 0) q.push_back(e.tv);
    }
    return seen == V;
}

int DecoratedGraph::first_betti() const {
    // E - V + number of connected components (underlying undirected graph).
    int V = num_vertices();
    std::vector<int> comp(V, -1);
    int ncomp = 0;
    for (int v = 0; v < V; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& e : edges) {
                if (e.sv == u && comp[e.tv] < 0) { comp[e.tv] = ncomp; stack.push_back(e.tv); }
                if (e.tv == u && comp[e.sv] < 0) { comp[e.sv] = ncomp; stack.push_back(e.sv); }
            }
        }
        ++ncomp;
    }
    return (int)edges.size() - V + ncomp;
}

bool DecoratedGraph::connected() const {
    if (num_vertices() <= 1) return true;
    return first_betti() == (int)edges.size() - num_vertices() + 1;
}

bool DecoratedGraph::satisfies(WheelMode mode) const {
    switch (mode) {
        case WheelMode::None:
            if (!is_acyclic()) return false;
            for (const auto& e : edges)
                if (e.mark) return false;
            return true;
        case WheelMode::Unrestricted:
            for (const auto& e : edges)
                if (e.mark) return false;
            return true;
        case WheelMode::AtMostOne:
            for (const auto& e : edges)
                if (e.mark) return false;
            return first_betti() <= 1;
        case WheelMode::Marked: {
            auto ws = wheels();
            std::set<int> cyclic;
            for (const auto& c : ws)
                for (int e : c) cyclic.insert(e);
            for (size_t e = 0; e < edges.size(); ++e)
                if (edges[e].mark && !cyclic.count((int)e)) return false;
            for (const auto& c : ws) {
                int marks = 0;
                for (int e : c) marks += edges[e].mark ? 1 : 0;
                if (marks != 1) return false;
            }
            return true;
        }
        case WheelMode::OperadicOnly: {
            for (const auto& e : edges)
                if (e.mark) return false;
            for (const auto& c : wheels())
                if (!wheel_is_operadic(c)) return false;
            return true;
        }
    }
    return false;
}

DecoratedGraph DecoratedGraph::break_edges(const std::vector<int>& edge_indices) const {
    std::vector<int> idx = edge_indices;
    std::sort(idx.begin(), idx.end());
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= (int)edges.size())
            throw std::invalid_argument("break_edges: not an edge index");
        if (i && idx[i] == idx[i - 1]) throw std::invalid_argument("break_edges: duplicate index");
    }
    DecoratedGraph r = *this;
    r.edges.clear();
    for (int e = 0; e < (int)edges.size(); ++e)
        if (!std::binary_search(idx.begin(), idx.end(), e)) r.edges.push_back(edges[e]);
    for (int e : idx) {
        r.outputs.emplace_back(edges[e].sv, edges[e].ss);
        r.inputs.emplace_back(edges[e].tv, edges[e].ts);
    }
    return r;
}

DecoratedGraph DecoratedGraph::glue_legs(int out_label, int in_label) const {
    if (out_label < 1 || out_label > num_outputs()) throw std::invalid_argument("glue_legs: bad output label");
    if (in_label < 1 || in_label > num_inputs()) throw std::invalid_argument("glue_legs: bad input label");
    DecoratedGraph r = *this;
    auto [sv, ss] = outputs[out_label - 1];
    auto [tv, ts] = inputs[in_label - 1];
    r.edges.push_back({sv, ss, tv, ts, false});
    r.outputs.erase(r.outputs.begin() + (out_label - 1));
    r.inputs.erase(r.inputs.begin() + (in_label - 1));
    return r;
}

DecoratedGraph DecoratedGraph::disjoint_union(const DecoratedGraph& other) const {
    if (table != other.table) throw std::invalid_argument("disjoint_union: different generator tables");
    DecoratedGraph r = *this;
    int off = num_vertices();
    for (const auto& v : other.vertices) r.vertices.push_back(v);
    for (auto e : other.edges) {
        e.sv += off;
        e.tv += off;
        r.edges.push_back(e);
    }
    for (auto [v, s] : other.inputs) r.inputs.emplace_back(v + off, s);
    for (auto [v, s] : other.outputs) r.outputs.emplace_back(v + off, s);
    return r;
}

DecoratedGraph graft_raw(const DecoratedGraph& g1, int i, int j, const DecoratedGraph& g2) {
    if (i < 1 || i > g1.num_inputs()) throw std::invalid_argument("graft: bad input leg of g1");
    if (j < 1 || j > g2.num_outputs()) throw std::invalid_argument("graft: bad output leg of g2");
    DecoratedGraph u = g1.disjoint_union(g2);
    // After the union, g1's input i is at position i-1 and g2's output j at
    // position g1.num_outputs()+j-1 (1-based labels).
    return u.glue_legs(g1.num_outputs() + j, i);
}

DecoratedGraph corolla(const GenTable& table, int gen_index) {
    const auto& g = table.at(gen_index);
    DecoratedGraph c;
    c.table = &table;
    c.vertices.push_back({gen_index});
    for (int s = 0; s < g.n; ++s) c.inputs.emplace_back(0, s);
    for (int s = 0; s < g.m; ++s) c.outputs.emplace_back(0, s);
    return c;
}

} // namespace wheelhouse
