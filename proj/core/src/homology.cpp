#include "wheelhouse/homology.hpp"

#include <stdexcept>

namespace wheelhouse {

namespace {

bool vertex_step_is_one(const Preset& p) {
    switch (p.kind) {
        case PresetKind::LieInf:
        case PresetKind::LieInfWheeled:
        case PresetKind::LiebInf:
        case PresetKind::LiebInfWheeled:
        case PresetKind::IbInfWheeled:
        case PresetKind::AssInfWheeled:
        case PresetKind::LiebQuadratic:
        case PresetKind::ColieQuadratic:
        case PresetKind::LieQuadraticWheeled:
            return true;
        default:
            return false;
    }
}

std::pair<int, int> default_window(const Preset& p, int m, int n, int max_vertices) {
    switch (p.kind) {
        case PresetKind::LieInf:
        case PresetKind::LieInfWheeled:
        case PresetKind::LieQuadraticWheeled:
            return {1, max_vertices + 1};
        case PresetKind::LiebInf:
        case PresetKind::LiebInfWheeled:
        case PresetKind::LiebQuadratic:
        case PresetKind::ColieQuadratic:
            return {-1, max_vertices + 1};
        case PresetKind::IbInfWheeled:
            return {3 - m - n - max_vertices, 3 - m - n + 1};
        case PresetKind::AssInfWheeled:
            return {-max_vertices - 1, 1};
        default:
            return {-max_vertices - 2, max_vertices + 2};
    }
}

} // namespace

const std::vector<DecoratedGraph>& ComplexSlice::basis(int d, int v) const {
    static const std::vector<DecoratedGraph> empty;
    auto it = bases.find({d, v});
    return it == bases.end() ? empty : it->second;
}

ComplexSlice assemble(const Preset& preset, int m, int n, int max_vertices, WheelMode mode,
                      std::optional<std::pair<int, int>> degree_window) {
    if (!degree_bounds_arity(preset))
        throw std::invalid_argument("assemble: " + preset.name +
                                    " has unbounded arity at fixed degree; no finite slice exists");
    if (!vertex_step_is_one(preset))
        throw std::invalid_argument("assemble: " + preset.name +
                                    " mixes vertex steps; slice bigrading unavailable");
    ComplexSlice s;
    s.preset = &preset;
    s.m = m;
    s.n = n;
    s.max_vertices = max_vertices;
    s.mode = mode;
    auto [lo, hi] = degree_window ? *degree_window : default_window(preset, m, n, max_vertices);
    s.deg_lo = lo;
    s.deg_hi = hi;

    for (int d = lo; d <= hi + 1; ++d) {
        for (int v = 1; v <= max_vertices + 1; ++v) {
            EnumOptions eo;
            eo.exact_vertices = true;
            eo.degree = d;
            // arity is bounded by the degree identities; a generous cap
            // keeps the generator instantiation finite
            eo.max_arity = std::abs(d) + m + n + 3 * (max_vertices + 1);
            auto b = enumerate_basis(preset, m, n, v, mode, eo);
            if (!b.empty()) s.bases[{d, v}] = std::move(b);
        }
    }

    DeltaEngine eng(preset);
    for (auto& [key, basis] : s.bases) {
        auto [d, v] = key;
        if (d > hi || v > max_vertices) continue;
        const auto& target = s.basis(d + 1, v + 1);
        std::map<std::string, int> index;
        for (size_t i = 0; i < target.size(); ++i) index[encode_key(target[i])] = (int)i;
        SparseMatrix M((int)target.size(), (int)basis.size());
        for (size_t j = 0; j < basis.size(); ++j) {
            GraphSum img = eng.apply_graph(basis[j]);
            for (const auto& [k, t] : img.terms()) {
                auto it = index.find(k);
                if (it == index.end())
                    throw std::logic_error("assemble: delta image leaves the enumerated window");
                M.add(it->second, (int)j, t.coeff);
            }
        }
        s.deltas[{d, v}] = std::move(M);
    }
    return s;
}

std::map<std::pair<int, int>, int> cohomology_dims(const ComplexSlice& s) {
    std::map<std::pair<int, int>, int> dims;
    for (const auto& [key, basis] : s.bases) {
        auto [d, v] = key;
        if (d < s.deg_lo || d > s.deg_hi || v > s.max_vertices) continue;
        int dim = (int)basis.size();
        int rank_out = 0, rank_in = 0;
        auto ot = s.deltas.find({d, v});
        if (ot != s.deltas.end()) rank_out = ot->second.rank();
        auto in = s.deltas.find({d - 1, v - 1});
        if (in != s.deltas.end()) rank_in = in->second.rank();
        dims[key] = dim - rank_out - rank_in;
    }
    return dims;
}

std::map<int, int> cohomology_dims_by_degree(const ComplexSlice& s) {
    std::map<int, int> out;
    for (const auto& [key, dim] : cohomology_dims(s)) out[key.first] += dim;
    return out;
}

bool is_cocycle(const Preset& preset, const GraphSum& x, DeltaOptions opt) {
    return apply_delta(preset, x, opt).is_zero();
}

std::vector<Rat> coordinates(const std::vector<DecoratedGraph>& basis, const GraphSum& x) {
    std::map<std::string, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[encode_key(basis[i])] = (int)i;
    std::vector<Rat> v(basis.size(), 0);
    for (const auto& [k, t] : x.terms()) {
        auto it = index.find(k);
        if (it == index.end()) throw std::invalid_argument("element not contained in the slice basis");
        v[it->second] = t.coeff;
    }
    return v;
}

ExactnessResult is_exact(const ComplexSlice& slice, const GraphSum& x) {
    ExactnessResult r;
    if (x.is_zero()) {
        r.exact = true;
        return r;
    }
    int d = x.common_degree();
    int v = x.terms().begin()->second.graph.num_vertices();
    for (const auto& [k, t] : x.terms())
        if (t.graph.num_vertices() != v)
            throw std::invalid_argument("is_exact: inhomogeneous vertex count");
    const auto& target = slice.basis(d, v);
    std::vector<Rat> coords = coordinates(target, x);
    if (v - 1 >= 1 && (d - 1 < slice.deg_lo || d - 1 > slice.deg_hi || v - 1 > slice.max_vertices))
        r.window_complete = false;
    auto it = slice.deltas.find({d - 1, v - 1});
    if (it == slice.deltas.end()) {
        r.exact = false;
        return r;
    }
    auto sol = it->second.solve(coords);
    if (!sol) {
        r.exact = false;
        return r;
    }
    r.exact = true;
    const auto& src = slice.basis(d - 1, v - 1);
    for (size_t j = 0; j < sol->size(); ++j)
        if ((*sol)[j] != 0) r.preimage.add_canonical(src[j], (*sol)[j]);
    return r;
}

} // namespace wheelhouse
