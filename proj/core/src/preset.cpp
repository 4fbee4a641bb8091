#include "wheelhouse/preset.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace wheelhouse {

namespace {

std::string lieb_id(int m, int n) { return "g" + std::to_string(m) + "_" + std::to_string(n); }
std::string ib_id(int m, int n) { return "p" + std::to_string(m) + "_" + std::to_string(n); }
std::string mu_id(int n) { return "mu" + std::to_string(n); }
std::string wheel_id(int a, int b) { return "w" + std::to_string(a) + "_" + std::to_string(b); }

std::string defq_id(const std::vector<int>& bunches, int n, int hbar) {
    std::string s = "d";
    for (size_t i = 0; i < bunches.size(); ++i) {
        if (i) s += "_";
        s += std::to_string(bunches[i]);
    }
    s += "n" + std::to_string(n);
    if (hbar > 0) s += "@" + std::to_string(hbar);
    return s;
}

} // namespace

int Preset::gen_lieb(int m, int n) const {
    bool ok = false;
    switch (kind) {
        case PresetKind::LieInf:
        case PresetKind::LieInfWheeled:
            ok = (m == 1 && n >= 2);
            break;
        case PresetKind::LiebInf:
        case PresetKind::LiebInfWheeled:
            ok = (m >= 1 && n >= 1 && m + n >= 3);
            break;
        case PresetKind::LiebQuadratic:
            ok = (m == 2 && n == 1) || (m == 1 && n == 2);
            break;
        case PresetKind::ColieQuadratic:
            ok = (m == 2 && n == 1);
            break;
        case PresetKind::LieQuadraticWheeled:
            ok = (m == 1 && n == 2);
            break;
        default:
            ok = false;
    }
    if (!ok) throw std::invalid_argument(name + " has no generator at (" + std::to_string(m) + "," + std::to_string(n) + ")");
    GeneratorSpec g;
    g.id = lieb_id(m, n);
    g.m = m;
    g.n = n;
    g.degree = 2 - m;
    g.symmetry = SymmetryDatum::simple(m, n, /*out_skew=*/true, /*in_skew=*/false);
    return table_->intern(std::move(g));
}

int Preset::gen_ib(int m, int n) const {
    if (kind != PresetKind::IbInfWheeled || m < 1 || n < 1 || m + n < 3)
        throw std::invalid_argument(name + " has no generator at (" + std::to_string(m) + "," + std::to_string(n) + ")");
    GeneratorSpec g;
    g.id = ib_id(m, n);
    g.m = m;
    g.n = n;
    g.degree = 3 - m - n;
    g.symmetry = SymmetryDatum::planar(m, n);
    return table_->intern(std::move(g));
}

int Preset::gen_ass_mu(int n) const {
    if ((kind != PresetKind::AssWheeledResolution && kind != PresetKind::AssInfWheeled) || n < 2)
        throw std::invalid_argument(name + " has no (1," + std::to_string(n) + ") generator");
    GeneratorSpec g;
    g.id = mu_id(n);
    g.m = 1;
    g.n = n;
    g.degree = 2 - n;
    g.symmetry = SymmetryDatum::planar(1, n);
    return table_->intern(std::move(g));
}

int Preset::gen_ass_wheel(int a, int b) const {
    if (kind != PresetKind::AssWheeledResolution || a < 1 || b < 1)
        throw std::invalid_argument(name + " has no (0," + std::to_string(a + b) + ") wheel generator");
    GeneratorSpec g;
    g.id = wheel_id(a, b);
    g.m = 0;
    g.n = a + b;
    g.degree = -a - b;
    // Cyclic (anti)symmetry: zeta rotates the first block, xi the second;
    // the character value is the sign of the cyclic permutation.
    std::vector<SymElem> gens;
    if (a > 1) {
        SymElem z{identity_perm(0), identity_perm(a + b), (a % 2 == 1) ? 1 : -1};
        for (int i = 0; i < a; ++i) z.in[i] = (i + 1) % a;
        gens.push_back(std::move(z));
    }
    if (b > 1) {
        SymElem x{identity_perm(0), identity_perm(a + b), (b % 2 == 1) ? 1 : -1};
        for (int i = 0; i < b; ++i) x.in[a + i] = a + (i + 1) % b;
        gens.push_back(std::move(x));
    }
    g.symmetry = SymmetryDatum::from_generators(0, a + b, std::move(gens));
    return table_->intern(std::move(g));
}

int Preset::gen_defq(const std::vector<int>& bunches, int n, int hbar) const {
    bool hb = kind == PresetKind::DefqHbar;
    if (kind != PresetKind::Defq && !hb)
        throw std::invalid_argument(name + " has no DefQ generators");
    if (hb && hbar < 1) throw std::invalid_argument("DefQ^hbar generators need a positive hbar label");
    if (!hb && hbar != 0) throw std::invalid_argument("plain DefQ generators carry no hbar label");
    int m = 0;
    for (int s : bunches) {
        if (s < 1) throw std::invalid_argument("DefQ bunches must be non-empty");
        m += s;
    }
    if (m + n < 1) throw std::invalid_argument("DefQ generator needs m+n >= 1");
    GeneratorSpec g;
    g.id = defq_id(bunches, n, hbar);
    g.m = m;
    g.n = n;
    g.degree = 2 - (int)bunches.size();
    g.hbar_weight = hbar;
    g.out_bunches = bunches;
    std::vector<SlotBlock> ob;
    int at = 0;
    for (int s : bunches) {
        ob.push_back({at, s, false});
        at += s;
    }
    std::vector<SlotBlock> ib;
    if (n > 0) ib.push_back({0, n, false});
    g.symmetry = SymmetryDatum::blocks(m, n, std::move(ob), std::move(ib));
    return table_->intern(std::move(g));
}

int Preset::gen_custom(const GeneratorSpec& spec) const {
    if (kind != PresetKind::Custom) throw std::invalid_argument("gen_custom on a catalogued preset");
    return table_->intern(spec);
}

bool Preset::gen_exists(int m, int n) const {
    switch (kind) {
        case PresetKind::LieInf:
        case PresetKind::LieInfWheeled:
        case PresetKind::LieQuadraticWheeled:
            return m == 1 && (kind == PresetKind::LieQuadraticWheeled ? n == 2 : n >= 2);
        case PresetKind::LiebInf:
        case PresetKind::LiebInfWheeled:
            return m >= 1 && n >= 1 && m + n >= 3;
        case PresetKind::LiebQuadratic:
            return (m == 2 && n == 1) || (m == 1 && n == 2);
        case PresetKind::ColieQuadratic:
            return m == 2 && n == 1;
        case PresetKind::IbInfWheeled:
            return m >= 1 && n >= 1 && m + n >= 3;
        default:
            return false;
    }
}

std::vector<int> Preset::instantiate_up_to(int max_arity, int hbar_cap) const {
    std::vector<int> out;
    switch (kind) {
        case PresetKind::LieInf:
        case PresetKind::LieInfWheeled:
            for (int n = 2; 1 + n <= max_arity; ++n) out.push_back(gen_lieb(1, n));
            break;
        case PresetKind::LieQuadraticWheeled:
            if (3 <= max_arity) out.push_back(gen_lieb(1, 2));
            break;
        case PresetKind::LiebInf:
        case PresetKind::LiebInfWheeled:
            for (int m = 1; m <= max_arity - 1; ++m)
                for (int n = 1; m + n <= max_arity; ++n)
                    if (m + n >= 3) out.push_back(gen_lieb(m, n));
            break;
        case PresetKind::LiebQuadratic:
            if (3 <= max_arity) {
                out.push_back(gen_lieb(2, 1));
                out.push_back(gen_lieb(1, 2));
            }
            break;
        case PresetKind::ColieQuadratic:
            if (3 <= max_arity) out.push_back(gen_lieb(2, 1));
            break;
        case PresetKind::IbInfWheeled:
            for (int m = 1; m <= max_arity - 1; ++m)
                for (int n = 1; m + n <= max_arity; ++n)
                    if (m + n >= 3) out.push_back(gen_ib(m, n));
            break;
        case PresetKind::AssInfWheeled:
            for (int n = 2; 1 + n <= max_arity; ++n) out.push_back(gen_ass_mu(n));
            break;
        case PresetKind::AssWheeledResolution:
            for (int n = 2; 1 + n <= max_arity; ++n) out.push_back(gen_ass_mu(n));
            for (int a = 1; a <= max_arity - 1; ++a)
                for (int b = 1; a + b <= max_arity; ++b)
                    out.push_back(gen_ass_wheel(a, b));
            break;
        case PresetKind::Defq:
        case PresetKind::DefqHbar: {
            int h_lo = kind == PresetKind::DefqHbar ? 1 : 0;
            int h_hi = kind == PresetKind::DefqHbar ? hbar_cap : 0;
            for (int h = h_lo; h <= h_hi; ++h)
                for (int m = 0; m <= max_arity; ++m)
                    for (int n = 0; m + n <= max_arity; ++n) {
                        if (m + n < 1) continue;
                        // all compositions of m into non-empty bunches
                        std::vector<std::vector<int>> comps;
                        if (m == 0) {
                            comps.push_back({});
                        } else {
                            std::vector<int> cur;
                            std::function<void(int)> rec = [&](int rest) {
                                if (rest == 0) { comps.push_back(cur); return; }
                                for (int s = 1; s <= rest; ++s) {
                                    cur.push_back(s);
                                    rec(rest - s);
                                    cur.pop_back();
                                }
                            };
                            rec(m);
                        }
                        for (const auto& c : comps) out.push_back(gen_defq(c, n, h));
                    }
            break;
        }
        case PresetKind::Custom:
            for (int i = 0; i < (int)table_->size(); ++i)
                if (table_->at(i).m + table_->at(i).n <= max_arity) out.push_back(i);
            break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int Preset::gen_by_id(const std::string& id) const {
    if (auto idx = table_->find(id)) return *idx;
    // Parse and instantiate.
    auto num = [&](size_t& i) {
        size_t j = i;
        while (j < id.size() && isdigit(id[j])) ++j;
        if (j == i) throw std::invalid_argument("bad generator id: " + id);
        int v = std::stoi(id.substr(i, j - i));
        i = j;
        return v;
    };
    size_t i = 0;
    if (id.rfind("mu", 0) == 0) {
        i = 2;
        return gen_ass_mu(num(i));
    }
    if (id[0] == 'g' || id[0] == 'p' || id[0] == 'w') {
        char c = id[0];
        i = 1;
        int a = num(i);
        if (i >= id.size() || id[i] != '_') throw std::invalid_argument("bad generator id: " + id);
        ++i;
        int b = num(i);
        if (c == 'g') return gen_lieb(a, b);
        if (c == 'p') return gen_ib(a, b);
        return gen_ass_wheel(a, b);
    }
    if (id[0] == 'd') {
        i = 1;
        std::vector<int> bunches;
        while (i < id.size() && id[i] != 'n') {
            bunches.push_back(num(i));
            if (i < id.size() && id[i] == '_') ++i;
        }
        if (i >= id.size() || id[i] != 'n') throw std::invalid_argument("bad generator id: " + id);
        ++i;
        int n = num(i);
        int h = 0;
        if (i < id.size() && id[i] == '@') {
            ++i;
            h = num(i);
        }
        return gen_defq(bunches, n, h);
    }
    throw std::invalid_argument("unknown generator id: " + id);
}

bool Preset::has_rule() const {
    switch (kind) {
        case PresetKind::LiebQuadratic:
        case PresetKind::ColieQuadratic:
        case PresetKind::LieQuadraticWheeled:
        case PresetKind::Custom:
            return false;
        default:
            return true;
    }
}

const std::vector<std::string>& Preset::catalogue() {
    static const std::vector<std::string> names = {
        "lie_inf", "lie_inf_wheeled", "lieb_inf", "lieb_inf_wheeled", "lieb_quadratic",
        "ib_inf_wheeled", "ass_wheeled_resolution", "defq", "defq_hbar", "colie_quadratic",
    };
    return names;
}

Preset Preset::make(const std::string& name) {
    Preset p;
    p.name = name;
    if (name == "lie_inf") {
        p.kind = PresetKind::LieInf;
        p.wheel_mode = WheelMode::None;
    } else if (name == "lie_inf_wheeled") {
        p.kind = PresetKind::LieInfWheeled;
        p.wheel_mode = WheelMode::Unrestricted;
    } else if (name == "lieb_inf") {
        p.kind = PresetKind::LiebInf;
        p.wheel_mode = WheelMode::None;
    } else if (name == "lieb_inf_wheeled") {
        p.kind = PresetKind::LiebInfWheeled;
        p.wheel_mode = WheelMode::Unrestricted;
    } else if (name == "lieb_quadratic") {
        p.kind = PresetKind::LiebQuadratic;
        p.wheel_mode = WheelMode::None;
    } else if (name == "ib_inf_wheeled") {
        p.kind = PresetKind::IbInfWheeled;
        p.wheel_mode = WheelMode::Unrestricted;
    } else if (name == "ass_wheeled_resolution") {
        p.kind = PresetKind::AssWheeledResolution;
        p.wheel_mode = WheelMode::Unrestricted;
    } else if (name == "ass_inf_wheeled") {
        p.kind = PresetKind::AssInfWheeled;
        p.wheel_mode = WheelMode::Unrestricted;
    } else if (name == "defq") {
        p.kind = PresetKind::Defq;
        p.wheel_mode = WheelMode::None;
    } else if (name == "defq_hbar") {
        p.kind = PresetKind::DefqHbar;
        p.wheel_mode = WheelMode::None;
    } else if (name == "colie_quadratic") {
        p.kind = PresetKind::ColieQuadratic;
        p.wheel_mode = WheelMode::None;
    } else if (name == "lie_quadratic_wheeled") {
        p.kind = PresetKind::LieQuadraticWheeled;
        p.wheel_mode = WheelMode::Unrestricted;
    } else {
        throw std::invalid_argument("unknown preset: " + name);
    }
    p.build_relations();
    return p;
}

Preset Preset::custom(std::string name, WheelMode mode) {
    Preset p;
    p.name = std::move(name);
    p.kind = PresetKind::Custom;
    p.wheel_mode = mode;
    return p;
}

void Preset::build_relations() {
    relations_.clear();
    auto lieb_like = kind == PresetKind::LiebQuadratic;
    auto colie = kind == PresetKind::ColieQuadratic;
    auto liew = kind == PresetKind::LieQuadraticWheeled;
    if (!lieb_like && !colie && !liew) return;

    const GenTable& T = *table_;

    // R1 in (3,1): the coJacobi sum on two (2,1)-corollas.
    auto r1_term = [&](int a, int b, int c) {
        DecoratedGraph g;
        g.table = &T;
        int co = gen_lieb(2, 1);
        g.vertices = {{co}, {co}};
        g.edges = {{1, 0, 0, 0, false}}; // bottom.out0 -> top.in0
        g.outputs.resize(3);
        g.outputs[a - 1] = {0, 0};
        g.outputs[b - 1] = {0, 1};
        g.outputs[c - 1] = {1, 1};
        g.inputs = {{1, 0}};
        return g;
    };
    // R2 in (1,3): the Jacobi sum on two (1,2)-corollas.
    auto r2_term = [&](int x, int y, int z) {
        DecoratedGraph g;
        g.table = &T;
        int br = gen_lieb(1, 2);
        g.vertices = {{br}, {br}};
        g.edges = {{1, 0, 0, 0, false}}; // lower.out -> upper.in0
        g.inputs.resize(3);
        g.inputs[z - 1] = {0, 1};
        g.inputs[x - 1] = {1, 0};
        g.inputs[y - 1] = {1, 1};
        g.outputs = {{0, 0}};
        return g;
    };

    if (lieb_like || colie) {
        GraphSum r1;
        r1.add(r1_term(1, 2, 3), 1);
        r1.add(r1_term(3, 1, 2), 1);
        r1.add(r1_term(2, 3, 1), 1);
        relations_.push_back(std::move(r1));
    }
    if (colie) return;

    if (liew) {
        GraphSum jac;
        jac.add(r2_term(1, 2, 3), 1);
        jac.add(r2_term(1, 3, 2), 1);
        jac.add(r2_term(2, 3, 1), 1);
        relations_.push_back(std::move(jac));
        return;
    }

    GraphSum r2;
    r2.add(r2_term(1, 2, 3), 1);
    r2.add(r2_term(1, 3, 2), 1);
    r2.add(r2_term(2, 3, 1), 1);
    relations_.push_back(std::move(r2));

    // R3 in (2,2): compatibility of the two operations.
    GraphSum r3;
    {
        int co = gen_lieb(2, 1);
        int br = gen_lieb(1, 2);
        // cobracket above bracket
        DecoratedGraph top;
        top.table = &T;
        top.vertices = {{co}, {br}};
        top.edges = {{1, 0, 0, 0, false}}; // bracket.out -> cobracket.in
        top.outputs = {{0, 0}, {0, 1}};
        top.inputs = {{1, 0}, {1, 1}};
        r3.add(top, 1);
        // mixed terms: cobracket below, bracket hanging off one output
        auto mixed = [&](int u, int w, int x, int v) {
            DecoratedGraph g;
            g.table = &T;
            g.vertices = {{co}, {br}};
            g.edges = {{0, 1, 1, 0, false}}; // cobracket.out1 -> bracket.in0
            g.outputs.resize(2);
            g.outputs[w - 1] = {0, 0};
            g.outputs[x - 1] = {1, 0};
            g.inputs.resize(2);
            g.inputs[u - 1] = {0, 0};
            g.inputs[v - 1] = {1, 1};
            return g;
        };
        r3.add(mixed(1, 1, 2, 2), -1);
        r3.add(mixed(1, 2, 1, 2), 1);
        r3.add(mixed(2, 1, 2, 1), -1);
        r3.add(mixed(2, 2, 1, 1), 1);
    }
    relations_.push_back(std::move(r3));
}

} // namespace wheelhouse
