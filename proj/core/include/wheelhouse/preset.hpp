#pragma once

#include "graph.hpp"
#include "graph_sum.hpp"
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace wheelhouse {

enum class PresetKind {
    LieInf,
    LieInfWheeled,
    LiebInf,
    LiebInfWheeled,
    LiebQuadratic,
    IbInfWheeled,
    AssWheeledResolution,
    AssInfWheeled, // mu-generators only (the operadic sub-complex)
    Defq,
    DefqHbar,
    ColieQuadratic,
    LieQuadraticWheeled, // quadratic wheeled Lie, oracle for the wheeled resolution
    Custom,
};

struct DeltaOptions {
    // Upper bound on the number of connecting edges created by one rule
    // application.  Only the DefQ bracket sum is genuinely infinite (the
    // prop is completed); results are exact on the reported window.
    int max_new_edges = 8;
};

// A catalogued dg (wheeled) prop: generator family with degrees and
// symmetries, a wheel mode, a corolla rule (the differential) and an
// optional relation list for quotient presets.
class Preset {
public:
    std::string name;
    PresetKind kind = PresetKind::Custom;
    WheelMode wheel_mode = WheelMode::None;

    const GenTable& table() const { return *table_; }

    // --- lazy generator accessors (throw when absent from the family) ---
    int gen_lieb(int m, int n) const;                  // "g{m}_{n}"
    int gen_ib(int m, int n) const;                    // "p{m}_{n}"
    int gen_ass_mu(int n) const;                       // "mu{n}"
    int gen_ass_wheel(int a, int b) const;             // "w{a}_{b}"
    int gen_defq(const std::vector<int>& bunches, int n, int hbar = 0) const;
    int gen_custom(const GeneratorSpec& spec) const;   // Custom presets only

    bool gen_exists(int m, int n) const;               // family membership test
    // All family generators with m_g + n_g <= max_arity (for DefqHbar, all
    // hbar labels 1..hbar_cap).
    std::vector<int> instantiate_up_to(int max_arity, int hbar_cap = 3) const;

    // Resolve a generator id, instantiating it if the family contains it.
    int gen_by_id(const std::string& id) const;

    // Value of the differential on a decorated corolla, as raw rule graphs.
    GraphSum delta_corolla(int gen_index, const DeltaOptions& opt = {}) const;

    bool has_rule() const;

    // Quotient relations (lieb_quadratic: R1,R2,R3; colie: R1; wheeled
    // quadratic Lie: the Jacobi sum).  Each relator is a canonical GraphSum.
    const std::vector<GraphSum>& relations() const { return relations_; }

    static Preset make(const std::string& name);
    static Preset custom(std::string name, WheelMode mode);

    static const std::vector<std::string>& catalogue(); // public preset names

private:
    std::shared_ptr<GenTable> table_ = std::make_shared<GenTable>();
    std::vector<GraphSum> relations_;
    void build_relations();
};

inline Preset make_preset(const std::string& name) { return Preset::make(name); }

} // namespace wheelhouse
