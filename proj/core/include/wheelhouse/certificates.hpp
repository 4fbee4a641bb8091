#pragma once

#include "graph_sum.hpp"
#include "preset.hpp"

namespace wheelhouse {

// The named cohomology classes and the wheel tensors of the quantization
// step, built programmatically on a preset's generator table.

// Loop on the ternary planar corolla (Ass-type), biarity (0,2), degree -1.
GraphSum ass_loop_class(const Preset& ass);

// The three-term, three-wheel combination at biarity (0,0), degree 1.
GraphSum lieb_threewheel_class(const Preset& lieb_wheeled);

// The two-term loop class on the (2,2) generator, biarity (1,1), degree -1.
GraphSum ib_minus_one_class(const Preset& ib);

// Theta wheel: one bracket over two cobrackets closed into a two-cycle;
// biarity (1,0), degree 1.
DecoratedGraph theta_wheel_graph(const Preset& lieb_wheeled);

// Xi wheel: two brackets in a two-cycle fed by one cobracket; (0,1), deg 2.
DecoratedGraph xi_wheel_graph(const Preset& lieb_wheeled);

// Theta wheel capped with a cobracket on its output: (2,0); the element of
// the wheeled ideal certified by the first quantization lemma.
DecoratedGraph theta_capped_graph(const Preset& lieb_wheeled);

// Xi wheel fed by a bracket on its input: (0,2); certified by the second
// quantization lemma.
DecoratedGraph xi_capped_graph(const Preset& lieb_wheeled);

GraphSum certificate_by_name(const std::string& name, const Preset& preset);

} // namespace wheelhouse
