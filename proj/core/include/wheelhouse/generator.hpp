#pragma once

#include "symmetry.hpp"
#include <deque>
#include <map>
#include <optional>
#include <string>

namespace wheelhouse {

// One S-bimodule generator: a corolla species with m outputs, n inputs,
// a cohomological degree and a leg symmetry.  DefQ^hbar generators carry
// a positive hbar weight; everywhere else hbar_weight is 0.
struct GeneratorSpec {
    std::string id;
    int m = 0;
    int n = 0;
    int degree = 0;
    SymmetryDatum symmetry;
    int hbar_weight = 0;
    std::vector<int> out_bunches; // DefQ bunch sizes (empty otherwise)
};

// Interned generator storage.  Indices are stable (deque) and assigned in
// deterministic registration order, so basis orderings and serializations
// are reproducible across runs.
class GenTable {
public:
    int intern(GeneratorSpec g) const {
        auto it = by_id_.find(g.id);
        if (it != by_id_.end()) return it->second;
        if (g.m + g.n < 1) throw std::invalid_argument("generator needs m+n >= 1: " + g.id);
        if (g.symmetry.m != g.m || g.symmetry.n != g.n)
            throw std::invalid_argument("symmetry datum does not act on the generator's slots: " + g.id);
        gens_.push_back(std::move(g));
        int idx = (int)gens_.size() - 1;
        by_id_.emplace(gens_.back().id, idx);
        return idx;
    }

    const GeneratorSpec& at(int idx) const { return gens_.at(idx); }
    std::optional<int> find(const std::string& id) const {
        auto it = by_id_.find(id);
        if (it == by_id_.end()) return std::nullopt;
        return it->second;
    }
    size_t size() const { return gens_.size(); }

private:
    mutable std::deque<GeneratorSpec> gens_;
    mutable std::map<std::string, int> by_id_;
};

} // namespace wheelhouse
