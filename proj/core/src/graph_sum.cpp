#include "wheelhouse/graph_sum.hpp"

#include <stdexcept>

namespace wheelhouse {

void GraphSum::add(const DecoratedGraph& g, const Rat& coeff) {
    if (coeff == 0) return;
    CanonResult c = canonicalize(g);
    if (c.zero) return;
    add_canonical(c.graph, coeff * c.sign);
}

void GraphSum::add_canonical(const DecoratedGraph& g, const Rat& coeff) {
    if (coeff == 0) return;
    std::string key = encode_key(g);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Term{g, coeff});
    } else {
        it->second.coeff += coeff;
        if (it->second.coeff == 0) terms_.erase(it);
    }
}

void GraphSum::add(const GraphSum& other, const Rat& scale) {
    if (scale == 0) return;
    for (const auto& [k, t] : other.terms_) add_canonical(t.graph, t.coeff * scale);
}

GraphSum GraphSum::operator+(const GraphSum& o) const {
    GraphSum r = *this;
    r.add(o);
    return r;
}

GraphSum GraphSum::operator-(const GraphSum& o) const {
    GraphSum r = *this;
    r.add(o, -1);
    return r;
}

GraphSum GraphSum::operator*(const Rat& c) const {
    GraphSum r;
    r.add(*this, c);
    return r;
}

bool GraphSum::operator==(const GraphSum& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second.coeff != jt->second.coeff) return false;
    return true;
}

int GraphSum::common_degree() const {
    if (terms_.empty()) throw std::logic_error("degree of empty sum");
    int d = terms_.begin()->second.graph.degree();
    for (const auto& [k, t] : terms_)
        if (t.graph.degree() != d) throw std::logic_error("inhomogeneous graph sum (degree)");
    return d;
}

std::pair<int, int> GraphSum::common_biarity() const {
    if (terms_.empty()) throw std::logic_error("biarity of empty sum");
    auto b = std::make_pair(terms_.begin()->second.graph.num_outputs(),
                            terms_.begin()->second.graph.num_inputs());
    for (const auto& [k, t] : terms_)
        if (std::make_pair(t.graph.num_outputs(), t.graph.num_inputs()) != b)
            throw std::logic_error("inhomogeneous graph sum (biarity)");
    return b;
}

GraphSum singleton(const DecoratedGraph& g, const Rat& coeff) {
    GraphSum s;
    s.add(g, coeff);
    return s;
}

} // namespace wheelhouse
