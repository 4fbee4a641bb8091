#include "wheelhouse/certificates.hpp"
#include "wheelhouse/delta.hpp"
#include "wheelhouse/linalg.hpp"

#include <stdexcept>

namespace wheelhouse {

GraphSum ass_loop_class(const Preset& ass) {
    DecoratedGraph x;
    x.table = &ass.table();
    x.vertices = {{ass.gen_ass_mu(3)}};
    x.edges = {{0, 0, 0, 1, false}}; // root looped into the middle input
    x.inputs = {{0, 0}, {0, 2}};
    return singleton(x);
}

GraphSum lieb_threewheel_class(const Preset& P) {
    // The unique closed combination of the three displayed three-wheel
    // shapes, normalized to +1 on the chain graph.  Assembling the class
    // through the kernel keeps it independent of the engine's canonical
    // sign conventions.
    const GenTable& T = P.table();
    std::vector<DecoratedGraph> shapes;
    {
        // chain of three looped vertices (2,1) -> (2,2) -> (1,2)
        DecoratedGraph g;
        g.table = &T;
        g.vertices = {{P.gen_lieb(2, 1)}, {P.gen_lieb(2, 2)}, {P.gen_lieb(1, 2)}};
        g.edges = {
            {0, 0, 0, 0, false}, // loop on the bottom vertex
            {0, 1, 1, 1, false}, // bottom -> middle
            {1, 0, 1, 0, false}, // loop on the middle vertex
            {1, 1, 2, 1, false}, // middle -> top
            {2, 0, 2, 0, false}, // loop on the top vertex
        };
        shapes.push_back(g);
    }
    {
        // two looped (2,1) vertices feeding a looped (1,3) vertex
        DecoratedGraph g;
        g.table = &T;
        g.vertices = {{P.gen_lieb(1, 3)}, {P.gen_lieb(2, 1)}, {P.gen_lieb(2, 1)}};
        g.edges = {
            {0, 0, 0, 0, false}, // loop on the top vertex
            {1, 0, 1, 0, false}, // loop on the first bottom vertex
            {1, 1, 0, 1, false},
            {2, 0, 2, 0, false}, // loop on the second bottom vertex
            {2, 1, 0, 2, false},
        };
        shapes.push_back(g);
    }
    {
        // one looped (3,1) vertex feeding two looped (1,2) vertices
        DecoratedGraph g;
        g.table = &T;
        g.vertices = {{P.gen_lieb(3, 1)}, {P.gen_lieb(1, 2)}, {P.gen_lieb(1, 2)}};
        g.edges = {
            {0, 0, 0, 0, false}, // loop on the bottom vertex
            {0, 1, 1, 1, false},
            {0, 2, 2, 1, false},
            {1, 0, 1, 0, false}, // loops on the top vertices
            {2, 0, 2, 0, false},
        };
        shapes.push_back(g);
    }
    DeltaEngine eng(P);
    std::vector<GraphSum> imgs;
    std::map<std::string, int> keys;
    std::vector<CanonResult> canon;
    for (const auto& g : shapes) {
        canon.push_back(canonicalize(g));
        imgs.push_back(eng.apply_graph(canon.back().graph));
        for (const auto& [k, t] : imgs.back().terms()) keys.emplace(k, (int)keys.size());
    }
    SparseMatrix A((int)keys.size(), (int)shapes.size());
    for (size_t j = 0; j < imgs.size(); ++j)
        for (const auto& [k, t] : imgs[j].terms()) A.add(keys[k], (int)j, t.coeff);
    auto ker = A.kernel();
    if (ker.size() != 1) throw std::logic_error("three-wheel class: kernel is not one-dimensional");
    Rat scale = Rat(1) / ker[0][0];
    GraphSum out;
    for (size_t j = 0; j < shapes.size(); ++j)
        out.add_canonical(canon[j].graph, ker[0][j] * scale);
    return out;
}

GraphSum ib_minus_one_class(const Preset& ib) {
    const GenTable& T = ib.table();
    GraphSum out;
    {
        DecoratedGraph g;
        g.table = &T;
        g.vertices = {{ib.gen_ib(2, 2)}};
        g.edges = {{0, 0, 0, 1, false}}; // first output into the second input
        g.outputs = {{0, 1}};
        g.inputs = {{0, 0}};
        out.add(g, 1);
    }
    {
        DecoratedGraph g;
        g.table = &T;
        g.vertices = {{ib.gen_ib(2, 2)}};
        g.edges = {{0, 1, 0, 0, false}}; // second output into the first input
        g.outputs = {{0, 0}};
        g.inputs = {{0, 1}};
        out.add(g, -1);
    }
    return out;
}

DecoratedGraph theta_wheel_graph(const Preset& P) {
    DecoratedGraph g;
    g.table = &P.table();
    g.vertices = {{P.gen_lieb(1, 2)}, {P.gen_lieb(2, 1)}, {P.gen_lieb(2, 1)}};
    g.edges = {
        {1, 0, 0, 0, false}, // first cobracket into the bracket
        {2, 0, 0, 1, false}, // second cobracket into the bracket
        {1, 1, 2, 0, false}, // the two-cycle between the cobrackets
        {2, 1, 1, 0, false},
    };
    g.outputs = {{0, 0}};
    return g;
}

DecoratedGraph xi_wheel_graph(const Preset& P) {
    DecoratedGraph g;
    g.table = &P.table();
    g.vertices = {{P.gen_lieb(1, 2)}, {P.gen_lieb(1, 2)}, {P.gen_lieb(2, 1)}};
    g.edges = {
        {0, 0, 1, 0, false}, // the two-cycle between the brackets
        {1, 0, 0, 1, false},
        {2, 0, 1, 1, false}, // cobracket feeding both brackets
        {2, 1, 0, 0, false},
    };
    g.inputs = {{2, 0}};
    return g;
}

DecoratedGraph theta_capped_graph(const Preset& P) {
    DecoratedGraph g = theta_wheel_graph(P);
    int cap = P.gen_lieb(2, 1);
    g.vertices.push_back({cap});
    g.edges.push_back({0, 0, 3, 0, false}); // bracket output into the cap
    g.outputs = {{3, 0}, {3, 1}};
    return g;
}

DecoratedGraph xi_capped_graph(const Preset& P) {
    DecoratedGraph g = xi_wheel_graph(P);
    int cap = P.gen_lieb(1, 2);
    g.vertices.push_back({cap});
    g.edges.push_back({3, 0, 2, 0, false}); // cap output into the cobracket
    g.inputs = {{3, 0}, {3, 1}};
    return g;
}

GraphSum certificate_by_name(const std::string& name, const Preset& preset) {
    if (name == "ass_loop") return ass_loop_class(preset);
    if (name == "lieb_threewheel") return lieb_threewheel_class(preset);
    if (name == "ib_minus_one") return ib_minus_one_class(preset);
    throw std::invalid_argument("unknown certificate: " + name);
}

} // namespace wheelhouse
