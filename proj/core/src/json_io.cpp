#include "wheelhouse/json_io.hpp"

#include <algorithm>

namespace wheelhouse {

using nlohmann::json;

json graph_to_json(const DecoratedGraph& g0, const std::string& preset_name) {
    CanonResult cr = canonicalize(g0);
    if (cr.zero) throw std::invalid_argument("cannot serialize the zero class");
    const DecoratedGraph& g = cr.graph;
    json j;
    j["preset"] = preset_name;
    json verts = json::array();
    for (const auto& v : g.vertices) {
        const auto& spec = g.table->at(v.gen);
        json vj;
        std::string id = spec.id;
        if (spec.hbar_weight > 0) {
            auto at = id.find('@');
            vj["hbar"] = spec.hbar_weight;
            id = id.substr(0, at);
        }
        vj["gen"] = id;
        verts.push_back(std::move(vj));
    }
    j["vertices"] = std::move(verts);
    std::vector<GEdge> edges = g.edges;
    std::sort(edges.begin(), edges.end());
    json je = json::array(), marks = json::array();
    for (size_t i = 0; i < edges.size(); ++i) {
        je.push_back({edges[i].sv, edges[i].ss, edges[i].tv, edges[i].ts});
        if (edges[i].mark) marks.push_back((int)i);
    }
    j["edges"] = std::move(je);
    j["marks"] = std::move(marks);
    json ji = json::array(), jo = json::array();
    for (size_t L = 0; L < g.inputs.size(); ++L)
        ji.push_back({(int)L + 1, g.inputs[L].first, g.inputs[L].second});
    for (size_t L = 0; L < g.outputs.size(); ++L)
        jo.push_back({(int)L + 1, g.outputs[L].first, g.outputs[L].second});
    j["inputs"] = std::move(ji);
    j["outputs"] = std::move(jo);
    return j;
}

DecoratedGraph graph_from_json(const json& j, const Preset& preset) {
    DecoratedGraph g;
    g.table = &preset.table();
    for (const auto& vj : j.at("vertices")) {
        std::string id = vj.at("gen").get<std::string>();
        if (vj.contains("hbar")) id += "@" + std::to_string(vj.at("hbar").get<int>());
        g.vertices.push_back({preset.gen_by_id(id)});
    }
    for (const auto& ej : j.at("edges"))
        g.edges.push_back({ej.at(0).get<int>(), ej.at(1).get<int>(), ej.at(2).get<int>(),
                           ej.at(3).get<int>(), false});
    if (j.contains("marks"))
        for (const auto& mj : j.at("marks")) g.edges.at(mj.get<size_t>()).mark = true;
    auto legs = [&](const json& arr, std::vector<std::pair<int, int>>& out) {
        out.resize(arr.size());
        for (const auto& lj : arr) {
            int label = lj.at(0).get<int>();
            out.at(label - 1) = {lj.at(1).get<int>(), lj.at(2).get<int>()};
        }
    };
    legs(j.at("inputs"), g.inputs);
    legs(j.at("outputs"), g.outputs);
    g.validate();
    return g;
}

json sum_to_json(const GraphSum& s, const std::string& preset_name) {
    json j;
    j["preset"] = preset_name;
    json terms = json::array();
    for (const auto& [k, t] : s.terms()) {
        json tj;
        tj["coeff"] = rat_str(t.coeff);
        tj["graph"] = graph_to_json(t.graph, preset_name);
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    return j;
}

GraphSum sum_from_json(const json& j, const Preset& preset) {
    GraphSum s;
    for (const auto& tj : j.at("terms"))
        s.add(graph_from_json(tj.at("graph"), preset), rat_parse(tj.at("coeff").get<std::string>()));
    return s;
}

std::string canonical_dump(const json& j) { return j.dump(2); }

} // namespace wheelhouse
