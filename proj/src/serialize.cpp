#include "antiramsey/serialize.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "antiramsey/errors.hpp"

namespace antiramsey::io {

namespace {

Rational rational_field(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_string()) {
        throw InputError(std::string("missing rational field '") + key + "'");
    }
    return Rational::parse(doc.at(key).get<std::string>());
}

template <class T>
T field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("bad field '") + key + "': " + e.what());
    }
}

int parse_layer_tag(const std::string& tag) {
    if (tag == "residual") return kResidualLayer;
    if (tag.size() > 2 && tag.rfind("F_", 0) == 0) {
        try {
            std::size_t used = 0;
            int i = std::stoi(tag.substr(2), &used);
            if (used == tag.size() - 2 && i > 0) return i;
        } catch (const std::exception&) {
        }
    }
    throw InputError("bad layer tag '" + tag + "'");
}

}  // namespace

json decomposition_json(const Decomposition& d) {
    json layers = json::object();
    for (const auto& [i, edges] : d.forests) layers[std::to_string(i)] = edges;
    return {{"m", d.m_value.str()}, {"k", d.k},           {"K", d.K},
            {"order", d.order},     {"layers", layers},   {"residual", d.residual}};
}

Decomposition decomposition_from_json(const json& doc) {
    if (!doc.is_object()) throw InputError("decomposition document must be a JSON object");
    Decomposition d;
    d.m_value = rational_field(doc, "m");
    d.k = field<int>(doc, "k");
    d.K = field<int>(doc, "K");
    d.order = field<std::vector<Vertex>>(doc, "order");
    d.residual = field<std::vector<EdgeId>>(doc, "residual");
    const json& layers = doc.contains("layers") ? doc.at("layers") : throw InputError("missing field 'layers'");
    if (!layers.is_object()) throw InputError("'layers' must be an object");
    for (const auto& [key, value] : layers.items()) {
        int i = 0;
        try {
            std::size_t used = 0;
            i = std::stoi(key, &used);
            if (used != key.size()) throw InputError("bad layer key");
        } catch (const std::exception&) {
            throw InputError("bad layer key '" + key + "'");
        }
        try {
            d.forests[i] = value.get<std::vector<EdgeId>>();
        } catch (const json::exception& e) {
            throw InputError("bad layer '" + key + "': " + e.what());
        }
    }
    return d;
}

json coloring_json(const Graph& g, const EdgeColoring& c) {
    json edges = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        edges.push_back({{"id", e},
                         {"u", g.edge(e).u},
                         {"v", g.edge(e).v},
                         {"layer", layer_tag(c.layer_of[static_cast<std::size_t>(e)])},
                         {"color", c.colour[static_cast<std::size_t>(e)]}});
    }
    json palettes = json::object();
    for (const auto& [layer, range] : c.palettes) {
        palettes[layer_tag(layer)] = {{"first", range.first}, {"count", range.count}};
    }
    return {{"m", c.m_value.str()}, {"k", c.k},        {"K", c.K},
            {"r", c.r},             {"guarantee", c.guarantee},
            {"edges", edges},       {"palettes", palettes}};
}

EdgeColoring coloring_from_json(const json& doc, const Graph& g) {
    if (!doc.is_object()) throw InputError("colouring document must be a JSON object");
    EdgeColoring c;
    c.m_value = rational_field(doc, "m");
    c.k = field<int>(doc, "k");
    c.K = field<int>(doc, "K");
    c.r = field<std::int64_t>(doc, "r");
    c.guarantee = field<bool>(doc, "guarantee");
    c.colour.assign(static_cast<std::size_t>(g.edge_count()), -1);
    c.layer_of.assign(static_cast<std::size_t>(g.edge_count()), kResidualLayer);
    std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);
    const auto edges = field<json>(doc, "edges");
    if (!edges.is_array()) throw InputError("'edges' must be an array");
    for (const json& item : edges) {
        auto id = field<EdgeId>(item, "id");
        if (id < 0 || id >= g.edge_count() || seen[static_cast<std::size_t>(id)]) {
            throw InputError("colouring edge id " + std::to_string(id) + " is out of range or repeated");
        }
        seen[static_cast<std::size_t>(id)] = 1;
        Edge stated{field<Vertex>(item, "u"), field<Vertex>(item, "v")};
        const Edge& actual = g.edge(id);
        if (!(stated == actual) && !(stated.u == actual.v && stated.v == actual.u)) {
            throw InputError("colouring edge " + std::to_string(id) + " does not match the graph");
        }
        c.colour[static_cast<std::size_t>(id)] = field<int>(item, "color");
        c.layer_of[static_cast<std::size_t>(id)] = parse_layer_tag(field<std::string>(item, "layer"));
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw InputError("colouring does not cover every edge");
    if (doc.contains("palettes")) {
        for (const auto& [tag, range] : doc.at("palettes").items()) {
            c.palettes[parse_layer_tag(tag)] = {field<int>(range, "first"), field<int>(range, "count")};
        }
    }
    return c;
}

Decomposition decomposition_from_coloring(const EdgeColoring& c) {
    Decomposition d;
    d.m_value = c.m_value;
    d.k = c.k;
    d.K = c.K;
    for (int i = c.K; i >= c.k + 1; --i) d.forests[i];
    for (EdgeId e = 0; e < static_cast<EdgeId>(c.layer_of.size()); ++e) {
        int layer = c.layer_of[static_cast<std::size_t>(e)];
        if (layer == kResidualLayer) {
            d.residual.push_back(e);
        } else {
            d.forests[layer].push_back(e);
        }
    }
    return d;
}

json witness_json(const DensityWitness& w) {
    return {{"value", w.value.str()},
            {"vertices", w.vertices},
            {"edge_count", w.edge_count},
            {"vertex_count", w.vertex_count}};
}

json report_json(const Report& r) {
    json out = json::array();
    for (const auto& entry : r.entries) {
        out.push_back({{"check", entry.check}, {"status", std::string(to_string(entry.status))}, {"details", entry.details}});
    }
    return out;
}

json embedding_json(const Embedding& e) { return {{"mapping", e.mapping}, {"edge_images", e.edge_images}}; }

json violations_json(const std::vector<RainbowViolation>& v) {
    json out = json::array();
    for (const auto& item : v) {
        out.push_back({{"vertices", item.vertices}, {"edges", item.edges}, {"d2", item.two_density.str()}});
    }
    return out;
}

json trial_rate_json(const TrialRate& r, int n) {
    return {{"n", n}, {"p", r.p.str()}, {"trials", r.trials}, {"hits", r.hits}, {"rate", r.rate()}};
}

json sweep_summary_json(const TrialConfig& cfg, const std::vector<TrialRecord>& records) {
    int skipped = 0;
    int proper = 0;
    int decomp_ok = 0;
    int rainbow = 0;
    int searched = 0;
    int contains = 0;
    for (const auto& r : records) {
        if (r.skipped) {
            ++skipped;
            continue;
        }
        proper += r.coloring_proper;
        decomp_ok += r.decomposition_ok;
        contains += r.contains_pattern;
        if (r.rainbow_found) {
            ++searched;
            rainbow += *r.rainbow_found;
        }
    }
    return {{"n", cfg.n},
            {"p", cfg.p.str()},
            {"trials", cfg.trials},
            {"master_seed", cfg.master_seed},
            {"skipped", skipped},
            {"proper", proper},
            {"decomp_ok", decomp_ok},
            {"contains_pattern", contains},
            {"rainbow_searched", searched},
            {"rainbow_found", rainbow},
            {"note", "finite-n Monte-Carlo demonstration; asymptotic thresholds are not estimated"}};
}

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_json_text(buffer.str());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

}  // namespace antiramsey::io
