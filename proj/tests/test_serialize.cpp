#include <doctest.h>

#include <regex>

#include "antiramsey/errors.hpp"
#include "antiramsey/serialize.hpp"

using namespace antiramsey;
using antiramsey::io::json;

namespace {

bool is_rational_string(const json& j) {
    static const std::regex pattern("-?[0-9]+/[1-9][0-9]*");
    return j.is_string() && std::regex_match(j.get<std::string>(), pattern);
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("decomposition round trip") {
    Graph g = complete_graph(9);
    Decomposition d = degenerate_decomposition(g);
    json doc = io::decomposition_json(d);
    CHECK(is_rational_string(doc.at("m")));
    for (const char* key : {"m", "k", "K", "order", "layers", "residual"}) CHECK(doc.contains(key));
    Decomposition back = io::decomposition_from_json(json::parse(doc.dump()));
    CHECK(back.m_value == d.m_value);
    CHECK(back.k == d.k);
    CHECK(back.K == d.K);
    CHECK(back.order == d.order);
    CHECK(back.forests == d.forests);
    CHECK(back.residual == d.residual);
}

TEST_CASE("colouring round trip and schema") {
    Graph g = complete_graph(7);
    ColoringResult res = anti_rainbow_coloring(g);
    json doc = io::coloring_json(g, res.coloring);
    CHECK(is_rational_string(doc.at("m")));
    CHECK(doc.at("edges").size() == static_cast<std::size_t>(g.edge_count()));
    for (const json& e : doc.at("edges"))
        for (const char* key : {"id", "u", "v", "layer", "color"}) CHECK(e.contains(key));
    EdgeColoring back = io::coloring_from_json(json::parse(doc.dump()), g);
    CHECK(back.colour == res.coloring.colour);
    CHECK(back.layer_of == res.coloring.layer_of);
    CHECK(back.r == res.coloring.r);
    CHECK(back.palettes.size() == res.coloring.palettes.size());
    Decomposition rebuilt = io::decomposition_from_coloring(back);
    CHECK(rebuilt.forests == res.decomposition.forests);
    CHECK(rebuilt.residual == res.decomposition.residual);
}

TEST_CASE("malformed documents are input errors") {
    Graph g = complete_graph(3);
    json doc = io::coloring_json(g, anti_rainbow_coloring(g).coloring);
    json missing = doc;
    missing.at("edges").erase(0);
    CHECK_THROWS_AS(io::coloring_from_json(missing, g), InputError);
    json wrong = doc;
    wrong.at("edges")[0]["u"] = 2;
    wrong.at("edges")[0]["v"] = 2;
    CHECK_THROWS_AS(io::coloring_from_json(wrong, g), InputError);
    json bad_m = doc;
    bad_m["m"] = 1.5;
    CHECK_THROWS_AS(io::coloring_from_json(bad_m, g), InputError);
    json bad_layer = doc;
    bad_layer.at("edges")[0]["layer"] = "G_2";
    CHECK_THROWS_AS(io::coloring_from_json(bad_layer, g), InputError);
    CHECK_THROWS_AS(io::decomposition_from_json(json::array()), InputError);
    CHECK_THROWS_AS(io::parse_json_text("{not json"), InputError);
}

TEST_CASE("other documents use exact rationals") {
    DensityWitness w = max_density(complete_graph(5));
    CHECK(is_rational_string(io::witness_json(w).at("value")));
    RainbowViolation v{{0, 1, 2}, {0, 1, 2}, Rational(2)};
    CHECK(is_rational_string(io::violations_json({v})[0].at("d2")));
    TrialRate rate{Rational(1, 200), 10, 3};
    json r = io::trial_rate_json(rate, 100);
    CHECK(r.at("p") == "1/200");
    CHECK(r.at("hits") == 3);
}

}
