#include <catch2/catch_amalgamated.hpp>

#include "polynet/network.hpp"
#include "polynet/prng.hpp"

#include "test_util.hpp"

using namespace polynet;
using namespace testutil;

namespace {

const char* kChainDoc = R"({
  "vertices": [
    {"id": "a", "mass": "1", "gamma": "1/2", "bath": true, "temperature": "2",
     "pinning": ["0", "0", "1/2"]},
    {"id": "b", "mass": "3/2", "gamma": "0", "bath": false}
  ],
  "edges": [
    {"u": "a", "v": "b", "potential": ["0", "0", "0", "0", "1"]}
  ]
})";

std::string doc_with(const std::string& vertices, const std::string& edges) {
    return "{\"vertices\": [" + vertices + "], \"edges\": [" + edges + "]}";
}

const char* kVertexAB =
    R"({"id":"a","mass":"1","gamma":"1","bath":true},{"id":"b","mass":"1","gamma":"0","bath":false})";

} // namespace

TEST_CASE("parse a two-vertex chain") {
    const Network net = parse_network(kChainDoc);
    REQUIRE(net.vertices().size() == 2);
    REQUIRE(net.edges().size() == 1);
    CHECK(net.vertex("a").bath);
    CHECK(net.vertex("a").temperature.value() == 2);
    CHECK(net.vertex("b").mass == Rational(3, 2));
    CHECK(net.vertex("b").pinning.is_zero());
    CHECK(net.edges()[0].potential == Poly::monomial(4));
    CHECK(net.bath_set() == std::vector<std::string>{"a"});
}

TEST_CASE("parse and validation errors") {
    CHECK_THROWS_AS(parse_network("not json"), ParseError);
    CHECK_THROWS_AS(parse_network("{\"vertices\": []}"), ParseError);
    // self-edge
    CHECK_THROWS_AS(
        parse_network(doc_with(kVertexAB, R"({"u":"a","v":"a","potential":["0","0","0","1"]})")),
        ValidationError);
    // zero mass
    CHECK_THROWS_AS(
        parse_network(doc_with(
            R"({"id":"a","mass":"0","gamma":"1","bath":true})", "")),
        ValidationError);
    // unknown endpoint
    CHECK_THROWS_AS(
        parse_network(doc_with(kVertexAB, R"({"u":"a","v":"zz","potential":["0","0","0","1"]})")),
        ValidationError);
    // duplicate edge (reversed orientation)
    CHECK_THROWS_AS(
        parse_network(doc_with(kVertexAB,
                               R"({"u":"a","v":"b","potential":["0","0","0","1"]},
                                   {"u":"b","v":"a","potential":["0","0","0","1"]})")),
        ValidationError);
    // bath/gamma inconsistency
    CHECK_THROWS_AS(
        parse_network(doc_with(R"({"id":"a","mass":"1","gamma":"0","bath":true})", "")),
        ValidationError);
    CHECK_THROWS_AS(
        parse_network(doc_with(R"({"id":"a","mass":"1","gamma":"2","bath":false})", "")),
        ValidationError);
    // temperature on a bathless vertex
    CHECK_THROWS_AS(
        parse_network(doc_with(R"({"id":"a","mass":"1","gamma":"0","bath":false,"temperature":"1"})", "")),
        ValidationError);
    // interaction degree too low
    CHECK_THROWS_AS(
        parse_network(doc_with(kVertexAB, R"({"u":"a","v":"b","potential":["0","1"]})")),
        ValidationError);
}

TEST_CASE("serialize round-trips exactly") {
    const Network net = parse_network(kChainDoc);
    const std::string text = serialize_network(net);
    const Network again = parse_network(text);
    CHECK(serialize_network(again) == text);
    CHECK(again.vertices().size() == net.vertices().size());
    CHECK(again.vertex("b").mass == Rational(3, 2));
    CHECK(again.edges()[0].potential == net.edges()[0].potential);

    // Non-canonical rationals canonicalize on the way in.
    const Network canon = parse_network(doc_with(
        R"({"id":"a","mass":"2/4","gamma":"1","bath":true})", ""));
    CHECK(serialize_network(canon).find("\"1/2\"") != std::string::npos);
}

TEST_CASE("neighbors") {
    const Network net = chain(3, {quartic()});
    CHECK(net.neighbors("v1") == std::vector<std::string>{"c", "v2"});
    CHECK(net.neighbors("v2") == std::vector<std::string>{"v1"});
    CHECK_THROWS_AS(net.neighbors("nope"), UnknownVertex);

    const Network lone(
        {bath("c"), free_vertex("x")},
        {});
    CHECK(lone.neighbors("x").empty());

    const Network st = star({quartic(1), quartic(2), quartic(3)});
    CHECK(st.neighbors("c") == std::vector<std::string>{"v1", "v2", "v3"});
}

TEST_CASE("interaction orientation") {
    const Poly cubic = Poly::monomial(3);
    const Network net({bath("c"), free_vertex("w")}, {edge("c", "w", cubic)});
    CHECK(net.interaction_from("c", "w") == cubic);
    CHECK(net.interaction_from("w", "c") == -cubic);
    CHECK_THROWS_AS(net.interaction_from("c", "c"), NoSuchEdge);

    const Network even({bath("c"), free_vertex("w")}, {edge("c", "w", quartic())});
    CHECK(even.interaction_from("c", "w") == even.interaction_from("w", "c"));
}

TEST_CASE("interaction symmetry law", "[property]") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> coeffs(5);
        for (auto& c : coeffs) c = rng.rational(9, 9);
        while (coeffs.back() == 0) coeffs.back() = rng.rational(9, 9);
        const Network net({bath("c"), free_vertex("w")}, {edge("c", "w", Poly(coeffs))});
        // V_{cw}(x) == V_{wc}(-x), exactly.
        CHECK(net.interaction_from("c", "w") == reflect(net.interaction_from("w", "c")));
    }
}

TEST_CASE("class keys") {
    SECTION("plain quartic is already adjusted") {
        const Network net({bath("c"), free_vertex("v")}, {edge("c", "v", quartic())});
        const auto key = net.class_key("c", "v");
        CHECK(key.key == 12 * Poly::monomial(2));
        CHECK(key.shift == 0);
    }
    SECTION("translated quartic keeps the key, moves the shift") {
        // (t+1)^4; second derivative 12(t+1)^2 adjusts back to 12t^2.
        const Poly shifted = shift(quartic(), 1);
        const Network net({bath("c"), free_vertex("v")}, {edge("c", "v", shifted)});
        const auto key = net.class_key("c", "v");
        CHECK(key.key == 12 * Poly::monomial(2));
        CHECK(key.shift == Rational(-1));
    }
    SECTION("masses scale the key") {
        Vertex heavy = free_vertex("v");
        heavy.mass = 2;
        const Network net({bath("c"), heavy}, {edge("c", "v", quartic())});
        CHECK(net.class_key("c", "v").key == 6 * Poly::monomial(2));
    }
    SECTION("harmonic edge has no key") {
        const Network net({bath("c"), free_vertex("v")}, {edge("c", "v", Poly::monomial(2))});
        CHECK_THROWS_AS(net.class_key("c", "v"), DegreeTooLow);
    }
}

TEST_CASE("class key is invariant under stored-potential translation", "[property]") {
    SplitMix64 rng(512);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(rng.uniform(4, 6)));
        for (auto& c : coeffs) c = rng.rational(9, 9);
        while (coeffs.back() == 0) coeffs.back() = rng.rational(9, 9);
        const Poly pot(coeffs);
        const Rational a = rng.rational(9, 9);
        const Network base({bath("c"), free_vertex("v")}, {edge("c", "v", pot)});
        const Network moved({bath("c"), free_vertex("v")}, {edge("c", "v", shift(pot, a))});
        CHECK(base.class_key("c", "v").key == moved.class_key("c", "v").key);
    }
}

TEST_CASE("mode detection") {
    CHECK(star({quartic(1), quartic(2)}).mode().kind == ModeKind::Anharmonic);

    // All springs harmonic, quadratic pinning.
    std::vector<Vertex> vs{bath("c"), free_vertex("v1")};
    for (auto& v : vs) v.pinning = Poly{0, 0, Rational(1, 2)};
    const Network harmonic(vs, {edge("c", "v1", Poly::monomial(2))});
    CHECK(harmonic.mode().kind == ModeKind::Harmonic);

    // One cubic edge + one quadratic edge.
    const Network mixed({bath("c"), free_vertex("v1"), free_vertex("v2")},
                        {edge("c", "v1", Poly::monomial(3)), edge("v1", "v2", Poly::monomial(2))});
    CHECK(mixed.mode().kind == ModeKind::Unsupported);
    CHECK_FALSE(mixed.mode().reason.empty());

    // Harmonic springs with anharmonic pinning.
    std::vector<Vertex> vp{bath("c"), free_vertex("v1")};
    vp[1].pinning = Poly::monomial(4);
    const Network badpin(vp, {edge("c", "v1", Poly::monomial(2))});
    CHECK(badpin.mode().kind == ModeKind::Unsupported);

    // No edges at all: the decision path applies vacuously.
    const Network bare({bath("c")}, {});
    CHECK(bare.mode().kind == ModeKind::Anharmonic);
}

TEST_CASE("connectivity") {
    CHECK(chain(4, {quartic()}).connected());
    const Network split({bath("c"), free_vertex("x")}, {});
    CHECK_FALSE(split.connected());
}
