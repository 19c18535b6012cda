#include "doctest.h"

#include <algorithm>
#include <complex>
#include <set>
#include <sstream>

#include "lef/geodesic_graph.hpp"
#include "lef/sampling.hpp"
#include "support.hpp"

using namespace lef;
using lef_test::brute_closed_walks;
using lef_test::load;

namespace {

GeodesicGraph theta_graph() {
    // two vertices joined by three parallel edges: 3-regular multigraph
    return make_graph(2, 2, {{0, 1}, {0, 1}, {0, 1}}, "theta");
}

}  // namespace

TEST_CASE("loading the bundled graphs") {
    GeodesicGraph k4 = load("k4.graph");
    CHECK(k4.num_vertices == 4);
    CHECK(k4.directed_edges() == 12);
    CHECK(k4.q == 2);
    CHECK(k4.warnings.empty());

    GeodesicGraph pet = load("petersen.graph");
    CHECK(pet.num_vertices == 10);
    CHECK(pet.directed_edges() == 30);

    for (const auto& file : lef_test::bundled_graphs()) CHECK_NOTHROW(load(file));
}

TEST_CASE("load diagnostics are distinct") {
    auto expect_kind = [](auto&& fn, GraphError::Kind kind) {
        bool thrown = false;
        try {
            fn();
        } catch (const GraphError& e) {
            thrown = true;
            CHECK(e.kind == kind);
        }
        CHECK(thrown);
    };

    // path graph: endpoint degree 1
    expect_kind([] { make_graph(2, 3, {{0, 1}, {1, 2}}, "path"); }, GraphError::Kind::Degree);
    expect_kind([] { make_graph(2, 2, {{0, 0}, {0, 1}}); }, GraphError::Kind::SelfLoop);
    expect_kind([] { make_graph(2, 2, {{0, 5}}); }, GraphError::Kind::Dangling);
    expect_kind(
        [] {
            std::istringstream bad("q 2\nedge 0 1\n");
            parse_graph(bad);
        },
        GraphError::Kind::Parse);

    // non-prime q is accepted with a warning: K_6 is 5-regular but claim q=4
    // cannot work; instead use the 5-regular complete graph with q = 4
    GeodesicGraph k6 = make_graph(4, 6,
                                  {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                   {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                   {2, 3}, {2, 4}, {2, 5},
                                   {3, 4}, {3, 5},
                                   {4, 5}},
                                  "k6");
    REQUIRE(k6.warnings.size() == 1);
    CHECK(k6.warnings[0].find("not prime") != std::string::npos);
}

TEST_CASE("multigraphs are allowed") {
    GeodesicGraph th = theta_graph();
    CHECK(th.directed_edges() == 6);
    CHECK(closed_geodesic_count(th, 2) == brute_closed_walks(th, 2));
    CHECK(closed_geodesic_count(th, 2) == 12);
}

TEST_CASE("transfer matrix structure") {
    GeodesicGraph k4 = load("k4.graph");
    IntMatrix t = hashimoto_matrix(k4);
    REQUIRE(t.rows() == 12);
    for (std::size_t e = 0; e < 12; ++e) {
        Int row_sum = 0;
        for (std::size_t f = 0; f < 12; ++f) row_sum += t(e, f);
        CHECK(row_sum == k4.q);
    }
    CHECK(t.trace() == 0);
    CHECK(closed_geodesic_count(k4, 2) == 0);  // simple graph
}

TEST_CASE("closed walk counts against brute enumeration") {
    GeodesicGraph k4 = load("k4.graph");
    CHECK(closed_geodesic_count(k4, 1) == 0);
    CHECK(closed_geodesic_count(k4, 3) == 24);
    CHECK(closed_geodesic_count(k4, 4) == 24);
    for (int m = 1; m <= 8; ++m)
        CHECK(closed_geodesic_count(k4, m) == brute_closed_walks(k4, m));

    GeodesicGraph k33 = load("k33.graph");
    for (int m = 1; m <= 8; ++m)
        CHECK(closed_geodesic_count(k33, m) == brute_closed_walks(k33, m));
}

TEST_CASE("primitive geodesics of K4") {
    GeodesicGraph k4 = load("k4.graph");
    CHECK(primitive_geodesics(k4, 2).empty());
    auto len3 = primitive_geodesics(k4, 3);
    CHECK(len3.size() == 8);  // 4 triangles, 2 orientations
    for (const auto& c : len3) {
        CHECK(c.length() == 3);
        CHECK(c.primitive());
    }
    auto len4 = primitive_geodesics(k4, 4);
    CHECK(len4.size() == 8 + 6);  // plus 3 four-cycles, 2 orientations
    CHECK(std::count_if(len4.begin(), len4.end(),
                        [](const GeodesicClass& c) { return c.length() == 4; }) == 6);
}

TEST_CASE("primitive geodesics respect the girth") {
    GeodesicGraph pet = load("petersen.graph");
    CHECK(primitive_geodesics(pet, 4).empty());
    auto len5 = primitive_geodesics(pet, 5);
    CHECK(len5.size() == 24);  // 12 pentagons, 2 orientations
}

TEST_CASE("deterministic enumeration order") {
    GeodesicGraph k4 = load("k4.graph");
    auto a = primitive_geodesics(k4, 6);
    auto b = primitive_geodesics(k4, 6);
    CHECK(a == b);
    for (std::size_t i = 1; i < a.size(); ++i) {
        bool ordered = a[i - 1].length() < a[i].length() ||
                       (a[i - 1].length() == a[i].length() && a[i - 1].edges < a[i].edges);
        CHECK(ordered);
    }
}

TEST_CASE("classes are closed under orientation reversal") {
    GeodesicGraph g = load("cube3.graph");
    auto classes = primitive_geodesics(g, 8);
    std::set<std::vector<int>> canon;
    for (const auto& c : classes) canon.insert(c.edges);
    for (const auto& c : classes) {
        std::vector<int> reversed;
        for (auto it = c.edges.rbegin(); it != c.edges.rend(); ++it)
            reversed.push_back(g.rev(*it));
        CHECK(canon.count(canonical_rotation(reversed)) == 1);
    }
}

TEST_CASE("module-level trace identity: tr(T^m) = sum of primitive lengths") {
    for (const std::string& file :
         {std::string("k4.graph"), std::string("k33.graph"), std::string("cube3.graph")}) {
        GeodesicGraph g = load(file);
        auto prims = primitive_geodesics(g, 12);
        auto traces = transfer_traces(g, 12);
        for (int m = 1; m <= 12; ++m) {
            Int expected = 0;
            for (const auto& c : prims)
                if (m % c.length() == 0) expected += c.length();
            CHECK(traces[m] == expected);
        }
    }
}

TEST_CASE("primitive decomposition") {
    GeodesicGraph k4 = load("k4.graph");
    auto triangles = primitive_geodesics(k4, 3);
    REQUIRE(!triangles.empty());
    const auto& tri = triangles.front().edges;

    std::vector<int> doubled = tri;
    doubled.insert(doubled.end(), tri.begin(), tri.end());
    auto d2 = primitive_decomposition(k4, doubled);
    CHECK(d2.multiplicity == 2);
    CHECK(d2.primitive.edges == tri);

    std::vector<int> tripled = doubled;
    tripled.insert(tripled.end(), tri.begin(), tri.end());
    auto d3 = primitive_decomposition(k4, tripled);
    CHECK(d3.multiplicity == 3);
    CHECK(d3.primitive.edges == tri);

    auto squares = primitive_geodesics(k4, 4);
    auto sq = std::find_if(squares.begin(), squares.end(),
                           [](const GeodesicClass& c) { return c.length() == 4; });
    REQUIRE(sq != squares.end());
    auto d1 = primitive_decomposition(k4, sq->edges);
    CHECK(d1.multiplicity == 1);
    CHECK(d1.primitive.edges == sq->edges);

    // backtracking pair is not a cycle
    int e = 0;
    CHECK_THROWS_AS(primitive_decomposition(k4, std::vector<int>{e, k4.rev(e)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(primitive_decomposition(k4, std::vector<int>{0, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("canonical rotation is minimal and stable") {
    std::vector<int> c{5, 2, 7, 2};
    auto canon = canonical_rotation(c);
    CHECK(canon == std::vector<int>{2, 5, 2, 7});  // min over the two '2' starts
    CHECK(canonical_rotation(canon) == canon);
}

TEST_CASE("edge characters") {
    GeodesicGraph k4 = load("k4.graph");
    EdgeCharacter triv = EdgeCharacter::trivial(k4);
    CHECK(triv.is_trivial());

    auto triangles = primitive_geodesics(k4, 3);
    for (const auto& c : triangles)
        CHECK(std::abs(character_value(triv, c) - std::complex<double>(1, 0)) < 1e-15);

    // -1 on one undirected edge flips the sign of every triangle through it
    std::vector<Rational> turns(k4.undirected_edges(), Rational(0));
    turns[0] = Rational(1, 2);
    EdgeCharacter flip = EdgeCharacter::from_turns(k4, turns);
    CHECK_FALSE(flip.is_trivial());
    int flipped_edge = 0;
    for (const auto& c : triangles) {
        bool uses = std::count(c.edges.begin(), c.edges.end(), flipped_edge) +
                        std::count(c.edges.begin(), c.edges.end(), k4.rev(flipped_edge)) >
                    0;
        std::complex<double> v = character_value(flip, c);
        CHECK(std::abs(v - std::complex<double>(uses ? -1.0 : 1.0, 0.0)) < 1e-12);
    }

    // value on a power is the power of the value
    Rng rng(9);
    EdgeCharacter omega = random_edge_character(rng, k4);
    const auto& tri = triangles.front();
    std::vector<int> doubled = tri.edges;
    doubled.insert(doubled.end(), tri.edges.begin(), tri.edges.end());
    GeodesicClass power;
    power.edges = doubled;
    power.primitive_length = 3;
    power.multiplicity = 2;
    std::complex<double> v1 = character_value(omega, tri);
    CHECK(std::abs(character_value(omega, power) - v1 * v1) < 1e-12);

    // rotation invariance
    std::vector<int> rotated(tri.edges.begin() + 1, tri.edges.end());
    rotated.push_back(tri.edges.front());
    GeodesicClass rot;
    rot.edges = rotated;
    rot.primitive_length = 3;
    rot.multiplicity = 1;
    CHECK(std::abs(character_value(omega, rot) - v1) < 1e-12);
}

TEST_CASE("edge character validation") {
    GeodesicGraph k4 = load("k4.graph");
    std::vector<std::complex<double>> w(k4.directed_edges(), {1.0, 0.0});
    w[0] = {2.0, 0.0};  // off the unit circle
    CHECK_THROWS_AS(EdgeCharacter::from_values(k4, w), std::invalid_argument);
    w[0] = {0.0, 1.0};  // rev(0) must carry the inverse
    CHECK_THROWS_AS(EdgeCharacter::from_values(k4, w), std::invalid_argument);
    w[1] = {0.0, -1.0};
    CHECK_NOTHROW(EdgeCharacter::from_values(k4, w));
    CHECK_THROWS_AS(EdgeCharacter::from_turns(k4, std::vector<Rational>(2, Rational(0))),
                    std::invalid_argument);
}
