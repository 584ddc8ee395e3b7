#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "fixtures.hpp"
#include "webinv/webgraph.hpp"

using namespace webinv;
using fixtures::B;
using fixtures::W;

namespace {
bool mentions(const std::vector<std::string>& errs, const std::string& needle) {
    return std::any_of(errs.begin(), errs.end(),
                       [&](const std::string& e) { return e.find(needle) != std::string::npos; });
}
}  // namespace

TEST_CASE("validate accepts well-formed webs", "[webgraph]") {
    CHECK(validate(Web{}).empty());
    CHECK(validate(fixtures::single_edge_web()).empty());
    CHECK(validate(fixtures::two_arc_web()).empty());
    CHECK(validate(fixtures::h_web()).empty());
    CHECK(validate(fixtures::h_web(true)).empty());
    CHECK(validate(fixtures::h_with_arc_web()).empty());
}

TEST_CASE("validate flags elliptic faces", "[webgraph]") {
    auto errs = validate(fixtures::doubled_internal_edge_web());
    CHECK(mentions(errs, "multiple edge"));

    errs = validate(fixtures::square_web());
    REQUIRE(errs.size() == 1);
    CHECK(mentions(errs, "4-cycle"));

    // a doubled edge between two *boundary* vertices is a genuine basis web
    Web doubled;
    doubled.boundary = {{1, B, {1, 2}}, {2, W, {3, 4}}};
    doubled.edges = {{1, 4}, {2, 3}};
    CHECK(validate(doubled).empty());
}

TEST_CASE("validate flags structural damage", "[webgraph]") {
    Web w = fixtures::single_edge_web();
    w.boundary[1].id = 7;
    CHECK(mentions(validate(w), "boundary ids"));

    w = fixtures::h_web();
    w.internal[1].id = 5;
    CHECK(mentions(validate(w), "duplicate vertex id"));

    w = fixtures::single_edge_web();
    w.edges.push_back({1, 2});
    CHECK(mentions(validate(w), "used by two edges"));

    w = fixtures::single_edge_web();
    w.edges = {{1, 9}};
    CHECK(mentions(validate(w), "unknown half-edge"));

    w = fixtures::single_edge_web();
    w.boundary[0].half_edges.push_back(3);
    CHECK(mentions(validate(w), "belongs to no edge"));

    w = fixtures::single_edge_web();
    w.boundary[1].color = B;
    CHECK(mentions(validate(w), "same-colored"));

    // self-pairing at one vertex
    w = Web{};
    w.boundary = {{1, B, {1}}, {2, W, {2, 3, 4}}};
    w.edges = {{1, 2}, {3, 4}};
    CHECK(mentions(validate(w), "self-loop"));

    w = fixtures::h_web(true);
    w.labels.pop_back();
    CHECK(mentions(validate(w), "label table"));

    // floating empty boundary with leftover structure
    w = fixtures::single_edge_web();
    w.boundary.clear();
    CHECK_FALSE(validate(w).empty());
}

TEST_CASE("validate checks the rotation system embedding", "[webgraph]") {
    // reversing one internal rotation breaks planarity
    Web w = fixtures::h_web();
    std::swap(w.internal[0].half_edges[0], w.internal[0].half_edges[1]);
    CHECK_FALSE(validate(w).empty());

    // crossing arcs: 1-3 and 2-4 cannot be drawn in the disk
    Web x;
    x.boundary = {{1, B, {1}}, {2, W, {2}}, {3, W, {3}}, {4, B, {4}}};
    x.edges = {{1, 3}, {2, 4}};
    CHECK_FALSE(validate(x).empty());
}

TEST_CASE("signature and multidegree", "[webgraph]") {
    Web w = fixtures::h_with_arc_web();
    CHECK(signature_of(w) == std::vector<VertexColor>{B, W, W, B});
    CHECK(multidegree_of(w) == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("canonical_form is relabeling-invariant", "[webgraph]") {
    Web w = fixtures::h_web();
    std::string base = canonical_form(w);

    // permute internal ids and half-edge ids
    Web relabeled = w;
    relabeled.internal[0].id = 42;
    relabeled.internal[1].id = 17;
    auto remap = [](int h) { return h * 10 + 3; };
    for (auto& b : relabeled.boundary)
        for (auto& h : b.half_edges) h = remap(h);
    for (auto& v : relabeled.internal)
        for (auto& h : v.half_edges) h = remap(h);
    for (auto& e : relabeled.edges) {
        e.h1 = remap(e.h1);
        e.h2 = remap(e.h2);
    }
    CHECK(canonical_form(relabeled) == base);

    // cyclic rotation of an internal list is the same rotation system
    Web rotated = w;
    std::rotate(rotated.internal[0].half_edges.begin(), rotated.internal[0].half_edges.begin() + 1,
                rotated.internal[0].half_edges.end());
    CHECK(canonical_form(rotated) == base);

    // swapping the order internal vertices are listed in changes nothing
    Web reordered = w;
    std::swap(reordered.internal[0], reordered.internal[1]);
    CHECK(canonical_form(reordered) == base);

    CHECK(canonical_form(fixtures::two_arc_web()) != base);
    CHECK(canonical_form(fixtures::single_edge_web()) != canonical_form(fixtures::two_arc_web()));
}

TEST_CASE("unclasp splits boundary vertices in rotational order", "[webgraph]") {
    // all degrees 1: identity
    Web w = fixtures::h_web(true);
    CHECK(write_web(unclasp(w)) == write_web(w));

    Web c = fixtures::h_with_arc_web();
    Web u = unclasp(c);
    CHECK(validate(u).empty());
    REQUIRE(u.boundary.size() == 6);
    CHECK(signature_of(u) == std::vector<VertexColor>{B, W, W, W, B, B});
    CHECK(multidegree_of(u) == std::vector<int>{1, 1, 1, 1, 1, 1});
    // vertex 3's half-edges 3,4 become vertices 3,4; vertex 4's 5,6 become 5,6
    CHECK(u.boundary[2].half_edges == std::vector<int>{3});
    CHECK(u.boundary[3].half_edges == std::vector<int>{4});
    CHECK(u.boundary[4].half_edges == std::vector<int>{5});
    CHECK(u.boundary[5].half_edges == std::vector<int>{6});
    // internal ids were renumbered out of the way of the longer boundary
    for (const auto& v : u.internal) CHECK(v.id > 6);
}

TEST_CASE("clasp merges monochromatic groups and inverts unclasp", "[webgraph]") {
    Web c = fixtures::h_with_arc_web();
    Web u = unclasp(c);
    Web back = clasp(u, {1, 1, 2, 2});
    CHECK(validate(back).empty());
    CHECK(canonical_form(back) == canonical_form(c));
    CHECK(write_web(clasp(unclasp(fixtures::h_web()), {1, 1, 1, 1})) == write_web(fixtures::h_web()));

    CHECK_THROWS_AS(clasp(u, {1, 1, 2, 1}), std::invalid_argument);   // sum mismatch
    CHECK_THROWS_AS(clasp(u, {2, 1, 1, 2}), std::invalid_argument);   // group spans two colors
    CHECK_THROWS_AS(clasp(c, {1, 1, 2, 2}), std::invalid_argument);   // input degrees not all 1
    CHECK_THROWS_AS(clasp(u, {1, 0, 1, 1, 1, 2}), std::invalid_argument);  // zero group, no signature

    // degree-0 group with an explicit signature, then unclasp deletes it
    std::vector<VertexColor> sig = {B, W, W};
    Web padded = clasp(fixtures::single_edge_web(), {1, 0, 1}, &sig);
    CHECK(validate(padded).empty());
    REQUIRE(padded.boundary.size() == 3);
    CHECK(padded.boundary[1].color == W);
    CHECK(padded.boundary[1].half_edges.empty());
    CHECK(write_web(unclasp(padded)) == write_web(fixtures::single_edge_web()));
}

TEST_CASE("web text format round-trips", "[webgraph]") {
    for (const Web& w : {fixtures::single_edge_web(), fixtures::two_arc_web(), fixtures::h_web(true),
                         fixtures::h_with_arc_web(), Web{}}) {
        std::string text = write_web(w);
        Web parsed = read_web(text);
        CHECK(write_web(parsed) == text);
        CHECK(canonical_form(parsed) == canonical_form(w));
    }

    std::string h = write_web(fixtures::h_web(true));
    CHECK(h.find("web n=4\n") == 0);
    CHECK(h.find("l 10 4 -1 +-1\n") != std::string::npos);

    CHECK_THROWS_AS(read_web("b 1 B 1\n"), std::invalid_argument);          // missing header
    CHECK_THROWS_AS(read_web("web n=2\nb 1 B 1\n"), std::invalid_argument); // count mismatch
    CHECK_THROWS_AS(read_web("web n=0\nq 1 2\n"), std::invalid_argument);   // unknown tag
    CHECK_THROWS_AS(read_web("web n=0\ne 1\n"), std::invalid_argument);     // bad edge line
    CHECK_THROWS_AS(read_web("web n=0\nl 1 2 +1\n"), std::invalid_argument);  // label without edge
    CHECK_THROWS_AS(read_web("web n=1\nb 1 X 1\n"), std::invalid_argument);   // bad color
    CHECK_THROWS_AS(read_web("web n=0\ni 9 B 1 2\n"), std::invalid_argument); // not trivalent
}
