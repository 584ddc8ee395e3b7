#pragma once

// Hand-built webs used across the test suites. Boundary half-edge lists run
// clockwise (predecessor side to successor side); internal rotations are
// counterclockwise.

#include "webinv/webgraph.hpp"

namespace fixtures {

using namespace webinv;

constexpr VertexColor B = VertexColor::black;
constexpr VertexColor W = VertexColor::white;

// black 1 --- white 2
inline Web single_edge_web() {
    Web w;
    w.boundary = {{1, B, {1}}, {2, W, {2}}};
    w.edges = {{1, 2}};
    return w;
}

// two boundary arcs: 1-2 and 3-4
inline Web two_arc_web() {
    Web w;
    w.boundary = {{1, B, {1}}, {2, W, {2}}, {3, W, {3}}, {4, B, {4}}};
    w.edges = {{1, 2}, {3, 4}};
    return w;
}

// the H-shaped web: black 1 and 4 joined to internal white u, white 2 and 3
// joined to internal black v, horizontal edge u-v; labels as recorded by
// growth from +1,-1,--1,+-1
inline Web h_web(bool with_labels = false) {
    Web w;
    w.boundary = {{1, B, {1}}, {2, W, {2}}, {3, W, {3}}, {4, B, {4}}};
    w.internal = {{5, B, {6, 5, 7}}, {6, W, {9, 8, 10}}};
    w.edges = {{2, 5}, {3, 6}, {1, 8}, {7, 9}, {10, 4}};
    if (with_labels) {
        w.labels.resize(5);
        w.labels[0].first = SignState{Sign::minus, 1};
        w.labels[1].first = SignState{Sign::minus, -1};
        w.labels[2].first = SignState{Sign::plus, 1};
        w.labels[3].first = SignState{Sign::plus, 0};
        w.labels[4].first = SignState{Sign::minus, 1};
        w.labels[4].second = SignState{Sign::plus, -1};
    }
    return w;
}

// H web plus a boundary arc between vertices 3 and 4, giving multidegree
// (1,1,2,2) and signature black, white, white, black
inline Web h_with_arc_web() {
    Web w;
    w.boundary = {{1, B, {1}}, {2, W, {2}}, {3, W, {3, 4}}, {4, B, {5, 6}}};
    w.internal = {{5, W, {9, 7, 8}}, {6, B, {10, 12, 11}}};
    w.edges = {{1, 7}, {2, 10}, {3, 11}, {4, 5}, {6, 8}, {12, 9}};
    return w;
}

// four boundary legs into a square of internal vertices: a 4-cycle with all
// vertices internal
inline Web square_web() {
    Web w;
    w.boundary = {{1, B, {1}}, {2, W, {2}}, {3, B, {3}}, {4, W, {4}}};
    w.internal = {{5, W, {11, 28, 21}},
                  {6, B, {12, 22, 23}},
                  {7, W, {13, 24, 25}},
                  {8, B, {14, 26, 27}}};
    w.edges = {{1, 11}, {2, 12}, {3, 13}, {4, 14}, {21, 22}, {23, 24}, {25, 26}, {27, 28}};
    return w;
}

// three black boundary vertices joined to one internal white vertex
inline Web tripod_web() {
    Web w;
    w.boundary = {{1, B, {1}}, {2, B, {2}}, {3, B, {3}}};
    w.internal = {{4, W, {12, 11, 13}}};
    w.edges = {{1, 11}, {2, 12}, {3, 13}};
    return w;
}

// two parallel strands between a degree-2 black and a degree-2 white vertex
inline Web doubled_boundary_edge_web() {
    Web w;
    w.boundary = {{1, B, {1, 2}}, {2, W, {3, 4}}};
    w.edges = {{1, 4}, {2, 3}};
    return w;
}

// six boundary legs into a hexagonal ring of internal vertices: the smallest
// web with interior freedom (word-equal colorings differing inside)
inline Web hexagon_web() {
    Web w;
    w.boundary = {{1, B, {1}}, {2, W, {2}}, {3, B, {3}}, {4, W, {4}}, {5, B, {5}}, {6, W, {6}}};
    w.internal = {{7, W, {11, 33, 22}},  {8, B, {12, 23, 24}},  {9, W, {13, 25, 26}},
                  {10, B, {14, 27, 28}}, {11, W, {15, 29, 30}}, {12, B, {16, 31, 32}}};
    w.edges = {{1, 11},  {2, 12},  {3, 13},  {4, 14},  {5, 15},  {6, 16},
               {22, 23}, {24, 25}, {26, 27}, {28, 29}, {30, 31}, {32, 33}};
    return w;
}

// two internal vertices joined by a doubled edge
inline Web doubled_internal_edge_web() {
    Web w;
    w.boundary = {{1, B, {1}}, {2, W, {2}}};
    w.internal = {{3, W, {11, 13, 14}}, {4, B, {12, 16, 15}}};
    w.edges = {{1, 11}, {2, 12}, {13, 15}, {14, 16}};
    return w;
}

}  // namespace fixtures
