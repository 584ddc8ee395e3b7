#pragma once

// Proper edge colorings of a web: enumeration in lexicographic boundary-word
// order, the boundary-word comparison, the lex-minimal coloring, and the
// coloring determined by growth labels.

#include <deque>
#include <functional>
#include <stdexcept>
#include <vector>

#include "webinv/webgraph.hpp"

namespace webinv {

// colors of all edges, parallel to Web::edges
using EdgeColoring = std::vector<State>;

// boundary positions compare colors by 1 < 0 < -1 at black vertices and
// -1 < 0 < 1 at white ones
inline int color_rank(VertexColor at, State color) {
    if (color < -1 || color > 1) throw std::invalid_argument("color must be -1, 0 or 1");
    return at == VertexColor::black ? 1 - color : 1 + color;
}

inline State color_of_rank(VertexColor at, int rank) {
    return at == VertexColor::black ? 1 - rank : rank - 1;
}

struct BoundaryLetter {
    State color;
    VertexColor at;
    bool operator==(const BoundaryLetter&) const = default;
};

using BoundaryWord = std::vector<BoundaryLetter>;

inline BoundaryWord boundary_word(const Web& w, const EdgeColoring& col) {
    WebIndex ix = make_index(w);
    if (!ix.errors.empty()) throw std::invalid_argument("boundary_word: malformed web");
    BoundaryWord word;
    for (const auto& b : w.boundary)
        for (int h : b.half_edges) word.push_back({col.at(ix.edge_of.at(h)), b.color});
    return word;
}

inline bool is_proper(const Web& w, const EdgeColoring& col) {
    if (col.size() != w.edges.size()) return false;
    for (State c : col)
        if (c < -1 || c > 1) return false;
    WebIndex ix = make_index(w);
    for (const auto& v : w.internal) {
        int seen = 0;
        for (int h : v.half_edges) seen |= 1 << (col[ix.edge_of.at(h)] + 1);
        if (seen != 0b111) return false;  // three edges, three distinct colors
    }
    return true;
}

// visits every proper coloring in lexicographic boundary-word order (ties
// between word-equal colorings broken by interior assignment order); the
// visitor returns false to stop early. Edge assignment order: first
// appearance along the boundary word, then breadth-first through the
// interior — so the first coloring visited has the minimal word.
inline void for_each_coloring(const Web& w, const std::function<bool(const EdgeColoring&)>& visit) {
    WebIndex ix = make_index(w);
    if (!ix.errors.empty()) throw std::invalid_argument("for_each_coloring: malformed web");
    const int E = static_cast<int>(w.edges.size());

    // assignment order and per-edge color try-order
    std::vector<int> order;                      // edge indices
    std::vector<std::array<State, 3>> tries;     // color try-order per position
    std::vector<bool> placed(E, false);
    std::deque<std::pair<int, int>> queue;       // (internal position, entry half-edge)
    std::vector<bool> queued(w.internal.size(), false);
    auto reach = [&](int h) {
        const HalfEdgeRef& r = ix.owner.at(h);
        if (r.is_boundary || queued[r.vertex_pos]) return;
        queued[r.vertex_pos] = true;
        queue.emplace_back(r.vertex_pos, h);
    };
    auto place = [&](int e, VertexColor rank_basis) {
        if (placed[e]) return;
        placed[e] = true;
        order.push_back(e);
        tries.push_back({color_of_rank(rank_basis, 0), color_of_rank(rank_basis, 1),
                         color_of_rank(rank_basis, 2)});
    };
    for (const auto& b : w.boundary)
        for (int h : b.half_edges) {
            place(ix.edge_of.at(h), b.color);
            reach(ix.twin.at(h));
        }
    while (!queue.empty()) {
        auto [pos, entry] = queue.front();
        queue.pop_front();
        const InternalVertex& v = w.internal[pos];
        int slot = 0;
        while (v.half_edges[slot] != entry) ++slot;
        for (int i = 0; i < 3; ++i) {
            int h = v.half_edges[(slot + i) % 3];
            place(ix.edge_of.at(h), VertexColor::white);  // interior order is immaterial
            reach(ix.twin.at(h));
        }
    }

    // edges of each internal vertex, for the properness check
    std::vector<std::array<int, 3>> vertex_edges;
    for (const auto& v : w.internal)
        vertex_edges.push_back({ix.edge_of.at(v.half_edges[0]), ix.edge_of.at(v.half_edges[1]),
                                ix.edge_of.at(v.half_edges[2])});

    constexpr State kUnset = 9;
    EdgeColoring col(E, kUnset);
    auto consistent = [&](int e) {
        for (const auto& ve : vertex_edges) {
            if (ve[0] != e && ve[1] != e && ve[2] != e) continue;
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b)
                    if (col[ve[a]] != kUnset && col[ve[a]] == col[ve[b]]) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == E) return visit(col);
        int e = order[depth];
        for (State c : tries[depth]) {
            col[e] = c;
            if (consistent(e) && !self(self, depth + 1)) return false;
        }
        col[e] = kUnset;
        return true;
    };
    rec(rec, 0);
}

inline std::vector<EdgeColoring> enumerate_colorings(const Web& w) {
    std::vector<EdgeColoring> out;
    for_each_coloring(w, [&](const EdgeColoring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

// -1 / 0 / +1 as c1's boundary word compares less / equal / greater than c2's
inline int compare_colorings(const Web& w, const EdgeColoring& c1, const EdgeColoring& c2) {
    BoundaryWord w1 = boundary_word(w, c1), w2 = boundary_word(w, c2);
    if (w1.size() != w2.size()) throw std::invalid_argument("compare_colorings: words differ in length");
    for (size_t i = 0; i < w1.size(); ++i) {
        int r1 = color_rank(w1[i].at, w1[i].color), r2 = color_rank(w2[i].at, w2[i].color);
        if (r1 != r2) return r1 < r2 ? -1 : 1;
    }
    return 0;
}

// the unique proper coloring with lexicographically minimal boundary word
inline EdgeColoring minimal_coloring(const Web& w) {
    EdgeColoring best;
    for_each_coloring(w, [&](const EdgeColoring& c) {
        best = c;
        return false;  // first visited = minimal word
    });
    if (best.empty() && !w.edges.empty()) throw std::runtime_error("web has no proper coloring");
    return best;
}

// coloring determined by the recorded growth labels: a plus-signed label
// colors its edge by the state, a minus-signed one by the negated state;
// unlabeled (horizontal) edges take the color missing at their endpoints
inline EdgeColoring coloring_from_labels(const Web& w) {
    if (w.labels.size() != w.edges.size())
        throw std::invalid_argument("coloring_from_labels: web carries no label table");
    constexpr State kUnset = 9;
    EdgeColoring col(w.edges.size(), kUnset);
    auto color_of_label = [](SignState t) { return t.sign == Sign::plus ? t.state : -t.state; };
    for (size_t e = 0; e < w.edges.size(); ++e) {
        const EdgeLabels& l = w.labels[e];
        if (!l.first) continue;
        col[e] = color_of_label(*l.first);
        if (l.second && color_of_label(*l.second) != col[e])
            throw std::runtime_error("coloring_from_labels: endpoint labels disagree");
    }
    WebIndex ix = make_index(w);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& v : w.internal) {
            int unset = -1, sum = 0, set_count = 0;
            for (int h : v.half_edges) {
                int e = ix.edge_of.at(h);
                if (col[e] == kUnset) unset = e;
                else { sum += col[e]; ++set_count; }
            }
            if (set_count == 2 && unset >= 0) {
                col[unset] = -sum;  // the three distinct colors sum to zero
                changed = true;
            }
        }
    }
    for (State c : col)
        if (c == kUnset) throw std::runtime_error("coloring_from_labels: labels leave an edge undetermined");
    if (!is_proper(w, col)) throw std::runtime_error("coloring_from_labels: labels are not consistent");
    return col;
}

}  // namespace webinv
