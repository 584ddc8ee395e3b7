#pragma once

// The growth algorithm: build the unique non-elliptic web hanging from a
// dominant sign/state string by repeatedly applying the H / Y / cap rules to
// adjacent frontier strands, read a web's labeling back off its lex-minimal
// coloring, and invert single rule applications (trimming).

#include <functional>
#include <optional>
#include <utility>

#include "webinv/coloring.hpp"

namespace webinv {

// rules named by the states of the two strands they consume; H rules pair
// opposite signs, Y rules equal signs, cap closes an opposite-sign (1,-1)
enum class RuleKind { h10, h00, h0m1, cap, y10, y0m1, y1m1 };

struct FrontierStrand {
    int half_edge;
    SignState label;
};

struct GrowthFrontier {
    std::vector<FrontierStrand> dangling;  // left to right
};

// bottom states produced by the H rule for top states (ja, jb); the strand
// signs swap sides
inline std::optional<std::pair<State, State>> h_bottom_states(State ja, State jb) {
    if (ja == 1 && jb == 0) return std::pair<State, State>{0, 1};
    if (ja == 0 && jb == 0) return std::pair<State, State>{-1, 1};
    if (ja == 0 && jb == -1) return std::pair<State, State>{-1, 0};
    return std::nullopt;
}

// state of the single strand produced by the Y rule, which carries the
// opposite sign of the two consumed strands
inline std::optional<State> y_output_state(State ja, State jb) {
    if (ja == 1 && jb == 0) return 1;
    if (ja == 0 && jb == -1) return -1;
    if (ja == 1 && jb == -1) return 0;
    return std::nullopt;
}

struct RuleMatch {
    int position;  // 1-based: pairs strands position and position+1
    RuleKind kind;
    bool operator==(const RuleMatch&) const = default;
};

inline std::vector<RuleMatch> applicable_rules(const GrowthFrontier& f) {
    std::vector<RuleMatch> out;
    for (int i = 0; i + 1 < static_cast<int>(f.dangling.size()); ++i) {
        const SignState a = f.dangling[i].label, b = f.dangling[i + 1].label;
        if (a.sign != b.sign) {
            if (a.state == 1 && b.state == -1) out.push_back({i + 1, RuleKind::cap});
            else if (a.state == 1 && b.state == 0) out.push_back({i + 1, RuleKind::h10});
            else if (a.state == 0 && b.state == 0) out.push_back({i + 1, RuleKind::h00});
            else if (a.state == 0 && b.state == -1) out.push_back({i + 1, RuleKind::h0m1});
        } else {
            if (a.state == 1 && b.state == 0) out.push_back({i + 1, RuleKind::y10});
            else if (a.state == 0 && b.state == -1) out.push_back({i + 1, RuleKind::y0m1});
            else if (a.state == 1 && b.state == -1) out.push_back({i + 1, RuleKind::y1m1});
        }
    }
    return out;
}

// picks which applicable rule to fire next; default is the leftmost
using RuleChooser = std::function<size_t(const std::vector<RuleMatch>&)>;

// Build the web for a dominant string. Boundary vertex k gets half-edge k;
// created half-edges, vertices and edges are numbered in creation order, so
// the output is deterministic. Growth labels are recorded per edge (both
// endpoint labels on cap edges, none on horizontal edges).
inline Web grow(const SignStateString& s, const RuleChooser& choose = {}) {
    if (!is_dominant(s)) throw std::invalid_argument("grow: string is not dominant");
    const int n = static_cast<int>(s.size());
    Web w;
    GrowthFrontier f;
    for (int k = 1; k <= n; ++k) {
        w.boundary.push_back({k, color_of_sign(s[k - 1].sign), {k}});
        f.dangling.push_back({k, s[k - 1]});
    }
    int next_h = n + 1, next_v = n + 1;
    auto add_edge = [&](int h1, int h2, std::optional<SignState> l1,
                        std::optional<SignState> l2 = std::nullopt) {
        w.edges.push_back({h1, h2});
        w.labels.push_back({l1, l2});
    };
    int steps = 0;
    while (!f.dangling.empty()) {
        if (++steps > n * n + 16) throw std::logic_error("grow: rule applications exceed bound");
        auto matches = applicable_rules(f);
        if (matches.empty()) throw std::logic_error("grow: frontier stuck with no applicable rule");
        const RuleMatch m = matches[choose ? choose(matches) : 0];
        const int i = m.position - 1;
        const FrontierStrand a = f.dangling[i], b = f.dangling[i + 1];
        switch (m.kind) {
            case RuleKind::cap: {
                add_edge(a.half_edge, b.half_edge, a.label, b.label);
                f.dangling.erase(f.dangling.begin() + i, f.dangling.begin() + i + 2);
                break;
            }
            case RuleKind::y10:
            case RuleKind::y0m1:
            case RuleKind::y1m1: {
                int ha = next_h++, hb = next_h++, down = next_h++;
                w.internal.push_back({next_v++, opposite(color_of_sign(a.label.sign)),
                                      {hb, ha, down}});
                add_edge(a.half_edge, ha, a.label);
                add_edge(b.half_edge, hb, b.label);
                SignState out{flip(a.label.sign), *y_output_state(a.label.state, b.label.state)};
                f.dangling[i] = {down, out};
                f.dangling.erase(f.dangling.begin() + i + 1);
                break;
            }
            default: {  // the three H rules
                auto [ja2, jb2] = *h_bottom_states(a.label.state, b.label.state);
                int ha = next_h++, hb = next_h++;
                int hl = next_h++, hr = next_h++;
                int na = next_h++, nb = next_h++;
                w.internal.push_back({next_v++, opposite(color_of_sign(a.label.sign)), {hl, ha, na}});
                w.internal.push_back({next_v++, opposite(color_of_sign(b.label.sign)), {hb, hr, nb}});
                add_edge(a.half_edge, ha, a.label);
                add_edge(b.half_edge, hb, b.label);
                add_edge(hl, hr, std::nullopt);  // horizontal, never labeled
                f.dangling[i] = {na, {b.label.sign, ja2}};
                f.dangling[i + 1] = {nb, {a.label.sign, jb2}};
                break;
            }
        }
    }
    return w;
}

// the dominant string whose growth reproduces w: signs from the boundary
// colors, states from the lex-minimal proper coloring (black: state = color,
// white: state = -color)
inline SignStateString canonical_labeling(const Web& w) {
    for (const auto& b : w.boundary)
        if (b.half_edges.size() != 1)
            throw std::invalid_argument("canonical_labeling: boundary degrees must all be 1");
    EdgeColoring col = minimal_coloring(w);
    BoundaryWord word = boundary_word(w, col);
    SignStateString s;
    for (const BoundaryLetter& l : word)
        s.push_back({sign_of_color(l.at), l.at == VertexColor::black ? l.color : -l.color});
    if (!is_dominant(s)) throw std::runtime_error("canonical_labeling: minimal coloring is not dominant");
    return s;
}

// One trimming step: find the first position whose state is not 1 and undo
// the growth rule that consumed it — (a) an H (two internal vertices joined
// horizontally), (b) a Y (one shared internal vertex), or (c) a boundary
// arc. Returns the smaller web and the state string read off its boundary.
inline std::pair<Web, SignStateString> trim(const Web& w, const SignStateString& labeling) {
    const int n = static_cast<int>(w.boundary.size());
    if (n < 2) throw std::invalid_argument("trim: need at least two boundary vertices");
    if (static_cast<int>(labeling.size()) != n)
        throw std::invalid_argument("trim: labeling length differs from boundary size");
    if (!is_dominant(labeling)) throw std::invalid_argument("trim: labeling is not dominant");
    for (const auto& b : w.boundary)
        if (b.half_edges.size() != 1) throw std::invalid_argument("trim: boundary degrees must all be 1");

    int p = 1;  // 0-based index of the first state != 1; position i+1 in 1-based terms
    while (p < n && labeling[p].state == 1) ++p;
    // a dominant string ends in state -1, so p < n here
    WebIndex ix = make_index(w);
    if (!ix.errors.empty()) throw std::invalid_argument("trim: malformed web");

    const SignState la = labeling[p - 1], lb = labeling[p];
    const int da = w.boundary[p - 1].half_edges[0], db = w.boundary[p].half_edges[0];
    const int ea = ix.edge_of.at(da), eb = ix.edge_of.at(db);
    auto far_ref = [&](int h) { return ix.owner.at(ix.twin.at(h)); };

    // cyclic-successor check against the rotation an internal vertex was
    // created with; a mismatch means w did not come from growth
    auto cyclic_next = [](const std::array<int, 3>& rot, int h) {
        for (int i = 0; i < 3; ++i)
            if (rot[i] == h) return rot[(i + 1) % 3];
        return -1;
    };
    auto third_half_edge = [](const std::array<int, 3>& rot, int h1, int h2) {
        for (int h : rot)
            if (h != h1 && h != h2) return h;
        return -1;
    };

    Web out;
    SignStateString trimmed = labeling;
    std::vector<bool> drop_edge(w.edges.size(), false);
    std::vector<bool> drop_internal(w.internal.size(), false);
    // rebuilt boundary entries replacing positions p-1, p
    std::vector<BoundaryVertex> replacement;

    if (ea == eb) {
        // (c) the two vertices are joined by an arc: delete it
        if (la.sign == lb.sign || la.state != 1 || lb.state != -1)
            throw std::runtime_error("trim: arc configuration does not match its labels");
        drop_edge[ea] = true;
        trimmed.erase(trimmed.begin() + p - 1, trimmed.begin() + p + 1);
    } else if (far_ref(da).is_boundary || far_ref(db).is_boundary ||
               far_ref(da).vertex_pos == far_ref(db).vertex_pos) {
        // (b) both strands end at one shared internal vertex: undo a Y
        if (far_ref(da).is_boundary || far_ref(db).is_boundary)
            throw std::runtime_error("trim: configuration is not one of (a)/(b)/(c)");
        if (la.sign != lb.sign) throw std::runtime_error("trim: Y configuration needs equal signs");
        auto out_state = y_output_state(la.state, lb.state);
        if (!out_state) throw std::runtime_error("trim: Y configuration does not match its labels");
        int vpos = far_ref(da).vertex_pos;
        const InternalVertex& v = w.internal[vpos];
        int ha = ix.twin.at(da), hb = ix.twin.at(db);
        if (cyclic_next(v.half_edges, hb) != ha)
            throw std::runtime_error("trim: Y rotation disagrees with the boundary order");
        int down = third_half_edge(v.half_edges, ha, hb);
        drop_internal[vpos] = true;
        drop_edge[ea] = drop_edge[eb] = true;
        replacement.push_back({0, v.color, {down}});
        trimmed[p - 1] = {flip(la.sign), *out_state};
        trimmed.erase(trimmed.begin() + p);
    } else {
        // (a) two internal vertices joined by a horizontal edge: undo an H
        if (la.sign == lb.sign) throw std::runtime_error("trim: H configuration needs opposite signs");
        auto bottoms = h_bottom_states(la.state, lb.state);
        if (!bottoms) throw std::runtime_error("trim: H configuration does not match its labels");
        int lpos = far_ref(da).vertex_pos, rpos = far_ref(db).vertex_pos;
        const InternalVertex &L = w.internal[lpos], &R = w.internal[rpos];
        int ha = ix.twin.at(da), hb = ix.twin.at(db);
        int hl = -1, hr = -1;
        for (int h : L.half_edges) {
            int far = ix.twin.at(h);
            const HalfEdgeRef& r = ix.owner.at(far);
            if (!r.is_boundary && r.vertex_pos == rpos) { hl = h; hr = far; }
        }
        if (hl < 0) throw std::runtime_error("trim: configuration is not one of (a)/(b)/(c)");
        if (cyclic_next(L.half_edges, hl) != ha || cyclic_next(R.half_edges, hb) != hr)
            throw std::runtime_error("trim: H rotation disagrees with the boundary order");
        int na = third_half_edge(L.half_edges, hl, ha);
        int nb = third_half_edge(R.half_edges, hb, hr);
        drop_internal[lpos] = drop_internal[rpos] = true;
        drop_edge[ea] = drop_edge[eb] = drop_edge[ix.edge_of.at(hl)] = true;
        replacement.push_back({0, L.color, {na}});
        replacement.push_back({0, R.color, {nb}});
        trimmed[p - 1] = {lb.sign, bottoms->first};
        trimmed[p] = {la.sign, bottoms->second};
    }

    for (int k = 0; k < n; ++k) {
        if (k == p - 1) {
            for (const auto& r : replacement) out.boundary.push_back(r);
            continue;
        }
        if (k == p) continue;
        out.boundary.push_back(w.boundary[k]);
    }
    for (int k = 0; k < static_cast<int>(out.boundary.size()); ++k) out.boundary[k].id = k + 1;
    for (int k = 0; k < static_cast<int>(w.internal.size()); ++k)
        if (!drop_internal[k]) out.internal.push_back(w.internal[k]);
    for (size_t e = 0; e < w.edges.size(); ++e) {
        if (drop_edge[e]) continue;
        out.edges.push_back(w.edges[e]);
        if (!w.labels.empty()) out.labels.push_back(w.labels[e]);
    }
    return {out, trimmed};
}

}  // namespace webinv
