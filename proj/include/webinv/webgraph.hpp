#pragma once

// The web data structure: a planar embedded bipartite graph in a disk, stored
// as a rotation system. Boundary vertices are listed clockwise starting from
// vertex 1; each boundary vertex's half-edge list runs from its predecessor's
// side to its successor's side. Internal rotations are stored
// counterclockwise as seen from inside the disk.

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "webinv/weightpath.hpp"

namespace webinv {

struct BoundaryVertex {
    int id;  // 1..n in boundary order
    VertexColor color;
    std::vector<int> half_edges;
};

struct InternalVertex {
    int id;
    VertexColor color;
    std::array<int, 3> half_edges;  // counterclockwise
};

struct Edge {
    int h1, h2;
};

// sign/state labels recorded by the growth algorithm; horizontal edges have
// none, cap-created edges carry one label per endpoint
struct EdgeLabels {
    std::optional<SignState> first, second;
};

struct Web {
    std::vector<BoundaryVertex> boundary;
    std::vector<InternalVertex> internal;
    std::vector<Edge> edges;
    std::vector<EdgeLabels> labels;  // empty, or parallel to edges
};

inline Signature signature_of(const Web& w) {
    Signature sig;
    sig.reserve(w.boundary.size());
    for (const auto& b : w.boundary) sig.push_back(b.color);
    return sig;
}

inline std::vector<int> multidegree_of(const Web& w) {
    std::vector<int> deg;
    deg.reserve(w.boundary.size());
    for (const auto& b : w.boundary) deg.push_back(static_cast<int>(b.half_edges.size()));
    return deg;
}

// location of a half-edge: which vertex owns it (boundary position or
// internal position) and where in that vertex's rotation it sits
struct HalfEdgeRef {
    bool is_boundary;
    int vertex_pos;
    int slot;
};

struct WebIndex {
    std::map<int, HalfEdgeRef> owner;
    std::map<int, int> twin;     // half-edge -> opposite half-edge
    std::map<int, int> edge_of;  // half-edge -> index into edges
    std::vector<std::string> errors;

    VertexColor color_at(const Web& w, int h) const {
        const HalfEdgeRef& r = owner.at(h);
        return r.is_boundary ? w.boundary[r.vertex_pos].color : w.internal[r.vertex_pos].color;
    }
    // vertex key: boundary positions are 0..n-1, internal positions n..
    int vertex_key(const Web& w, int h) const {
        const HalfEdgeRef& r = owner.at(h);
        return r.is_boundary ? r.vertex_pos : static_cast<int>(w.boundary.size()) + r.vertex_pos;
    }
};

inline WebIndex make_index(const Web& w) {
    WebIndex ix;
    auto claim = [&](int h, HalfEdgeRef r) {
        if (!ix.owner.emplace(h, r).second)
            ix.errors.push_back("half-edge " + std::to_string(h) + " owned by two vertices");
    };
    for (int i = 0; i < static_cast<int>(w.boundary.size()); ++i)
        for (int s = 0; s < static_cast<int>(w.boundary[i].half_edges.size()); ++s)
            claim(w.boundary[i].half_edges[s], {true, i, s});
    for (int i = 0; i < static_cast<int>(w.internal.size()); ++i)
        for (int s = 0; s < 3; ++s)
            claim(w.internal[i].half_edges[s], {false, i, s});
    for (int e = 0; e < static_cast<int>(w.edges.size()); ++e) {
        for (int h : {w.edges[e].h1, w.edges[e].h2}) {
            if (!ix.owner.count(h)) {
                ix.errors.push_back("edge references unknown half-edge " + std::to_string(h));
                continue;
            }
            if (!ix.edge_of.emplace(h, e).second)
                ix.errors.push_back("half-edge " + std::to_string(h) + " used by two edges");
        }
        if (w.edges[e].h1 == w.edges[e].h2)
            ix.errors.push_back("edge joins a half-edge to itself");
    }
    for (const auto& [h, r] : ix.owner)
        if (!ix.edge_of.count(h))
            ix.errors.push_back("half-edge " + std::to_string(h) + " belongs to no edge");
    for (const auto& e : w.edges) {
        ix.twin[e.h1] = e.h2;
        ix.twin[e.h2] = e.h1;
    }
    if (!w.labels.empty() && w.labels.size() != w.edges.size())
        ix.errors.push_back("label table size differs from edge count");
    return ix;
}

// empty result = well-formed non-elliptic web embedded in the disk
inline std::vector<std::string> validate(const Web& w) {
    std::vector<std::string> errs;
    for (int i = 0; i < static_cast<int>(w.boundary.size()); ++i)
        if (w.boundary[i].id != i + 1)
            errs.push_back("boundary ids must be 1..n in order");
    {
        std::set<int> ids;
        for (const auto& b : w.boundary) ids.insert(b.id);
        for (const auto& v : w.internal)
            if (!ids.insert(v.id).second)
                errs.push_back("duplicate vertex id " + std::to_string(v.id));
    }
    WebIndex ix = make_index(w);
    errs.insert(errs.end(), ix.errors.begin(), ix.errors.end());
    if (!errs.empty()) return errs;  // deeper checks need a sound index

    const int n = static_cast<int>(w.boundary.size());
    // bipartite, and multiple edges are elliptic when an endpoint is internal
    // (doubled edges between two boundary vertices are genuine basis webs)
    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& e : w.edges) {
        VertexColor c1 = ix.color_at(w, e.h1), c2 = ix.color_at(w, e.h2);
        int v1 = ix.vertex_key(w, e.h1), v2 = ix.vertex_key(w, e.h2);
        if (v1 == v2) errs.push_back("self-loop at a vertex");
        else if (c1 == c2) errs.push_back("edge joins two same-colored vertices");
        pair_count[{std::min(v1, v2), std::max(v1, v2)}]++;
    }
    for (const auto& [pr, cnt] : pair_count)
        if (cnt > 1 && (pr.first >= n || pr.second >= n))
            errs.push_back("multiple edge at an internal vertex");
    // all-internal 4-cycles: two internal vertices with two common internal
    // neighbours; scanning only white pairs counts each 4-cycle once (its
    // corners alternate colors)
    {
        std::map<int, std::set<int>> nbr;  // internal vertex key -> internal neighbours
        for (const auto& e : w.edges) {
            int v1 = ix.vertex_key(w, e.h1), v2 = ix.vertex_key(w, e.h2);
            if (v1 >= n && v2 >= n) {
                nbr[v1].insert(v2);
                nbr[v2].insert(v1);
            }
        }
        std::vector<int> ivs;
        for (const auto& [v, _] : nbr)
            if (w.internal[v - n].color == VertexColor::white) ivs.push_back(v);
        for (size_t a = 0; a < ivs.size(); ++a)
            for (size_t b = a + 1; b < ivs.size(); ++b) {
                int common = 0;
                for (int x : nbr[ivs[a]]) common += nbr[ivs[b]].count(x);
                if (common >= 2) errs.push_back("4-cycle with all vertices internal");
            }
    }
    if (!errs.empty()) return errs;

    // disk-embedding check: augment with boundary-circle arcs, trace faces of
    // phi(h) = sigma(twin(h)), and require Euler count 2 plus an outer face
    // consisting of exactly the n backward arcs
    if (n == 0) {
        if (!w.internal.empty() || !w.edges.empty()) errs.push_back("component not attached to the boundary");
        return errs;
    }
    int next_h = 0;
    for (const auto& [h, _] : ix.owner) next_h = std::max(next_h, h + 1);
    std::vector<int> arc_f(n), arc_b(n);  // at vertex k: toward k+1 / toward k-1
    for (int k = 0; k < n; ++k) {
        arc_f[k] = next_h++;
        arc_b[k] = next_h++;
    }
    std::map<int, int> sigma, tw;
    for (const auto& [h, h2] : ix.twin) tw[h] = h2;
    for (int k = 0; k < n; ++k) {
        tw[arc_f[k]] = arc_b[(k + 1) % n];
        tw[arc_b[(k + 1) % n]] = arc_f[k];
    }
    for (int k = 0; k < n; ++k) {
        std::vector<int> cyc = {arc_f[k], arc_b[k]};
        cyc.insert(cyc.end(), w.boundary[k].half_edges.begin(), w.boundary[k].half_edges.end());
        for (size_t i = 0; i < cyc.size(); ++i) sigma[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    for (const auto& v : w.internal)
        for (int i = 0; i < 3; ++i) sigma[v.half_edges[i]] = v.half_edges[(i + 1) % 3];

    // connectivity over the augmented graph: every component must reach the
    // boundary circle
    {
        int total = n + static_cast<int>(w.internal.size());
        std::vector<int> parent(total);
        for (int i = 0; i < total; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& e : w.edges)
            parent[find(ix.vertex_key(w, e.h1))] = find(ix.vertex_key(w, e.h2));
        for (int k = 0; k + 1 < n; ++k) parent[find(k)] = find(k + 1);
        int root = find(0);
        for (int i = 0; i < total; ++i)
            if (find(i) != root) {
                errs.push_back("component not attached to the boundary");
                return errs;
            }
    }
    std::set<int> unvisited;
    for (const auto& [h, _] : sigma) unvisited.insert(h);
    int faces = 0;
    while (!unvisited.empty()) {
        int h0 = *unvisited.begin(), h = h0;
        do {
            unvisited.erase(h);
            h = sigma.at(tw.at(h));
        } while (h != h0);
        ++faces;
    }
    int V = n + static_cast<int>(w.internal.size());
    int E = static_cast<int>(w.edges.size()) + n;
    if (V - E + faces != 2) {
        errs.push_back("rotation system is not a disk embedding (Euler count " +
                       std::to_string(V - E + faces) + ")");
        return errs;
    }
    {
        std::set<int> backward(arc_b.begin(), arc_b.end());
        std::set<int> orbit;
        int h = arc_b[0];
        do {
            orbit.insert(h);
            h = sigma.at(tw.at(h));
        } while (h != arc_b[0]);
        if (orbit != backward) errs.push_back("outer face does not follow the boundary circle");
    }
    return errs;
}

// canonical byte encoding: breadth-first relabeling of internal vertices and
// edges from the boundary, each internal rotation anchored at its entry edge.
// Two webs are isotopic rel boundary iff their encodings are equal.
inline std::string canonical_form(const Web& w) {
    WebIndex ix = make_index(w);
    if (!ix.errors.empty()) throw std::invalid_argument("canonical_form: malformed web");
    std::map<int, int> edge_id;    // edge index -> canonical id
    std::map<int, int> vertex_id;  // internal position -> canonical id
    int next_edge = 1;
    auto edge_canon = [&](int h) {
        int e = ix.edge_of.at(h);
        auto it = edge_id.find(e);
        if (it != edge_id.end()) return it->second;
        edge_id[e] = next_edge;
        return next_edge++;
    };
    std::ostringstream out;
    std::deque<std::pair<int, int>> queue;  // (internal position, entry half-edge)
    auto reach = [&](int h) {
        // h = far half-edge of a traversed edge; enqueue its vertex if internal and new
        const HalfEdgeRef& r = ix.owner.at(h);
        if (r.is_boundary) return;
        if (vertex_id.count(r.vertex_pos)) return;
        vertex_id[r.vertex_pos] = static_cast<int>(w.boundary.size()) + static_cast<int>(vertex_id.size()) + 1;
        queue.emplace_back(r.vertex_pos, h);
    };
    for (const auto& b : w.boundary) {
        out << 'b' << ' ' << (b.color == VertexColor::black ? 'B' : 'W');
        for (int h : b.half_edges) {
            out << ' ' << edge_canon(h);
            reach(ix.twin.at(h));
        }
        out << '\n';
    }
    while (!queue.empty()) {
        auto [pos, entry] = queue.front();
        queue.pop_front();
        const InternalVertex& v = w.internal[pos];
        int slot = 0;
        while (v.half_edges[slot] != entry) ++slot;
        out << 'i' << ' ' << (v.color == VertexColor::black ? 'B' : 'W');
        for (int i = 0; i < 3; ++i) {
            int h = v.half_edges[(slot + i) % 3];
            out << ' ' << edge_canon(h);
            reach(ix.twin.at(h));
        }
        out << '\n';
    }
    return out.str();
}

// replace each boundary vertex of degree d by d consecutive degree-1 vertices
// in the same rotational order; degree-0 vertices are deleted
inline Web unclasp(const Web& w) {
    Web out;
    out.internal = w.internal;
    out.edges = w.edges;
    out.labels = w.labels;
    int max_id = 0;
    for (const auto& b : w.boundary)
        max_id += static_cast<int>(b.half_edges.size());
    int internal_shift = max_id;  // keep internal ids disjoint from 1..max_id
    std::set<int> taken;
    for (auto& v : out.internal) taken.insert(v.id);
    for (auto& v : out.internal)
        if (v.id <= max_id) {
            while (taken.count(internal_shift + 1)) ++internal_shift;
            v.id = ++internal_shift;
        }
    int k = 0;
    for (const auto& b : w.boundary)
        for (int h : b.half_edges) out.boundary.push_back({++k, b.color, {h}});
    return out;
}

// merge consecutive groups of degree-1 boundary vertices; group i gets degree
// degrees[i]. Zero-degree groups need the signature argument for their color.
inline Web clasp(const Web& w, const std::vector<int>& degrees,
                 const std::vector<VertexColor>* sig = nullptr) {
    int sum = 0;
    for (int d : degrees) {
        if (d < 0) throw std::invalid_argument("clasp: negative degree");
        sum += d;
    }
    if (sum != static_cast<int>(w.boundary.size()))
        throw std::invalid_argument("clasp: degrees do not sum to the boundary size");
    for (const auto& b : w.boundary)
        if (b.half_edges.size() != 1)
            throw std::invalid_argument("clasp: input boundary degrees must all be 1");
    if (sig && sig->size() != degrees.size())
        throw std::invalid_argument("clasp: signature length differs from degree count");
    Web out;
    out.internal = w.internal;
    out.edges = w.edges;
    out.labels = w.labels;
    int pos = 0;
    for (int i = 0; i < static_cast<int>(degrees.size()); ++i) {
        BoundaryVertex bv{i + 1, VertexColor::black, {}};
        if (degrees[i] == 0) {
            if (!sig) throw std::invalid_argument("clasp: zero-degree group needs a signature");
            bv.color = (*sig)[i];
        } else {
            bv.color = w.boundary[pos].color;
            for (int j = 0; j < degrees[i]; ++j, ++pos) {
                if (w.boundary[pos].color != bv.color)
                    throw std::invalid_argument("clasp: group is not monochromatic");
                bv.half_edges.push_back(w.boundary[pos].half_edges[0]);
            }
            if (sig && (*sig)[i] != bv.color)
                throw std::invalid_argument("clasp: signature disagrees with group color");
        }
        out.boundary.push_back(bv);
    }
    return out;
}

// ---- text format ------------------------------------------------------
// web n=<count>
// b <id> <B|W> <half-edge ids>        one per boundary vertex, in order
// i <id> <B|W> <h0> <h1> <h2>         internal, counterclockwise
// e <h1> <h2>                         one per edge
// l <h1> <h2> <sign-state> [<sign-state>]   optional growth labels

inline std::string sign_state_token(SignState t) {
    std::string s(1, t.sign == Sign::plus ? '+' : '-');
    return s + std::to_string(t.state);
}

inline std::string write_web(const Web& w) {
    std::ostringstream out;
    out << "web n=" << w.boundary.size() << '\n';
    for (const auto& b : w.boundary) {
        out << "b " << b.id << ' ' << (b.color == VertexColor::black ? 'B' : 'W');
        for (int h : b.half_edges) out << ' ' << h;
        out << '\n';
    }
    for (const auto& v : w.internal) {
        out << "i " << v.id << ' ' << (v.color == VertexColor::black ? 'B' : 'W');
        for (int h : v.half_edges) out << ' ' << h;
        out << '\n';
    }
    for (const auto& e : w.edges) out << "e " << e.h1 << ' ' << e.h2 << '\n';
    if (!w.labels.empty()) {
        for (size_t i = 0; i < w.edges.size(); ++i) {
            const EdgeLabels& l = w.labels[i];
            if (!l.first) continue;
            out << "l " << w.edges[i].h1 << ' ' << w.edges[i].h2 << ' ' << sign_state_token(*l.first);
            if (l.second) out << ' ' << sign_state_token(*l.second);
            out << '\n';
        }
    }
    return out.str();
}

inline Web read_web(std::istream& in) {
    Web w;
    std::string line;
    bool saw_header = false;
    size_t declared_n = 0;
    std::map<std::pair<int, int>, EdgeLabels> pending_labels;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "web") {
            std::string rest;
            ls >> rest;
            if (rest.rfind("n=", 0) != 0) throw std::invalid_argument("web header must be 'web n=<count>'");
            declared_n = std::stoul(rest.substr(2));
            saw_header = true;
        } else if (tag == "b" || tag == "i") {
            if (!saw_header) throw std::invalid_argument("missing 'web n=' header");
            int id;
            std::string col;
            if (!(ls >> id >> col) || (col != "B" && col != "W"))
                throw std::invalid_argument("bad vertex line: " + line);
            VertexColor c = col == "B" ? VertexColor::black : VertexColor::white;
            std::vector<int> hs;
            int h;
            while (ls >> h) hs.push_back(h);
            if (tag == "b") {
                w.boundary.push_back({id, c, hs});
            } else {
                if (hs.size() != 3) throw std::invalid_argument("internal vertex must list 3 half-edges: " + line);
                w.internal.push_back({id, c, {hs[0], hs[1], hs[2]}});
            }
        } else if (tag == "e") {
            int h1, h2;
            if (!(ls >> h1 >> h2)) throw std::invalid_argument("bad edge line: " + line);
            w.edges.push_back({h1, h2});
        } else if (tag == "l") {
            int h1, h2;
            std::string t1, t2;
            if (!(ls >> h1 >> h2 >> t1)) throw std::invalid_argument("bad label line: " + line);
            EdgeLabels l;
            SignStateString s1 = parse_sign_state(t1);
            if (s1.size() != 1) throw std::invalid_argument("bad label token: " + t1);
            l.first = s1[0];
            if (ls >> t2) {
                SignStateString s2 = parse_sign_state(t2);
                if (s2.size() != 1) throw std::invalid_argument("bad label token: " + t2);
                l.second = s2[0];
            }
            pending_labels[{h1, h2}] = l;
        } else {
            throw std::invalid_argument("unknown line tag: " + line);
        }
    }
    if (!saw_header) throw std::invalid_argument("missing 'web n=' header");
    if (declared_n != w.boundary.size())
        throw std::invalid_argument("header count differs from boundary lines");
    if (!pending_labels.empty()) {
        w.labels.resize(w.edges.size());
        for (const auto& [key, l] : pending_labels) {
            bool found = false;
            for (size_t i = 0; i < w.edges.size(); ++i)
                if (w.edges[i].h1 == key.first && w.edges[i].h2 == key.second) {
                    w.labels[i] = l;
                    found = true;
                    break;
                }
            if (!found) throw std::invalid_argument("label line for unknown edge");
        }
    }
    return w;
}

inline Web read_web(const std::string& text) {
    std::istringstream in(text);
    return read_web(in);
}

}  // namespace webinv
