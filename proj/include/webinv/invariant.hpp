#pragma once

// Web invariants as polynomials: evaluation by summing over proper colorings,
// leading terms via the canonical (minimal) coloring of the unclasped web,
// reconstruction of a web from its leading monomial, and expansion of
// invariant polynomials in the web basis by greedy leading-term subtraction.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "webinv/coloring.hpp"
#include "webinv/growth.hpp"
#include "webinv/polyring.hpp"
#include "webinv/webgraph.hpp"
#include "webinv/weightpath.hpp"

namespace webinv {

// +1 iff the colors around an internal vertex, read in its counterclockwise
// rotation order, are a cyclic rotation of (-1, 0, 1)
inline int internal_sign(State a, State b, State c) {
    const bool proper = a != b && b != c && a != c && -1 <= a && a <= 1 && -1 <= b && b <= 1 &&
                        -1 <= c && c <= 1;
    if (!proper) throw std::invalid_argument("internal_sign: colors must be -1, 0, 1 in some order");
    const State after_a = a == 1 ? -1 : a + 1;
    return b == after_a ? 1 : -1;
}

// product of the internal-vertex signs of a proper coloring
inline int coloring_sign(const Web& w, const EdgeColoring& col, const WebIndex& ix) {
    int sign = 1;
    for (const auto& v : w.internal) {
        sign *= internal_sign(col[ix.edge_of.at(v.half_edges[0])],
                              col[ix.edge_of.at(v.half_edges[1])],
                              col[ix.edge_of.at(v.half_edges[2])]);
    }
    return sign;
}

inline int coloring_sign(const Web& w, const EdgeColoring& col) {
    return coloring_sign(w, col, make_index(w));
}

// product over boundary half-edges of the variable picked by the coloring
inline Monomial monomial_of_coloring(const Web& w, const EdgeColoring& col,
                                     const VariableOrder& ord, const WebIndex& ix) {
    std::vector<int> slots;
    for (const auto& b : w.boundary)
        for (int h : b.half_edges) slots.push_back(ord.slot(b.id, col[ix.edge_of.at(h)]));
    return Monomial::from_slots(std::move(slots));
}

inline Monomial monomial_of_coloring(const Web& w, const EdgeColoring& col,
                                     const VariableOrder& ord) {
    return monomial_of_coloring(w, col, ord, make_index(w));
}

// the web invariant: signed sum of one monomial per proper coloring
inline Polynomial evaluate(const Web& w) {
    const auto errors = validate(w);
    if (!errors.empty()) throw std::invalid_argument("evaluate: invalid web: " + errors.front());
    const WebIndex ix = make_index(w);
    const VariableOrder ord(signature_of(w));
    Polynomial p;
    for_each_coloring(w, [&](const EdgeColoring& col) {
        p.add_term(monomial_of_coloring(w, col, ord, ix), coloring_sign(w, col, ix));
        return true;
    });
    return p;
}

// leading term from the unclasped web's minimal coloring (found greedily, not
// by enumerating every coloring); the coefficient is always +1 or -1
inline Term leading_term_via_labeling(const Web& w) {
    const auto errors = validate(w);
    if (!errors.empty())
        throw std::invalid_argument("leading_term_via_labeling: invalid web: " + errors.front());
    const Web uw = unclasp(w);
    // unclasp keeps the edge list intact, so this colors w as well
    const EdgeColoring col = minimal_coloring(uw);
    SignStateString s;
    for (const BoundaryLetter& l : boundary_word(uw, col))
        s.push_back({sign_of_color(l.at), l.at == VertexColor::black ? l.color : -l.color});
    if (!is_dominant(s))
        throw std::runtime_error("leading_term_via_labeling: minimal coloring is not dominant");
    const VariableOrder ord(signature_of(w));
    const WebIndex ix = make_index(w);
    return {coloring_sign(w, col, ix), monomial_of_coloring(w, col, ord, ix)};
}

// decode a monomial into per-vertex state lists, grow the dominant string,
// and clasp back to the signature's multidegree; the result is the unique
// basis web whose leading monomial is m
inline Web web_from_monomial(const Monomial& m, const Signature& sig) {
    const int n = static_cast<int>(sig.size());
    const VariableOrder ord(sig);
    const std::vector<int> degrees = m.multidegree(n);
    // within one vertex, ascending slots give ascending states for both colors
    SignStateString s;
    for (const auto& [slot, exp] : m.factors()) {
        const VertexColor at = ord.vertex_color_of(slot);
        const State state = at == VertexColor::black ? ord.color_of(slot) : -ord.color_of(slot);
        for (int i = 0; i < exp; ++i) s.push_back({sign_of_color(at), state});
    }
    if (!is_dominant(s))
        throw std::invalid_argument("web_from_monomial: decoded string \"" + to_text(s) +
                                    "\" is not dominant; the monomial is not a leading monomial "
                                    "for this signature");
    Web clasped = clasp(grow(s), degrees, &sig);
    const auto clasp_errors = validate(clasped);
    if (!clasp_errors.empty())
        throw std::invalid_argument(
            "web_from_monomial: clasping the grown web is not admissible here (" +
            clasp_errors.front() + "); the monomial is not a leading monomial for this signature");
    return clasped;
}

struct WebExpansion {
    std::vector<std::pair<Coefficient, Web>> terms;
};

// greedy expansion: repeatedly peel off the remainder's leading term with the
// basis web reconstructed from its monomial
inline WebExpansion expand(const Polynomial& f, const Signature& sig) {
    WebExpansion out;
    Polynomial remainder = f;
    std::optional<Monomial> previous;
    while (!remainder.is_zero()) {
        const Term lead = remainder.leading_term();
        if (previous && grevlex_compare(lead.monomial, *previous) >= 0)
            throw std::logic_error("expand: leading monomial did not decrease");
        previous = lead.monomial;
        Web w;
        try {
            w = web_from_monomial(lead.monomial, sig);
        } catch (const std::invalid_argument& err) {
            throw std::runtime_error(
                std::string("expand: input is not an integer combination of web invariants: ") +
                err.what());
        }
        const Polynomial inv = evaluate(w);
        const Term wlead = inv.leading_term();
        if (wlead.monomial != lead.monomial)
            throw std::logic_error("expand: reconstructed web has a different leading monomial");
        if (wlead.coefficient != 1 && wlead.coefficient != -1)
            throw std::logic_error("expand: web leading coefficient is not a unit");
        const Coefficient k = lead.coefficient * wlead.coefficient;
        remainder -= inv * k;
        out.terms.emplace_back(k, std::move(w));
    }
    return out;
}

}  // namespace webinv
