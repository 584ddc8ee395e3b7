#pragma once

// Property-suite runner shared by the command-line `verify` command and the
// acceptance test binary.  Each check exercises one of the library's
// structural guarantees, exhaustively over all dominant strings up to a
// length bound where the property is universally quantified.

#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "webinv/coloring.hpp"
#include "webinv/growth.hpp"
#include "webinv/invariant.hpp"
#include "webinv/polyring.hpp"
#include "webinv/webgraph.hpp"
#include "webinv/weightpath.hpp"

namespace webinv {

struct CheckResult {
    std::string name;
    bool passed = true;
    long long cases = 0;
    std::string detail;  // first counterexample, or an informational note
};

namespace checks {

inline void fail(CheckResult& r, const std::string& detail) {
    if (r.passed) {
        r.passed = false;
        r.detail = detail;
    }
}

// the full hand-expanded invariant of the H-shaped web on four boundary
// vertices, in canonical text form
inline const std::string& h_invariant_text() {
    static const std::string text =
        "x[1,1]*y[2,-1]*y[3,1]*x[-1,4] + x[1,1]*y[2,0]*y[3,1]*x[0,4]"
        " - x[1,1]*y[2,1]*y[3,-1]*x[-1,4] - x[1,1]*y[2,1]*y[3,0]*x[0,4]"
        " + x[0,1]*y[2,-1]*y[3,0]*x[-1,4] - x[0,1]*y[2,0]*y[3,-1]*x[-1,4]"
        " - x[0,1]*y[2,0]*y[3,1]*x[1,4] + x[0,1]*y[2,1]*y[3,0]*x[1,4]"
        " - x[-1,1]*y[2,-1]*y[3,0]*x[0,4] - x[-1,1]*y[2,-1]*y[3,1]*x[1,4]"
        " + x[-1,1]*y[2,0]*y[3,-1]*x[0,4] + x[-1,1]*y[2,1]*y[3,-1]*x[1,4]";
    return text;
}

inline Web h_web() { return grow(parse_sign_state("+1,-1,--1,+-1")); }

// 1. evaluating the H web reproduces the twelve-term polynomial exactly
inline CheckResult twelve_term_polynomial() {
    CheckResult r{"twelve-term-polynomial"};
    const Web w = h_web();
    const VariableOrder ord(signature_of(w));
    const Polynomial p = evaluate(w);
    r.cases = static_cast<long long>(p.terms().size());
    if (p != parse_polynomial(h_invariant_text(), ord))
        fail(r, "H web invariant differs from the twelve-term polynomial");
    else if (polynomial_text(p, ord) != h_invariant_text())
        fail(r, "H web invariant prints differently: " + polynomial_text(p, ord));
    return r;
}

// 2. both leading-term routes give +1 on the same monomial for the H web
inline CheckResult h_leading_term() {
    CheckResult r{"h-leading-term"};
    const Web w = h_web();
    const VariableOrder ord(signature_of(w));
    const std::string expected = "+1 x[1,1]*y[2,-1]*y[3,1]*x[-1,4]";
    const std::string by_enumeration = term_text(evaluate(w).leading_term(), ord);
    const std::string by_labeling = term_text(leading_term_via_labeling(w), ord);
    r.cases = 2;
    if (by_enumeration != expected)
        fail(r, "full evaluation found " + by_enumeration);
    else if (by_labeling != expected)
        fail(r, "canonical labeling found " + by_labeling);
    return r;
}

// 3. the clasped example web and its unclasping have the expected leading
//    monomials with unit coefficients; the signs are recorded, not asserted
inline CheckResult clasp_leading_terms() {
    CheckResult r{"clasp-leading-terms"};
    const Web grown = grow(parse_sign_state("+1,-1,+0,+-1,+-1"));
    const Web clasped = clasp(grown, {1, 1, 1, 2});
    r.cases = 2;

    const VariableOrder cord(signature_of(clasped));
    const Term clead = leading_term_via_labeling(clasped);
    if (monomial_text(clead.monomial, cord) != "x[1,1]*y[2,-1]*x[0,3]*x[-1,4]^2") {
        fail(r, "clasped web: " + term_text(clead, cord));
        return r;
    }
    if (abs(clead.coefficient) != 1 || evaluate(clasped).leading_term() != clead) {
        fail(r, "clasped web: coefficient or cross-check mismatch");
        return r;
    }

    const VariableOrder gord(signature_of(grown));
    const Term glead = leading_term_via_labeling(grown);
    if (monomial_text(glead.monomial, gord) != "x[1,1]*y[2,-1]*x[0,3]*x[-1,4]*x[-1,5]") {
        fail(r, "unclasped web: " + term_text(glead, gord));
        return r;
    }
    if (abs(glead.coefficient) != 1 || evaluate(grown).leading_term() != glead) {
        fail(r, "unclasped web: coefficient or cross-check mismatch");
        return r;
    }

    std::ostringstream note;
    note << "signs: clasped " << (clead.coefficient > 0 ? "+1" : "-1") << ", unclasped "
         << (glead.coefficient > 0 ? "+1" : "-1");
    r.detail = note.str();
    return r;
}

// 4. the nine-strand pipeline: the string is dominant and the grown web's
//    canonical coloring reads the expected boundary word
inline CheckResult nine_strand_boundary_word() {
    CheckResult r{"nine-strand-boundary-word"};
    const SignStateString s = parse_sign_state("+1,+1,+0,-1,+0,+-1,-0,+-1,--1");
    r.cases = 1;
    if (!is_dominant(s)) {
        fail(r, "string is not dominant");
        return r;
    }
    const Web w = grow(s);
    const BoundaryWord word = boundary_word(w, minimal_coloring(w));
    constexpr VertexColor B = VertexColor::black;
    constexpr VertexColor W = VertexColor::white;
    const BoundaryWord expected = {{1, B},  {1, B}, {0, B},  {-1, W}, {0, B},
                                   {-1, B}, {0, W}, {-1, B}, {1, W}};
    if (word != expected) {
        std::ostringstream got;
        for (const auto& l : word)
            got << "(" << l.color << (l.at == B ? "b" : "w") << ")";
        fail(r, "boundary word " + got.str());
    }
    return r;
}

// 5. leading-term agreement: for every dominant string, the leading term found
//    by full enumeration is the canonical-labeling term, has a unit
//    coefficient, comes from the unique minimal coloring, and every monomial
//    is multihomogeneous
inline CheckResult leading_term_agreement(int max_len) {
    CheckResult r{"leading-term-agreement"};
    for (const auto& s : enumerate_dominant(max_len)) {
        ++r.cases;
        const Web w = grow(s);
        const VariableOrder ord(signature_of(w));
        const std::vector<EdgeColoring> colorings = enumerate_colorings(w);
        if (colorings.empty()) {
            fail(r, to_text(s) + ": no proper colorings");
            continue;
        }
        if (colorings.size() > 1 && compare_colorings(w, colorings[0], colorings[1]) >= 0) {
            fail(r, to_text(s) + ": minimal coloring is not strictly minimal");
            continue;
        }
        const WebIndex ix = make_index(w);
        Polynomial p;
        const std::vector<int> ones(s.size(), 1);
        bool homogeneous = true;
        for (const auto& col : colorings) {
            const Monomial m = monomial_of_coloring(w, col, ord, ix);
            if (m.multidegree(static_cast<int>(s.size())) != ones) homogeneous = false;
            p.add_term(m, coloring_sign(w, col, ix));
        }
        if (!homogeneous) {
            fail(r, to_text(s) + ": monomial not multihomogeneous");
            continue;
        }
        const Term lead = p.leading_term();
        if (abs(lead.coefficient) != 1) {
            fail(r, to_text(s) + ": leading coefficient " + lead.coefficient.str());
            continue;
        }
        if (leading_term_via_labeling(w) != lead)
            fail(r, to_text(s) + ": canonical-labeling term differs");
    }
    return r;
}

// 6. growth is confluent: randomized rule orders give the same web
inline CheckResult growth_confluence(int max_len, int draws = 10) {
    CheckResult r{"growth-confluence"};
    std::mt19937 rng(20240811);
    for (const auto& s : enumerate_dominant(max_len)) {
        ++r.cases;
        const std::string reference = canonical_form(grow(s));
        for (int d = 0; d < draws; ++d) {
            const Web w = grow(s, [&](const std::vector<RuleMatch>& matches) {
                return static_cast<std::size_t>(rng() % matches.size());
            });
            if (canonical_form(w) != reference) {
                fail(r, to_text(s) + ": draw " + std::to_string(d) + " differs");
                break;
            }
        }
    }
    return r;
}

// 7. trimming consistency: one step yields a web whose independently recomputed
//    canonical labeling is the read-off string
inline CheckResult trimming_consistency(int max_len) {
    CheckResult r{"trimming-consistency"};
    for (const auto& s : enumerate_dominant(max_len)) {
        ++r.cases;
        const Web w = grow(s);
        const auto [smaller, target] = trim(w, s);
        if (!validate(smaller).empty()) {
            fail(r, to_text(s) + ": trimmed web is invalid");
            continue;
        }
        if (canonical_labeling(smaller) != target)
            fail(r, to_text(s) + ": trimmed labeling mismatch");
    }
    return r;
}

// 8. expansion round-trip on random integer combinations of basis webs
inline CheckResult expansion_round_trip(int combinations = 100, int pool_len = 6) {
    CheckResult r{"expansion-round-trip"};
    std::map<std::string, std::vector<SignStateString>> buckets;
    for (const auto& s : enumerate_dominant(pool_len)) {
        std::string signs;
        for (const auto& t : s) signs += t.sign == Sign::plus ? '+' : '-';
        buckets[signs].push_back(s);
    }
    std::vector<const std::vector<SignStateString>*> pools;
    for (const auto& [signs, pool] : buckets) pools.push_back(&pool);

    std::mt19937 rng(20240813);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    for (int iter = 0; iter < combinations; ++iter) {
        ++r.cases;
        const auto& pool = *pools[rng() % pools.size()];
        const int picks = 1 + static_cast<int>(rng() % 5);
        Polynomial f;
        std::map<std::string, Coefficient> expected;
        Signature sig;
        for (int i = 0; i < picks; ++i) {
            const Web w = grow(pool[rng() % pool.size()]);
            if (i == 0) sig = signature_of(w);
            const Coefficient c = coeff_dist(rng);
            f += evaluate(w) * c;
            expected[canonical_form(w)] += c;
        }
        std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
        WebExpansion e;
        try {
            e = expand(f, sig);
        } catch (const std::exception& err) {
            fail(r, "iteration " + std::to_string(iter) + ": " + err.what());
            continue;
        }
        bool ok = e.terms.size() == expected.size();
        Polynomial resummed;
        for (const auto& [c, w] : e.terms) {
            const auto it = expected.find(canonical_form(w));
            if (it == expected.end() || it->second != c) ok = false;
            resummed += evaluate(w) * c;
        }
        if (!ok || resummed != f)
            fail(r, "iteration " + std::to_string(iter) + ": expansion differs from input");
    }
    return r;
}

struct ClaspScanCounts {
    long long valid = 0;     // admissible clasps, including all-singleton groupings
    long long mixed = 0;     // groupings that mix strand colors: no clasp exists
    long long elliptic = 0;  // monochrome groupings whose clasp is elliptic
};

// 9. clasp monotonicity: in the minimal coloring of any valid clasp, the
//    colors at each clasped vertex run weakly upward at black vertices and
//    weakly downward at white ones (reading the strands in rotation order)
inline CheckResult clasp_monotonicity(int max_len, ClaspScanCounts* counts = nullptr) {
    CheckResult r{"clasp-monotonicity"};
    ClaspScanCounts tally;
    for (const auto& s : enumerate_dominant(max_len)) {
        const Web grown = grow(s);
        const int n = static_cast<int>(s.size());
        for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
            std::vector<int> degrees;
            int run = 1;
            for (int i = 0; i + 1 < n; ++i) {
                if (mask & (1 << i)) {
                    ++run;
                } else {
                    degrees.push_back(run);
                    run = 1;
                }
            }
            degrees.push_back(run);

            Web clasped;
            try {
                clasped = clasp(grown, degrees);
            } catch (const std::invalid_argument&) {
                ++tally.mixed;
                continue;
            }
            if (!validate(clasped).empty()) {
                ++tally.elliptic;
                continue;
            }
            ++tally.valid;
            ++r.cases;

            const WebIndex ix = make_index(clasped);
            const EdgeColoring col = minimal_coloring(clasped);
            for (const auto& b : clasped.boundary) {
                State previous = b.color == VertexColor::black ? -1 : 1;
                for (int h : b.half_edges) {
                    const State c = col[ix.edge_of.at(h)];
                    const bool ok = b.color == VertexColor::black ? previous <= c : previous >= c;
                    if (!ok)
                        fail(r, to_text(s) + " clasped to mask " + std::to_string(mask) +
                                    ": colors not monotone at vertex " + std::to_string(b.id));
                    previous = c;
                }
            }
        }
    }
    if (counts) *counts = tally;
    if (r.passed) {
        std::ostringstream note;
        note << tally.valid << " valid clasps checked; skipped " << tally.mixed
             << " mixed-color groupings and " << tally.elliptic << " elliptic ones";
        r.detail = note.str();
    }
    return r;
}

// coloring order mirrors monomial order on grown webs
inline CheckResult coloring_order_mirror(int max_len) {
    CheckResult r{"coloring-order-mirror"};
    for (const auto& s : enumerate_dominant(max_len)) {
        ++r.cases;
        const Web w = grow(s);
        const VariableOrder ord(signature_of(w));
        const WebIndex ix = make_index(w);
        const std::vector<EdgeColoring> colorings = enumerate_colorings(w);
        for (std::size_t i = 0; i + 1 < colorings.size(); ++i) {
            const int word_cmp = compare_colorings(w, colorings[i], colorings[i + 1]);
            const int mono_cmp = grevlex_compare(monomial_of_coloring(w, colorings[i], ord, ix),
                                                 monomial_of_coloring(w, colorings[i + 1], ord, ix));
            const bool ok = word_cmp <= 0 && mono_cmp == (word_cmp < 0 ? 1 : 0);
            if (!ok) {
                fail(r, to_text(s) + ": order mismatch at coloring " + std::to_string(i));
                break;
            }
        }
    }
    return r;
}

// distinct basis webs of one signature and multidegree have distinct leading
// monomials, and each is rebuilt from its monomial
inline CheckResult basis_independence(int max_len) {
    CheckResult r{"basis-independence"};
    std::map<std::string, std::set<std::string>> buckets;
    for (const auto& s : enumerate_dominant(max_len)) {
        const Web grown = grow(s);
        const int n = static_cast<int>(s.size());
        for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
            std::vector<int> degrees;
            int run = 1;
            for (int i = 0; i + 1 < n; ++i) {
                if (mask & (1 << i)) {
                    ++run;
                } else {
                    degrees.push_back(run);
                    run = 1;
                }
            }
            degrees.push_back(run);

            Web clasped;
            try {
                clasped = clasp(grown, degrees);
            } catch (const std::invalid_argument&) {
                continue;
            }
            if (!validate(clasped).empty()) continue;
            ++r.cases;

            const Signature sig = signature_of(clasped);
            const VariableOrder ord(sig);
            const Term lead = leading_term_via_labeling(clasped);

            std::string bucket;
            for (VertexColor c : sig) bucket += c == VertexColor::black ? 'B' : 'W';
            bucket += ':';
            for (int d : multidegree_of(clasped)) bucket += std::to_string(d) + ",";
            if (!buckets[bucket].insert(monomial_text(lead.monomial, ord)).second) {
                fail(r, "duplicate leading monomial in bucket " + bucket);
                continue;
            }

            const Web rebuilt = web_from_monomial(lead.monomial, sig);
            if (canonical_form(rebuilt) != canonical_form(clasped))
                fail(r, "web not recovered from its leading monomial in bucket " + bucket);
        }
    }
    return r;
}

}  // namespace checks

// the full suite; max_len bounds the exhaustive string enumerations
inline std::vector<CheckResult> run_verification(int max_len) {
    const int independence_len = max_len < 6 ? max_len : 6;
    return {
        checks::twelve_term_polynomial(),
        checks::h_leading_term(),
        checks::clasp_leading_terms(),
        checks::nine_strand_boundary_word(),
        checks::leading_term_agreement(max_len),
        checks::growth_confluence(max_len),
        checks::trimming_consistency(max_len),
        checks::expansion_round_trip(),
        checks::clasp_monotonicity(max_len),
        checks::coloring_order_mirror(max_len),
        checks::basis_independence(independence_len),
    };
}

}  // namespace webinv
