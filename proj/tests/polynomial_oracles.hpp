#pragma once

// Hand-checked polynomial fixtures shared by the test binaries.

#include <string>
#include <utility>
#include <vector>

#include "webinv/polyring.hpp"

namespace oracles {

struct SignedVars {
    int sign;
    std::vector<std::pair<int, webinv::State>> vars;
};

inline webinv::Monomial mono(const webinv::VariableOrder& ord,
                             const std::vector<std::pair<int, webinv::State>>& vars) {
    webinv::Monomial m;
    for (auto [vertex, color] : vars) m.multiply_by_slot(ord.slot(vertex, color));
    return m;
}

// the twelve signed terms of the H web invariant, in descending order
inline const std::vector<SignedVars>& h_web_terms() {
    static const std::vector<SignedVars> terms = {
        {+1, {{1, 1}, {2, -1}, {3, 1}, {4, -1}}},
        {+1, {{1, 1}, {2, 0}, {3, 1}, {4, 0}}},
        {-1, {{1, 1}, {2, 1}, {3, -1}, {4, -1}}},
        {-1, {{1, 1}, {2, 1}, {3, 0}, {4, 0}}},
        {+1, {{1, 0}, {2, -1}, {3, 0}, {4, -1}}},
        {-1, {{1, 0}, {2, 0}, {3, -1}, {4, -1}}},
        {-1, {{1, 0}, {2, 0}, {3, 1}, {4, 1}}},
        {+1, {{1, 0}, {2, 1}, {3, 0}, {4, 1}}},
        {-1, {{1, -1}, {2, -1}, {3, 0}, {4, 0}}},
        {-1, {{1, -1}, {2, -1}, {3, 1}, {4, 1}}},
        {+1, {{1, -1}, {2, 0}, {3, -1}, {4, 0}}},
        {+1, {{1, -1}, {2, 1}, {3, -1}, {4, 1}}},
    };
    return terms;
}

inline const std::string& h_web_polynomial_text() {
    static const std::string text =
        "x[1,1]*y[2,-1]*y[3,1]*x[-1,4] + x[1,1]*y[2,0]*y[3,1]*x[0,4]"
        " - x[1,1]*y[2,1]*y[3,-1]*x[-1,4] - x[1,1]*y[2,1]*y[3,0]*x[0,4]"
        " + x[0,1]*y[2,-1]*y[3,0]*x[-1,4] - x[0,1]*y[2,0]*y[3,-1]*x[-1,4]"
        " - x[0,1]*y[2,0]*y[3,1]*x[1,4] + x[0,1]*y[2,1]*y[3,0]*x[1,4]"
        " - x[-1,1]*y[2,-1]*y[3,0]*x[0,4] - x[-1,1]*y[2,-1]*y[3,1]*x[1,4]"
        " + x[-1,1]*y[2,0]*y[3,-1]*x[0,4] + x[-1,1]*y[2,1]*y[3,-1]*x[1,4]";
    return text;
}

inline webinv::Polynomial h_web_polynomial(const webinv::VariableOrder& ord) {
    webinv::Polynomial p;
    for (const auto& t : h_web_terms()) p.add_term(mono(ord, t.vars), t.sign);
    return p;
}

}  // namespace oracles
