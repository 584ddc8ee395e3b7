#pragma once

// Sign/state strings, their SL3 weight-lattice paths, and the dominance test
// that gates the growth algorithm. Weights are kept in integer
// fundamental-weight coordinates so dominance is an exact test.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace webinv {

enum class Sign : std::int8_t { plus, minus };
enum class VertexColor : std::int8_t { black, white };

// the colors of the boundary vertices 1..n, read clockwise
using Signature = std::vector<VertexColor>;

// edge states and colors both live in {-1, 0, 1}
using State = int;

struct SignState {
    Sign sign;
    State state;
    bool operator==(const SignState&) const = default;
};

using SignStateString = std::vector<SignState>;

struct WeightPoint {
    int c1 = 0;
    int c2 = 0;
    bool operator==(const WeightPoint&) const = default;
    bool dominant() const { return c1 >= 0 && c2 >= 0; }
};

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

inline VertexColor opposite(VertexColor c) {
    return c == VertexColor::black ? VertexColor::white : VertexColor::black;
}

// plus-signed strands hang from black vertices, minus-signed from white
inline VertexColor color_of_sign(Sign s) {
    return s == Sign::plus ? VertexColor::black : VertexColor::white;
}

inline Sign sign_of_color(VertexColor c) {
    return c == VertexColor::black ? Sign::plus : Sign::minus;
}

inline WeightPoint weight_of(Sign sign, State state) {
    if (sign == Sign::plus) {
        switch (state) {
            case 1: return {1, 0};
            case 0: return {-1, 1};
            case -1: return {0, -1};
        }
    } else {
        // the weight of (-, -j) is the negative of the weight of (+, j)
        switch (state) {
            case 1: return {0, 1};
            case 0: return {1, -1};
            case -1: return {-1, 0};
        }
    }
    throw std::invalid_argument("state must be -1, 0 or 1");
}

inline WeightPoint weight_of(SignState t) { return weight_of(t.sign, t.state); }

// pi_0 = origin, pi_k = pi_{k-1} + weight of the k-th entry; length n+1
inline std::vector<WeightPoint> path_of(const SignStateString& s) {
    std::vector<WeightPoint> path;
    path.reserve(s.size() + 1);
    path.push_back({0, 0});
    for (const auto& t : s) {
        WeightPoint w = weight_of(t);
        WeightPoint last = path.back();
        path.push_back({last.c1 + w.c1, last.c2 + w.c2});
    }
    return path;
}

// dominant = path stays in the dominant chamber and returns to the origin;
// the empty string is dominant
inline bool is_dominant(const SignStateString& s) {
    WeightPoint p{0, 0};
    for (const auto& t : s) {
        WeightPoint w = weight_of(t);
        p = {p.c1 + w.c1, p.c2 + w.c2};
        if (!p.dominant()) return false;
    }
    return p == WeightPoint{0, 0};
}

// text encoding: comma-separated tokens, sign character first, then the state;
// e.g. ((+,1),(-,0),(+,-1)) <-> "+1,-0,+-1"
inline std::string to_text(const SignStateString& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += s[i].sign == Sign::plus ? '+' : '-';
        out += std::to_string(s[i].state);
    }
    return out;
}

inline SignStateString parse_sign_state(const std::string& text) {
    SignStateString out;
    if (text.empty()) return out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
            throw std::invalid_argument("bad sign/state token '" + tok + "'");
        Sign sign = tok[0] == '+' ? Sign::plus : Sign::minus;
        std::string rest = tok.substr(1);
        State state;
        if (rest == "1") state = 1;
        else if (rest == "0") state = 0;
        else if (rest == "-1") state = -1;
        else throw std::invalid_argument("bad state in token '" + tok + "'");
        out.push_back({sign, state});
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// all dominant strings of length 1..max_len, ordered by length, then
// lexicographically with sign + < - and state 1 < 0 < -1 per position
inline std::vector<SignStateString> enumerate_dominant(int max_len) {
    static constexpr Sign kSigns[] = {Sign::plus, Sign::minus};
    static constexpr State kStates[] = {1, 0, -1};
    std::vector<SignStateString> out;
    SignStateString cur;
    auto rec = [&](auto&& self, WeightPoint p, int left) -> void {
        if (left == 0) {
            if (p == WeightPoint{0, 0}) out.push_back(cur);
            return;
        }
        if (p.c1 + p.c2 > left) return;  // every step lowers c1+c2 by at most 1
        for (Sign s : kSigns)
            for (State j : kStates) {
                WeightPoint w = weight_of(s, j);
                WeightPoint q{p.c1 + w.c1, p.c2 + w.c2};
                if (!q.dominant()) continue;
                cur.push_back({s, j});
                self(self, q, left - 1);
                cur.pop_back();
            }
    };
    for (int n = 1; n <= max_len; ++n) rec(rec, {0, 0}, n);
    return out;
}

}  // namespace webinv
