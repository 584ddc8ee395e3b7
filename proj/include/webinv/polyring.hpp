#pragma once

// Sparse multivariate polynomials with exact integer coefficients over the
// boundary variables of a web, together with the graded monomial order used
// to pick out leading terms.
//
// Every boundary vertex i owns three variables, one per edge color:
//   black vertex:  x[-1,i] < x[0,i] < x[1,i]     (written x[color,vertex])
//   white vertex:  y[i,1]  < y[i,0] < y[i,-1]    (written y[vertex,color])
// and all variables at vertex i precede all variables at vertex i+1.  A
// variable's position in this global list is its "slot"; monomials store
// exponents by slot, so the ordering data is fixed once the signature is.
//
// Monomials compare by total degree first; on ties, the first slot where the
// exponents differ decides, and the monomial with the SMALLER exponent there
// is the larger one.

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "webinv/weightpath.hpp"

namespace webinv {

using Coefficient = boost::multiprecision::cpp_int;

// position of a variable inside its vertex's three-slot block
inline int variable_rank(VertexColor at, State color) {
    if (color < -1 || 1 < color)
        throw std::invalid_argument("variable_rank: color out of range");
    return at == VertexColor::black ? 1 + color : 1 - color;
}

inline State color_of_variable_rank(VertexColor at, int rank) {
    if (rank < 0 || 2 < rank)
        throw std::invalid_argument("color_of_variable_rank: rank out of range");
    return at == VertexColor::black ? rank - 1 : 1 - rank;
}

// assigns each of a signature's 3n variables its slot in the global variable
// order, and renders variable names
class VariableOrder {
public:
    VariableOrder() = default;
    explicit VariableOrder(Signature sig) : sig_(std::move(sig)) {}

    const Signature& signature() const { return sig_; }
    int vertex_count() const { return static_cast<int>(sig_.size()); }
    int slot_count() const { return 3 * vertex_count(); }

    // vertex is 1-based
    int slot(int vertex, State color) const {
        return (check_vertex(vertex) - 1) * 3 + variable_rank(sig_[vertex - 1], color);
    }
    int vertex_of(int slot) const { return check_slot(slot) / 3 + 1; }
    State color_of(int slot) const {
        return color_of_variable_rank(sig_[check_slot(slot) / 3], slot % 3);
    }
    VertexColor vertex_color_of(int slot) const { return sig_[check_slot(slot) / 3]; }

    std::string variable_name(int slot) const {
        std::ostringstream out;
        if (vertex_color_of(slot) == VertexColor::black)
            out << "x[" << color_of(slot) << "," << vertex_of(slot) << "]";
        else
            out << "y[" << vertex_of(slot) << "," << color_of(slot) << "]";
        return out.str();
    }

private:
    int check_vertex(int vertex) const {
        if (vertex < 1 || vertex_count() < vertex)
            throw std::invalid_argument("VariableOrder: vertex out of range");
        return vertex;
    }
    int check_slot(int slot) const {
        if (slot < 0 || slot_count() <= slot)
            throw std::invalid_argument("VariableOrder: slot out of range");
        return slot;
    }

    Signature sig_;
};

// exponent list of a monomial, sparse and sorted by slot
class Monomial {
public:
    Monomial() = default;

    // slots may repeat and arrive in any order
    static Monomial from_slots(std::vector<int> slots) {
        std::sort(slots.begin(), slots.end());
        Monomial m;
        for (std::size_t i = 0; i < slots.size();) {
            std::size_t j = i;
            while (j < slots.size() && slots[j] == slots[i]) ++j;
            m.factors_.emplace_back(slots[i], static_cast<int>(j - i));
            i = j;
        }
        return m;
    }

    // (slot, exponent) pairs with slots strictly ascending and exponents > 0
    const std::vector<std::pair<int, int>>& factors() const { return factors_; }
    bool is_constant() const { return factors_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }

    int exponent(int slot) const {
        for (const auto& f : factors_) {
            if (f.first == slot) return f.second;
            if (f.first > slot) break;
        }
        return 0;
    }

    void multiply_by_slot(int slot, int exponent = 1) {
        if (exponent <= 0) throw std::invalid_argument("Monomial: exponent must be positive");
        auto it = std::lower_bound(factors_.begin(), factors_.end(), slot,
                                   [](const auto& f, int s) { return f.first < s; });
        if (it != factors_.end() && it->first == slot)
            it->second += exponent;
        else
            factors_.insert(it, {slot, exponent});
    }

    // total degree contributed per boundary vertex
    std::vector<int> multidegree(int vertex_count) const {
        std::vector<int> deg(vertex_count, 0);
        for (const auto& f : factors_) {
            const int v = f.first / 3;
            if (v < 0 || vertex_count <= v)
                throw std::invalid_argument("Monomial: slot outside the signature");
            deg[v] += f.second;
        }
        return deg;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        auto ia = a.factors_.begin();
        auto ib = b.factors_.begin();
        while (ia != a.factors_.end() || ib != b.factors_.end()) {
            if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
                out.factors_.push_back(*ia++);
            } else if (ia == a.factors_.end() || ib->first < ia->first) {
                out.factors_.push_back(*ib++);
            } else {
                out.factors_.emplace_back(ia->first, ia->second + ib->second);
                ++ia;
                ++ib;
            }
        }
        return out;
    }

    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::pair<int, int>> factors_;
};

// total order: higher degree wins; at equal degree the first slot with
// differing exponents decides, the smaller exponent there winning
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.factors().begin();
    auto ib = b.factors().begin();
    const auto ea = a.factors().end();
    const auto eb = b.factors().end();
    while (ia != ea || ib != eb) {
        // a slot present on one side only is a difference against exponent 0
        if (ib == eb || (ia != ea && ia->first < ib->first)) return -1;
        if (ia == ea || ib->first < ia->first) return 1;
        if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    return 0;
}

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_compare(a, b) < 0;
    }
};

struct Term {
    Coefficient coefficient;
    Monomial monomial;

    bool operator==(const Term&) const = default;
};

// integer-coefficient polynomial; the term map is keyed in ascending order,
// so the last entry is the leading term
class Polynomial {
public:
    using TermMap = std::map<Monomial, Coefficient, GrevlexLess>;

    Polynomial() = default;
    explicit Polynomial(const Coefficient& constant) { add_term(Monomial{}, constant); }

    static Polynomial from_term(const Monomial& m, const Coefficient& c) {
        Polynomial p;
        p.add_term(m, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Coefficient& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Term leading_term() const {
        if (terms_.empty()) throw std::runtime_error("leading_term: zero polynomial");
        const auto& top = *terms_.rbegin();
        return {top.second, top.first};
    }

    Polynomial& operator+=(const Polynomial& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Coefficient& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, coeff] : terms_) coeff *= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial p, const Coefficient& c) { return p *= c; }
    friend Polynomial operator*(const Coefficient& c, Polynomial p) { return p *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    bool operator==(const Polynomial&) const = default;

private:
    TermMap terms_;
};

inline std::string monomial_text(const Monomial& m, const VariableOrder& order) {
    if (m.is_constant()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [slot, exp] : m.factors()) {
        if (!first) out << "*";
        first = false;
        out << order.variable_name(slot);
        if (exp > 1) out << "^" << exp;
    }
    return out.str();
}

// "<sign><magnitude> <monomial>", the leading-term display format
inline std::string term_text(const Term& t, const VariableOrder& order) {
    std::ostringstream out;
    out << (t.coefficient < 0 ? "-" : "+") << abs(t.coefficient) << " "
        << monomial_text(t.monomial, order);
    return out.str();
}

// terms in descending order, joined by " + "/" - "; coefficient magnitudes
// other than one prefix the monomial with "*"
inline std::string polynomial_text(const Polynomial& p, const VariableOrder& order) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c < 0;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        const Coefficient mag = negative ? Coefficient(-c) : c;
        if (m.is_constant())
            out << mag;
        else {
            if (mag != 1) out << mag << "*";
            out << monomial_text(m, order);
        }
    }
    return out.str();
}

namespace detail {

class PolynomialScanner {
public:
    PolynomialScanner(const std::string& text, const VariableOrder& order)
        : s_(text), order_(order) {}

    Polynomial run() {
        Polynomial p;
        skip_ws();
        if (done()) fail("empty input");
        int sign = 1;
        if (eat('-'))
            sign = -1;
        else
            eat('+');
        while (true) {
            parse_term(p, sign);
            skip_ws();
            if (done()) break;
            if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else
                fail("expected '+' or '-' between terms");
        }
        return p;
    }

private:
    void parse_term(Polynomial& p, int sign) {
        skip_ws();
        if (at_digit()) {
            const Coefficient mag = parse_magnitude();
            skip_ws();
            if (eat('*')) {
                p.add_term(parse_factors(), sign * mag);
            } else {
                p.add_term(Monomial{}, sign * mag);
            }
        } else if (peek() == 'x' || peek() == 'y') {
            p.add_term(parse_factors(), sign);
        } else {
            fail("expected a term");
        }
    }

    Monomial parse_factors() {
        Monomial m;
        parse_factor(m);
        while (true) {
            skip_ws();
            if (!eat('*')) break;
            parse_factor(m);
        }
        return m;
    }

    void parse_factor(Monomial& m) {
        skip_ws();
        const char kind = peek();
        if (kind != 'x' && kind != 'y') fail("expected a variable");
        ++pos_;
        expect('[');
        const int a = parse_small_int();
        skip_ws();
        expect(',');
        const int b = parse_small_int();
        skip_ws();
        expect(']');

        const int vertex = kind == 'x' ? b : a;
        const State color = kind == 'x' ? a : b;
        if (vertex < 1 || order_.vertex_count() < vertex) fail("vertex out of range");
        const VertexColor at = order_.signature()[vertex - 1];
        if ((kind == 'x') != (at == VertexColor::black))
            fail("variable kind does not match the signature");
        if (color < -1 || 1 < color) fail("color out of range");

        int exponent = 1;
        skip_ws();
        if (eat('^')) {
            skip_ws();
            if (!at_digit()) fail("expected a positive exponent");
            exponent = parse_small_int();
            if (exponent < 1) fail("expected a positive exponent");
        }
        m.multiply_by_slot(order_.slot(vertex, color), exponent);
    }

    Coefficient parse_magnitude() {
        skip_ws();
        const std::size_t start = pos_;
        while (at_digit()) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return Coefficient(s_.substr(start, pos_ - start));
    }

    int parse_small_int() {
        skip_ws();
        const std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        const std::size_t digits = pos_;
        while (at_digit()) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        const std::string token = s_.substr(start, pos_ - start);
        try {
            return std::stoi(token);
        } catch (const std::out_of_range&) {
            fail("integer out of range");
        }
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    bool at_digit() const {
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_polynomial: " + what + " at position " +
                                    std::to_string(pos_));
    }

    const std::string& s_;
    const VariableOrder& order_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const VariableOrder& order) {
    return detail::PolynomialScanner(text, order).run();
}

}  // namespace webinv
