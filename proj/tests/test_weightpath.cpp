#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "webinv/weightpath.hpp"

using namespace webinv;

TEST_CASE("weight table", "[weightpath]") {
    CHECK(weight_of(Sign::plus, 1) == WeightPoint{1, 0});
    CHECK(weight_of(Sign::plus, 0) == WeightPoint{-1, 1});
    CHECK(weight_of(Sign::plus, -1) == WeightPoint{0, -1});
    CHECK(weight_of(Sign::minus, 1) == WeightPoint{0, 1});
    CHECK(weight_of(Sign::minus, 0) == WeightPoint{1, -1});
    CHECK(weight_of(Sign::minus, -1) == WeightPoint{-1, 0});
    CHECK_THROWS_AS(weight_of(Sign::plus, 2), std::invalid_argument);

    int c1 = 0, c2 = 0;
    for (Sign s : {Sign::plus, Sign::minus})
        for (State j : {-1, 0, 1}) {
            WeightPoint w = weight_of(s, j);
            c1 += w.c1;
            c2 += w.c2;
            // negation rule: (-,-j) is the negative of (+,j)
            WeightPoint neg = weight_of(flip(s), -j);
            CHECK(neg == WeightPoint{-w.c1, -w.c2});
        }
    CHECK(c1 == 0);
    CHECK(c2 == 0);
}

TEST_CASE("paths", "[weightpath]") {
    CHECK(path_of({}) == std::vector<WeightPoint>{{0, 0}});
    CHECK(path_of(parse_sign_state("+1,--1")) == std::vector<WeightPoint>{{0, 0}, {1, 0}, {0, 0}});

    // nine-strand example string: stays dominant throughout
    SignStateString fig = parse_sign_state("+1,+1,+0,-1,+0,+-1,-0,+-1,--1");
    std::vector<WeightPoint> expected = {{0, 0}, {1, 0}, {2, 0}, {1, 1}, {1, 2},
                                         {0, 3}, {0, 2}, {1, 1}, {1, 0}, {0, 0}};
    CHECK(path_of(fig) == expected);
    CHECK(is_dominant(fig));

    SECTION("concatenation") {
        SignStateString s = parse_sign_state("+1,-1");
        SignStateString t = parse_sign_state("-0,+-1");
        SignStateString st = s;
        st.insert(st.end(), t.begin(), t.end());
        auto ps = path_of(s), pt = path_of(t), pst = path_of(st);
        REQUIRE(pst.size() == ps.size() + pt.size() - 1);
        for (size_t i = 0; i < ps.size(); ++i) CHECK(pst[i] == ps[i]);
        WeightPoint end = ps.back();
        for (size_t i = 0; i < pt.size(); ++i)
            CHECK(pst[ps.size() - 1 + i] == WeightPoint{end.c1 + pt[i].c1, end.c2 + pt[i].c2});
    }
}

TEST_CASE("dominance", "[weightpath]") {
    CHECK(is_dominant({}));  // empty path never leaves the chamber
    CHECK_FALSE(is_dominant(parse_sign_state("+-1")));
    CHECK(is_dominant(parse_sign_state("+1,-1,--1,+-1")));
    CHECK_FALSE(is_dominant(parse_sign_state("+1")));          // does not close
    CHECK_FALSE(is_dominant(parse_sign_state("+0,-0")));       // leaves chamber at step 1
    CHECK(is_dominant(parse_sign_state("-1,+-1")));
}

TEST_CASE("dominant strings start at state 1 and end at -1", "[weightpath]") {
    // exhaustive over all 6^n sign/state strings, n <= 8
    static constexpr Sign kSigns[] = {Sign::plus, Sign::minus};
    static constexpr State kStates[] = {1, 0, -1};
    long dominant_seen = 0;
    for (int n = 1; n <= 8; ++n) {
        SignStateString cur(n, SignState{Sign::plus, 1});
        long total = 1;
        for (int i = 0; i < n; ++i) total *= 6;
        for (long code = 0; code < total; ++code) {
            long c = code;
            for (int i = 0; i < n; ++i) {
                cur[i] = {kSigns[(c % 6) / 3], kStates[c % 3]};
                c /= 6;
            }
            if (!is_dominant(cur)) continue;
            ++dominant_seen;
            CHECK(cur.front().state == 1);
            CHECK(cur.back().state == -1);
        }
    }
    CHECK(dominant_seen == 2 + 2 + 12 + 30 + 130 + 462 + 1946);
}

TEST_CASE("text encoding round-trips", "[weightpath]") {
    for (const char* text : {"", "+1", "+1,--1", "+1,-0,+-1", "-1,+-1", "+1,+1,+0,-1,+0,+-1,-0,+-1,--1"}) {
        CHECK(to_text(parse_sign_state(text)) == text);
    }
    CHECK_THROWS_AS(parse_sign_state("+2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sign_state("1,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sign_state("+1,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sign_state("+"), std::invalid_argument);
}

TEST_CASE("enumerate_dominant", "[weightpath]") {
    auto all2 = enumerate_dominant(2);
    REQUIRE(all2.size() == 2);
    CHECK(to_text(all2[0]) == "+1,--1");
    CHECK(to_text(all2[1]) == "-1,+-1");

    auto all8 = enumerate_dominant(8);
    std::map<size_t, int> by_len;
    for (const auto& s : all8) {
        by_len[s.size()]++;
        CHECK(is_dominant(s));
    }
    CHECK(by_len[1] == 0);
    CHECK(by_len[2] == 2);
    CHECK(by_len[3] == 2);
    CHECK(by_len[4] == 12);
    CHECK(by_len[5] == 30);
    CHECK(by_len[6] == 130);
    CHECK(by_len[7] == 462);
    CHECK(by_len[8] == 1946);

    // ordered by length then lexicographically; no duplicates
    for (size_t i = 1; i < all8.size(); ++i) {
        const auto &a = all8[i - 1], &b = all8[i];
        if (a.size() != b.size()) {
            CHECK(a.size() < b.size());
        } else {
            CHECK(to_text(a) != to_text(b));
        }
    }
}
