#include <cmath>

#include "doctest.h"
#include "qfa/amplitude.hpp"
#include "qfa/errors.hpp"
#include "qfa/relation.hpp"
#include "qfa/symbols.hpp"

using namespace qfa;

TEST_CASE("words split per character or on separators") {
    CHECK(split_word("aab") == Word{"a", "a", "b"});
    CHECK(split_word("a_1 a_2") == Word{"a_1", "a_2"});
    CHECK(split_word("a,m") == Word{"a", "m"});
    CHECK(split_word("").empty());
    CHECK(join_word({"a", "b"}) == "ab");
    CHECK(join_word({"a_1", "b"}) == "a_1 b");
    CHECK(split_word(join_word({"v_p1", "a", "*"})) == Word{"v_p1", "a", "*"});
    CHECK(with_endmarkers({"a"}) == Word{"#", "a", "$"});
    CHECK(to_string(SymbolPair{"#", "b"}) == "#,b");
}

TEST_CASE("amplitude expressions") {
    CHECK(parse_amplitude("1") == Complex(1, 0));
    CHECK(std::abs(parse_amplitude("1/sqrt(2)") - Complex(std::sqrt(0.5), 0)) < 1e-15);
    CHECK(std::abs(parse_amplitude("exp(i*pi)") - Complex(-1, 0)) < 1e-15);
    CHECK(std::abs(parse_amplitude("-(1+2*i)/2") - Complex(-0.5, -1)) < 1e-15);
    CHECK(std::abs(parse_amplitude("2.5e-1") - Complex(0.25, 0)) < 1e-15);
    CHECK(std::abs(parse_amplitude("sqrt(-4)") - Complex(0, 2)) < 1e-15);

    SUBCASE("errors carry positions") {
        CHECK_THROWS_AS(parse_amplitude("1/0"), ParseError);
        CHECK_THROWS_AS(parse_amplitude(""), ParseError);
        try {
            parse_amplitude("1+*2");
            FAIL("no throw");
        } catch (const ParseError& e) {
            CHECK(e.position() == 2);
        }
        CHECK_THROWS_AS(parse_amplitude("sqrt(2"), ParseError);
        CHECK_THROWS_AS(parse_amplitude("foo"), ParseError);
    }

    SUBCASE("format reads back") {
        for (Complex z : {Complex(1, 0), Complex(0, 0), Complex(-3, 0), Complex(std::sqrt(0.5), 0),
                          Complex(0.1, -0.7), Complex(0, 1e-9)}) {
            CHECK(std::abs(parse_amplitude(format_amplitude(z)) - z) < 1e-12);
        }
        CHECK(format_amplitude(Complex(1, 0)) == "1");
    }
}

TEST_CASE("relation images follow first-appearance order") {
    SymbolRelation rel({{"a", "a"}, {"%", "%"}, {"%", "v_p1"}, {"%", "v_p2"}, {"b", "b"}});
    CHECK(rel.image("%") == Word{"%", "v_p1", "v_p2"});
    CHECK(rel.image("c").empty());
    CHECK(rel.contains("%", "v_p2"));
    CHECK_FALSE(rel.contains("a", "b"));
    CHECK_FALSE(rel.is_identity());
    CHECK(SymbolRelation::identity({"a", "b"}).is_identity());
    CHECK_THROWS_AS(rel.add("#", "a"), AlphabetError);
}

TEST_CASE("guess tapes enumerate lazily in odometer order") {
    SymbolRelation rel({{"a", "a"}, {"a", "m"}, {"b", "b"}, {"b", "m"}});
    GuessTapes tapes(rel, {"a", "b"});
    CHECK(tapes.count() == 4);
    std::vector<Word> seen;
    while (auto t = tapes.next()) seen.push_back(*t);
    // Codomain order is a, m, b (first appearance), so b's image is [m, b].
    CHECK(seen == std::vector<Word>{{"a", "m"}, {"a", "b"}, {"m", "m"}, {"m", "b"}});
    CHECK(rho_expand(rel, {}).size() == 1);
    CHECK(rho_compatible(rel, {"a", "b"}, {"m", "b"}));
    CHECK_FALSE(rho_compatible(rel, {"a", "b"}, {"b", "b"}));
    CHECK_FALSE(rho_compatible(rel, {"a"}, {"a", "a"}));
    CHECK_THROWS_AS(GuessTapes(rel, {"c"}), AlphabetError);
}

TEST_CASE("guess tape count saturates") {
    SymbolRelation rel({{"a", "a"}, {"a", "b"}, {"a", "c"}});
    Word w(60, "a");
    CHECK(GuessTapes(rel, w).count() == UINT64_MAX);
}
