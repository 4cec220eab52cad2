#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lambda0/character.hpp"
#include "lambda0/error.hpp"
#include "lambda0/parse.hpp"
#include "lambda0/relations.hpp"

#include <fstream>
#include <sstream>

using namespace lambda0;

namespace {

Poly P(const char* text) { return parse_expr(text); }

// "i+2", "j", "3" evaluated at (i, j)
int index_value(const std::string& text, int i, int j) {
    if (text[0] == 'i' || text[0] == 'j') {
        const int base = text[0] == 'i' ? i : j;
        return text.size() == 1 ? base : base + std::stoi(text.substr(2));
    }
    return std::stoi(text);
}

// P_{i,j} rebuilt from the data file transcription
Poly p_from_table(int i, int j) {
    std::ifstream in(LAMBDA0_TEST_DATA "/p_relation_terms.txt");
    REQUIRE(in.good());
    Poly total;
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string coeff, power, factor, first, second;
        fields >> coeff >> power >> factor >> first >> second;
        Poly term = parse_expr(coeff) * Poly::t_power(index_value(power, i, j)) * parse_expr(factor);
        if (first != "-") term = term * Poly::x(index_value(first, i, j));
        term = term * Poly::x(index_value(second, i, j));
        total += term;
        ++rows;
    }
    CHECK(rows == 14);
    return total;
}

}  // namespace

TEST_CASE("P agrees with the second transcription") {
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            CHECK(p_poly(i, j) == p_from_table(i, j));
        }
}

TEST_CASE("P is homogeneous of degree i+j+6 with leading coefficient 3") {
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            CHECK(weighted_degree(p_poly(i, j)) == i + j + 6);
            if (j + 4 != i + 2 && i + 2 >= 3) {
                const Monomial m = Monomial::of(Variable::x(i + 2)) * Monomial::of(Variable::x(j + 4));
                CHECK(p_poly(i, j).coefficient(m) == Rational(3));
            }
        }
    CHECK((p_poly(1, 1) - p_poly(1, 1)).is_zero());
    CHECK_THROWS_AS(p_poly(0, 1), DomainError);
}

TEST_CASE("Q recursion") {
    CHECK(q_poly(-1, 2, 2) == P("t^2"));
    CHECK(q_poly(-1, 2, 1) == t_poly());
    CHECK(q_poly(0, 3, 1) == P("x4"));
    CHECK(q_poly(1, 1, 1) == P("2*t*x3 - 1/2*x4 - 1/2*t^4"));
    CHECK_THROWS_AS(q_poly(-1, 1, 1), DomainError);
    CHECK_THROWS_AS(q_poly(0, 0, 3), DomainError);
    CHECK_THROWS_AS(q_poly(1, -1, 1), DomainError);
}

TEST_CASE("relation_p") {
    for (int i = 1; i <= 7; ++i) {
        CHECK(relation_p(i, i).is_zero());
        for (int j = 1; j <= 7; ++j) CHECK(relation_p(i, j) == -relation_p(j, i));
    }
    CHECK((relation_p(1, 2) + relation_p(2, 1)).is_zero());
    CHECK(chi_poly(relation_p(1, 3)).is_zero());
}

TEST_CASE("relation_q") {
    CHECK(relation_q(0).is_zero());
    CHECK(relation_q(1) == P("2*t*x3 - 3/2*x4 - 1/2*t^4"));
    for (int i = 1; i <= 8; ++i) {
        CAPTURE(i);
        CHECK(weighted_degree(relation_q(i)) == 2 * i + 2);
        const Monomial top = Monomial::of(Variable::x(2 * i + 2));
        CHECK(relation_q(i).coefficient(top) == Rational(3) * Rational(-2).pow(-i));
    }
}

TEST_CASE("gamma_alpha") {
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            for (int r = 0; r <= 4; ++r) {
                CHECK(gamma_alpha(i, j, r, r).is_zero());
                for (int s = 0; s <= 4; ++s) CHECK((gamma_alpha(i, j, r, s) + gamma_alpha(i, j, s, r)).is_zero());
            }
    CHECK(gamma_alpha(1, 1, 0, 1).is_zero());
    const Poly g = gamma_alpha(1, 2, 1, 2);
    CHECK_FALSE(g.is_zero());
    CHECK(weighted_degree(g) == 6);
    CHECK_THROWS_AS(gamma_alpha(0, 1, 0, 1), DomainError);
}

TEST_CASE("Gamma image of the six-leg identity") {
    CHECK(gamma_of_eq1(1, 1).is_zero());
    CHECK(gamma_eq1_constant() == Rational(-8));
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            CHECK(gamma_relation_indices(i, j) == std::pair{i + 1, j + 1});
            CHECK(gamma_of_eq1(i, j) == gamma_eq1_constant() * relation_p(i + 1, j + 1));
        }
}

TEST_CASE("the unshifted Gamma pairing has mismatched degrees") {
    // degree i+j+8 against i+j+6: no constant links Gamma(i,j) with relation_p(i,j)
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            if (i == j) continue;
            CHECK(weighted_degree(gamma_of_eq1(i, j)) == i + j + 8);
            CHECK(weighted_degree(relation_p(i, j)) == i + j + 6);
            CHECK_FALSE(proportionality_constant(gamma_of_eq1(i, j), relation_p(i, j)).has_value());
        }
}

TEST_CASE("proportionality_constant") {
    CHECK(proportionality_constant(P("2*x3 - 4*t^3"), P("x3 - 2*t^3")) == Rational(2));
    CHECK_FALSE(proportionality_constant(P("x3"), P("t^3")).has_value());
    CHECK_FALSE(proportionality_constant(Poly(), Poly()).has_value());
    CHECK(proportionality_constant(Poly(), P("t")) == Rational(0));
}
