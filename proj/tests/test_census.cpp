#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lambda0/census.hpp"
#include "lambda0/error.hpp"
#include "lambda0/normalizer.hpp"
#include "lambda0/parse.hpp"

using namespace lambda0;

namespace {

std::vector<std::string> names(const std::vector<Monomial>& ms) {
    std::vector<std::string> out;
    for (const Monomial& m : ms) out.push_back(m.to_string());
    return out;
}

Monomial M(const char* text) { return parse_expr(text).terms().begin()->first; }

}  // namespace

TEST_CASE("enum_M") {
    CHECK(names(enum_M(0)) == std::vector<std::string>{"1"});
    CHECK(names(enum_M(3)) == std::vector<std::string>{"t^3", "x3"});
    CHECK(names(enum_M(6)) == std::vector<std::string>{"t^6", "t^3*x3", "x3^2", "t*x5"});
    for (int d = 0; d <= 30; ++d) {
        const auto ms = enum_M(d);
        CHECK(static_cast<std::int64_t>(ms.size()) == upper_bound(d));
        for (const Monomial& m : ms) {
            CHECK(is_in_M(m));
            CHECK(m.weighted_degree() == d);
        }
    }
    CHECK_THROWS_AS(enum_M(-1), DomainError);
}

TEST_CASE("bounds") {
    CHECK(upper_bound(3) == 2);
    CHECK(upper_bound(10) == 9);
    CHECK(enum_M(10).size() == 9);
    CHECK(lower_bound(15) == 14);
    CHECK(lower_bound(6) == 4);
    for (int d = 0; d < 4; ++d) CHECK(lower_bound(d) == 1);
}

TEST_CASE("N and mu") {
    const int pattern[6] = {0, 0, 0, 1, -1, 1};
    for (int d = 0; d <= 60; ++d) CHECK(mu(d) == pattern[d % 6]);
    CHECK(count_N(3) == 1);
    for (int d = 0; d <= 200; ++d) CHECK(count_N(d) == (static_cast<std::int64_t>(d) * d + 6) / 12);
}

TEST_CASE("beta bijection") {
    CHECK(beta(M("x3")) == BetaImage{0, 1});
    CHECK(beta_inverse(3, 2) == BetaPreimage{2, 1, 1});
    CHECK(beta(M("x5*x7")) == BetaImage{3, 2});
    CHECK_THROWS_AS(beta(M("x3*x7")), DomainError);
    CHECK_THROWS_AS(beta(M("t*x3")), DomainError);
    CHECK_THROWS_AS(beta_inverse(1, 0), DomainError);
    for (int d = 1; d <= 40; ++d)
        for (const Monomial& m : enum_M(d)) {
            if (m.exponent(Variable::t()) != 0) continue;
            const BetaImage b = beta(m);
            CHECK(2 * b.k + 3 * b.l == d);
            CHECK(beta_monomial(beta_inverse(b.k, b.l)) == m);
        }
    for (int l = 1; 3 * l <= 60; ++l)
        for (int k = 0; 2 * k + 3 * l <= 60; ++k) {
            int solutions = 0;
            for (int n = 1; n <= 2 * k + 3 * l; ++n)
                for (int i = 1; i <= l; ++i) {
                    const int j = l - i;
                    if ((n - 1) * i + n * j == k) {
                        ++solutions;
                        CHECK(beta_inverse(k, l) == BetaPreimage{n, i, j});
                    }
                }
            CHECK(solutions == 1);
        }
}

TEST_CASE("independent set") {
    CHECK(names(independent_set(6)) == std::vector<std::string>{"t^6", "t^3*x3", "t*x5", "x3^2"});
    for (int d = 3; d <= 30; ++d) {
        const auto set = independent_set(d);
        CHECK(lower_bound(d) <= static_cast<std::int64_t>(set.size()));
        CHECK(set.size() <= enum_M(d).size());
        int t_forms = 0;
        int x_only = 0;
        for (const Monomial& m : set) (m.exponent(Variable::t()) > 0 ? t_forms : x_only) += 1;
        if (d >= 5) CHECK(t_forms >= d - 3);
        CHECK(x_only >= d / 6);
    }
}

TEST_CASE("rank certificates") {
    CHECK(rank_certificate(std::vector<LambdaPoly>{parse_expr("x4 - 4/3*t*x3 + 1/3*t^4")}, {CharacterSpec::universal()}) == 0);
    CHECK(rank_certificate(std::vector<Monomial>{}, {CharacterSpec::universal()}) == 0);
    const std::vector<LambdaPoly> dependent{parse_expr("x3*x7"), normal_form(parse_expr("x3*x7")), parse_expr("t^10")};
    CHECK(rank_certificate(dependent, {CharacterSpec::universal()}) == 2);
    for (int d = 0; d <= 12; ++d) {
        CHECK(rank_certificate(enum_M(d), {CharacterSpec::universal()}) == enum_M(d).size());
        CHECK(rank_certificate(independent_set(d), {CharacterSpec::d21a(), CharacterSpec::osp()}) == independent_set(d).size());
    }
}

TEST_CASE("series") {
    const auto a = vogel_series(200);
    const std::vector<std::int64_t> head{1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 9, 11, 13, 15, 17, 20};
    CHECK(std::vector<std::int64_t>(a.begin(), a.begin() + 16) == head);
    for (int d = 21; d <= 200; ++d) CHECK(a[d] >= (5 * d) / 3 - 2);
    CHECK(vogel_series(0) == std::vector<std::int64_t>{1});
}

TEST_CASE("census rows") {
    const auto rows = census(14, 4);
    REQUIRE(rows.size() == 15);
    for (const CensusRow& r : rows) {
        CHECK(r.lower <= r.size_M);
        CHECK(r.size_M == r.upper);
        CHECK(r.rank_universal == r.size_M);
        CHECK(r.rank_D_osp == r.independent);
    }
    const auto serial = census(14, 1);
    for (std::size_t d = 0; d < rows.size(); ++d) CHECK(serial[d].rank_D_osp == rows[d].rank_D_osp);
}
