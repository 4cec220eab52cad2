#pragma once

#include "lambda0/character.hpp"
#include "lambda0/poly.hpp"

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace lambda0 {

/// Degree-d members of the spanning set M, ordered as t^d, then
/// t^i x_{2n+1}^j x_{2n+3}^k by n, j, k ascending.
std::vector<Monomial> enum_M(int d);

/// floor(d^2/12 + 1/2) + 1
std::int64_t upper_bound(int d);
/// floor(7d/6) - 3, clamped below at 1
std::int64_t lower_bound(int d);

/// mu(d) = floor(d/3) + 2 * sum_{j=1}^{floor(d/3)} eps(d + j)
std::int64_t mu(int d);
/// #{u^i v^j : 2i + 3j <= d, j > 0}; the lattice count and the closed form
/// are both computed and must agree.
std::int64_t count_N(int d);

struct BetaImage {
    int k = 0;  // u exponent
    int l = 0;  // v exponent
    friend bool operator==(const BetaImage&, const BetaImage&) = default;
};

/// beta(x_{2n+1}^i x_{2n+3}^j) = (u^{n-1} v)^i (u^n v)^j.
BetaImage beta(const Monomial& m);

struct BetaPreimage {
    int n = 0;
    int i = 0;
    int j = 0;
    friend bool operator==(const BetaPreimage&, const BetaPreimage&) = default;
};

BetaPreimage beta_inverse(int k, int l);
Monomial beta_monomial(const BetaPreimage& p);

/// Degree-d members of {1, t^i, t^i x_{2n+1}, t^i x_3 x_{2n+1},
/// x_{2n+1}^i, x_{2n+1}^i x_{2n+3}^j}.
std::vector<Monomial> independent_set(int d);

/// Exact rank of the matrix whose row for m concatenates the coefficient
/// vectors of spec(chi(m)) over all specs.
std::size_t rank_certificate(const std::vector<LambdaPoly>& elements, const std::vector<CharacterSpec>& specs);
std::size_t rank_certificate(const std::vector<Monomial>& monomials, const std::vector<CharacterSpec>& specs);

/// Coefficients a_0..a_dmax of
/// 1/(1-x) + (x^3 - x^16 - x^23 + x^26) / ((1-x)(1-x^2)(1-x^3)).
std::vector<std::int64_t> vogel_series(int dmax);

struct CensusRow {
    int d = 0;
    std::int64_t lower = 0;
    std::int64_t size_M = 0;
    std::int64_t upper = 0;
    std::int64_t rank_universal = 0;
    std::int64_t rank_D_osp = 0;
    std::int64_t independent = 0;
    std::int64_t a_d = 0;
};

CensusRow census_row(int d, const std::vector<std::int64_t>& series);
/// Rows 0..dmax, computed on `threads` workers.
std::vector<CensusRow> census(int dmax, unsigned threads = 1);

}  // namespace lambda0
