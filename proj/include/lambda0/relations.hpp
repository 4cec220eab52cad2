#pragma once

#include "lambda0/poly.hpp"

#include <map>
#include <optional>
#include <utility>

namespace lambda0 {

/// The two-parameter family P_{i,j}, homogeneous of degree i+j+6 (i, j >= 1).
LambdaPoly p_poly(int i, int j);

/// The recursively defined Q^k_{i,j}, k in {1, 2}, on the domain
/// (i, j) = (-1, 2) or i >= 0, j >= 0. Memoized.
LambdaPoly q_poly(int i, int j, int k);

/// P_{i,j} - P_{j,i}.
LambdaPoly relation_p(int i, int j);

/// Q^1_{i,1} - Q^2_{i-1,2}, homogeneous of degree 2i+2 (identically zero
/// for i = 0).
LambdaPoly relation_q(int i);

/// Image of the formal symbol alpha_{rs} under the gluing map Gamma_{i,j}:
///   2(2x_{i+r} - t^{i+r})(t^{j+s} - 2x_{j+s}) - (r <-> s).
LambdaPoly gamma_alpha(int i, int j, int r, int s);

/// Formal LambdaPoly-linear combination of symbols alpha_{rs}.
struct AlphaCombination {
    std::map<std::pair<int, int>, LambdaPoly> terms;

    void add(int r, int s, const LambdaPoly& coefficient);
};

/// The six-leg identity 3a35 - 9t a34 - 3t a25 + ... = 0, all terms moved to
/// the left-hand side.
AlphaCombination eq1_combination();

/// Maps every alpha_{rs} of `combination` through gamma_alpha(i, j, r, s).
LambdaPoly apply_gamma(int i, int j, const AlphaCombination& combination);

/// Gamma_{i,j} applied to eq1_combination().
LambdaPoly gamma_of_eq1(int i, int j);

/// Index pair (i', j') of the P-relation produced by gamma_of_eq1(i, j).
/// Degree bookkeeping forces (i+1, j+1): the image has degree i+j+8.
std::pair<int, int> gamma_relation_indices(int i, int j);

/// c with a == c*b, or nullopt when no such c exists. When both are zero the
/// result is nullopt as well (any c works, none is determined).
std::optional<Rational> proportionality_constant(const Poly& a, const Poly& b);

/// The scalar c with gamma_of_eq1(i, j) = c * relation_p(i+1, j+1),
/// determined once from (i, j) = (1, 2).
Rational gamma_eq1_constant();

}  // namespace lambda0
