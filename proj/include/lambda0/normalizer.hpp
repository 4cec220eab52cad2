#pragma once

#include "lambda0/poly.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace lambda0 {

/// Rewriting key of a {t, x_n} monomial: weighted degree, then minus the
/// total exponent (t included), then the exponents of x3, x4, x5, ...,
/// compared lexicographically. Every rewrite step strictly lowers it.
class OrderKey {
public:
    explicit OrderKey(const Monomial& m);

    friend std::strong_ordering operator<=>(const OrderKey& a, const OrderKey& b);
    friend bool operator==(const OrderKey& a, const OrderKey& b) { return (a <=> b) == 0; }

private:
    int degree_;
    int neg_total_;
    std::vector<int> x_exponents_;  // x_exponents_[n - 3] = exponent of x_n
};

/// Membership in the spanning set
///   M = { t^i, t^i x_{2n+1}^j, t^i x_{2n+1}^j x_{2n+3}^k | i >= 0; j, k, n > 0 }.
bool is_in_M(const Monomial& m);

/// Rewrites `m`, which must contain some x_{2i+2} (i >= 1), through the
/// Q-relation solved for the largest such x_{2i+2}. Every output monomial is
/// strictly smaller in OrderKey.
LambdaPoly eliminate_even(const Monomial& m);

/// Rewrites `m`, which must contain x_n and x_m with 3 <= n <= m-3, through
/// P_{n-2,m-4} = P_{m-4,n-2} solved for x_n x_m, using the smallest and
/// largest indices present.
LambdaPoly spread_reduce(const Monomial& m);

struct RuleApplication {
    enum class Kind { EliminateEven, Spread };
    Kind kind;
    Monomial input;
    int first_index;   // x_{2i+2} for EliminateEven, n for Spread
    int second_index;  // unused for EliminateEven, m for Spread
};

struct NormalizeOptions {
    std::size_t budget = 10'000'000;  // maximal number of rewrite steps
    bool record_trace = false;
};

struct NormalForm {
    LambdaPoly combination;
    std::vector<RuleApplication> trace;
    std::size_t steps = 0;
};

/// Reduces `p` to a linear combination of M-monomials that is equal to it
/// modulo the P- and Q-relations. Throws Error when the budget is exceeded.
NormalForm normalize(const LambdaPoly& p, const NormalizeOptions& options = {});

/// normalize(p).combination
LambdaPoly normal_form(const LambdaPoly& p);

/// {"monomial": "rational", ...} in print order.
std::string normal_form_json(const LambdaPoly& combination);

}  // namespace lambda0
