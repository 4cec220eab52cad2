#pragma once

#include "lambda0/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lambda0 {

enum class VarTag : std::uint8_t { T, U, V, Sigma2, Sigma3, Alpha, X };

/// A generator of one of the polynomial rings used here. `index` is only
/// meaningful for X and is always >= 3: x0, x1 and x2 are not variables,
/// they are eliminated to 0, 2t and t^2 when a polynomial is built.
struct Variable {
    VarTag tag = VarTag::T;
    int index = 0;

    static constexpr Variable t() { return {VarTag::T, 0}; }
    static constexpr Variable u() { return {VarTag::U, 0}; }
    static constexpr Variable v() { return {VarTag::V, 0}; }
    static constexpr Variable sigma2() { return {VarTag::Sigma2, 0}; }
    static constexpr Variable sigma3() { return {VarTag::Sigma3, 0}; }
    static constexpr Variable alpha() { return {VarTag::Alpha, 0}; }
    static Variable x(int n);

    bool is_x() const noexcept { return tag == VarTag::X; }
    int weight() const noexcept;
    std::string name() const;

    friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Product of variable powers. Zero exponents are never stored; negative
/// exponents are representable (only T uses them, for Laurent intermediates).
class Monomial {
public:
    using Factor = std::pair<Variable, int>;

    Monomial() = default;
    static Monomial of(Variable var, int exponent = 1);
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    int exponent(Variable var) const noexcept;
    bool is_one() const noexcept { return factors_.empty(); }
    bool has_negative_exponent() const noexcept;

    int weighted_degree() const noexcept;
    /// Sum of all exponents, t included.
    int total_exponent() const noexcept;

    Monomial operator*(const Monomial& other) const;
    Monomial pow(int k) const;
    /// This monomial with `var` removed entirely.
    Monomial without(Variable var) const;
    /// This monomial with the exponent of `var` changed by `delta`.
    Monomial shifted(Variable var, int delta) const;

    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.factors_ <=> b.factors_; }

private:
    std::vector<Factor> factors_;  // sorted by variable
};

/// Deterministic print order: monomials with x-factors first (smaller index,
/// then larger exponent, first), then by exponents of t, u, v, s2, s3, a
/// descending.
struct DisplayOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial with exact rational coefficients. No zero coefficient
/// is ever stored, so equality is equality of term maps.
class Poly {
public:
    using Terms = std::map<Monomial, Rational, DisplayOrder>;

    Poly() = default;
    explicit Poly(const Rational& constant);
    static Poly constant(const Rational& c) { return Poly(c); }
    static Poly variable(Variable var) { return monomial(Monomial::of(var)); }
    static Poly monomial(const Monomial& m, const Rational& c = Rational(1));
    /// t^e, e may be negative.
    static Poly t_power(int e);
    /// x_n with x0 = 0, x1 = 2t, x2 = t^2.
    static Poly x(int n);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;
    std::set<Variable> variables() const;
    bool has_negative_exponent() const;
    bool is_constant() const;

    void add_term(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    Poly pow(unsigned k) const;
    /// Multiply every term by the monomial `m`.
    Poly times(const Monomial& m) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    /// Canonical text in the expression grammar, e.g. "(4/3)*t*x3 - (1/3)*t^4".
    std::string to_string() const;

private:
    Terms terms_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly scale(const Rational& c, const Poly& p);

/// Weighted degree of a nonzero polynomial, or nullopt when its terms have
/// different weighted degrees. Throws DomainError for the zero polynomial.
std::optional<int> weighted_degree(const Poly& p);

using Substitution = std::map<Variable, Poly>;

/// Image of `p` under the ring map sending each variable in `map` to its
/// image and fixing all others. Negative exponents are only allowed when the
/// image of the variable is a unit (a nonzero constant times a power of t).
Poly substitute(const Poly& p, const Substitution& map);

// Common shorthands.
inline Poly t_poly() { return Poly::variable(Variable::t()); }
inline Poly u_poly() { return Poly::variable(Variable::u()); }
inline Poly v_poly() { return Poly::variable(Variable::v()); }

}  // namespace lambda0

namespace lambda0 {
/// Polynomial in t and x_n (n >= 3).
using LambdaPoly = Poly;
/// Polynomial in t, u, v.
using TuvPoly = Poly;
}  // namespace lambda0
