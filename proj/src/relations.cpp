#include "lambda0/relations.hpp"

#include "lambda0/error.hpp"

#include <mutex>
#include <tuple>

namespace lambda0 {

namespace {

Poly tp(int e) { return Poly::t_power(e); }
Poly xx(int n) { return Poly::x(n); }
Poly r(long n, long d = 1) { return Poly::constant(Rational(n, d)); }

}  // namespace

LambdaPoly p_poly(int i, int j) {
    if (i < 1 || j < 1) throw DomainError("p_poly requires i, j >= 1");
    const Poly t = t_poly();
    const Poly x3 = xx(3);
    Poly p;
    p += r(3) * xx(i + 2) * xx(j + 4);
    p -= r(3) * t * xx(i + 1) * xx(j + 4);
    p -= r(9) * t * xx(i + 2) * xx(j + 3);
    p -= r(6) * tp(2) * xx(i) * xx(j + 4);
    p += r(9) * tp(2) * xx(i + 1) * xx(j + 3);
    p += r(18) * tp(3) * xx(i) * xx(j + 3);
    p -= r(2) * (x3 + r(2) * tp(3)) * xx(i + 1) * xx(j + 2);
    p += r(4) * t * (x3 - r(4) * tp(3)) * xx(i) * xx(j + 2);
    p += r(8) * tp(2) * (tp(3) - x3) * xx(i) * xx(j + 1);
    p += r(3) * tp(i + 2) * xx(j + 4);
    p -= r(9) * tp(i + 3) * xx(j + 3);
    p += (r(7) * tp(3) - x3) * tp(i + 1) * xx(j + 2);
    p += r(3) * (x3 - tp(3)) * tp(i + 2) * xx(j + 1);
    p += r(2) * (tp(3) - x3) * tp(i + 3) * xx(j);
    return p;
}

LambdaPoly q_poly(int i, int j, int k) {
    if (k != 1 && k != 2) throw DomainError("q_poly requires k in {1, 2}");
    if (i < -1 || (i == -1 && j != 2) || (i >= 0 && j < 0))
        throw DomainError("q_poly(" + std::to_string(i) + ", " + std::to_string(j) + ") is outside the domain");

    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, Poly> memo;
    const auto key = std::make_tuple(i, j, k);
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }

    Poly result;
    if (i == -1) {
        result = tp(k);
    } else if (i == 0) {
        result = xx(j + k);
    } else {
        const int a = i - 1;
        result = t_poly() * q_poly(a, j + 1, k);
        result -= r(1, 2) * q_poly(a, j + 2, k);
        result += r(1, 2) * tp(j) * q_poly(a, 2, k);
        result += r(1, 2) * (xx(j + 2) - tp(j + 2)) * q_poly(a - 1, 2, k);
    }

    std::lock_guard lock(mutex);
    return memo.emplace(key, std::move(result)).first->second;
}

LambdaPoly relation_p(int i, int j) { return p_poly(i, j) - p_poly(j, i); }

LambdaPoly relation_q(int i) {
    if (i < 0) throw DomainError("relation_q requires i >= 0");
    return q_poly(i, 1, 1) - q_poly(i - 1, 2, 2);
}

LambdaPoly gamma_alpha(int i, int j, int r_, int s) {
    if (i < 1 || j < 1 || r_ < 0 || s < 0)
        throw DomainError("gamma_alpha requires i, j >= 1 and r, s >= 0");
    auto left = [&](int a) { return r(2) * xx(i + a) - tp(i + a); };
    auto right = [&](int b) { return tp(j + b) - r(2) * xx(j + b); };
    return r(2) * left(r_) * right(s) - r(2) * left(s) * right(r_);
}

void AlphaCombination::add(int r_, int s, const LambdaPoly& coefficient) {
    auto& slot = terms[{r_, s}];
    slot += coefficient;
    if (slot.is_zero()) terms.erase({r_, s});
}

AlphaCombination eq1_combination() {
    const Poly t = t_poly();
    const Poly x3 = xx(3);
    AlphaCombination c;
    c.add(3, 5, r(3));
    c.add(3, 4, r(-9) * t);
    c.add(2, 5, r(-3) * t);
    c.add(2, 4, r(9) * tp(2));
    c.add(1, 5, r(-6) * tp(2));
    c.add(2, 3, -(r(4) * tp(3) + r(2) * x3));
    c.add(1, 4, r(18) * tp(3));
    c.add(1, 3, r(-4) * t * (r(4) * tp(3) - x3));
    c.add(1, 2, r(-8) * tp(2) * (x3 - tp(3)));
    return c;
}

LambdaPoly apply_gamma(int i, int j, const AlphaCombination& combination) {
    Poly out;
    for (const auto& [rs, coefficient] : combination.terms)
        out += coefficient * gamma_alpha(i, j, rs.first, rs.second);
    return out;
}

LambdaPoly gamma_of_eq1(int i, int j) { return apply_gamma(i, j, eq1_combination()); }

std::pair<int, int> gamma_relation_indices(int i, int j) { return {i + 1, j + 1}; }

std::optional<Rational> proportionality_constant(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    const auto& [m, cb] = *b.terms().begin();
    Rational c = a.coefficient(m) / cb;
    if (a == b * c) return c;
    return std::nullopt;
}

Rational gamma_eq1_constant() {
    static const Rational constant = [] {
        auto [a, b] = gamma_relation_indices(1, 2);
        auto c = proportionality_constant(gamma_of_eq1(1, 2), relation_p(a, b));
        if (!c) throw Error("gamma image of eq1 is not proportional to its P-relation");
        return *c;
    }();
    return constant;
}

}  // namespace lambda0
