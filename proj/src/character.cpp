#include "lambda0/character.hpp"

#include "lambda0/error.hpp"
#include "lambda0/relations.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace lambda0 {

namespace {

Poly tp(int e) { return Poly::t_power(e); }
Poly r(long n, long d = 1) { return Poly::constant(Rational(n, d)); }

}  // namespace

TuvPoly chi_x(int n) {
    if (n < 0) throw DomainError("chi_x requires n >= 0");
    static std::mutex mutex;
    static std::vector<Poly> table;
    {
        std::lock_guard lock(mutex);
        if (table.empty()) table = {Poly(), r(2) * t_poly(), tp(2)};
        while (static_cast<int>(table.size()) <= n) {
            const int m = static_cast<int>(table.size()) - 3;
            Poly next = t_poly() * table[m + 2];
            next += u_poly() * (r(2) * table[m + 1] - tp(m + 1));
            next += v_poly() * (r(2) * table[m] - tp(m) - r(2) * (r(2) * t_poly()).pow(m));
            table.push_back(std::move(next));
        }
        return table[n];
    }
}

TuvPoly chi_poly(const LambdaPoly& p) {
    Substitution map;
    for (const Variable& var : p.variables()) {
        if (var.is_x())
            map.emplace(var, chi_x(var.index));
        else if (var.tag != VarTag::T)
            throw DomainError("chi_poly expects a polynomial in t and x_n, got " + var.name());
    }
    return substitute(p, map);
}

CharacterSpec CharacterSpec::universal() { return {"universal", t_poly(), u_poly(), v_poly()}; }

CharacterSpec CharacterSpec::d21a() {
    return {"D21a", Poly(), r(-2) * Poly::variable(Variable::sigma2()), r(4) * Poly::variable(Variable::sigma3())};
}

CharacterSpec CharacterSpec::osp() {
    const Poly a = Poly::variable(Variable::alpha());
    return {"osp", r(1), -a + r(6) * a.pow(2), r(-4) * a.pow(2) + r(8) * a.pow(3)};
}

CharacterSpec CharacterSpec::by_name(const std::string& name) {
    if (name == "universal") return universal();
    if (name == "D21a" || name == "d21a") return d21a();
    if (name == "osp") return osp();
    throw DomainError("unknown character '" + name + "' (expected universal, D21a or osp)");
}

Poly specialize_character(const TuvPoly& p, const CharacterSpec& spec) {
    if (p.has_negative_exponent()) throw DomainError("specialize_character requires nonnegative exponents");
    return substitute(p, {{Variable::t(), spec.t_image}, {Variable::u(), spec.u_image}, {Variable::v(), spec.v_image}});
}

std::pair<Monomial, Rational> leading_term_tuv(const TuvPoly& p) {
    if (p.is_zero()) throw DomainError("leading_term_tuv of the zero polynomial");
    auto key = [](const Monomial& m) {
        return std::make_tuple(-m.exponent(Variable::t()), -m.exponent(Variable::v()), m.exponent(Variable::u()));
    };
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
        if (key(it->first) > key(best->first)) best = it;
    return *best;
}

std::optional<SubringParts> subring_decompose(const TuvPoly& p) {
    for (const Variable& var : p.variables())
        if (var.tag != VarTag::T && var.tag != VarTag::U && var.tag != VarTag::V)
            throw DomainError("subring_decompose expects a polynomial in t, u, v");
    if (p.has_negative_exponent()) throw DomainError("subring_decompose requires nonnegative exponents");

    // coefficients of p as a polynomial in v
    std::map<int, Poly> by_v;
    for (const auto& [m, c] : p.terms())
        by_v[m.exponent(Variable::v())].add_term(m.without(Variable::v()), c);

    // synthetic division by v - s with s = tu - t^3
    const Poly s = t_poly() * u_poly() - tp(3);
    const int top = by_v.empty() ? 0 : by_v.rbegin()->first;
    Poly b;
    Poly carry;  // current quotient coefficient b_k
    for (int k = top; k >= 1; --k) {
        Poly ck = by_v.count(k) ? by_v[k] : Poly();
        carry = ck + s * carry;  // b_{k-1}
        b += carry.times(Monomial::of(Variable::v(), k - 1));
    }
    Poly a = (by_v.count(0) ? by_v[0] : Poly()) + s * carry;

    for (const Variable& var : a.variables())
        if (var.tag != VarTag::T) return std::nullopt;
    if (a + (tp(3) - t_poly() * u_poly() + v_poly()) * b != p)
        throw Error("subring_decompose: reconstruction mismatch");
    return SubringParts{std::move(a), std::move(b)};
}

const Poly& TuvLaurent::polynomial() const {
    if (!is_polynomial()) throw Error("negative t exponent in exported value " + value.to_string());
    return value;
}

TuvLaurent qhat(int i, int j, int k) {
    if (k != 1 && k != 2) throw DomainError("qhat requires k in {1, 2}");
    if (i == -2) {
        if (j != 2) throw DomainError("qhat(-2, j) is only defined for j = 2");
        // 2 (2t)^(k-2)
        return {Poly::monomial(Monomial::of(Variable::t(), k - 2), Rational(2).pow(k - 1))};
    }
    if (i == -1 && j == 1) return {chi_x(k).times(Monomial::of(Variable::t(), -1))};
    return {chi_poly(q_poly(i, j, k))};
}

namespace {

TuvLaurent lt(const Poly& c, int i, int j, int k) { return c * qhat(i, j, k); }

}  // namespace

TuvLaurent rek_residual(RekKind kind, int i, int j, int k) {
    const Poly t = t_poly();
    const Poly u = u_poly();
    const Poly v = v_poly();
    TuvLaurent rhs;
    TuvLaurent lhs;
    switch (kind) {
        case RekKind::Rek1:
            if (i < 1 || j < 0) throw DomainError("rek1 requires i >= 1, j >= 0");
            lhs = qhat(i, j, k);
            rhs = lt(t, i - 1, j + 1, k) - lt(r(1, 2), i - 1, j + 2, k) + lt(r(1, 2) * tp(j), i - 1, 2, k) +
                  lt(r(1, 2) * (chi_x(j + 2) - tp(j + 2)), i - 2, 2, k);
            break;
        case RekKind::Rek2:
            if (i < 0 || j < 3) throw DomainError("rek2 requires i >= 0, j >= 3");
            lhs = qhat(i, j, k);
            rhs = lt(t, i, j - 1, k) + lt(r(2) * u, i, j - 2, k) + lt(r(2) * v, i, j - 3, k) -
                  lt(u * tp(j - 2) + v * tp(j - 3), i - 1, 2, k) - lt(v * (r(2) * t).pow(j - 1), i - 2, 2, k);
            break;
        case RekKind::Rek3:
            if (i < 1) throw DomainError("rek3 requires i >= 1");
            lhs = qhat(i, 1, k);
            rhs = lt(t, i - 1, 2, k) - lt(u, i - 1, 1, k) + lt(r(2) * t * u - v, i - 2, 2, k) -
                  lt(t * v, i - 2, 1, k) + lt(r(2) * tp(2) * v, i - 3, 2, k);
            break;
        case RekKind::Rek4:
            if (i < 1) throw DomainError("rek4 requires i >= 1");
            lhs = qhat(i, 2, k);
            rhs = lt(tp(2) - u, i - 1, 2, k) + lt(t * u - v, i - 1, 1, k) + lt(r(2) * t * (t * u - v), i - 2, 2, k) +
                  lt(tp(2) * v, i - 2, 1, k) + lt(r(2) * tp(3) * v, i - 3, 2, k);
            break;
    }
    return lhs - rhs;
}

bool verify_rek(RekKind kind, int i, int j, int k) { return rek_residual(kind, i, j, k).value.is_zero(); }

bool verify_qhat_identities(int i) {
    if (i < 0) throw DomainError("verify_qhat_identities requires i >= 0");
    return qhat(i, 1, 2) == qhat(i, 2, 1) && qhat(i - 1, 2, 2) == qhat(i, 1, 1);
}

}  // namespace lambda0
