#include "lambda0/normalizer.hpp"

#include "lambda0/error.hpp"
#include "lambda0/relations.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace lambda0 {

OrderKey::OrderKey(const Monomial& m) : degree_(m.weighted_degree()), neg_total_(-m.total_exponent()) {
    for (const auto& [var, e] : m.factors()) {
        if (!var.is_x()) continue;
        auto slot = static_cast<std::size_t>(var.index - 3);
        if (x_exponents_.size() <= slot) x_exponents_.resize(slot + 1, 0);
        x_exponents_[slot] = e;
    }
}

std::strong_ordering operator<=>(const OrderKey& a, const OrderKey& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    if (auto c = a.neg_total_ <=> b.neg_total_; c != 0) return c;
    std::size_t n = std::max(a.x_exponents_.size(), b.x_exponents_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int ea = i < a.x_exponents_.size() ? a.x_exponents_[i] : 0;
        int eb = i < b.x_exponents_.size() ? b.x_exponents_[i] : 0;
        if (auto c = ea <=> eb; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

namespace {

std::vector<Monomial::Factor> x_factors(const Monomial& m) {
    std::vector<Monomial::Factor> xs;
    for (const auto& f : m.factors())
        if (f.first.is_x()) xs.push_back(f);
    return xs;
}

void require_lambda_monomial(const Monomial& m) {
    for (const auto& [var, e] : m.factors()) {
        if (var.tag != VarTag::T && !var.is_x())
            throw DomainError("normalizer works on polynomials in t and x_n only, got " + var.name());
        if (e < 0) throw DomainError("normalizer requires nonnegative exponents");
    }
}

// x_{2i+2} expressed through lower terms, memoized by i
const Poly& even_rewrite(int i) {
    static std::mutex mutex;
    static std::map<int, Poly> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(i); it != memo.end()) return it->second;
    }
    const Poly rel = relation_q(i);
    const Monomial target = Monomial::of(Variable::x(2 * i + 2));
    const Rational c = rel.coefficient(target);
    if (c != Rational(3) * Rational(-2).pow(-i))
        throw Error("Q-relation " + std::to_string(i) + " has leading coefficient " + c.to_string() +
                    ", expected 3*(-2)^-" + std::to_string(i));
    Poly rest = rel;
    rest.add_term(target, -c);
    Poly solved = rest * (Rational(-1) / c);
    std::lock_guard lock(mutex);
    return memo.emplace(i, std::move(solved)).first->second;
}

// x_n x_m expressed through lower terms, memoized by (n, m)
const Poly& spread_rewrite(int n, int m) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, Poly> memo;
    const auto key = std::make_pair(n, m);
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    const Poly rel = relation_p(n - 2, m - 4);
    const Monomial target = Monomial::of(Variable::x(n)) * Monomial::of(Variable::x(m));
    const Rational c = rel.coefficient(target);
    if (c != Rational(3))
        throw Error("P-relation (" + std::to_string(n - 2) + ", " + std::to_string(m - 4) +
                    ") has coefficient " + c.to_string() + " on its leading pair, expected 3");
    Poly rest = rel;
    rest.add_term(target, -c);
    Poly solved = rest * (Rational(-1) / c);
    std::lock_guard lock(mutex);
    return memo.emplace(key, std::move(solved)).first->second;
}

Monomial strip(const Monomial& m, int index, int count) {
    return m.shifted(Variable::x(index), -count);
}

}  // namespace

bool is_in_M(const Monomial& m) {
    require_lambda_monomial(m);
    auto xs = x_factors(m);
    if (xs.empty()) return true;
    if (xs.front().first.index % 2 == 0) return false;
    if (xs.size() == 1) return true;
    if (xs.size() == 2) return xs[1].first.index == xs[0].first.index + 2;
    return false;
}

LambdaPoly eliminate_even(const Monomial& m) {
    require_lambda_monomial(m);
    int largest_even = 0;
    for (const auto& [var, e] : x_factors(m))
        if (var.index % 2 == 0) largest_even = std::max(largest_even, var.index);
    if (largest_even == 0) throw DomainError("eliminate_even: " + m.to_string() + " has no even-index factor");
    const int i = (largest_even - 2) / 2;
    return even_rewrite(i).times(strip(m, largest_even, 1));
}

LambdaPoly spread_reduce(const Monomial& m) {
    require_lambda_monomial(m);
    auto xs = x_factors(m);
    if (xs.empty()) throw DomainError("spread_reduce: " + m.to_string() + " has no x-factor");
    const int n = xs.front().first.index;
    const int mm = xs.back().first.index;
    if (n < 3 || n > mm - 3)
        throw DomainError("spread_reduce: " + m.to_string() + " has no pair x_n x_m with n <= m-3");
    Monomial rest = strip(strip(m, n, 1), mm, 1);
    return spread_rewrite(n, mm).times(rest);
}

NormalForm normalize(const LambdaPoly& p, const NormalizeOptions& options) {
    struct KeyDesc {
        bool operator()(const Monomial& a, const Monomial& b) const {
            auto c = OrderKey(a) <=> OrderKey(b);
            return c != 0 ? c > 0 : a < b;
        }
    };
    // Rewrites only produce smaller keys, so one pass from the top suffices.
    std::map<Monomial, Rational, KeyDesc> work;
    for (const auto& [m, c] : p.terms()) {
        require_lambda_monomial(m);
        work.emplace(m, c);
    }
    NormalForm out;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Monomial& m = node.key();
        const Rational& c = node.mapped();
        if (c.is_zero()) continue;
        if (is_in_M(m)) {
            out.combination.add_term(m, c);
            continue;
        }
        if (++out.steps > options.budget)
            throw Error("normalize: rewrite budget of " + std::to_string(options.budget) + " steps exceeded");

        bool has_even = false;
        for (const auto& [var, e] : x_factors(m)) has_even = has_even || var.index % 2 == 0;
        Poly replacement = has_even ? eliminate_even(m) : spread_reduce(m);

        if (options.record_trace) {
            auto xs = x_factors(m);
            RuleApplication rule{RuleApplication::Kind::Spread, m, xs.front().first.index, xs.back().first.index};
            if (has_even) {
                rule.kind = RuleApplication::Kind::EliminateEven;
                rule.first_index = 0;
                for (const auto& f : xs)
                    if (f.first.index % 2 == 0) rule.first_index = std::max(rule.first_index, f.first.index);
                rule.second_index = 0;
            }
            out.trace.push_back(rule);
        }

        const OrderKey key(m);
        for (const auto& [rm, rc] : replacement.terms()) {
            if (!(OrderKey(rm) < key))
                throw Error("normalize: rewrite of " + m.to_string() + " produced non-decreasing " + rm.to_string());
            auto [it, inserted] = work.try_emplace(rm, rc * c);
            if (!inserted) it->second += rc * c;
        }
    }
    return out;
}

LambdaPoly normal_form(const LambdaPoly& p) { return normalize(p).combination; }

std::string normal_form_json(const LambdaPoly& combination) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [m, c] : combination.terms()) j[m.to_string()] = c.to_string();
    return j.dump();
}

}  // namespace lambda0
