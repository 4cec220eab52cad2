#include "lambda0/poly.hpp"

#include "lambda0/error.hpp"

#include <algorithm>
#include <sstream>

namespace lambda0 {

Variable Variable::x(int n) {
    if (n < 3) throw DomainError("x" + std::to_string(n) + " is not a variable (x0, x1, x2 are eliminated)");
    return {VarTag::X, n};
}

int Variable::weight() const noexcept {
    switch (tag) {
        case VarTag::T: return 1;
        case VarTag::U: return 2;
        case VarTag::V: return 3;
        case VarTag::Sigma2: return 2;
        case VarTag::Sigma3: return 3;
        case VarTag::Alpha: return 1;
        case VarTag::X: return index;
    }
    return 0;
}

std::string Variable::name() const {
    switch (tag) {
        case VarTag::T: return "t";
        case VarTag::U: return "u";
        case VarTag::V: return "v";
        case VarTag::Sigma2: return "s2";
        case VarTag::Sigma3: return "s3";
        case VarTag::Alpha: return "a";
        case VarTag::X: return "x" + std::to_string(index);
    }
    return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Variable var, int exponent) {
    Monomial m;
    if (exponent != 0) m.factors_.emplace_back(var, exponent);
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [var, e] : factors) {
        if (!m.factors_.empty() && m.factors_.back().first == var)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(var, e);
        if (m.factors_.back().second == 0) m.factors_.pop_back();
    }
    return m;
}

int Monomial::exponent(Variable var) const noexcept {
    for (const auto& [v, e] : factors_)
        if (v == var) return e;
    return 0;
}

bool Monomial::has_negative_exponent() const noexcept {
    return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second < 0; });
}

int Monomial::weighted_degree() const noexcept {
    int d = 0;
    for (const auto& [v, e] : factors_) d += v.weight() * e;
    return d;
}

int Monomial::total_exponent() const noexcept {
    int s = 0;
    for (const auto& f : factors_) s += f.second;
    return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) r.factors_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::pow(int k) const {
    if (k == 0) return {};
    Monomial r = *this;
    for (auto& f : r.factors_) f.second *= k;
    return r;
}

Monomial Monomial::without(Variable var) const {
    Monomial r;
    for (const auto& f : factors_)
        if (f.first != var) r.factors_.push_back(f);
    return r;
}

Monomial Monomial::shifted(Variable var, int delta) const {
    return *this * Monomial::of(var, delta);
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
        if (!s.empty()) s += '*';
        s += v.name();
        if (e != 1) s += '^' + std::to_string(e);
    }
    return s;
}

bool DisplayOrder::operator()(const Monomial& a, const Monomial& b) const {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    // x-factors sit at the end of the sorted factor list
    auto xa = std::find_if(fa.begin(), fa.end(), [](const auto& f) { return f.first.is_x(); });
    auto xb = std::find_if(fb.begin(), fb.end(), [](const auto& f) { return f.first.is_x(); });
    for (;; ++xa, ++xb) {
        bool ea = xa == fa.end();
        bool eb = xb == fb.end();
        if (ea && eb) break;
        if (ea) return false;
        if (eb) return true;
        if (xa->first.index != xb->first.index) return xa->first.index < xb->first.index;
        if (xa->second != xb->second) return xa->second > xb->second;
    }
    static constexpr VarTag kOrder[] = {VarTag::T, VarTag::U, VarTag::V,
                                        VarTag::Sigma2, VarTag::Sigma3, VarTag::Alpha};
    for (VarTag tag : kOrder) {
        int ea = a.exponent({tag, 0});
        int eb = b.exponent({tag, 0});
        if (ea != eb) return ea > eb;
    }
    return false;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial(), constant);
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

Poly Poly::t_power(int e) { return monomial(Monomial::of(Variable::t(), e)); }

Poly Poly::x(int n) {
    if (n < 0) throw DomainError("x" + std::to_string(n) + ": negative index");
    if (n == 0) return {};
    if (n == 1) return monomial(Monomial::of(Variable::t()), Rational(2));
    if (n == 2) return t_power(2);
    return variable(Variable::x(n));
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Variable> Poly::variables() const {
    std::set<Variable> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& f : m.factors()) vars.insert(f.first);
    return vars;
}

bool Poly::has_negative_exponent() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.first.has_negative_exponent(); });
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly result(Rational(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

Poly Poly::times(const Monomial& m) const {
    Poly r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (m.is_one()) {
            os << mag.to_string();
        } else if (mag.is_one()) {
            os << m.to_string();
        } else if (mag.is_integer()) {
            os << mag.to_string() << '*' << m.to_string();
        } else {
            os << '(' << mag.to_string() << ")*" << m.to_string();
        }
    }
    return os.str();
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }
Poly scale(const Rational& c, const Poly& p) { return p * c; }

std::optional<int> weighted_degree(const Poly& p) {
    if (p.is_zero()) throw DomainError("degree undefined for the zero polynomial");
    int d = p.terms().begin()->first.weighted_degree();
    for (const auto& [m, c] : p.terms())
        if (m.weighted_degree() != d) return std::nullopt;
    return d;
}

namespace {

// image^e, for e < 0 only when the image is c*t^k
Poly image_power(const Poly& image, int e) {
    if (e >= 0) return image.pow(static_cast<unsigned>(e));
    if (image.size() != 1) throw DomainError("Laurent substitution unsupported");
    const auto& [m, c] = *image.terms().begin();
    for (const auto& f : m.factors())
        if (f.first != Variable::t()) throw DomainError("Laurent substitution unsupported");
    return Poly::monomial(m.pow(e), c.pow(e));
}

}  // namespace

Poly substitute(const Poly& p, const Substitution& map) {
    std::map<std::pair<Variable, int>, Poly> powers;
    Poly result;
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(c);
        Monomial kept;
        for (const auto& [var, e] : m.factors()) {
            auto it = map.find(var);
            if (it == map.end()) {
                kept = kept * Monomial::of(var, e);
                continue;
            }
            auto key = std::make_pair(var, e);
            auto pw = powers.find(key);
            if (pw == powers.end()) pw = powers.emplace(key, image_power(it->second, e)).first;
            term *= pw->second;
            if (term.is_zero()) break;
        }
        if (!term.is_zero()) result += term.times(kept);
    }
    return result;
}

}  // namespace lambda0
