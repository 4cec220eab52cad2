#include "lambda0/words.hpp"

#include "lambda0/error.hpp"
#include "lambda0/normalizer.hpp"
#include "lambda0/relations.hpp"

#include <vector>

namespace lambda0 {

namespace {

struct BudgetExhausted {};
struct Underdetermined {
    std::size_t length;
};

bool is_base_word(const std::string& c) {
    const std::size_t n = c.size();
    if (n < 3 || c[0] != c[n - 1] || c[1] == c[0]) return false;
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (c[i] != c[1]) return false;
    return true;
}

std::string alternating_word(std::size_t length) {
    std::string s;
    for (std::size_t i = 0; i < length; ++i) s += (i % 2 == 0) ? '1' : '2';
    return s;
}

// transposition of S3 fixing g
std::string sigma_fixing(char g, std::string v) {
    char a = 0;
    char b = 0;
    for (char c : {'1', '2', '3'}) {
        if (c == g) continue;
        (a == 0 ? a : b) = c;
    }
    for (char& c : v) {
        if (c == a)
            c = b;
        else if (c == b)
            c = a;
    }
    return v;
}

std::string repeat(char c, int n) { return std::string(static_cast<std::size_t>(std::max(n, 0)), c); }

}  // namespace

std::string canonical_letters(std::string_view letters) {
    char map[3] = {0, 0, 0};
    char next = '1';
    std::string out;
    out.reserve(letters.size());
    for (char c : letters) {
        char& slot = map[c - '1'];
        if (slot == 0) slot = next++;
        out += slot;
    }
    return out;
}

Word::Word(std::string letters) : letters_(std::move(letters)) {
    if (letters_.size() < 2) throw DomainError("words must have length >= 2");
    for (char c : letters_)
        if (c != '1' && c != '2' && c != '3')
            throw DomainError("word letters must be 1, 2 or 3, got '" + std::string(1, c) + "'");
}

std::string Word::canonical() const { return canonical_letters(letters_); }

void BracketEngine::charge() {
    if (++spent_ > budget_) throw BudgetExhausted{};
}

BracketValue BracketEngine::evaluate(const Word& w, std::size_t budget) {
    budget_ = budget;
    spent_ = 0;
    BracketValue out;
    try {
        out.value = value(w.canonical());
    } catch (const BudgetExhausted&) {
        out.reason = "derivation budget of " + std::to_string(budget) + " steps exhausted";
        out.partial = "<" + w.letters() + ">";
    } catch (const Underdetermined& u) {
        out.reason = "coefficient of <" + alternating_word(u.length) + "> vanished in its defining relation";
        out.partial = "<" + w.letters() + ">";
    }
    return out;
}

Poly BracketEngine::value(const std::string& word) {
    const std::string c = canonical_letters(word);
    if (auto it = values_.find(c); it != values_.end()) return it->second;
    charge();
    const std::size_t n = c.size();
    Poly result;
    if (n == 2) {
        result = c == "11" ? Poly::constant(Rational(2)) * t_poly() : -t_poly();
    } else if (is_base_word(c)) {
        result = Poly::x(static_cast<int>(n) - 1);
    } else {
        Affine a = affine(c, true);
        result = a.rest;
        if (!a.alpha.is_zero()) result += alternating(n) * a.alpha;
    }
    return values_.emplace(c, std::move(result)).first->second;
}

BracketEngine::Affine BracketEngine::affine(const std::string& word, bool use_base) {
    const std::string c = canonical_letters(word);
    const std::size_t n = c.size();
    if (c == alternating_word(n)) return {Rational(1), Poly()};
    if (use_base) {
        if (auto it = affine_.find(c); it != affine_.end()) return it->second;
        if (n == 2 || is_base_word(c)) return {Rational(0), value(c)};
    }
    charge();
    const Poly t = t_poly();
    Affine result{Rational(0), Poly()};
    bool done = false;
    if (c[0] == c[1]) {
        result.rest = t * value(c.substr(1));
        done = true;
    } else if (c[n - 1] == c[n - 2]) {
        result.rest = t * value(c.substr(0, n - 1));
        done = true;
    }
    for (std::size_t k = 1; !done && k + 2 < n; ++k) {
        if (c[k] != c[k + 1]) continue;
        // <u d v> summed over the letter d after the repeat equals 2t <u v>
        const std::string pre = c.substr(0, k + 1);
        const std::string rest = c.substr(k + 2);
        result.rest = Poly::constant(Rational(2)) * t * value(pre + rest);
        for (char d : {'1', '2', '3'}) {
            if (d == c[k]) continue;
            Affine other = affine(pre + d + rest, true);
            result.alpha -= other.alpha;
            result.rest -= other.rest;
        }
        done = true;
    }
    for (std::size_t k = 1; !done && k + 1 < n; ++k) {
        if (c[k + 1] == c[k - 1]) continue;
        // <u g v> = <u g><g v> - <u g sigma_g(v)>
        const std::string u = c.substr(0, k);
        const char g = c[k];
        const std::string v = c.substr(k + 1);
        Poly product = value(u + g) * value(std::string(1, g) + v);
        Affine other = affine(u + g + sigma_fixing(g, v), true);
        result.alpha = -other.alpha;
        result.rest = product - other.rest;
        done = true;
    }
    if (!done) throw Error("bracket derivation found no applicable rule for <" + c + ">");
    if (use_base) affine_.emplace(c, result);
    return result;
}

const Poly& BracketEngine::alternating(std::size_t length) {
    if (auto it = alternating_.find(length); it != alternating_.end()) return it->second;
    Poly solved;
    if (length == 3) {
        solved = Poly::x(2);
    } else {
        // <1 2^{L-2} 1> = x_{L-1}, derived once more without the base rule
        const std::string base = "1" + repeat('2', static_cast<int>(length) - 2) + "1";
        Affine a = affine(base, false);
        if (a.alpha.is_zero()) throw Underdetermined{length};
        solved = (Poly::x(static_cast<int>(length) - 1) - a.rest) * (Rational(1) / a.alpha);
    }
    return alternating_.emplace(length, std::move(solved)).first->second;
}

BracketValue bracket_eval(const Word& w, std::size_t budget) {
    thread_local BracketEngine engine;
    return engine.evaluate(w, budget);
}

// --------------------------------------------------------------- identities

namespace {

// A linear combination of brackets with polynomial coefficients.
struct BracketSum {
    std::vector<std::pair<Poly, std::string>> terms;
    Poly constant;

    BracketSum& add(const Poly& c, const std::string& w) {
        terms.emplace_back(c, w);
        return *this;
    }
};

// value of a sum, or the first unreduced bracket
std::optional<Poly> evaluate_sum(const BracketSum& s, std::size_t budget, std::string& unreduced) {
    Poly total = s.constant;
    for (const auto& [c, w] : s.terms) {
        BracketValue b = bracket_eval(Word(w), budget);
        if (!b.reduced()) {
            unreduced = "<" + w + ">: " + b.reason;
            return std::nullopt;
        }
        total += c * *b.value;
    }
    return total;
}

IdentityResult compare(const BracketSum& lhs, const BracketSum& rhs, std::size_t budget) {
    IdentityResult r;
    std::string unreduced;
    auto a = evaluate_sum(lhs, budget, unreduced);
    auto b = a ? evaluate_sum(rhs, budget, unreduced) : std::nullopt;
    if (!a || !b) {
        r.status = IdentityStatus::Inconclusive;
        r.detail = unreduced;
        return r;
    }
    r.witness = normal_form(*a - *b);
    r.status = r.witness.is_zero() ? IdentityStatus::Holds : IdentityStatus::Fails;
    return r;
}

Poly one() { return Poly::constant(Rational(1)); }
Poly num(long n, long d = 1) { return Poly::constant(Rational(n, d)); }

}  // namespace

IdentityResult verify_word_identity(int id, int n, const std::string& u, std::size_t budget) {
    if (id < 2 || id > 7) throw DomainError("word identities are numbered 2 to 7");
    if (id != 2 && n < 1) throw DomainError("word identities require n >= 1");
    if (id != 3 && id != 4) {
        if (u.empty()) throw DomainError("identity " + std::to_string(id) + " needs a nonempty word u");
        (void)Word(u + "1");  // validates the letters of u
    }
    const Poly t = t_poly();
    const std::string twos = repeat('2', n);
    BracketSum lhs;
    BracketSum rhs;
    switch (id) {
        case 2:
            lhs.add(one(), u + "212");
            rhs.add(-one(), u + "221");
            return compare(lhs, rhs, budget);
        case 3:
            lhs.add(one(), "21" + twos + "1");
            rhs.constant = -Poly::x(n + 2);
            return compare(lhs, rhs, budget);
        case 4:
            lhs.add(one(), "23" + twos + "1");
            rhs.constant = Poly::x(n + 2) - Poly::t_power(n + 2);
            return compare(lhs, rhs, budget);
        case 5:
            lhs.add(one(), u + "21" + twos + "1");
            rhs.add(num(2) * t, u + repeat('2', n + 1) + "1")
                .add(-one(), u + repeat('2', n + 2) + "1")
                .add(-one(), u + "23" + twos + "1");
            return compare(lhs, rhs, budget);
        case 6: {
            std::string unreduced;
            BracketSum prod;
            prod.add(one(), u + "2");
            auto u2 = evaluate_sum(prod, budget, unreduced);
            BracketSum right;
            right.add(one(), "23" + twos + "1");
            auto r23 = u2 ? evaluate_sum(right, budget, unreduced) : std::nullopt;
            if (!u2 || !r23) return {IdentityStatus::Inconclusive, Poly(), unreduced};
            lhs.add(one(), u + "23" + twos + "1");
            BracketSum middle;
            middle.constant = *u2 * *r23;
            middle.add(-one(), u + "21" + twos + "3");
            IdentityResult first = compare(lhs, middle, budget);
            if (first.status != IdentityStatus::Holds) return first;
            rhs.constant = *u2 * *r23;
            rhs.add(one(), u + "21" + twos + "1").add(one(), u + "21" + repeat('2', n + 1));
            return compare(lhs, rhs, budget);
        }
        case 7: {
            std::string unreduced;
            BracketSum prod;
            prod.add(one(), u + "2");
            auto u2 = evaluate_sum(prod, budget, unreduced);
            BracketSum right;
            right.add(one(), "23" + twos + "1");
            auto r23 = u2 ? evaluate_sum(right, budget, unreduced) : std::nullopt;
            if (!u2 || !r23) return {IdentityStatus::Inconclusive, Poly(), unreduced};
            lhs.add(one(), u + "21" + twos + "1");
            rhs.constant = num(-1, 2) * *u2 * *r23;
            rhs.add(t, u + repeat('2', n + 1) + "1")
                .add(num(-1, 2), u + repeat('2', n + 2) + "1")
                .add(num(-1, 2) * Poly::t_power(n), u + "212");
            return compare(lhs, rhs, budget);
        }
        default:
            break;
    }
    throw DomainError("unknown word identity");
}

Word q_word_letters(int i, int j, int k) {
    if (i < 0 || j < 1 || (k != 1 && k != 2)) throw DomainError("q_word requires i >= 0, j >= 1, k in {1, 2}");
    std::string w = repeat('2', k - 1);
    for (int a = 0; a < i; ++a) w += "12";
    w += "1" + repeat('2', j) + "1";
    return Word(w);
}

BracketValue q_word(int i, int j, int k, std::size_t budget) { return bracket_eval(q_word_letters(i, j, k), budget); }

IdentityResult verify_q_word_correspondence(int i, int j, int k, std::size_t budget) {
    BracketSum lhs;
    lhs.add(one(), q_word_letters(i, j, k).letters());
    BracketSum rhs;
    rhs.constant = (k == 1 ? one() : -one()) * q_poly(i, j, k);
    return compare(lhs, rhs, budget);
}

IdentityResult verify_q_relation_words(int i, std::size_t budget) {
    if (i < 1) throw DomainError("verify_q_relation_words requires i >= 1");
    BracketSum lhs;
    lhs.add(one(), q_word_letters(i - 1, 2, 2).letters());
    BracketSum rhs;
    rhs.add(-one(), q_word_letters(i, 1, 1).letters());
    return compare(lhs, rhs, budget);
}

}  // namespace lambda0
