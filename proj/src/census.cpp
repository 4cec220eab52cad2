#include "lambda0/census.hpp"

#include "lambda0/error.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace lambda0 {

namespace {

Monomial t_to(int i) { return i == 0 ? Monomial() : Monomial::of(Variable::t(), i); }

Monomial x_to(int n, int e) { return e == 0 ? Monomial() : Monomial::of(Variable::x(n), e); }

}  // namespace

std::vector<Monomial> enum_M(int d) {
    if (d < 0) throw DomainError("enum_M requires d >= 0");
    std::vector<Monomial> out{t_to(d)};
    for (int n = 1; 2 * n + 1 <= d; ++n) {
        const int a = 2 * n + 1;
        const int b = 2 * n + 3;
        for (int j = 1; j * a <= d; ++j)
            for (int k = 0; j * a + k * b <= d; ++k)
                out.push_back(t_to(d - j * a - k * b) * x_to(a, j) * x_to(b, k));
    }
    return out;
}

std::int64_t upper_bound(int d) {
    if (d < 0) throw DomainError("upper_bound requires d >= 0");
    const std::int64_t dd = d;
    return (dd * dd + 6) / 12 + 1;
}

std::int64_t lower_bound(int d) {
    if (d < 0) throw DomainError("lower_bound requires d >= 0");
    return std::max<std::int64_t>(1, (7 * static_cast<std::int64_t>(d)) / 6 - 3);
}

std::int64_t mu(int d) {
    if (d < 0) throw DomainError("mu requires d >= 0");
    const int t = d / 3;
    std::int64_t sum = 0;
    for (int j = 1; j <= t; ++j) sum += ((d + j) % 2 == 0) ? 0 : -1;
    return t + 2 * sum;
}

std::int64_t count_N(int d) {
    if (d < 0) throw DomainError("count_N requires d >= 0");
    std::int64_t lattice = 0;
    for (int j = 1; 3 * j <= d; ++j)
        for (int i = 0; 2 * i + 3 * j <= d; ++i) ++lattice;
    const long t = d / 3;
    const Rational closed = Rational(t * d, 2) - Rational(3 * t * t, 4) + Rational(mu(d), 4);
    if (!closed.is_integer() || closed != Rational(static_cast<long>(lattice)))
        throw Error("count_N(" + std::to_string(d) + "): lattice count " + std::to_string(lattice) +
                    " disagrees with closed form " + closed.to_string());
    return lattice;
}

BetaImage beta(const Monomial& m) {
    int low = 0;
    int low_exp = 0;
    int high_exp = 0;
    int factors = 0;
    for (const auto& [var, e] : m.factors()) {
        if (var.tag != VarTag::X || var.index % 2 == 0) throw DomainError("beta expects x_{2n+1}^i x_{2n+3}^j, got " + m.to_string());
        if (factors == 0) {
            low = var.index;
            low_exp = e;
        } else if (factors == 1 && var.index == low + 2) {
            high_exp = e;
        } else {
            throw DomainError("beta expects x_{2n+1}^i x_{2n+3}^j, got " + m.to_string());
        }
        ++factors;
    }
    if (factors == 0 || low_exp <= 0 || high_exp < 0) throw DomainError("beta expects x_{2n+1}^i x_{2n+3}^j, got " + m.to_string());
    const int n = (low - 1) / 2;
    return {(n - 1) * low_exp + n * high_exp, low_exp + high_exp};
}

BetaPreimage beta_inverse(int k, int l) {
    if (k < 0 || l <= 0) throw DomainError("beta_inverse requires k >= 0, l > 0");
    const int q = k / l;
    return {q + 1, q * l - k + l, k - q * l};
}

Monomial beta_monomial(const BetaPreimage& p) { return x_to(2 * p.n + 1, p.i) * x_to(2 * p.n + 3, p.j); }

std::vector<Monomial> independent_set(int d) {
    if (d < 0) throw DomainError("independent_set requires d >= 0");
    std::vector<Monomial> out{t_to(d)};
    for (int n = 1; 2 * n + 1 < d; ++n) out.push_back(t_to(d - 2 * n - 1) * x_to(2 * n + 1, 1));
    for (int n = 1; 3 + 2 * n + 1 < d; ++n) out.push_back(t_to(d - 3 - 2 * n - 1) * x_to(3, 1) * x_to(2 * n + 1, 1));
    for (const Monomial& m : enum_M(d))
        if (m.exponent(Variable::t()) == 0 && d > 0) out.push_back(m);
    std::vector<Monomial> unique;
    for (const Monomial& m : out)
        if (std::find(unique.begin(), unique.end(), m) == unique.end()) unique.push_back(m);
    return unique;
}

namespace {

// rank by fraction-free Bareiss elimination
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    mpz_class previous = 1;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const mpz_class& p = rows[rank][col];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const mpz_class factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                mpz_class value = p * rows[r][c] - factor * rows[rank][c];
                mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
                rows[r][c] = std::move(value);
            }
        }
        previous = p;
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank_certificate(const std::vector<LambdaPoly>& elements, const std::vector<CharacterSpec>& specs) {
    if (elements.empty()) return 0;
    std::vector<std::vector<Poly>> images(elements.size());
    std::vector<std::map<Monomial, std::size_t, DisplayOrder>> columns(specs.size());
    for (std::size_t r = 0; r < elements.size(); ++r) {
        const TuvPoly chi = chi_poly(elements[r]);
        for (std::size_t s = 0; s < specs.size(); ++s) {
            images[r].push_back(specialize_character(chi, specs[s]));
            for (const auto& [m, c] : images[r].back().terms()) columns[s].emplace(m, 0);
        }
    }
    std::size_t width = 0;
    std::vector<std::size_t> offset(specs.size());
    for (std::size_t s = 0; s < specs.size(); ++s) {
        offset[s] = width;
        for (auto& [m, index] : columns[s]) index = width++;
    }
    if (width == 0) return 0;
    std::vector<std::vector<mpz_class>> rows;
    for (std::size_t r = 0; r < elements.size(); ++r) {
        std::vector<mpq_class> row(width);
        mpz_class denominators = 1;
        for (std::size_t s = 0; s < specs.size(); ++s)
            for (const auto& [m, c] : images[r][s].terms()) {
                row[columns[s].at(m)] = c.get();
                mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), c.get().get_den_mpz_t());
            }
        std::vector<mpz_class> integral(width);
        for (std::size_t c = 0; c < width; ++c) {
            mpq_class scaled = row[c] * denominators;
            integral[c] = scaled.get_num();
        }
        rows.push_back(std::move(integral));
    }
    return bareiss_rank(std::move(rows));
}

std::size_t rank_certificate(const std::vector<Monomial>& monomials, const std::vector<CharacterSpec>& specs) {
    std::vector<LambdaPoly> elements;
    elements.reserve(monomials.size());
    for (const Monomial& m : monomials) elements.push_back(Poly::monomial(m));
    return rank_certificate(elements, specs);
}

std::vector<std::int64_t> vogel_series(int dmax) {
    if (dmax < 0) throw DomainError("vogel_series requires dmax >= 0");
    const std::size_t size = static_cast<std::size_t>(dmax) + 1;
    std::vector<std::int64_t> fraction(size, 0);
    for (auto [power, sign] : {std::pair{3, 1}, {16, -1}, {23, -1}, {26, 1}})
        if (power <= dmax) fraction[power] += sign;
    // divide by (1 - x^k): running sums with stride k
    for (int k : {1, 2, 3})
        for (std::size_t d = k; d < size; ++d) fraction[d] += fraction[d - k];
    for (auto& a : fraction) a += 1;
    return fraction;
}

CensusRow census_row(int d, const std::vector<std::int64_t>& series) {
    CensusRow row;
    row.d = d;
    row.lower = lower_bound(d);
    row.upper = upper_bound(d);
    const std::vector<Monomial> basis = enum_M(d);
    const std::vector<Monomial> independent = independent_set(d);
    row.size_M = static_cast<std::int64_t>(basis.size());
    row.independent = static_cast<std::int64_t>(independent.size());
    row.rank_universal = static_cast<std::int64_t>(rank_certificate(basis, {CharacterSpec::universal()}));
    row.rank_D_osp = static_cast<std::int64_t>(rank_certificate(independent, {CharacterSpec::d21a(), CharacterSpec::osp()}));
    row.a_d = static_cast<std::size_t>(d) < series.size() ? series[d] : 0;
    return row;
}

std::vector<CensusRow> census(int dmax, unsigned threads) {
    if (dmax < 0) throw DomainError("census requires dmax >= 0");
    const std::vector<std::int64_t> series = vogel_series(dmax);
    std::vector<CensusRow> rows(static_cast<std::size_t>(dmax) + 1);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int d = next++; d <= dmax; d = next++) rows[d] = census_row(d, series);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < std::max(1u, threads); ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    return rows;
}

}  // namespace lambda0
