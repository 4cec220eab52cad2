#include "lambda0/commands.hpp"

#include "lambda0/census.hpp"
#include "lambda0/character.hpp"
#include "lambda0/normalizer.hpp"
#include "lambda0/parse.hpp"
#include "lambda0/relations.hpp"
#include "lambda0/words.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <thread>

namespace lambda0 {

using nlohmann::ordered_json;

namespace {

using Task = std::function<Entry()>;

// Runs the tasks on a pool; entries keep task order.
std::vector<Entry> run_pool(const std::vector<Task>& tasks, unsigned threads) {
    std::vector<Entry> entries(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                entries[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned workers = std::min<unsigned>(std::max(1u, threads), static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return entries;
}

void require_range(const char* flag, long value, long low, long high) {
    if (value < low || value > high)
        throw UsageError(std::string("--") + flag + " must lie in [" + std::to_string(low) + ", " + std::to_string(high) +
                         "], got " + std::to_string(value));
}

void check_common(const CommandOptions& o) {
    require_range("threads", o.threads, 1, CommandLimits::threads);
    if (o.budget == 0) throw UsageError("--budget must be positive");
}

Entry zero_entry(std::string id, const Poly& residual) {
    Entry e{std::move(id)};
    if (!residual.is_zero()) {
        e.status = Status::Fail;
        e.witness = residual.to_string();
    }
    return e;
}

std::string index_id(const std::string& name, std::initializer_list<int> indices) {
    std::string id = name + "(";
    bool first = true;
    for (int i : indices) {
        id += (first ? "" : ",") + std::to_string(i);
        first = false;
    }
    return id + ")";
}

Entry identity_entry(std::string id, const IdentityResult& r) {
    Entry e{std::move(id)};
    switch (r.status) {
        case IdentityStatus::Holds: break;
        case IdentityStatus::Fails:
            e.status = Status::Fail;
            e.witness = r.witness.to_string();
            break;
        case IdentityStatus::Inconclusive:
            e.status = Status::Inconclusive;
            e.detail = r.detail;
            break;
    }
    return e;
}

std::vector<Task> verify_p_tasks(const CommandOptions& o) {
    std::vector<Task> tasks;
    for (int i = 1; i <= o.imax; ++i)
        for (int j = 1; j <= o.jmax; ++j)
            tasks.push_back([i, j] { return zero_entry(index_id("P", {i, j}), chi_poly(relation_p(i, j))); });
    return tasks;
}

std::vector<Task> verify_q_tasks(const CommandOptions& o) {
    std::vector<Task> tasks;
    for (int i = 0; i <= o.imax; ++i)
        tasks.push_back([i] { return zero_entry(index_id("Q", {i}), chi_poly(relation_q(i))); });
    return tasks;
}

std::vector<Task> verify_chi_tasks(const CommandOptions& o) {
    std::vector<Task> tasks;
    tasks.push_back([] {
        const Poly expected = t_poly().pow(3) + Poly::constant(Rational(3)) * t_poly() * u_poly() -
                              Poly::constant(Rational(3)) * v_poly();
        return zero_entry("chi(x3)", chi_x(3) - expected);
    });
    for (int n = 0; n <= o.nmax; ++n) {
        tasks.push_back([n] {
            Entry e{index_id("homogeneous", {n})};
            const Poly value = chi_x(n);
            for (const auto& [m, c] : value.terms())
                if (m.weighted_degree() != n) {
                    e.status = Status::Fail;
                    e.witness = Poly::monomial(m, c).to_string();
                    break;
                }
            return e;
        });
        if (n >= 3 && n % 2 == 1) {
            tasks.push_back([n] {
                const int half = (n - 1) / 2;
                const Poly expected = Poly::constant(Rational(-3) * Rational(2).pow(half - 1)) *
                                      u_poly().pow(static_cast<unsigned>(half - 1)) * v_poly();
                const auto [m, c] = leading_term_tuv(chi_x(n));
                return zero_entry(index_id("leading", {n}), Poly::monomial(m, c) - expected);
            });
        }
    }
    return tasks;
}

Entry laurent_entry(std::string id, const TuvLaurent& residual) { return zero_entry(std::move(id), residual.value); }

std::vector<Task> verify_rek_tasks(const CommandOptions& o) {
    std::vector<Task> tasks;
    for (int k = 1; k <= 2; ++k) {
        for (int i = 1; i <= o.imax; ++i)
            for (int j = 0; j <= o.jmax; ++j)
                tasks.push_back([=] { return laurent_entry(index_id("rek1", {i, j, k}), rek_residual(RekKind::Rek1, i, j, k)); });
        for (int i = 0; i <= o.imax; ++i)
            for (int j = 3; j <= o.jmax; ++j)
                tasks.push_back([=] { return laurent_entry(index_id("rek2", {i, j, k}), rek_residual(RekKind::Rek2, i, j, k)); });
        for (int i = 1; i <= o.imax; ++i) {
            tasks.push_back([=] { return laurent_entry(index_id("rek3", {i, k}), rek_residual(RekKind::Rek3, i, 0, k)); });
            tasks.push_back([=] { return laurent_entry(index_id("rek4", {i, k}), rek_residual(RekKind::Rek4, i, 0, k)); });
        }
    }
    for (int i = 0; i <= o.imax; ++i)
        tasks.push_back([i] {
            Entry e{index_id("qhat", {i})};
            if (!verify_qhat_identities(i)) {
                e.status = Status::Fail;
                e.witness = (qhat(i, 1, 2) - qhat(i, 2, 1)).value.to_string() + " ; " +
                            (i >= 1 ? (qhat(i - 1, 2, 2) - qhat(i, 1, 1)).value.to_string() : std::string("0"));
            }
            return e;
        });
    return tasks;
}

const std::vector<std::string>& sample_prefixes() {
    static const std::vector<std::string> prefixes{"1", "12", "123", "1213"};
    return prefixes;
}

std::vector<Task> verify_words_tasks(const CommandOptions& o) {
    std::vector<Task> tasks;
    const std::size_t budget = o.budget;
    tasks.push_back([budget] {
        BracketValue b = bracket_eval(Word("12"), budget);
        if (!b.reduced()) return Entry{"<12>", Status::Inconclusive, "", b.reason};
        return zero_entry("<12>", *b.value + t_poly());
    });
    for (int n = 1; n <= std::max(o.nmax, 1); ++n)
        tasks.push_back([n, budget] {
            const std::string id = "<1 2^" + std::to_string(n) + " 1>";
            BracketValue b = bracket_eval(Word("1" + std::string(static_cast<std::size_t>(n), '2') + "1"), budget);
            if (!b.reduced()) return Entry{id, Status::Inconclusive, "", b.reason};
            return zero_entry(id, *b.value - Poly::x(n + 1));
        });
    for (int id = 2; id <= 7; ++id) {
        const bool uses_u = id != 3 && id != 4;
        const bool uses_n = id != 2;
        for (int n = uses_n ? 1 : 0; n <= (uses_n ? o.nmax : 0); ++n) {
            const std::vector<std::string> prefixes = uses_u ? sample_prefixes() : std::vector<std::string>{""};
            for (const std::string& u : prefixes)
                tasks.push_back([=] {
                    std::string name = "eq" + std::to_string(id);
                    if (uses_n) name += "(n=" + std::to_string(n) + (uses_u ? ",u=" + u : "") + ")";
                    else name += "(u=" + u + ")";
                    return identity_entry(name, verify_word_identity(id, n, uses_u ? u : "1", budget));
                });
        }
    }
    for (int i = 0; i <= std::min(o.imax, 5); ++i)
        for (int j = 1; j <= std::min(o.jmax, 5); ++j)
            for (int k = 1; k <= 2; ++k)
                tasks.push_back([=] {
                    return identity_entry(index_id("qword", {i, j, k}), verify_q_word_correspondence(i, j, k, budget));
                });
    return tasks;
}

std::vector<Task> verify_gamma_tasks(const CommandOptions& o) {
    std::vector<Task> tasks;
    for (int i = 1; i <= o.imax; ++i)
        for (int j = 1; j <= o.jmax; ++j)
            tasks.push_back([i, j] {
                const auto [a, b] = gamma_relation_indices(i, j);
                const Poly residual = gamma_of_eq1(i, j) - relation_p(a, b) * gamma_eq1_constant();
                return zero_entry(index_id("Gamma", {i, j}), residual);
            });
    return tasks;
}

}  // namespace

Report cmd_verify(const std::string& target, const CommandOptions& o) {
    check_common(o);
    Report report;
    report.command = "verify " + target;
    std::vector<Task> tasks;
    if (target == "p") {
        require_range("imax", o.imax, 1, CommandLimits::imax);
        require_range("jmax", o.jmax, 1, CommandLimits::jmax);
        report.parameters = {{"imax", o.imax}, {"jmax", o.jmax}};
        tasks = verify_p_tasks(o);
    } else if (target == "q") {
        require_range("imax", o.imax, 0, CommandLimits::imax);
        report.parameters = {{"imax", o.imax}};
        tasks = verify_q_tasks(o);
    } else if (target == "chi") {
        require_range("nmax", o.nmax, 0, CommandLimits::nmax);
        report.parameters = {{"nmax", o.nmax}};
        tasks = verify_chi_tasks(o);
    } else if (target == "rek") {
        require_range("imax", o.imax, 0, CommandLimits::imax);
        require_range("jmax", o.jmax, 0, CommandLimits::jmax);
        report.parameters = {{"imax", o.imax}, {"jmax", o.jmax}};
        tasks = verify_rek_tasks(o);
    } else if (target == "words") {
        require_range("nmax", o.nmax, 1, CommandLimits::nmax);
        require_range("imax", o.imax, 0, CommandLimits::imax);
        require_range("jmax", o.jmax, 1, CommandLimits::jmax);
        report.parameters = {{"nmax", o.nmax}, {"imax", std::min(o.imax, 5)}, {"jmax", std::min(o.jmax, 5)},
                             {"budget", o.budget}};
        tasks = verify_words_tasks(o);
    } else if (target == "gamma") {
        require_range("imax", o.imax, 1, CommandLimits::imax);
        require_range("jmax", o.jmax, 1, CommandLimits::jmax);
        report.parameters = {{"imax", o.imax}, {"jmax", o.jmax}};
        report.result = {{"pairing", "Gamma(i,j) eq1 = c * P-relation(i+1,j+1)"},
                         {"c", gamma_eq1_constant().to_string()}};
        tasks = verify_gamma_tasks(o);
    } else {
        throw UsageError("unknown verify target '" + target + "' (expected p, q, chi, rek, words or gamma)");
    }
    report.entries = run_pool(tasks, o.threads);
    return report;
}

Report cmd_normalize(const std::string& expression, const CommandOptions& o) {
    check_common(o);
    Report report;
    report.command = "normalize";
    report.parameters = {{"expr", expression}};
    Poly input;
    try {
        input = parse_expr(expression);
    } catch (const ParseError& e) {
        throw UsageError(std::string("parse error: ") + e.what());
    }
    for (const Variable& var : input.variables())
        if (var.tag != VarTag::T && var.tag != VarTag::X)
            throw UsageError("normalize expects a polynomial in t and x_n, got " + var.name());
    NormalizeOptions options;
    options.budget = o.budget;
    const NormalForm nf = normalize(input, options);
    report.result = {{"normal_form", nf.combination.to_string()},
                     {"steps", nf.steps},
                     {"coefficients", ordered_json::parse(normal_form_json(nf.combination))}};
    report.entries.push_back(zero_entry("chi-oracle", chi_poly(input) - chi_poly(nf.combination)));
    return report;
}

Report cmd_dims(const CommandOptions& o) {
    check_common(o);
    require_range("dmax", o.dmax, 0, CommandLimits::dims_dmax);
    Report report;
    report.command = "dims";
    report.parameters = {{"dmax", o.dmax}};
    const std::vector<CensusRow> rows = census(o.dmax, o.threads);
    report.result = ordered_json::array();
    for (const CensusRow& r : rows) {
        report.result.push_back({{"d", r.d},
                                 {"lower", r.lower},
                                 {"size_M", r.size_M},
                                 {"upper", r.upper},
                                 {"rank_universal", r.rank_universal},
                                 {"rank_D_osp", r.rank_D_osp},
                                 {"a_d", r.a_d}});
        Entry e{index_id("row", {r.d})};
        std::string problems;
        if (r.lower > r.size_M) problems += "lower > size_M; ";
        if (r.size_M != r.upper) problems += "size_M != upper; ";
        if (r.rank_universal != r.size_M) problems += "rank_universal != size_M; ";
        if (r.rank_D_osp != r.independent) problems += "rank_D_osp != independent set size; ";
        if (r.d >= 3 && r.lower > r.independent) problems += "lower > independent set size; ";
        if (!problems.empty()) {
            e.status = Status::Fail;
            e.witness = problems.substr(0, problems.size() - 2);
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

Report cmd_chi(const CommandOptions& o) {
    check_common(o);
    require_range("n", o.n, 0, CommandLimits::n);
    CharacterSpec spec;
    try {
        spec = CharacterSpec::by_name(o.spec);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    Report report;
    report.command = "chi";
    report.parameters = {{"n", o.n}, {"spec", o.spec}};
    const Poly value = chi_x(o.n);
    report.result = o.spec == "universal" ? value.to_string() : specialize_character(value, spec).to_string();
    return report;
}

Report cmd_series(const CommandOptions& o) {
    check_common(o);
    require_range("dmax", o.dmax, 0, CommandLimits::series_dmax);
    Report report;
    report.command = "series";
    report.parameters = {{"dmax", o.dmax}};
    const std::vector<std::int64_t> series = vogel_series(o.dmax);
    report.result = ordered_json::array();
    for (int d = 0; d <= o.dmax; ++d) {
        report.result.push_back({{"d", d}, {"a_d", series[d]}});
        if (d >= 21) {
            Entry e{index_id("bound", {d})};
            const std::int64_t bound = (5 * static_cast<std::int64_t>(d)) / 3 - 2;
            if (series[d] < bound) {
                e.status = Status::Fail;
                e.witness = "a_d = " + std::to_string(series[d]) + " < " + std::to_string(bound);
            }
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

Report cmd_basis(const CommandOptions& o) {
    check_common(o);
    require_range("degree", o.degree, 0, CommandLimits::degree);
    Report report;
    report.command = "basis";
    report.parameters = {{"degree", o.degree}};
    report.result = ordered_json::array();
    for (const Monomial& m : enum_M(o.degree)) report.result.push_back(m.to_string());
    return report;
}

Report cmd_words(const std::vector<std::string>& words, const CommandOptions& o) {
    check_common(o);
    if (words.empty()) throw UsageError("words expects at least one word");
    std::vector<Word> parsed;
    for (const std::string& w : words) {
        try {
            parsed.emplace_back(w);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }
    Report report;
    report.command = "words";
    report.parameters = {{"budget", o.budget}};
    report.result = ordered_json::array();
    std::vector<Task> tasks;
    const std::size_t budget = o.budget;
    for (const Word& w : parsed)
        tasks.push_back([w, budget] {
            BracketValue b = bracket_eval(w, budget);
            Entry e{"<" + w.letters() + ">"};
            if (b.reduced()) {
                e.detail = b.value->to_string();
            } else {
                e.status = Status::Inconclusive;
                e.detail = b.reason + "; unreduced " + b.partial;
            }
            return e;
        });
    std::vector<Entry> values = run_pool(tasks, o.threads);
    for (Entry& e : values) {
        report.result.push_back({{"word", e.id}, {"value", e.status == Status::Ok ? e.detail : std::string("unreduced")}});
        if (e.status == Status::Ok) e.detail.clear();
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace lambda0
