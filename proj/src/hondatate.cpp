#include "nck3/hondatate.hpp"

#include "nck3/check_range.hpp"
#include "nck3/error.hpp"
#include "nck3/k3_category.hpp"

#include <algorithm>
#include <sstream>

#include <omp.h>

namespace nck3 {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
    if (a == Verdict::Unknown || b == Verdict::Unknown) return Verdict::Unknown;
    return Verdict::Pass;
}

Verdict FilterReport::overall() const {
    Verdict v = Verdict::Pass;
    for (const auto& c : conditions) v = combine(v, c.verdict);
    return v;
}

const ConditionResult* FilterReport::find(std::string_view name) const {
    for (const auto& c : conditions)
        if (c.name == name) return &c;
    return nullptr;
}

std::string format_record(const FilterReport& report) {
    std::string out = "id=" + report.id + " overall=" + std::string(to_string(report.overall()));
    for (const auto& c : report.conditions) {
        out += " cond:" + c.name + "=" + std::string(to_string(c.verdict));
        if (!c.witness.empty()) out += ":" + c.witness;
    }
    return out;
}

namespace {

unsigned log_p(std::uint64_t q, std::uint32_t p) {
    unsigned k = 0;
    while (q > 1) {
        q /= p;
        ++k;
    }
    return k;
}

bool is_power_of(BigInt d, std::uint32_t p) {
    while (d % p == 0) d /= p;
    return d == 1;
}

ConditionResult unit_circle(const WeilPolynomial& w) {
    ConditionResult r{"unit-circle", Verdict::Pass, ""};
    const auto sign = is_self_inversive(w);
    if (roots_on_unit_circle(w)) {
        r.witness = "sign=" + std::string(sign == -1 ? "-1" : "+1");
        return r;
    }
    r.verdict = Verdict::Fail;
    r.witness = sign ? "roots-off-circle" : "not-self-inversive";
    return r;
}

ConditionResult p_integrality(const WeilPolynomial& w) {
    ConditionResult r{"p-integrality", Verdict::Pass, ""};
    const Rational p(static_cast<unsigned long>(w.p));
    for (int i = 0; i <= w.L.degree(); ++i) {
        if (!is_integer(p * w.L.coeff(i))) {
            r.verdict = Verdict::Fail;
            r.witness = "c" + std::to_string(i) + "=" + to_string(w.L.coeff(i));
            return r;
        }
    }
    return r;
}

ConditionResult artin_tate(const WeilPolynomial& w) {
    const Rational v = artin_tate_value(w);
    return {"artin-tate", is_square(v) ? Verdict::Pass : Verdict::Fail, "qL1(-1)=" + to_string(v)};
}

template <class Counts>
ConditionResult nonnegative(const char* name, const Counts& counts, int n_max) {
    ConditionResult r{name, Verdict::Pass, "n<=" + std::to_string(n_max)};
    for (int n = 1; n <= n_max; ++n) {
        if (sgn(counts.at(n)) < 0) {
            r.verdict = Verdict::Fail;
            r.witness = "n=" + std::to_string(n) + ",count=" + to_string(counts.at(n));
            return r;
        }
    }
    return r;
}

template <class Counts>
ConditionResult growth(const char* name, const Counts& counts, const std::vector<std::pair<int, int>>& pairs) {
    ConditionResult r{name, Verdict::Pass, "pairs=" + std::to_string(pairs.size())};
    for (const auto& [n, m] : pairs) {
        if (counts.at(m) < counts.at(n)) {
            r.verdict = Verdict::Fail;
            r.witness = "n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",count_n=" + to_string(counts.at(n)) +
                        ",count_m=" + to_string(counts.at(m));
            return r;
        }
    }
    return r;
}

}  // namespace

Rational artin_tate_value(const WeilPolynomial& w) {
    const RatPoly L1 = strip_factor(w.L, cyclotomic(1)).second;
    return Rational(static_cast<unsigned long>(w.q)) * L1(Rational(-1));
}

FilterReport check_k3_type(const WeilPolynomial& w, const SuiteOptions&) {
    FilterReport report;
    report.conditions.push_back(unit_circle(w));
    if (report.conditions.back().verdict == Verdict::Fail) return report;

    const auto rho = strip_factor(w.L, cyclotomic(1)).first;
    report.conditions.push_back({"projectivity", rho > 0 ? Verdict::Pass : Verdict::Fail,
                                 rho > 0 ? "rho=" + std::to_string(rho) : "L(1)=" + to_string(w.L(Rational(1)))});

    ConditionResult weil{"weil-integrality", Verdict::Pass, ""};
    for (int i = 0; i <= w.L.degree(); ++i) {
        if (!is_power_of(w.L.coeff(i).get_den(), w.p)) {
            weil.verdict = Verdict::Fail;
            weil.witness = "c" + std::to_string(i) + "=" + to_string(w.L.coeff(i));
            break;
        }
    }
    report.conditions.push_back(weil);
    if (w.q == w.p) report.conditions.push_back(p_integrality(w));

    const unsigned k = log_p(w.q, w.p);
    const CyclotomicSplit split = cyclotomic_split(w.L);
    report.conditions.push_back(newton_above_hodge(split, w.p, k));
    if (split.L_trc.degree() == 0) {
        report.conditions.push_back({"transcendental", Verdict::Pass, "supersingular"});
    } else {
        const PerfectPower pp = perfect_power_and_irreducibility(split.L_trc, w.p, k);
        report.conditions.push_back({"transcendental", pp.status, pp.witness});
    }

    const CheckRange range = k3_count_range(w.q);
    const CountSeries counts = counts_from_weil(w, std::max(range.max_ext(), 1));
    report.conditions.push_back(nonnegative("nonnegative-counts", counts.counts, range.nonneg_max));
    report.conditions.push_back(growth("extension-growth", counts.counts, range.growth_pairs));
    report.conditions.push_back(artin_tate(w));
    return report;
}

FilterReport check_cubic_category_type(const WeilPolynomial& w, const SuiteOptions& opts) {
    if (w.q != w.p) throw UnsupportedField("the cubic-category suite needs a prime base field, got q = " + std::to_string(w.q));
    FilterReport report;
    report.conditions.push_back(unit_circle(w));
    if (report.conditions.back().verdict == Verdict::Fail) return report;
    report.conditions.push_back(p_integrality(w));

    const CheckRange cubic = cubic_count_range(w.q);
    const CheckRange hilb = hilbert_count_range(w.q, opts.hilbert_min_ext);
    const int need = std::max({cubic.max_ext(), 2 * hilb.max_ext(), 1});
    const CountSeries A = counts_from_weil(w, need);
    const RationalCounts X = cubic_from_ack3(w.q, A.counts);
    const RationalCounts H = hilbert_square_counts(w.q, A.counts, hilb.max_ext());
    report.conditions.push_back(nonnegative("cubic-nonnegative", X, cubic.nonneg_max));
    report.conditions.push_back(growth("cubic-growth", X, cubic.growth_pairs));
    report.conditions.push_back(nonnegative("hilbert-nonnegative", H, hilb.nonneg_max));
    report.conditions.push_back(growth("hilbert-growth", H, hilb.growth_pairs));
    report.conditions.push_back(artin_tate(w));
    return report;
}

FilterReport geom_check(const CubicForm& form, int n_max, const CountOptions& opts) {
    return geom_check(count_table(form, n_max, opts));
}

FilterReport geom_check(const PointCountTable& X) {
    FilterReport report;
    NcK3Counts A;
    try {
        A = ack3_from_cubic(X);
    } catch (const AxCongruenceViolation&) {
        report.conditions.push_back({"integrality", Verdict::Fail, "ax-congruence"});
        return report;
    }
    const int n_max = X.max_n();
    report.conditions.push_back({"integrality", Verdict::Pass, "n<=" + std::to_string(n_max)});
    report.conditions.push_back(nonnegative("nonnegative-counts", A.counts, n_max));
    std::vector<std::pair<int, int>> pairs;
    for (int n = 1; n <= n_max; ++n)
        for (int m = 2 * n; m <= n_max; m += n) pairs.emplace_back(n, m);
    report.conditions.push_back(growth("extension-growth", A.counts, pairs));
    return report;
}

BatchResult batch_filter(std::string_view text, Suite suite, bool ks, int workers, const SuiteOptions& opts) {
    const auto lines = read_weil_lines(text, ks);
    const long count = static_cast<long>(lines.size());
    std::vector<std::optional<FilterReport>> reports(lines.size());
    std::vector<std::string> errors(lines.size());
    if (workers <= 0) workers = default_workers();
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long i = 0; i < count; ++i) {
        const auto& entry = lines[static_cast<std::size_t>(i)];
        if (!entry.poly) {
            errors[i] = entry.error;
            continue;
        }
        try {
            FilterReport r = suite == Suite::K3 ? check_k3_type(*entry.poly, opts) : check_cubic_category_type(*entry.poly, opts);
            r.id = std::to_string(entry.line);
            reports[i] = std::move(r);
        } catch (const Error& e) {
            errors[i] = ParseError(e.what(), entry.line).what();
        }
    }
    BatchResult out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!reports[i]) {
            out.skipped.push_back({lines[i].line, errors[i]});
            continue;
        }
        ++out.overall_tally[reports[i]->overall()];
        for (const auto& c : reports[i]->conditions) ++out.condition_tally[c.name][c.verdict];
        out.reports.push_back(std::move(*reports[i]));
    }
    return out;
}

namespace {

std::string tally_line(const std::map<Verdict, int>& t) {
    auto get = [&](Verdict v) {
        auto it = t.find(v);
        return it == t.end() ? 0 : it->second;
    };
    return "PASS=" + std::to_string(get(Verdict::Pass)) + " FAIL=" + std::to_string(get(Verdict::Fail)) +
           " UNKNOWN=" + std::to_string(get(Verdict::Unknown));
}

}  // namespace

std::string format_batch(const BatchResult& result) {
    std::ostringstream out;
    for (const auto& r : result.reports) out << format_record(r) << "\n";
    for (const auto& s : result.skipped) out << "# skipped " << s.error << "\n";
    out << "# records=" << result.reports.size() << " skipped=" << result.skipped.size() << "\n";
    out << "# overall " << tally_line(result.overall_tally) << "\n";
    std::vector<std::string> order;
    for (const auto& r : result.reports)
        for (const auto& c : r.conditions)
            if (std::find(order.begin(), order.end(), c.name) == order.end()) order.push_back(c.name);
    for (const auto& name : order) out << "# cond:" << name << " " << tally_line(result.condition_tally.at(name)) << "\n";
    return out.str();
}

PicardStats picard_stats(std::string_view text, bool ks) {
    PicardStats stats;
    for (const auto& entry : read_weil_lines(text, ks)) {
        if (!entry.poly) {
            stats.skipped.push_back({entry.line, entry.error});
            continue;
        }
        ++stats.inputs;
        if (p_integrality(*entry.poly).verdict != Verdict::Pass) continue;
        ++stats.considered;
        const CyclotomicSplit split = cyclotomic_split(entry.poly->L);
        ++stats.rho[split.rho];
        ++stats.rho_bar[split.rho_bar];
        if (split.rho_bar == 0) ++stats.purely_transcendental;
    }
    return stats;
}

std::string format_picard(const PicardStats& stats) {
    std::ostringstream out;
    out << "# inputs=" << stats.inputs << " considered=" << stats.considered << " skipped=" << stats.skipped.size() << "\n";
    for (const auto& s : stats.skipped) out << "# skipped " << s.error << "\n";
    out << "rho  count\n";
    for (const auto& [r, c] : stats.rho) out << (r < 10 ? " " : "") << r << "   " << c << "\n";
    out << "rho_bar  count\n";
    for (const auto& [r, c] : stats.rho_bar) out << (r < 10 ? " " : "") << r << "       " << c << "\n";
    out << "purely-transcendental " << stats.purely_transcendental << "\n";
    return out.str();
}

}  // namespace nck3
