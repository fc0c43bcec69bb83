// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "nck3/check_range.hpp"
#include "nck3/counting.hpp"
#include "nck3/hondatate.hpp"
#include "nck3/k3_category.hpp"
#include "nck3/weil.hpp"
#include "support/generators.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace nck3;
using namespace nck3::testing;

namespace {

const std::string kDataDir = NCK3_TEST_DATA_DIR;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << "s";
    return out.str();
}

struct Outcome {
    bool pass;
    std::string detail;
};

WeilPolynomial f_t() {
    return parse_weil_line("q=2; 1,-1,1,-3/2,1,-3/2,3/2,-1,2,-2,3/2,-2,3/2,-2,2,-1,3/2,-3/2,1,-3/2,1,-1,1");
}

PointCountTable sect5_counts() {
    static const PointCountTable t = count_table(read_cubic_file(kDataDir + "/sect5_cubic.txt"), 4);
    return t;
}

Outcome golden_table() {
    const auto t0 = Clock::now();
    const PointCountTable X = sect5_counts();
    const NcK3Counts A = ack3_from_cubic(X);
    const double s = since(t0);
    const std::vector<long> x{35, 325, 4841, 70161}, a{7, 13, 85, 273};
    bool ok = s < 60;
    std::string got = "X=";
    for (int n = 1; n <= 4; ++n) {
        ok = ok && X.at(n) == x[n - 1] && A.at(n) == a[n - 1];
        got += to_string(X.at(n)) + (n < 4 ? "," : " A=");
    }
    for (int n = 1; n <= 4; ++n) got += to_string(A.at(n)) + (n < 4 ? "," : "");
    return {ok, got + " in " + fmt_seconds(s)};
}

Outcome power_sum_consistency() {
    const PointCountTable X = sect5_counts();
    const NcK3Counts A = ack3_from_cubic(X);
    const auto ps = power_sums(f_t().L, 4);
    bool ok = ps[0] == 1 && ps[1] == -1;
    std::string got = "p=";
    for (int n = 1; n <= 4; ++n) {
        const BigInt qn = ipow(std::uint64_t{2}, n);
        ok = ok && ps[n - 1] == make_rational(A.at(n) - 1 - qn * qn, qn);
        got += to_string(ps[n - 1]) + (n < 4 ? "," : "");
    }
    return {ok, got};
}

Outcome f_suite() {
    const WeilPolynomial f = f_t();
    const FilterReport r = check_k3_type(f);
    const CyclotomicSplit s = cyclotomic_split(f.L);
    const Rational f_minus_one = f.L(-1);
    auto verdict = [&](const char* name) { return r.find(name) ? r.find(name)->verdict : Verdict::Unknown; };
    bool ok = r.overall() == Verdict::Pass;
    for (const char* name : {"projectivity", "p-integrality", "unit-circle", "artin-tate", "nonnegative-counts",
                             "extension-growth"})
        ok = ok && verdict(name) == Verdict::Pass;
    for (const auto& c : r.conditions) ok = ok && c.verdict != Verdict::Fail;
    ok = ok && s.rho == 2 && s.L_trc.degree() == 20 && s.L_alg == pow(cyclotomic(1), 2);
    ok = ok && f_minus_one == 32 && artin_tate_value(f) == 2 * f_minus_one / 4 && artin_tate_value(f) == 16;
    ok = ok && r.find("artin-tate")->witness == "qL1(-1)=16";
    return {ok, "rho=" + std::to_string(s.rho) + " deg_trc=" + std::to_string(s.L_trc.degree()) +
                    " f(-1)=" + to_string(f_minus_one) + " " + r.find("artin-tate")->witness + " overall=" +
                    std::string(to_string(r.overall()))};
}

bool roundtrip(const WeilPolynomial& w) {
    const Reconstruction r = weil_from_counts(counts_from_weil(w, 12).to_table());
    return std::find(r.candidates.begin(), r.candidates.end(), w) != r.candidates.end();
}

Outcome reconstruction() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(104);
    int cyc = 0, mixed = 0, ok = 0;
    for (int i = 0; i < 120; ++i, ++cyc) ok += roundtrip(make_weil(2, random_cyclotomic_product(rng)));
    for (int i = 0; i < 30; ++i, ++mixed) ok += roundtrip(make_weil(2, mixed_unit_circle(rng)));
    const double s = since(t0);
    return {ok == cyc + mixed && s < 30, std::to_string(ok) + "/" + std::to_string(cyc + mixed) + " recovered (" +
                                             std::to_string(cyc) + " cyclotomic, " + std::to_string(mixed) +
                                             " mixed) in " + fmt_seconds(s)};
}

Outcome fano_hilbert() {
    std::mt19937_64 rng(105);
    int inputs = 0, ok = 0;
    for (int i = 0; i < 120; ++i, ++inputs) {
        const WeilPolynomial w = make_weil(i % 4 ? 2 : 3, i % 2 ? random_cyclotomic_product(rng) : mixed_unit_circle(rng));
        const RationalCounts X = cubic_from_ack3(w.q, counts_from_weil(w, 12).counts);
        const RationalCounts F = fano_counts(w.q, X, 6);
        const RationalCounts H = hilbert_square_counts(w.q, counts_from_weil(w, 12).counts, 6);
        ok += F == H && check_fano_hilbert(w.q, X, 6).verdict == Verdict::Pass &&
              grothendieck_identity_check(w.q, X, 6).verdict == Verdict::Pass;
    }
    const WeilPolynomial ones = make_weil(2, pow(cyclotomic(1), 22));
    const Rational f1 = fano_counts(2, cubic_from_ack3(2, counts_from_weil(ones, 2).counts), 1).at(1);
    const Rational h1 = hilbert_square_counts(2, counts_from_weil(ones, 2).counts, 1).at(1);
    const Rational s5f = fano_counts(sect5_counts(), 2).at(1);
    const Rational s5h = hilbert_square_counts(ack3_from_cubic(sect5_counts()), 2).at(1);
    const bool spots = f1 == 1351 && h1 == 1351 && s5f == 45 && s5h == 45;
    return {ok == inputs && spots, std::to_string(ok) + "/" + std::to_string(inputs) + " identities hold; ones F_1=" +
                                       to_string(f1) + " H_1=" + to_string(h1) + "; table F_1=" + to_string(s5f) +
                                       " H_1=" + to_string(s5h)};
}

Outcome obstructions() {
    const FilterReport plus = check_k3_type(make_weil(2, pow(cyclotomic(2), 22)));
    const FilterReport cubic = check_cubic_category_type(make_weil(2, pow(cyclotomic(2), 22)));
    const FilterReport minus = check_k3_type(make_weil(2, pow(cyclotomic(1), 22)));
    const auto* a = plus.find("nonnegative-counts");
    const auto* b = cubic.find("cubic-nonnegative");
    const auto* c = minus.find("artin-tate");
    const bool ok = a && a->verdict == Verdict::Fail && a->witness == "n=1,count=-39" && b &&
                    b->verdict == Verdict::Fail && b->witness == "n=1,count=-57" && c &&
                    c->verdict == Verdict::Fail && c->witness == "qL1(-1)=2";
    return {ok, "(1+T)^22 k3 " + (a ? a->witness : "?") + "; cubic " + (b ? b->witness : "?") + "; (1-T)^22 " +
                    (c ? c->witness : "?")};
}

Outcome performance() {
    const CubicForm form = read_cubic_file(kDataDir + "/sect5_cubic.txt");
    const FieldSpec f16 = make_field(2, 4), f32 = make_field(2, 5);
    auto t0 = Clock::now();
    const BigInt c16 = count_affine(form, f16, 1);
    const double s16 = since(t0);
    t0 = Clock::now();
    const BigInt c32 = count_affine(form, f32, 1);
    const double s32 = since(t0);
    t0 = Clock::now();
    const BigInt c32w = count_affine(form, f32, 8);
    const double s32w = since(t0);
    bool invariant = c32 == c32w;
    for (int w : {2, 3, 4}) invariant = invariant && count_affine(form, f16, w) == c16;
    const bool ok = s16 < 5 && s32 < 15 * 60 && s32w < 3 * 60 && invariant;
    return {ok, "F_16 " + fmt_seconds(s16) + ", F_32 " + fmt_seconds(s32) + " (1 worker) " + fmt_seconds(s32w) +
                    " (8 workers), counts invariant=" + (invariant ? "yes" : "no")};
}

Outcome random_geom_check() {
    std::mt19937_64 rng(108);
    int forms = 0, integral = 0, obstructed = 0;
    for (; forms < 1000; ++forms) {
        const FilterReport r = geom_check(random_cubic(rng, 2), 3);
        integral += r.find("integrality")->verdict == Verdict::Pass;
        obstructed += r.find("nonnegative-counts")->verdict == Verdict::Fail ||
                      r.find("extension-growth")->verdict == Verdict::Fail;
    }
    const FilterReport nl = geom_check(read_cubic_file(kDataDir + "/nl_general_cubic.txt"), 3);
    const bool fixture = nl.find("nonnegative-counts")->verdict == Verdict::Fail;
    const bool ok = integral == forms && (obstructed > 0 || fixture);
    return {ok, std::to_string(forms) + " forms, integrality " + std::to_string(integral) + "/" + std::to_string(forms) +
                    ", obstructed " + std::to_string(obstructed) + ", fixture A_1<0 " + (fixture ? "yes" : "no")};
}

Outcome batch() {
    std::ifstream in(kDataDir + "/synthetic_candidates.txt");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    const BatchResult one = batch_filter(text, Suite::K3, false, 1);
    const BatchResult many = batch_filter(text, Suite::K3, false, 4);
    bool ok = format_batch(one) == format_batch(many) && format_batch(one) == format_batch(batch_filter(text, Suite::K3));

    std::map<Verdict, int> overall;
    std::map<std::string, std::map<Verdict, int>> per_condition;
    std::size_t index = 0;
    int lines = 0;
    for (const auto& entry : read_weil_lines(text)) {
        ++lines;
        if (!entry.poly) continue;
        FilterReport r = check_k3_type(*entry.poly);
        r.id = std::to_string(entry.line);
        ok = ok && index < one.reports.size() && format_record(r) == format_record(one.reports[index]);
        ++index;
        ++overall[r.overall()];
        for (const auto& c : r.conditions) ++per_condition[c.name][c.verdict];
    }
    ok = ok && index == one.reports.size() && lines >= 1000;
    for (const auto& [v, n] : overall) ok = ok && one.overall_tally.count(v) && one.overall_tally.at(v) == n;
    for (const auto& [name, t] : per_condition)
        for (const auto& [v, n] : t)
            ok = ok && one.condition_tally.count(name) && one.condition_tally.at(name).count(v) &&
                 one.condition_tally.at(name).at(v) == n;
    return {ok, std::to_string(lines) + " lines, " + std::to_string(one.reports.size()) + " records, " +
                    std::to_string(one.skipped.size()) + " skipped, order and tallies match"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"golden count table of the special cubic", golden_table},
        {"power sums of f(t) match the table", power_sum_consistency},
        {"f(t) passes the K3 condition suite", f_suite},
        {"reconstruction round-trip", reconstruction},
        {"Fano and Hilbert-square counts agree", fano_hilbert},
        {"obstruction examples", obstructions},
        {"counting performance", performance},
        {"geom-check on random cubics", random_geom_check},
        {"batch filter on the synthetic candidates", batch},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << "  [" << o.detail << "]" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
