#pragma once

#include "nck3/counting.hpp"
#include "nck3/cubic.hpp"
#include "nck3/verdict.hpp"
#include "nck3/weil.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nck3 {

struct FilterReport {
    std::string id;
    std::vector<ConditionResult> conditions;

    Verdict overall() const;
    /// nullptr when the condition was not evaluated.
    const ConditionResult* find(std::string_view name) const;
};

/// "id=<id> overall=<V> cond:<name>=<V>[:witness] ..."
std::string format_record(const FilterReport& report);

struct SuiteOptions {
    int hilbert_min_ext = 8;  // Hilbert-square checks always cover n <= this
};

/// K3-type conditions: unit-circle, projectivity, weil-integrality,
/// p-integrality (q = p only), newton-above-hodge, transcendental,
/// nonnegative-counts, extension-growth, artin-tate. A unit-circle failure
/// short-circuits the remaining conditions.
FilterReport check_k3_type(const WeilPolynomial& w, const SuiteOptions& opts = {});

/// Conditions on the K3 category of a cubic fourfold over a prime field:
/// unit-circle, p-integrality, cubic-nonnegative, cubic-growth,
/// hilbert-nonnegative, hilbert-growth, artin-tate.
FilterReport check_cubic_category_type(const WeilPolynomial& w, const SuiteOptions& opts = {});

/// q L_1(-1) where L = (1 - T)^r L_1 with L_1(1) != 0.
Rational artin_tate_value(const WeilPolynomial& w);

/// Obstruction report for a cubic: integrality, nonnegative-counts and
/// extension-growth of its K3-category counts for n = 1..n_max. Never
/// certifies geometricity.
FilterReport geom_check(const CubicForm& form, int n_max, const CountOptions& opts = {});
/// Same report from an existing count table.
FilterReport geom_check(const PointCountTable& X);

enum class Suite { K3, CubicCategory };

struct SkippedLine {
    int line;
    std::string error;
};

struct BatchResult {
    std::vector<FilterReport> reports;  // input order
    std::vector<SkippedLine> skipped;
    std::map<Verdict, int> overall_tally;
    std::map<std::string, std::map<Verdict, int>> condition_tally;
};

BatchResult batch_filter(std::string_view text, Suite suite, bool ks = false, int workers = 0,
                         const SuiteOptions& opts = {});
/// Records followed by a '#'-prefixed summary block.
std::string format_batch(const BatchResult& result);

struct PicardStats {
    int inputs = 0;
    int considered = 0;  // inputs with p*L in Z[T]
    std::map<int, int> rho;
    std::map<int, int> rho_bar;
    int purely_transcendental = 0;
    std::vector<SkippedLine> skipped;
};

PicardStats picard_stats(std::string_view text, bool ks = false);
std::string format_picard(const PicardStats& stats);

}  // namespace nck3
