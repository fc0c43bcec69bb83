#include "cli.hpp"

#include "nck3/check_range.hpp"
#include "nck3/counting.hpp"
#include "nck3/error.hpp"
#include "nck3/field.hpp"
#include "nck3/hondatate.hpp"
#include "nck3/k3_category.hpp"
#include "nck3/weil.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace nck3::cli {

namespace {

struct Options {
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    std::string cubic;
    std::string weil;
    std::string counts;
    std::string input;
    std::string report;
    std::string suite = "k3";
    std::string format = "text";
    int ext = 1;
    int max_ext = 4;
    int terms = 12;
    int workers = 0;
    bool allow_large = false;
    bool ks = false;
    bool strict = false;
    bool affine = false;
    bool cubic_counts = false;
    int hilbert_min_ext = 8;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CountOptions count_options(const Options& o) {
    CountOptions c;
    c.workers = o.workers;
    c.allow_large = o.allow_large;
    return c;
}

std::vector<WeilPolynomial> read_weil_file(const std::string& path, bool ks) {
    std::vector<WeilPolynomial> out;
    for (auto& entry : read_weil_lines(read_file(path), ks)) {
        if (!entry.poly) throw ParseError(entry.error);
        out.push_back(std::move(*entry.poly));
    }
    if (out.empty()) throw ParseError("'" + path + "' contains no Weil polynomial");
    return out;
}

Suite parse_suite(const std::string& s) {
    if (s == "k3") return Suite::K3;
    if (s == "cubic") return Suite::CubicCategory;
    throw ParseError("unknown suite '" + s + "' (expected k3 or cubic)");
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

// Aligned columns, first column is n.
void print_columns(std::ostream& out, const std::vector<std::string>& headers,
                   const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        width[c] = headers[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    out << "#";
    for (std::size_t c = 0; c < headers.size(); ++c) out << (c == 0 ? " " : "  ") << pad_left(headers[c], width[c]);
    out << "\n";
    for (const auto& r : rows) {
        out << " ";
        for (std::size_t c = 0; c < r.size(); ++c) out << (c == 0 ? " " : "  ") << pad_left(r[c], width[c]);
        out << "\n";
    }
}

void print_report(std::ostream& out, const FilterReport& report, const std::string& format) {
    if (format == "records") {
        out << format_record(report) << "\n";
        return;
    }
    if (!report.id.empty()) out << "input " << report.id << "\n";
    out << "overall " << to_string(report.overall()) << "\n";
    std::size_t width = 0;
    for (const auto& c : report.conditions) width = std::max(width, c.name.size());
    for (const auto& c : report.conditions) {
        out << "  " << c.name << std::string(width - c.name.size() + 2, ' ') << to_string(c.verdict);
        if (!c.witness.empty()) out << std::string(8 - to_string(c.verdict).size(), ' ') << c.witness;
        out << "\n";
    }
}

std::string poly_text(const RatPoly& p) { return p.is_zero() ? "0" : to_string(p); }

int run_field_table(const Options& o, std::ostream& out) {
    const FieldSpec f = make_field(o.p, o.k);
    if (f.q() > 256) throw ResourceLimit("multiplication table limited to q <= 256");
    out << "GF(" << f.q() << ") = GF(" << f.p() << ")[x]/(" << f.format_modulus() << ")\n";
    out << "generator " << f.generator().index << " = " << f.format(f.generator()) << "\n";
    const std::size_t w = std::to_string(f.q() - 1).size();
    out << "# mul";
    for (std::uint32_t b = 0; b < f.q(); ++b) out << " " << pad_left(std::to_string(b), w);
    out << "\n";
    for (std::uint32_t a = 0; a < f.q(); ++a) {
        out << "  " << pad_left(std::to_string(a), 3);
        for (std::uint32_t b = 0; b < f.q(); ++b) out << " " << pad_left(std::to_string(f.mul({a}, {b}).index), w);
        out << "\n";
    }
    return kExitOk;
}

int run_count(const Options& o, std::ostream& out) {
    const CubicForm form = read_cubic_file(o.cubic);
    const CountOptions c = count_options(o);
    out << to_string(o.affine ? count_affine(form, o.ext, c) : count_projective(form, o.ext, c)) << "\n";
    return kExitOk;
}

int run_count_table(const Options& o, std::ostream& out) {
    const CubicForm form = read_cubic_file(o.cubic);
    out << format_count_table(count_table(form, o.max_ext, count_options(o)), "|X|");
    return kExitOk;
}

PointCountTable cubic_table(const Options& o) {
    if (!o.cubic.empty()) return count_table(read_cubic_file(o.cubic), o.max_ext, count_options(o));
    if (!o.counts.empty()) return parse_count_table(read_file(o.counts));
    throw ParseError("one of --cubic or --counts is required");
}

int run_ack3(const Options& o, std::ostream& out) {
    const PointCountTable X = cubic_table(o);
    const NcK3Counts A = ack3_from_cubic(X);
    out << "q=" << X.q << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& [n, x] : X.counts) rows.push_back({std::to_string(n), to_string(x), to_string(A.at(n))});
    print_columns(out, {"n", "|X|", "|A|"}, rows);
    return kExitOk;
}

int run_geom_check(const Options& o, std::ostream& out) {
    FilterReport report = geom_check(cubic_table(o));
    report.id = o.cubic.empty() ? o.counts : o.cubic;
    if (o.format != "records") {
        const NcK3Counts A = ack3_from_cubic(cubic_table(o));
        out << "q=" << A.q << "\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& [n, a] : A.counts) rows.push_back({std::to_string(n), to_string(a)});
        print_columns(out, {"n", "|A|"}, rows);
    }
    print_report(out, report, o.format);
    return o.strict && report.overall() == Verdict::Fail ? kExitFail : kExitOk;
}

int run_hilb_check(const Options& o, std::ostream& out) {
    const PointCountTable X = cubic_table(o);
    const int n_max = X.max_n() / 2;
    if (n_max < 1) throw InsufficientData("hilb check needs counts up to n = 2 at least");
    const auto F = fano_counts(X, n_max);
    const auto H = hilbert_square_counts(ack3_from_cubic(X), n_max);
    out << "q=" << X.q << "\n";
    std::vector<std::vector<std::string>> rows;
    for (int n = 1; n <= n_max; ++n) rows.push_back({std::to_string(n), to_string(F.at(n)), to_string(H.at(n))});
    print_columns(out, {"n", "|F(X)|", "|A^[2]|"}, rows);
    FilterReport report;
    report.conditions.push_back(check_fano_hilbert(X, n_max));
    report.conditions.push_back(grothendieck_identity_check(X, n_max));
    print_report(out, report, o.format);
    return o.strict && report.overall() == Verdict::Fail ? kExitFail : kExitOk;
}

int run_zeta(const Options& o, std::ostream& out) {
    for (const auto& w : read_weil_file(o.weil, o.ks)) {
        const ZetaFunction z = zeta_assemble(w, o.terms);
        out << "q=" << w.q << "\n";
        out << "numerator   " << poly_text(z.numerator) << "\n";
        out << "denominator " << poly_text(z.denominator) << "\n";
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < z.log_coefficients.size(); ++i) {
            const Rational a = z.log_coefficients[i];
            rows.push_back({std::to_string(i + 1), to_string(a), to_string(Rational(a * static_cast<long>(i + 1)))});
        }
        print_columns(out, {"n", "a_n", "n*a_n"}, rows);
    }
    return kExitOk;
}

int run_weil_reconstruct(const Options& o, std::ostream& out, std::ostream& err) {
    PointCountTable table = parse_count_table(read_file(o.counts));
    if (o.cubic_counts) {
        const NcK3Counts A = ack3_from_cubic(table);
        table.counts = A.counts;
    }
    const Reconstruction r = weil_from_counts(table);
    for (const auto& w : r.candidates) out << format_weil_line(w) << "\n";
    if (!r.diagnostic.empty()) err << "# " << r.diagnostic << "\n";
    if (r.candidates.empty()) {
        err << "no candidate passes the unit-circle test\n";
        return o.strict ? kExitFail : kExitOk;
    }
    return kExitOk;
}

int run_weil_expand(const Options& o, std::ostream& out) {
    for (const auto& w : read_weil_file(o.weil, o.ks)) {
        const CountSeries s = counts_from_weil(w, o.max_ext);
        out << "q=" << w.q << "\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& [n, c] : s.counts) rows.push_back({std::to_string(n), to_string(c)});
        print_columns(out, {"n", "count"}, rows);
        if (!s.integral) out << "# non-integral counts\n";
    }
    return kExitOk;
}

int run_weil_check(const Options& o, std::ostream& out) {
    const Suite suite = parse_suite(o.suite);
    SuiteOptions so;
    so.hilbert_min_ext = o.hilbert_min_ext;
    bool failed = false;
    int index = 0;
    for (const auto& w : read_weil_file(o.weil, o.ks)) {
        FilterReport r = suite == Suite::K3 ? check_k3_type(w, so) : check_cubic_category_type(w, so);
        r.id = std::to_string(++index);
        print_report(out, r, o.format);
        failed = failed || r.overall() == Verdict::Fail;
    }
    return o.strict && failed ? kExitFail : kExitOk;
}

unsigned degree_of(std::uint64_t q, std::uint32_t p) {
    unsigned k = 0;
    for (; q > 1; q /= p) ++k;
    return k;
}

int run_weil_split(const Options& o, std::ostream& out) {
    for (const auto& w : read_weil_file(o.weil, o.ks)) {
        const CyclotomicSplit s = cyclotomic_split(w.L);
        out << "q=" << w.q << "\n";
        out << "rho " << s.rho << "\n";
        out << "rho_bar " << s.rho_bar << "\n";
        out << "L_alg";
        if (s.factors.empty()) out << " 1";
        for (const auto& f : s.factors) out << " C" << f.n << "^" << f.multiplicity;
        out << "\n";
        out << "L_trc " << poly_text(s.L_trc) << "\n";
    }
    return kExitOk;
}

int run_weil_newton(const Options& o, std::ostream& out) {
    for (const auto& w : read_weil_file(o.weil, o.ks)) {
        const unsigned k = degree_of(w.q, w.p);
        const CyclotomicSplit s = cyclotomic_split(w.L);
        out << "q=" << w.q << "\n";
        if (s.L_trc.degree() > 0) {
            const NewtonPolygon np = newton_polygon(s.L_trc, w.p, k);
            out << "vertices";
            for (const auto& [x, y] : np.vertices) out << " (" << x << "," << to_string(y) << ")";
            out << "\nslopes";
            for (const auto& sl : np.slopes) out << " " << to_string(sl);
            out << "\n";
        }
        const HeightInfo h = height_and_ordinarity(s, w.p, k);
        out << "height " << (!h.height_known ? std::string("UNKNOWN") : h.height ? std::to_string(*h.height) : "inf") << "\n";
        out << "ordinary " << (h.ordinary ? "yes" : "no") << "\n";
        if (h.supersingular) out << "supersingular yes\n";
        const ConditionResult nh = newton_above_hodge(s, w.p, k);
        out << "newton-above-hodge " << to_string(nh.verdict) << (nh.witness.empty() ? "" : " " + nh.witness) << "\n";
    }
    return kExitOk;
}

int run_weil_convert_ks(const Options& o, std::ostream& out) {
    // With --ks the input is the degree-21 form and the output the Weil form.
    for (const auto& w : read_weil_file(o.weil, o.ks)) {
        if (o.ks)
            out << format_weil_line(w) << "\n";
        else
            out << "q=" << w.q << "; " << to_string(ks_convert(w)) << "\n";
    }
    return kExitOk;
}

int run_filter(const Options& o, std::ostream& out) {
    SuiteOptions so;
    so.hilbert_min_ext = o.hilbert_min_ext;
    const BatchResult r = batch_filter(read_file(o.input), parse_suite(o.suite), o.ks, o.workers, so);
    const std::string text = format_batch(r);
    if (o.report.empty()) {
        out << text;
    } else {
        std::ofstream file(o.report);
        if (!file) throw ParseError("cannot write '" + o.report + "'");
        file << text;
        out << "# records=" << r.reports.size() << " skipped=" << r.skipped.size() << "\n";
    }
    const bool failed = r.overall_tally.count(Verdict::Fail) && r.overall_tally.at(Verdict::Fail) > 0;
    return o.strict && failed ? kExitFail : kExitOk;
}

int run_stats_picard(const Options& o, std::ostream& out) {
    out << format_picard(picard_stats(read_file(o.input), o.ks));
    return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Point counts, zeta functions and Weil-polynomial filters for cubic fourfolds and their K3 categories",
                 "nck3"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    std::function<int()> action;
    auto bind = [&](CLI::App* sub, std::function<int()> fn) { sub->callback([&action, fn] { action = fn; }); };
    auto add_workers = [&](CLI::App* sub) {
        sub->add_option("--workers", o.workers, "Worker threads (default: NCK3_WORKERS or all cores)")
            ->check(CLI::NonNegativeNumber);
    };
    auto add_strict = [&](CLI::App* sub) { sub->add_flag("--strict", o.strict, "Exit 1 when a verdict is FAIL"); };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "records"}));
    };
    auto add_weil = [&](CLI::App* sub) {
        sub->add_option("--weil", o.weil, "Weil polynomial file ('q=<q>; c0,...,c22' per line)")->required();
        sub->add_flag("--ks", o.ks, "Lines hold the degree-21 form q*L(T)/(1-T)");
    };

    auto* field = app.add_subcommand("field-table", "Print the modulus and multiplication table of GF(p^k)");
    field->add_option("--p", o.p, "Characteristic")->check(CLI::PositiveNumber);
    field->add_option("--k", o.k, "Extension degree")->check(CLI::PositiveNumber);
    bind(field, [&] { return run_field_table(o, out); });

    auto* count = app.add_subcommand("count", "Count points of a cubic fourfold over F_{p^n}");
    count->add_option("--cubic", o.cubic, "Cubic form file")->required();
    count->add_option("--ext", o.ext, "Extension degree n")->check(CLI::PositiveNumber);
    count->add_flag("--allow-large", o.allow_large, "Lift the q^n <= 64 enumeration bound");
    count->add_flag("--affine", o.affine, "Print the affine cone count instead");
    add_workers(count);
    bind(count, [&] { return run_count(o, out); });

    auto* table = app.add_subcommand("count-table", "Projective counts for n = 1..max-ext");
    table->add_option("--cubic", o.cubic, "Cubic form file")->required();
    table->add_option("--max-ext", o.max_ext, "Largest extension degree")->check(CLI::PositiveNumber);
    table->add_flag("--allow-large", o.allow_large, "Lift the q^n <= 64 enumeration bound");
    add_workers(table);
    bind(table, [&] { return run_count_table(o, out); });

    auto add_table_source = [&](CLI::App* sub) {
        auto* c = sub->add_option("--cubic", o.cubic, "Cubic form file");
        auto* t = sub->add_option("--counts", o.counts, "Cubic count table file instead of counting");
        c->excludes(t);
        sub->add_option("--max-ext", o.max_ext, "Largest extension degree")->check(CLI::PositiveNumber);
        sub->add_flag("--allow-large", o.allow_large, "Lift the q^n <= 64 enumeration bound");
        add_workers(sub);
    };

    auto* ack3 = app.add_subcommand("ack3", "Cubic counts and the derived K3-category counts");
    add_table_source(ack3);
    bind(ack3, [&] { return run_ack3(o, out); });

    auto* geom = app.add_subcommand("geom-check", "Report negative or non-growing K3-category counts");
    add_table_source(geom);
    add_format(geom);
    add_strict(geom);
    bind(geom, [&] { return run_geom_check(o, out); });

    auto* hilb = app.add_subcommand("hilb", "Hilbert-square tools");
    hilb->require_subcommand(1);
    auto* hilb_check = hilb->add_subcommand("check", "Fano counts against Hilbert-square counts for n <= max-ext/2");
    add_table_source(hilb_check);
    add_format(hilb_check);
    add_strict(hilb_check);
    bind(hilb_check, [&] { return run_hilb_check(o, out); });

    auto* zeta = app.add_subcommand("zeta", "Zeta function and log-expansion of a K3 category");
    add_weil(zeta);
    zeta->add_option("--terms", o.terms, "Number of log-expansion terms")->check(CLI::PositiveNumber);
    bind(zeta, [&] { return run_zeta(o, out); });

    auto* weil = app.add_subcommand("weil", "Weil polynomial tools");
    weil->require_subcommand(1);
    auto* recon = weil->add_subcommand("reconstruct", "Recover L from counts n = 1..11 (12 disambiguates)");
    recon->add_option("--counts", o.counts, "Count table file")->required();
    recon->add_flag("--cubic-counts", o.cubic_counts, "The table holds cubic counts |X|");
    add_strict(recon);
    bind(recon, [&] { return run_weil_reconstruct(o, out, err); });
    auto* expand = weil->add_subcommand("expand", "Point counts from L");
    add_weil(expand);
    expand->add_option("--max-ext", o.max_ext, "Largest extension degree")->check(CLI::PositiveNumber);
    bind(expand, [&] { return run_weil_expand(o, out); });
    auto* check = weil->add_subcommand("check", "Run a condition suite on each polynomial");
    add_weil(check);
    check->add_option("--suite", o.suite, "k3 or cubic")->check(CLI::IsMember({"k3", "cubic"}));
    check->add_option("--hilbert-min-ext", o.hilbert_min_ext, "Hilbert-square checks cover at least n <= this");
    add_format(check);
    add_strict(check);
    bind(check, [&] { return run_weil_check(o, out); });
    auto* split = weil->add_subcommand("split", "Cyclotomic split and Picard ranks");
    add_weil(split);
    bind(split, [&] { return run_weil_split(o, out); });
    auto* newton = weil->add_subcommand("newton", "Newton polygon, height and ordinarity of L_trc");
    add_weil(newton);
    bind(newton, [&] { return run_weil_newton(o, out); });
    auto* convert = weil->add_subcommand("convert-ks", "Convert to the degree-21 form (or back with --ks)");
    add_weil(convert);
    bind(convert, [&] { return run_weil_convert_ks(o, out); });

    auto* filter = app.add_subcommand("filter", "Batch condition suite over a Weil polynomial file");
    filter->add_option("--suite", o.suite, "k3 or cubic")->check(CLI::IsMember({"k3", "cubic"}));
    filter->add_option("--input", o.input, "Weil polynomial file")->required();
    filter->add_option("--report", o.report, "Write records here instead of stdout");
    filter->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"records"}));
    filter->add_option("--hilbert-min-ext", o.hilbert_min_ext, "Hilbert-square checks cover at least n <= this");
    filter->add_flag("--ks", o.ks, "Lines hold the degree-21 form");
    add_workers(filter);
    add_strict(filter);
    bind(filter, [&] { return run_filter(o, out); });

    auto* stats = app.add_subcommand("stats", "Statistics over Weil polynomial files");
    stats->require_subcommand(1);
    auto* picard = stats->add_subcommand("picard", "Histograms of rho and rho_bar");
    picard->add_option("--input", o.input, "Weil polynomial file")->required();
    picard->add_flag("--ks", o.ks, "Lines hold the degree-21 form");
    bind(picard, [&] { return run_stats_picard(o, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    try {
        return action ? action() : kExitUsage;
    } catch (const ConsistencyError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace nck3::cli
