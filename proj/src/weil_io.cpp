#include "nck3/error.hpp"
#include "nck3/weil.hpp"

#include <sstream>

namespace nck3 {

namespace {

std::string strip(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

WeilPolynomial parse_weil_line(std::string_view line, bool ks) {
    std::string text = strip(line);
    if (auto hash = text.find('#'); hash != std::string::npos) text = strip(text.substr(0, hash));
    const auto semi = text.find(';');
    if (semi == std::string::npos) throw ParseError("expected 'q=<q>; c0,c1,...'");
    const std::string head = strip(text.substr(0, semi));
    if (head.rfind("q", 0) != 0 || head.find('=') == std::string::npos) throw ParseError("expected 'q=<q>' before ';'");
    const BigInt q = parse_integer(strip(head.substr(head.find('=') + 1)));
    if (q < 2 || !q.fits_ulong_p()) throw ParseError("q out of range: " + to_string(q));
    const RatPoly poly = parse_ratpoly(strip(text.substr(semi + 1)));
    try {
        return ks ? ks_inverse(q.get_ui(), poly) : make_weil(q.get_ui(), poly);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string format_weil_line(const WeilPolynomial& w) { return "q=" + std::to_string(w.q) + "; " + to_string(w.L); }

std::vector<WeilLine> read_weil_lines(std::string_view text, bool ks) {
    std::vector<WeilLine> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        WeilLine entry;
        entry.line = lineno;
        try {
            entry.poly = parse_weil_line(line, ks);
        } catch (const Error& e) {
            entry.error = ParseError(e.what(), lineno).what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace nck3
