#include "nck3/cubic.hpp"

#include "nck3/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nck3 {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string strip(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

CubicForm::CubicForm(std::uint32_t p, std::vector<CubicTerm> terms) : p_(p) {
    if (!is_prime(p)) throw ParseError("base characteristic p = " + std::to_string(p) + " is not prime");
    std::map<Exponents, std::uint64_t> merged;
    for (const auto& t : terms) {
        int deg = 0;
        for (auto e : t.exponents) deg += e;
        if (deg != 3) throw ParseError("monomial of degree " + std::to_string(deg) + ", expected 3");
        merged[t.exponents] = (merged[t.exponents] + t.coefficient % p) % p;
    }
    for (const auto& [exps, c] : merged)
        if (c != 0) terms_.push_back({static_cast<std::uint32_t>(c), exps});
    if (terms_.empty()) throw ParseError("cubic form is identically zero mod " + std::to_string(p));
}

std::vector<CubicTerm> CubicForm::partial(int var) const {
    std::vector<CubicTerm> out;
    for (const auto& t : terms_) {
        const std::uint32_t e = t.exponents[var];
        if (e == 0) continue;
        const std::uint32_t c = static_cast<std::uint32_t>((static_cast<std::uint64_t>(t.coefficient) * e) % p_);
        if (c == 0) continue;
        CubicTerm d = t;
        d.coefficient = c;
        d.exponents[var] = static_cast<std::uint8_t>(e - 1);
        out.push_back(d);
    }
    return out;
}

CubicForm parse_cubic(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    std::uint32_t p = 2;
    bool seen_term = false;
    struct Pending {
        BigInt coeff;
        Exponents exps;
    };
    std::vector<Pending> pending;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("p=", 0) == 0 || line.rfind("p =", 0) == 0) {
            if (seen_term) throw ParseError("header 'p=' must precede the terms", lineno);
            auto val = strip(line.substr(line.find('=') + 1));
            BigInt pv;
            try {
                pv = parse_integer(val);
            } catch (const ParseError& e) {
                throw ParseError(std::string("bad characteristic: ") + e.what(), lineno);
            }
            if (pv < 2 || pv > 65521 || !is_prime(pv.get_ui()))
                throw ParseError("characteristic " + val + " is not a supported prime", lineno);
            p = static_cast<std::uint32_t>(pv.get_ui());
            continue;
        }
        auto toks = split_ws(line);
        if (toks.size() != 1 + kVariables)
            throw ParseError("expected 'coeff e1 e2 e3 e4 e5 e6', got " + std::to_string(toks.size()) + " fields", lineno);
        Pending t;
        int deg = 0;
        try {
            t.coeff = parse_integer(toks[0]);
            for (int i = 0; i < kVariables; ++i) {
                BigInt e = parse_integer(toks[1 + i]);
                if (e < 0 || e > 3) throw ParseError("exponent " + toks[1 + i] + " out of range");
                t.exps[i] = static_cast<std::uint8_t>(e.get_ui());
                deg += t.exps[i];
            }
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
        if (deg != 3)
            throw ParseError("non-homogeneous term: monomial of degree " + std::to_string(deg) + ", expected 3", lineno);
        pending.push_back(t);
        seen_term = true;
    }
    if (pending.empty()) throw ParseError("empty cubic form: no terms");
    std::vector<CubicTerm> terms;
    for (const auto& t : pending) {
        BigInt r = t.coeff % p;
        if (r < 0) r += p;
        terms.push_back({static_cast<std::uint32_t>(r.get_ui()), t.exps});
    }
    return CubicForm(p, std::move(terms));
}

CubicForm read_cubic_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open cubic file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_cubic(ss.str());
}

std::string format_cubic(const CubicForm& form) {
    std::string out = "p=" + std::to_string(form.base_p()) + "\n";
    for (const auto& t : form.terms()) {
        out += std::to_string(t.coefficient);
        for (auto e : t.exponents) out += ' ' + std::to_string(e);
        out += '\n';
    }
    return out;
}

const BigInt& PointCountTable::at(int n) const {
    auto it = counts.find(n);
    if (it == counts.end()) throw InsufficientData("no count for n = " + std::to_string(n));
    return it->second;
}

PointCountTable parse_count_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    PointCountTable table;
    bool have_q = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("q=", 0) == 0) {
            try {
                BigInt q = parse_integer(strip(line.substr(2)));
                if (q < 2) throw ParseError("q must be at least 2");
                table.q = q.get_ui();
            } catch (const ParseError& e) {
                throw ParseError(e.what(), lineno);
            }
            have_q = true;
            continue;
        }
        auto toks = split_ws(line);
        if (toks.size() < 2) throw ParseError("expected 'n value'", lineno);
        try {
            BigInt n = parse_integer(toks.front());
            if (n < 1 || n > 1000) throw ParseError("extension degree out of range");
            int ni = static_cast<int>(n.get_si());
            if (table.counts.count(ni)) throw ParseError("duplicate row for n = " + toks.front());
            table.counts[ni] = parse_integer(toks.back());
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (!have_q) throw ParseError("count table is missing its 'q=' header");
    return table;
}

std::string format_count_table(const PointCountTable& table, const std::string& value_header) {
    std::size_t width = value_header.size();
    for (const auto& [n, c] : table.counts) width = std::max(width, to_string(c).size());
    std::ostringstream out;
    out << "q=" << table.q << "\n";
    out << "# n  " << value_header << "\n";
    for (const auto& [n, c] : table.counts) {
        std::string s = to_string(c);
        out << std::string(n < 10 ? 2 : 1, ' ') << n << "  " << std::string(width - s.size(), ' ') << s << "\n";
    }
    return out.str();
}

}  // namespace nck3
