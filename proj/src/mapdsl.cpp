#include "pdyn/mapdsl.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace pdyn {

namespace {

void add_term(std::vector<BigInt>& coeffs, size_t degree, const BigInt& c) {
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, BigInt(0));
    coeffs[degree] += c;
}

void trim(std::vector<BigInt>& coeffs) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
}

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        std::vector<BigInt> coeffs{BigInt(0)};
        skip_ws();
        bool negate_head = false;
        if (peek() == '-') {  // sign allowed at head position only
            negate_head = true;
            ++pos_;
        }
        parse_term(coeffs, negate_head);
        skip_ws();
        while (pos_ < text_.size()) {
            char op = peek();
            if (op != '+' && op != '-')
                fail(ParseErrorKind::SyntaxError, pos_,
                     "expected '+', '-' or end of expression");
            ++pos_;
            parse_term(coeffs, op == '-');
            skip_ws();
        }
        trim(coeffs);
        return Polynomial{std::move(coeffs)};
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(ParseErrorKind kind, size_t at,
                           const std::string& msg) {
        throw ParseError(kind, at,
                         msg + " at offset " + std::to_string(at));
    }

    std::optional<BigInt> lex_int() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) return std::nullopt;
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    // ident := [A-Za-z_]+ ; only "x" names the variable.
    std::optional<std::string> lex_ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) return std::nullopt;
        return std::string(text_.substr(start, pos_ - start));
    }

    // atom := "x" ("^" uint)?, returns the degree.
    size_t parse_atom_degree() {
        size_t at = pos_;
        auto ident = lex_ident();
        if (!ident) fail(ParseErrorKind::SyntaxError, pos_, "expected term");
        if (*ident != "x")
            fail(ParseErrorKind::UnknownVariable, at,
                 "unknown variable '" + *ident + "'");
        skip_ws();
        if (peek() != '^') return 1;
        ++pos_;
        skip_ws();
        size_t exp_at = pos_;
        if (peek() == '-')
            fail(ParseErrorKind::NonIntegerExponent, exp_at,
                 "exponent must be a non-negative integer");
        auto exp = lex_int();
        if (!exp) {
            if (lex_ident())
                fail(ParseErrorKind::NonIntegerExponent, exp_at,
                     "exponent must be a non-negative integer");
            fail(ParseErrorKind::SyntaxError, exp_at, "expected exponent");
        }
        if (!exp->fits_ulong_p())
            fail(ParseErrorKind::SyntaxError, exp_at, "exponent too large");
        return exp->get_ui();
    }

    void parse_term(std::vector<BigInt>& coeffs, bool negate) {
        skip_ws();
        size_t at = pos_;
        auto lit = lex_int();
        if (lit) {
            BigInt c = negate ? BigInt(-*lit) : *lit;
            skip_ws();
            bool starred = false;
            if (peek() == '*') {
                starred = true;
                ++pos_;
                skip_ws();
            }
            bool next_is_ident =
                pos_ < text_.size() &&
                (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                 text_[pos_] == '_');
            if (starred || next_is_ident) {
                if (!next_is_ident)
                    fail(ParseErrorKind::SyntaxError, pos_,
                         "expected variable after '*'");
                add_term(coeffs, parse_atom_degree(), c);
            } else {
                add_term(coeffs, 0, c);
            }
            return;
        }
        if (pos_ >= text_.size())
            fail(ParseErrorKind::SyntaxError, at, "expected term");
        add_term(coeffs, parse_atom_degree(), negate ? BigInt(-1) : BigInt(1));
    }

    std::string_view text_;
    size_t pos_ = 0;
};

std::string print_monomial(const BigInt& c, size_t degree) {
    BigInt mag = abs(c);
    std::string s;
    if (degree == 0) return to_string(mag);
    if (mag != 1) s += to_string(mag) + "*";
    s += "x";
    if (degree > 1) s += "^" + std::to_string(degree);
    return s;
}

}  // namespace

Polynomial parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string print_poly(const Polynomial& poly) {
    const auto& c = poly.coeffs;
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (out.empty()) {
            if (c[i] < 0) out += "-";
        } else {
            out += c[i] < 0 ? " - " : " + ";
        }
        out += print_monomial(c[i], i);
    }
    return out.empty() ? "0" : out;
}

PiecewiseMap parse_mapfile(std::string_view text) {
    std::optional<BigInt> p;
    std::optional<Polynomial> div_poly, oth_poly;
    size_t line_start = 0;
    size_t n = text.size();

    for (size_t pos = 0; pos <= n; ++pos) {
        if (pos < n && text[pos] != '\n') continue;
        std::string_view line = text.substr(line_start, pos - line_start);
        size_t offset = line_start;
        line_start = pos + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        size_t last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        offset += first;

        size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(ParseErrorKind::SyntaxError, offset,
                             "expected 'key = value' line");
        std::string key(line.substr(0, eq));
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t'))
            key.pop_back();
        std::string_view value = line.substr(eq + 1);

        if (key == "p") {
            if (p) throw ParseError(ParseErrorKind::DuplicateKey, offset,
                                    "duplicate key 'p'");
            std::string v(value);
            std::istringstream in(v);
            std::string tok;
            in >> tok;
            std::string rest;
            if (in >> rest || tok.empty())
                throw ParseError(ParseErrorKind::SyntaxError, offset,
                                 "p must be a single integer");
            try {
                p = BigInt(tok, 10);
            } catch (const std::invalid_argument&) {
                throw ParseError(ParseErrorKind::SyntaxError, offset,
                                 "p must be a single integer");
            }
        } else if (key == "divisible") {
            if (div_poly)
                throw ParseError(ParseErrorKind::DuplicateKey, offset,
                                 "duplicate key 'divisible'");
            div_poly = parse_poly(value);
        } else if (key == "otherwise") {
            if (oth_poly)
                throw ParseError(ParseErrorKind::DuplicateKey, offset,
                                 "duplicate key 'otherwise'");
            oth_poly = parse_poly(value);
        } else {
            throw ParseError(ParseErrorKind::SyntaxError, offset,
                             "unknown key '" + key + "'");
        }
    }

    if (!p) throw ParseError(ParseErrorKind::MissingKey, n, "missing key 'p'");
    if (!div_poly)
        throw ParseError(ParseErrorKind::MissingKey, n,
                         "missing key 'divisible'");
    if (!oth_poly)
        throw ParseError(ParseErrorKind::MissingKey, n,
                         "missing key 'otherwise'");
    return validate(*p, div_poly->coeffs, oth_poly->coeffs);
}

std::string print_map(const PiecewiseMap& map) {
    std::string out = "p = " + to_string(map.p) + "\n";
    out += "divisible = " + print_poly(Polynomial{map.a}) + "\n";
    out += "otherwise = " + print_poly(Polynomial{map.b}) + "\n";
    return out;
}

Map load_map(const std::string& path_or_builtin) {
    if (path_or_builtin == "collatz" || path_or_builtin == "inverse-collatz")
        return builtin(path_or_builtin);
    std::ifstream in(path_or_builtin, std::ios::binary);
    if (!in)
        throw MapFileError("cannot open map file '" + path_or_builtin + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    PiecewiseMap map = parse_mapfile(buf.str());
    map.name = path_or_builtin;
    return map;
}

}  // namespace pdyn
