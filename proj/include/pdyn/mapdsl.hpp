// Text format for piecewise maps: a small polynomial expression language
// plus a three-line key/value file. The divisible branch is written as its
// numerator; division by p is implicit.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pdyn/bigint.hpp"
#include "pdyn/mapdef.hpp"

namespace pdyn {

/// Dense integer polynomial in x, little-endian coefficients, normalized
/// (like terms merged, no trailing zeros except the lone zero polynomial).
struct Polynomial {
    std::vector<BigInt> coeffs{BigInt(0)};

    friend bool operator==(const Polynomial& x, const Polynomial& y) {
        return x.coeffs == y.coeffs;
    }
};

enum class ParseErrorKind {
    SyntaxError,
    UnknownVariable,
    NonIntegerExponent,
    MissingKey,
    DuplicateKey,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, size_t offset, const std::string& what)
        : std::runtime_error(what), kind_(kind), offset_(offset) {}
    ParseErrorKind kind() const { return kind_; }
    /// Byte offset into the expression (or file) where the error was seen.
    size_t offset() const { return offset_; }

private:
    ParseErrorKind kind_;
    size_t offset_;
};

/// Grammar: poly := term (("+"|"-") term)*; term := int | int "*"? atom |
/// atom; atom := "x" ("^" uint)?. Integer literals are arbitrary precision;
/// a leading "-" is allowed on the first term; whitespace is insignificant.
Polynomial parse_poly(std::string_view text);

/// Line-oriented file with keys p, divisible, otherwise (each exactly
/// once); '#' starts a comment. The result is fed through validate().
PiecewiseMap parse_mapfile(std::string_view text);

std::string print_poly(const Polynomial& poly);

/// Canonical file text; parse_mapfile(print_map(m)) == m coefficient-exact.
std::string print_map(const PiecewiseMap& map);

/// A map file that could not be read at all.
class MapFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Resolves a CLI --map argument: a builtin name or a path to a map file.
Map load_map(const std::string& path_or_builtin);

}  // namespace pdyn
