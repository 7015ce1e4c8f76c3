#pragma once

#include <iosfwd>
#include <string>

#include "covdepth/matrix.hpp"
#include "covdepth/rational.hpp"

namespace covdepth {

/// Parse the matrix text format:
///
///   q=<field order>
///   <k lines of n whitespace-separated element codes>
///
/// '#' starts a comment anywhere on a line; blank lines are skipped.
/// Shape and entry range are validated (BadInput names the 1-based line);
/// rank is not, so callers decide what deficiency means for them.
GenMatrix parse_matrix(std::istream& in);
GenMatrix parse_matrix_file(const std::string& path);

/// Inverse of parse_matrix: parse(format(g)) reproduces g exactly.
std::string format_matrix(const GenMatrix& g);

/// One exact rational, rendered for reports: numerator and denominator as
/// decimal strings plus a 15-significant-digit positional rendering.
struct RationalFields {
    std::string num;
    std::string den;
    std::string decimal;
};

RationalFields rational_fields(const Rat& v);

}  // namespace covdepth
