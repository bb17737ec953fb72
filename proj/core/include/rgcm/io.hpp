#ifndef RGCM_IO_HPP
#define RGCM_IO_HPP

#include <string>
#include <string_view>

#include "rgcm/errors.hpp"
#include "rgcm/matrix.hpp"

namespace rgcm {

// Three interchange formats, all round-tripping doubles bit-exactly via
// shortest-representation serialization:
//   Text:  '#' comment lines; first token n, then n*n whitespace-separated
//          reals in row-major order.
//   Csv:   n rows of n comma-separated reals, n inferred.
//   Json:  {"n": <int>, "rows": [[...], ...]}.
// Auto sniffs Json by a leading '{', Csv by a comma in the first data line,
// Text otherwise.

enum class MatrixFormat { Auto, Text, Csv, Json };

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& reason);
    int line;     // 1-based, 0 when unknown
    int column;   // 1-based, 0 when unknown
};

SquareMatrix parse_matrix(std::string_view input, MatrixFormat format = MatrixFormat::Auto);

/// Auto serializes as Text.
std::string serialize_matrix(const SquareMatrix& a, MatrixFormat format = MatrixFormat::Text);

/// Shortest decimal form of x that parses back to the same bits.
std::string format_double(double x);

} // namespace rgcm

#endif
