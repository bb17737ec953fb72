#include "rgcm/io.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace rgcm {

ParseError::ParseError(int line, int column, const std::string& reason)
    : Error(line > 0 ? "parse error at line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + reason
                     : "parse error: " + reason),
      line(line), column(column) {}

std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

namespace {

struct Token {
    std::string text;
    int line;     // 1-based
    int column;   // 1-based
};

// Whitespace-separated tokens; a line whose first token starts with '#'
// is a comment.
std::vector<Token> tokenize_text(std::string_view input) {
    std::vector<Token> tokens;
    int line = 1, column = 1;
    bool comment = false, line_has_token = false;
    std::size_t i = 0;
    while (i < input.size()) {
        const char c = input[i];
        if (c == '\n') {
            ++line;
            column = 1;
            comment = false;
            line_has_token = false;
            ++i;
            continue;
        }
        if (comment || c == ' ' || c == '\t' || c == '\r') {
            ++column;
            ++i;
            continue;
        }
        if (c == '#' && !line_has_token) {
            comment = true;
            ++i;
            continue;
        }
        line_has_token = true;
        Token t{{}, line, column};
        while (i < input.size() && input[i] != ' ' && input[i] != '\t' &&
               input[i] != '\r' && input[i] != '\n') {
            t.text.push_back(input[i]);
            ++i;
            ++column;
        }
        tokens.push_back(std::move(t));
    }
    return tokens;
}

double parse_double_token(const Token& t) {
    double value = 0.0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(t.line, t.column, "invalid number '" + t.text + "'");
    if (!std::isfinite(value))
        throw ParseError(t.line, t.column, "non-finite value '" + t.text + "'");
    return value;
}

SquareMatrix parse_text(std::string_view input) {
    const std::vector<Token> tokens = tokenize_text(input);
    if (tokens.empty())
        throw ParseError(1, 1, "empty input");

    const Token& head = tokens.front();
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(head.text.data(),
                                     head.text.data() + head.text.size(), n);
    if (ec != std::errc{} || ptr != head.text.data() + head.text.size() || n < 1)
        throw ParseError(head.line, head.column,
                         "expected positive dimension, got '" + head.text + "'");

    if (tokens.size() - 1 != n * n)
        throw DimensionMismatchError("expected " + std::to_string(n * n) +
                                     " entries for n=" + std::to_string(n) + ", got " +
                                     std::to_string(tokens.size() - 1));
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t k = 1; k < tokens.size(); ++k)
        entries.push_back(parse_double_token(tokens[k]));
    return SquareMatrix(n, std::move(entries));
}

SquareMatrix parse_csv(std::string_view input) {
    std::vector<std::vector<Token>> rows;
    int line = 1;
    std::size_t i = 0;
    while (i <= input.size()) {
        // One physical line.
        std::size_t end = input.find('\n', i);
        if (end == std::string_view::npos)
            end = input.size();
        std::string_view raw = input.substr(i, end - i);
        bool blank = raw.find_first_not_of(" \t\r") == std::string_view::npos;
        if (!blank) {
            std::vector<Token> fields;
            int column = 1;
            std::size_t start = 0;
            for (std::size_t k = 0; k <= raw.size(); ++k) {
                if (k == raw.size() || raw[k] == ',') {
                    std::string field(raw.substr(start, k - start));
                    const int field_col = column + static_cast<int>(start);
                    // Trim surrounding blanks, tracking the column offset.
                    std::size_t b = field.find_first_not_of(" \t\r");
                    std::size_t e = field.find_last_not_of(" \t\r");
                    if (b == std::string::npos)
                        throw ParseError(line, field_col, "empty field");
                    fields.push_back({field.substr(b, e - b + 1),
                                      line, field_col + static_cast<int>(b)});
                    start = k + 1;
                }
            }
            rows.push_back(std::move(fields));
        }
        if (end == input.size())
            break;
        i = end + 1;
        ++line;
    }
    if (rows.empty())
        throw ParseError(1, 1, "empty input");

    const std::size_t n = rows.size();
    std::vector<double> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n)
            throw DimensionMismatchError(
                "row " + std::to_string(row.front().line) + " has " +
                std::to_string(row.size()) + " fields, expected " + std::to_string(n));
        for (const Token& t : row)
            entries.push_back(parse_double_token(t));
    }
    return SquareMatrix(n, std::move(entries));
}

SquareMatrix parse_json(std::string_view input) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(input);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, 0, e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows"))
        throw ParseError(0, 0, "expected an object with \"n\" and \"rows\"");
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
        throw ParseError(0, 0, "\"n\" must be a positive integer");
    const std::size_t n = doc["n"].get<std::size_t>();
    const auto& rows = doc["rows"];
    if (!rows.is_array() || rows.size() != n)
        throw DimensionMismatchError("\"rows\" must hold " + std::to_string(n) + " rows");
    std::vector<double> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n)
            throw DimensionMismatchError("every row must hold " + std::to_string(n) +
                                         " numbers");
        for (const auto& v : row) {
            if (!v.is_number())
                throw ParseError(0, 0, "matrix entries must be numbers");
            entries.push_back(v.get<double>());
        }
    }
    return SquareMatrix(n, std::move(entries));
}

MatrixFormat sniff(std::string_view input) {
    // JSON: first non-whitespace char is '{'.
    for (char c : input) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
            continue;
        if (c == '{')
            return MatrixFormat::Json;
        break;
    }
    // CSV: comma in the first non-comment, non-blank line.
    std::size_t i = 0;
    while (i <= input.size()) {
        std::size_t end = input.find('\n', i);
        if (end == std::string_view::npos)
            end = input.size();
        std::string_view raw = input.substr(i, end - i);
        std::size_t first = raw.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && raw[first] != '#')
            return raw.find(',') != std::string_view::npos ? MatrixFormat::Csv
                                                           : MatrixFormat::Text;
        if (end == input.size())
            break;
        i = end + 1;
    }
    return MatrixFormat::Text;
}

} // namespace

SquareMatrix parse_matrix(std::string_view input, MatrixFormat format) {
    if (format == MatrixFormat::Auto)
        format = sniff(input);
    switch (format) {
    case MatrixFormat::Text: return parse_text(input);
    case MatrixFormat::Csv: return parse_csv(input);
    case MatrixFormat::Json: return parse_json(input);
    case MatrixFormat::Auto: break;
    }
    throw ParseError(0, 0, "unknown format");
}

std::string serialize_matrix(const SquareMatrix& a, MatrixFormat format) {
    const std::size_t n = a.size();
    std::ostringstream os;
    switch (format) {
    case MatrixFormat::Auto:
    case MatrixFormat::Text:
        os << n << '\n';
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                os << (j ? " " : "") << format_double(a(i, j));
            os << '\n';
        }
        return os.str();
    case MatrixFormat::Csv:
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                os << (j ? "," : "") << format_double(a(i, j));
            os << '\n';
        }
        return os.str();
    case MatrixFormat::Json: {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < n; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < n; ++j)
                row.push_back(a(i, j));
            rows.push_back(std::move(row));
        }
        nlohmann::json doc{{"n", n}, {"rows", std::move(rows)}};
        return doc.dump() + "\n";
    }
    }
    throw ParseError(0, 0, "unknown format");
}

} // namespace rgcm
