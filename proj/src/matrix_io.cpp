#include "burst/matrix_io.hpp"

#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "burst/errors.hpp"

namespace burst {

namespace {

struct Token {
    std::uint64_t value;
    std::size_t column; // 1-based
};

constexpr std::size_t kMaxDigits = 9;

// Splits one line into exactly `expected` decimal tokens separated by single
// spaces.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no, std::size_t expected) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    if (line.empty()) throw ParseError(line_no, 1, "empty line, expected " + std::to_string(expected) + " entries");
    while (i < line.size()) {
        const std::size_t begin = i;
        if (line[i] == '\r') throw ParseError(line_no, i + 1, "carriage return; lines must end in LF");
        if (line[i] == ' ' || line[i] == '\t')
            throw ParseError(line_no, i + 1, i + 1 == line.size() ? "trailing whitespace" : "unexpected whitespace");
        std::uint64_t value = 0;
        while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
            if (i - begin == kMaxDigits) throw ParseError(line_no, begin + 1, "number too large");
            value = value * 10 + static_cast<std::uint64_t>(line[i] - '0');
            ++i;
        }
        if (i == begin) throw ParseError(line_no, i + 1, std::string("unexpected character '") + line[i] + "'");
        if (tokens.size() == expected)
            throw ParseError(line_no, begin + 1, "too many entries, expected " + std::to_string(expected));
        tokens.push_back({value, begin + 1});
        if (i < line.size()) {
            if (line[i] == '\r') throw ParseError(line_no, i + 1, "carriage return; lines must end in LF");
            if (line[i] != ' ') throw ParseError(line_no, i + 1, std::string("unexpected character '") + line[i] + "'");
            if (i + 1 == line.size()) throw ParseError(line_no, i + 1, "trailing whitespace");
            ++i;
        }
    }
    if (tokens.size() < expected)
        throw ParseError(line_no, line.size() + 1,
                         "found " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(expected));
    return tokens;
}

} // namespace

std::string format_matrix(const Matrix& m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

void write_matrix(std::ostream& os, const Matrix& m) {
    os << m.field().modulus() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m.at(r, c);
        }
        os << '\n';
    }
}

Matrix parse_matrix(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    if (lines.empty()) throw ParseError(1, 1, "missing header \"p k n\"");

    const auto header = tokenize(lines[0], 1, 3);
    if (header[0].value >= PrimeField::kMaxModulus || !is_prime(header[0].value))
        throw ParseError(1, header[0].column, "modulus " + std::to_string(header[0].value) +
                                                  " is not a prime below 2^16");
    if (header[2].value == 0) throw ParseError(1, header[2].column, "matrix needs at least one column");
    const PrimeField field(static_cast<std::uint32_t>(header[0].value));
    const std::size_t k = header[1].value, n = header[2].value;

    Matrix m(field, k, n);
    for (std::size_t r = 0; r < k; ++r) {
        const std::size_t line_no = r + 2;
        if (r + 1 >= lines.size())
            throw ParseError(line_no, 1, "missing row " + std::to_string(r + 1) + " of " + std::to_string(k));
        const auto row = tokenize(lines[r + 1], line_no, n);
        for (std::size_t c = 0; c < n; ++c) {
            if (row[c].value >= field.modulus())
                throw ParseError(line_no, row[c].column, "entry " + std::to_string(row[c].value) +
                                                             " out of range for p = " +
                                                             std::to_string(field.modulus()));
            m.set(r, c, static_cast<std::int64_t>(row[c].value));
        }
    }
    if (lines.size() > k + 1) throw ParseError(k + 2, 1, "unexpected content after the last row");
    return m;
}

Matrix read_matrix(std::istream& is) {
    const std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
    return parse_matrix(text);
}

Matrix load_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    return read_matrix(in);
}

void save_matrix(const std::filesystem::path& path, const Matrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    write_matrix(out, m);
}

} // namespace burst
