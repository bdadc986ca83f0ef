#include "altsplit/matrix_market.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace altsplit {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

bool blank_or_comment(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '%';
}

// Reads the next data line, skipping comments and blank lines.
bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (!blank_or_comment(line)) return true;
    }
    return false;
}

double parse_value(const std::string& token, std::size_t line_no) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw ParseError("malformed number '" + token + "'", line_no);
    return v;
}

long parse_index(const std::string& token, std::size_t line_no) {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("malformed integer '" + token + "'", line_no);
    }
    return v;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

}  // namespace

Matrix read_matrix_market(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty input", 1);
    ++line_no;

    const auto header = tokens(line);
    if (header.size() != 5 || lower(header[0]) != "%%matrixmarket" || lower(header[1]) != "matrix") {
        throw ParseError("expected '%%MatrixMarket matrix <format> <field> <symmetry>'", line_no);
    }
    const std::string format = lower(header[2]);
    const std::string field = lower(header[3]);
    const std::string symmetry = lower(header[4]);
    if (format != "array" && format != "coordinate") throw ParseError("unknown format '" + header[2] + "'", line_no);
    if (field == "complex" || field == "pattern") throw UnsupportedField("field '" + field + "' is not supported");
    if (field != "real" && field != "integer" && field != "double") {
        throw ParseError("unknown field '" + header[3] + "'", line_no);
    }
    if (symmetry != "general" && symmetry != "symmetric") {
        throw UnsupportedField("symmetry '" + symmetry + "' is not supported");
    }
    const bool symmetric = symmetry == "symmetric";

    if (!next_data_line(in, line, line_no)) throw ParseError("missing size line", line_no + 1);
    const auto size = tokens(line);
    if (size.size() != (format == "array" ? 2u : 3u)) throw ParseError("malformed size line", line_no);
    const long rows = parse_index(size[0], line_no);
    const long cols = parse_index(size[1], line_no);
    if (rows <= 0 || cols <= 0) throw ParseError("dimensions must be positive", line_no);
    if (symmetric && rows != cols) throw ParseError("symmetric matrix must be square", line_no);

    Matrix m = Matrix::Zero(rows, cols);
    if (format == "array") {
        // column-major; symmetric files list the lower triangle only
        for (long j = 0; j < cols; ++j) {
            for (long i = symmetric ? j : 0; i < rows; ++i) {
                if (!next_data_line(in, line, line_no)) throw ParseError("too few entries", line_no + 1);
                const auto t = tokens(line);
                if (t.size() != 1) throw ParseError("expected one value per line", line_no);
                m(i, j) = parse_value(t[0], line_no);
                if (symmetric) m(j, i) = m(i, j);
            }
        }
    } else {
        const long nnz = parse_index(size[2], line_no);
        if (nnz < 0) throw ParseError("negative entry count", line_no);
        for (long k = 0; k < nnz; ++k) {
            if (!next_data_line(in, line, line_no)) throw ParseError("too few entries", line_no + 1);
            const auto t = tokens(line);
            if (t.size() != 3) throw ParseError("expected 'row col value'", line_no);
            const long i = parse_index(t[0], line_no);
            const long j = parse_index(t[1], line_no);
            if (i < 1 || i > rows || j < 1 || j > cols) throw ParseError("entry index out of range", line_no);
            const double v = parse_value(t[2], line_no);
            m(i - 1, j - 1) = v;
            if (symmetric) m(j - 1, i - 1) = v;
        }
    }
    if (next_data_line(in, line, line_no)) throw ParseError("unexpected trailing data", line_no);
    return m;
}

Matrix read_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return read_matrix_market(in);
}

Vector read_vector_market(const std::string& path) {
    const Matrix m = read_matrix_market(path);
    if (m.cols() == 1) return m.col(0);
    if (m.rows() == 1) return m.row(0).transpose();
    throw DimensionMismatch("'" + path + "' is not a vector");
}

void write_matrix_market(std::ostream& out, const Matrix& m) {
    out << "%%MatrixMarket matrix array real general\n";
    out << m.rows() << ' ' << m.cols() << '\n';
    std::array<char, 32> buf{};
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = 0; i < m.rows(); ++i) {
            const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), m(i, j));
            out.write(buf.data(), ptr - buf.data());
            out << '\n';
        }
    }
}

void write_matrix_market(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    write_matrix_market(out, m);
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace altsplit
