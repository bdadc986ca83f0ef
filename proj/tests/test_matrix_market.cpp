#include <doctest.h>

#include <fstream>
#include <sstream>

#include "altsplit/matrix_market.hpp"
#include "fixtures.hpp"

using namespace altsplit;

namespace {

Matrix parse(const std::string& text) {
    std::istringstream in(text);
    return read_matrix_market(in);
}

std::size_t error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_SUITE("matrix_market") {

TEST_CASE("round trip preserves every bit") {
    Matrix m(2, 3);
    m << 0.1, -1.0 / 3, 1e-300, 6.02e23, -0.0, 2.0 / 7;
    std::ostringstream out;
    write_matrix_market(out, m);
    const Matrix back = parse(out.str());
    CHECK(back.rows() == 2);
    CHECK(back.cols() == 3);
    for (Index i = 0; i < m.size(); ++i) CHECK(back.data()[i] == m.data()[i]);
}

TEST_CASE("array format is column major") {
    const Matrix m = parse("%%MatrixMarket matrix array real general\n% comment\n2 2\n1\n2\n3\n4\n");
    CHECK(m(1, 0) == 2.0);
    CHECK(m(0, 1) == 3.0);
}

TEST_CASE("coordinate symmetric input is expanded") {
    const Matrix m = parse("%%MatrixMarket matrix coordinate integer symmetric\n3 3 3\n1 1 4\n2 1 -1\n3 3 2\n");
    Matrix want = Matrix::Zero(3, 3);
    want << 4, -1, 0, -1, 0, 0, 0, 0, 2;
    CHECK(max_abs_diff(m, want) == 0.0);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(error_line("") == 1);
    CHECK(error_line("%%MatrixMarket vector array real general\n1 1\n1\n") == 1);
    CHECK(error_line("%%MatrixMarket matrix array real general\n2 2\n1\n2\nx\n4\n") == 5);
    CHECK(error_line("%%MatrixMarket matrix array real general\n1 1\n1\n2\n") == 4);
    CHECK(error_line("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1.0\n") == 3);
    CHECK(error_line("%%MatrixMarket matrix array real general\n2 2\n1\n2\n") == 5);
    CHECK(error_line("%%MatrixMarket matrix array real general\n0 2\n") == 2);
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix array complex general\n1 1\n1 0\n"), UnsupportedField);
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate pattern general\n1 1 1\n1 1\n"), UnsupportedField);
}

TEST_CASE("files and vectors") {
    fixtures::TempDir dir;
    const std::string path = dir.file("a.mtx");
    write_matrix_market(path, fixtures::ex_a());
    CHECK(max_abs_diff(read_matrix_market(path), fixtures::ex_a()) == 0.0);
    CHECK_THROWS_AS(read_vector_market(path), DimensionMismatch);
    write_matrix_market(dir.file("v.mtx"), Matrix(Vector::LinSpaced(4, 1, 4).transpose()));
    CHECK(read_vector_market(dir.file("v.mtx"))(3) == 4.0);
    CHECK_THROWS_AS(read_matrix_market(dir.file("missing.mtx")), IoError);
}

}
