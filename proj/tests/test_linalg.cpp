#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dslice/linalg.hpp"
#include "oracles.hpp"

using namespace dslice;
using linalg::smith_normal_form;

namespace {

void check_snf(const IntMatrix& m) {
    linalg::SnfResult s = smith_normal_form(m);
    CHECK(s.U * m * s.W == s.D);
    CHECK(abs(linalg::det(s.U)) == 1);
    CHECK(abs(linalg::det(s.W)) == 1);
    auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        CHECK(d[i] >= 0);
        if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    }
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j) CHECK(s.D(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
    IntMatrix m = IntMatrix::from_rows({{0, 3}, {3, 0}});
    linalg::SnfResult s = smith_normal_form(m);
    CHECK(s.D(0, 0) == 3);
    CHECK(s.D(1, 1) == 3);
    check_snf(m);

    linalg::SnfResult id = smith_normal_form(IntMatrix::identity(2));
    CHECK(id.D(0, 0) == 1);
    CHECK(id.D(1, 1) == 1);

    IntMatrix diag = IntMatrix::from_rows({{2, 0}, {0, 4}});
    linalg::SnfResult ds = smith_normal_form(diag);
    CHECK(ds.D(0, 0) == 2);
    CHECK(ds.D(1, 1) == 4);
}

TEST_CASE("smith normal form enforces the divisibility chain") {
    IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
    linalg::SnfResult s = smith_normal_form(m);
    CHECK(s.diagonal() == std::vector<Int>{Int(1), Int(6)});
    check_snf(m);
}

TEST_CASE("determinant matches pinned values and the cofactor oracle") {
    CHECK(linalg::det(IntMatrix::from_rows({{0, 3}, {3, 0}})) == -9);
    CHECK(linalg::det(IntMatrix()) == 1);

    IntMatrix l3 = IntMatrix::from_rows(
        {{-2, 1, -1, 0}, {1, -2, 1, -1}, {-1, 1, -2, 1}, {0, -1, 1, -2}});
    CHECK(oracles::cofactor_det(l3) == 4);
    CHECK(linalg::det(l3) == 4);

    std::mt19937_64 rng(1234);
    for (int i = 0; i < 25; ++i) {
        IntMatrix m = oracles::random_matrix(rng, 4, 4, 4);
        CHECK(linalg::det(m) == oracles::cofactor_det(m));
    }
    CHECK_THROWS_AS(linalg::det(IntMatrix(2, 3)), NonSquareMatrix);
}

TEST_CASE("rational inverse") {
    RatMatrix inv = linalg::rational_inverse(IntMatrix::from_rows({{0, 3}, {3, 0}}));
    CHECK(inv(0, 1) == Rat(1, 3));
    CHECK(inv(1, 0) == Rat(1, 3));
    CHECK(inv(0, 0) == 0);

    CHECK(linalg::rational_inverse(IntMatrix::identity(3)) == RatMatrix::identity(3));

    RatMatrix inv2 = linalg::rational_inverse(IntMatrix::from_rows({{2, 1}, {1, 2}}));
    CHECK(inv2(0, 0) == Rat(2, 3));
    CHECK(inv2(0, 1) == Rat(-1, 3));
    CHECK(inv2(1, 1) == Rat(2, 3));

    CHECK_THROWS_AS(linalg::rational_inverse(IntMatrix::from_rows({{1, 1}, {1, 1}})),
                    SingularMatrix);
}

TEST_CASE("integer solve") {
    auto x = linalg::solve_integer(IntMatrix::from_rows({{2, 0}, {0, 3}}), {Int(4), Int(3)});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<Int>{Int(2), Int(1)});

    CHECK_FALSE(
        linalg::solve_integer(IntMatrix::from_rows({{2, 0}, {0, 3}}), {Int(1), Int(0)}).has_value());

    auto y = linalg::solve_integer(IntMatrix::from_rows({{1, 1}, {0, 2}}), {Int(3), Int(4)});
    REQUIRE(y.has_value());
    CHECK(*y == std::vector<Int>{Int(1), Int(2)});

    CHECK_THROWS_AS(linalg::solve_integer(IntMatrix::from_rows({{1, 1}}), {Int(1), Int(2)}),
                    DimensionMismatch);
}

TEST_CASE("snf and inverse properties on random matrices") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 60; ++rep) {
        std::size_t r = 1 + rep % 5, c = 1 + (rep / 3) % 5;
        IntMatrix m = oracles::random_matrix(rng, r, c, 4);
        check_snf(m);
        if (r == c) {
            Int d = linalg::det(m);
            Int prodd(1);
            for (const Int& x : smith_normal_form(m).diagonal()) prodd *= x;
            CHECK(abs(d) == prodd);
            if (d != 0) {
                RatMatrix inv = linalg::rational_inverse(m);
                CHECK(inv * RatMatrix::from(m) == RatMatrix::identity(r));
            }
        }
    }
}

TEST_CASE("hermite row basis spans the same lattice") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        IntMatrix a = oracles::random_matrix(rng, 4, 3, 3);
        IntMatrix h = linalg::hermite_row_basis(a);
        // every original row is an integer combination of the basis rows
        for (std::size_t i = 0; i < a.rows(); ++i) {
            std::vector<Int> row(a.cols());
            for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j);
            CHECK(linalg::solve_integer(h.transpose(), row).has_value());
        }
        // and conversely
        for (std::size_t i = 0; i < h.rows(); ++i) {
            std::vector<Int> row(h.cols());
            for (std::size_t j = 0; j < h.cols(); ++j) row[j] = h(i, j);
            CHECK(linalg::solve_integer(a.transpose(), row).has_value());
        }
        CHECK(linalg::hermite_row_basis(h) == h);
    }
}
