#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dslice/errors.hpp"
#include "dslice/types.hpp"

namespace dslice {

/// Dense matrix of arbitrary-precision integers, row major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;

    std::vector<Int> apply(const std::vector<Int>& v) const;  // M * v

    void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;

    bool is_symmetric() const;
    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

/// Dense matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix from(const IntMatrix& m);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator-() const;

    bool is_integral() const;
    bool is_symmetric() const;
    IntMatrix to_int() const;           // throws InternalCheck if not integral
    RatMatrix mod1() const;             // entrywise frac_part
    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

}  // namespace dslice
