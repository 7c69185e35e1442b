#pragma once

#include "liecon/scalar.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace liecon {

using RationalVector = std::vector<Scalar>;

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Rows must all have the same length. An empty list gives a 0x0 matrix.
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
    /// Matrix whose columns are the given vectors; `height` fixes the row count when `columns` is empty.
    static RationalMatrix from_columns(std::span<const RationalVector> columns, std::size_t height);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] RationalVector row(std::size_t r) const;
    [[nodiscard]] RationalVector column(std::size_t c) const;
    [[nodiscard]] bool row_is_zero(std::size_t r) const;

    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

RationalVector operator*(const RationalMatrix& m, const RationalVector& v);

struct RrefResult {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

/// Exact reduced row echelon form (Gauss-Jordan). Among candidate pivots the
/// entry with the smallest numerator+denominator bit size is taken.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column in increasing order.
/// Each vector is a primitive integer vector whose free coordinate is positive.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Coefficients c with sum_i c_i basis[i] == v, or nullopt if v is outside the span.
/// Free coefficients are set to zero. Throws std::invalid_argument on length mismatch.
std::optional<RationalVector> in_span(std::span<const RationalVector> basis, const RationalVector& v);

/// Nonzero rows of the RREF of the matrix with the given rows: a canonical basis of their span.
std::vector<RationalVector> row_space_basis(std::span<const RationalVector> vectors, std::size_t length);

/// Scales v to a primitive integer vector (content 1) with its first nonzero entry positive.
RationalVector primitive_integer(const RationalVector& v);

bool is_zero(const RationalVector& v);

nlohmann::json to_json(const RationalMatrix& m);

}  // namespace liecon
