#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "torsion/rational.hpp"

namespace torsion {

/// Dense row-major matrix over Rational. Columns of a boundary matrix are the
/// images of the preferred basis of the source module.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    /// Row-major nested initializer, used mostly by tests.
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors, each of length `rows`.
    static RationalMatrix from_columns(std::size_t rows, std::span<const std::vector<Rational>> columns);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::vector<Rational> column(std::size_t c) const;
    [[nodiscard]] RationalMatrix select_columns(std::span<const std::size_t> indices) const;
    [[nodiscard]] RationalMatrix transpose() const;
    /// Horizontal concatenation; row counts must agree.
    [[nodiscard]] RationalMatrix hcat(const RationalMatrix& right) const;
    /// Kronecker product with the k×k identity: each entry becomes entry·I_k.
    [[nodiscard]] RationalMatrix kron_identity(std::size_t k) const;

    [[nodiscard]] std::vector<Rational> apply(std::span<const Rational> v) const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace torsion
