#ifndef HERMITIAN_LINALG_HPP
#define HERMITIAN_LINALG_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hermitian/field.hpp"

namespace hermitian {

/// Dense row-major matrix over F_{q^2}; entries are element indices.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Element at(int r, int c) const { return Element{data_[index(r, c)]}; }
    void set(int r, int c, Element v) { data_[index(r, c)] = v.index; }

    std::span<std::uint8_t> row(int r) { return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)}; }
    std::span<const std::uint8_t> row(int r) const {
        return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)};
    }

    void append_row(std::span<const std::uint8_t> values);
    static Matrix identity(int n);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> data_;
};

struct RowEchelon {
    Matrix reduced;           ///< reduced row echelon form, zero rows dropped
    std::vector<int> pivots;  ///< pivot column of each row
    int rank() const { return static_cast<int>(pivots.size()); }
};

RowEchelon rref(const Field& field, const Matrix& m);
int rank(const Field& field, const Matrix& m);

/// Basis of { v : m v^T = 0 }, one vector per non-pivot column.
Matrix kernel(const Field& field, const Matrix& m);

/// Columns of m at the given positions, in the given order.
Matrix select_columns(const Matrix& m, std::span<const int> columns);

/// Sum of a_i b_i.
Element dot(const Field& field, std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Number of nonzero entries.
int weight(std::span<const std::uint8_t> v);

}  // namespace hermitian

#endif
