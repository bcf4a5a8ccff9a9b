#include "hermitian/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermitian {

void Matrix::append_row(std::span<const std::uint8_t> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(values.size());
    if (static_cast<int>(values.size()) != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Field::one());
    return m;
}

RowEchelon rref(const Field& field, const Matrix& m) {
    Matrix a = m;
    const int rows = a.rows();
    const int cols = a.cols();
    const int size = field.size();
    const std::uint8_t* add = field.add_table();
    const std::uint8_t* mul = field.mul_table();
    const std::uint8_t* neg = field.neg_table();
    const std::uint8_t* inv = field.inv_table();

    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int t = r; t < rows; ++t)
            if (a.row(t)[c] != 0) {
                piv = t;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
        auto pr = a.row(r);
        const std::uint8_t s = inv[pr[c]];
        for (int t = c; t < cols; ++t) pr[t] = mul[s * size + pr[t]];
        for (int t = 0; t < rows; ++t) {
            if (t == r) continue;
            auto tr = a.row(t);
            if (tr[c] == 0) continue;
            const std::uint8_t f = neg[tr[c]];
            for (int u = c; u < cols; ++u) tr[u] = add[tr[u] * size + mul[f * size + pr[u]]];
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(0, cols);
    for (int t = 0; t < r; ++t) reduced.append_row(a.row(t));
    return {std::move(reduced), std::move(pivots)};
}

int rank(const Field& field, const Matrix& m) { return rref(field, m).rank(); }

Matrix kernel(const Field& field, const Matrix& m) {
    const RowEchelon e = rref(field, m);
    const int n = m.cols();
    std::vector<char> is_pivot(n, 0);
    for (int c : e.pivots) is_pivot[c] = 1;
    Matrix out(0, n);
    std::vector<std::uint8_t> v(n);
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = Field::one().index;
        for (int r = 0; r < e.rank(); ++r) v[e.pivots[r]] = field.neg(e.reduced.at(r, free)).index;
        out.append_row(v);
    }
    return out;
}

Matrix select_columns(const Matrix& m, std::span<const int> columns) {
    Matrix out(m.rows(), static_cast<int>(columns.size()));
    for (int r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < columns.size(); ++c) out.set(r, static_cast<int>(c), m.at(r, columns[c]));
    return out;
}

Element dot(const Field& field, std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot product length mismatch");
    Element acc = Field::zero();
    for (std::size_t t = 0; t < a.size(); ++t) acc = field.add(acc, field.mul(Element{a[t]}, Element{b[t]}));
    return acc;
}

int weight(std::span<const std::uint8_t> v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; }));
}

}  // namespace hermitian
