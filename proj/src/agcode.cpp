#include "hermitian/agcode.hpp"

#include <set>
#include <stdexcept>

#include "hermitian/rrspace.hpp"

namespace hermitian {

CodeMatrix build_code(const Curve& curve, int A, int B) {
    const Field& f = curve.field();
    const auto& pts = curve.evaluation_points();
    CodeMatrix code{{A, B}, monomial_basis(curve.q(), A, B), Matrix(0, curve.length())};

    const int n = curve.length();
    std::vector<std::uint8_t> row(n);
    for (Monomial m : code.basis) {
        for (int c = 0; c < n; ++c) row[c] = evaluate_monomial(f, m, pts[c]).index;
        code.generator.append_row(row);
    }
    return code;
}

int code_rank(const Field& field, const Matrix& generator) { return rank(field, generator); }

Matrix dual_basis(const Field& field, const Matrix& generator) { return kernel(field, generator); }

bool is_full_space(const Curve& curve, int A, int B) {
    const int n = curve.length();
    if (A + B >= n + 2 * curve.genus() - 1) return true;
    if (rr_dim(curve.q(), A, B) < n) return false;
    return code_rank(curve.field(), build_code(curve, A, B).generator) == n;
}

std::optional<std::vector<std::uint8_t>> dual_word_on_support(const Field& field, const Matrix& generator,
                                                              std::span<const int> support) {
    if (support.empty()) throw std::invalid_argument("support must be nonempty");
    std::set<int> seen;
    for (int c : support) {
        if (c < 0 || c >= generator.cols()) throw std::out_of_range("support index outside the evaluation set");
        if (!seen.insert(c).second) throw std::invalid_argument("support indices must be distinct");
    }
    const Matrix sub = select_columns(generator, support);
    const Matrix ker = kernel(field, sub);
    if (ker.rows() == 0) return std::nullopt;
    std::vector<std::uint8_t> word(generator.cols(), 0);
    for (std::size_t t = 0; t < support.size(); ++t) word[support[t]] = ker.row(0)[t];
    return word;
}

}  // namespace hermitian
