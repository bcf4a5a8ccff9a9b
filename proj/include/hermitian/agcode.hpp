#ifndef HERMITIAN_AGCODE_HPP
#define HERMITIAN_AGCODE_HPP

#include <optional>
#include <span>
#include <vector>

#include "hermitian/curve.hpp"
#include "hermitian/linalg.hpp"

namespace hermitian {

/// G = A P_inf + B P0.
struct TwoPointDivisor {
    int A = 0;
    int B = 0;
    int degree() const { return A + B; }
    friend auto operator<=>(const TwoPointDivisor&, const TwoPointDivisor&) = default;
};

/// Generator matrix of C(D, G): one row per basis monomial of L(G), one column per point of D.
struct CodeMatrix {
    TwoPointDivisor divisor;
    std::vector<Monomial> basis;
    Matrix generator;
};

CodeMatrix build_code(const Curve& curve, int A, int B);

int code_rank(const Field& field, const Matrix& generator);

/// Basis of the Euclidean dual, (n - rank) rows.
Matrix dual_basis(const Field& field, const Matrix& generator);

/// True when A + B >= n + 2g - 1 or the evaluation map is onto.
bool is_full_space(const Curve& curve, int A, int B);

/// A nonzero word of the dual code supported inside `support` (indices into the
/// evaluation set), or nothing when the restricted columns are independent.
std::optional<std::vector<std::uint8_t>> dual_word_on_support(const Field& field, const Matrix& generator,
                                                              std::span<const int> support);

}  // namespace hermitian

#endif
