#ifndef HERMITIAN_RRSPACE_HPP
#define HERMITIAN_RRSPACE_HPP

#include <vector>

#include "hermitian/curve.hpp"

namespace hermitian {

/// Monomial basis of L(A P_inf + B P0):
/// { x^i y^j : 0 <= i <= q, q i + (q+1) j <= A, i + (q+1) j >= -B },
/// strictly increasing in pole order at P_inf.
std::vector<Monomial> monomial_basis(int q, int A, int B);

/// l(A P_inf + B P0).
int rr_dim(int q, int A, int B);

/// x^i y^j at a point of the evaluation set. Throws std::invalid_argument at
/// P_inf or when y = 0 (which on this curve means P0).
Element evaluate_monomial(const Field& field, Monomial m, const Point& p);

}  // namespace hermitian

#endif
