#ifndef HERMITIAN_MULTIPLICITY_HPP
#define HERMITIAN_MULTIPLICITY_HPP

namespace hermitian {

enum class Place { Pinf, P0 };

const char* to_string(Place p);

/// v = v0 (q+1) - v1 with 0 <= v1 <= q.
struct MinusDecomposition {
    int v0 = 0;
    int v1 = 0;
};
MinusDecomposition decompose_minus(int q, int v);

/// v = v0 (q+1) + v1 with 0 <= v1 <= q.
struct PlusDecomposition {
    int v0 = 0;
    int v1 = 0;
};
PlusDecomposition decompose_plus(int q, int v);

/// Parameters of G = K + a P_inf + b P0 with K = (2g-2) P_inf.
struct ShiftedParams {
    int a = 0, b = 0;
    int a0 = 0, a1 = 0, b0 = 0, b1 = 0;
    int s() const { return a0 + b0; }
    int d_star() const { return a + b; }
};
ShiftedParams shifted_params(int q, int a, int b);

// All of the following return the multiplicity at (2g-2+a, b); the oracle
// alone takes unshifted coordinates.

int mult_pinf_closed(int q, int a, int b);
int mult_p0_closed(int q, int a, int b);
inline int mult_closed(int q, int a, int b, Place at) {
    return at == Place::Pinf ? mult_pinf_closed(q, a, b) : mult_p0_closed(q, a, b);
}

/// The d* + correction form of the closed multiplicities.
int mult_thm32(int q, int a, int b, Place at);

/// Count of the integer points (i1, j1) in the two rectangles
///   0 <= i1 <= a1-1, 0 <= j1 <= q-1+s-a1   and   a1 <= i1 <= q, 0 <= j1 <= s-a1-1
/// excluding j1 = 0, i1 < b1 (roles of a1, b1 swapped at P0).
int mult_lattice_count(int q, int a, int b, Place at);

/// Largest q accepted by mult_definition_oracle.
inline constexpr int definition_oracle_max_q = 4;

/// Multiplicity at (A, B) from the defining pair count, restricted to monomials.
/// At P_inf: the number of i in [-B, A+1] with a monomial f of pole order i
/// at P_inf and f in L((A+1) P_inf + B P0), and a monomial g regular outside
/// P_inf with pole order A+1-i <= A+1+B. P0 is the mirror image.
/// Throws std::invalid_argument for q > definition_oracle_max_q.
int mult_definition_oracle(int q, int A, int B, Place at);

}  // namespace hermitian

#endif
