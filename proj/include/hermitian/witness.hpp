#ifndef HERMITIAN_WITNESS_HPP
#define HERMITIAN_WITNESS_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermitian/curve.hpp"

namespace hermitian {

/// sigma(x, y) = (x/y, 1/y). Requires an affine point with y != 0.
Point dihedral_sigma(const Field& field, const Point& p);
/// rho_a(x, y) = (a x, a^2 y) for a in F_q^*.
Point dihedral_rho(const Field& field, Element a, const Point& p);

/// Orbit of P under the group generated by sigma and every rho_a, sorted.
/// Throws std::invalid_argument unless P is affine with x != 0 and y not in F_q.
std::vector<Point> dihedral_orbit(const Curve& curve, const Point& p);

/// Number of affine points with x != 0 and y not in F_q.
int conic_eligible_point_count(const Curve& curve);

/// x^2 - alpha y whose zeros are P0 (twice) and 2(q-1) distinct points.
struct ConicFunction {
    Element alpha;
    std::vector<Point> zero_points;  ///< the 2(q-1) zeros other than P0, sorted
};

/// All conics of that shape, by increasing alpha index.
std::vector<ConicFunction> enumerate_conics(const Curve& curve);

enum class LineKind {
    ThroughP0,    ///< y - beta x, beta != 0, with q distinct zeros besides P0
    ThroughPinf,  ///< x - gamma, q distinct affine zeros
    Horizontal,   ///< y - delta with q + 1 distinct zeros
};

struct LineFunction {
    LineKind kind;
    Element parameter;
    std::vector<Point> zero_points;  ///< distinct affine zeros (P0 excluded for ThroughP0), sorted
};

std::vector<LineFunction> enumerate_lines(const Curve& curve, LineKind kind);

class WitnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct WitnessSupport {
    int d = 0;
    std::vector<int> support;  ///< indices into the evaluation set, sorted
    std::string recipe;
};

/// A set of exactly d(C(A,B)^perp) evaluation points on which the dual code
/// has a nonzero word, built from zero sets of products of conics and lines.
/// Throws WitnessError when (A, B) is out of scope or no choice of
/// parameters gives pairwise distinct zeros.
WitnessSupport build_witness_support(const Curve& curve, int A, int B);

struct Certificate {
    bool certified = false;
    int word_weight = 0;
    std::vector<std::uint8_t> word;
};

/// Rank-deficiency check of the generator columns at `support`.
Certificate certify_support(const Curve& curve, int A, int B, std::span<const int> support);

}  // namespace hermitian

#endif
