#ifndef HERMITIAN_CURVE_HPP
#define HERMITIAN_CURVE_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "hermitian/field.hpp"

namespace hermitian {

/// A rational point of the Hermitian curve: affine (x, y) or the point at infinity.
struct Point {
    bool infinity = false;
    Element x;
    Element y;

    static constexpr Point affine(Element x, Element y) { return Point{false, x, y}; }
    static constexpr Point at_infinity() { return Point{true, {}, {}}; }
    static constexpr Point origin() { return Point{false, {}, {}}; }

    bool is_origin() const { return !infinity && x.is_zero() && y.is_zero(); }
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// The monomial x^i y^j with 0 <= i <= q.
struct Monomial {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// v_{P_inf}(x^i y^j) = -(q i + (q+1) j). Throws std::out_of_range unless 0 <= i <= q.
int valuation_pinf(int q, Monomial m);
/// v_{P0}(x^i y^j) = i + (q+1) j.
int valuation_p0(int q, Monomial m);
/// Pole order at P_inf, i.e. -valuation_pinf.
inline int pole_order_pinf(int q, Monomial m) { return -valuation_pinf(q, m); }

struct PointMultipleEquivalence {
    bool equiv_s_pinf = false;  ///< A P_inf + B P0 ~ s P_inf for some s
    bool equiv_t_p0 = false;    ///< A P_inf + B P0 ~ t P0 for some t
};

/// The class of P0 - P_inf has order q + 1, so these reduce to divisibility.
PointMultipleEquivalence equiv_to_point_multiple(int q, long long A, long long B);

/// y^q + y = x^{q+1} over F_{q^2}.
class Curve {
public:
    explicit Curve(int q);

    const Field& field() const { return field_; }
    int q() const { return field_.q(); }
    int genus() const { return q() * (q() - 1) / 2; }
    /// deg K for K = (2g-2) P_inf.
    int canonical_degree() const { return 2 * genus() - 2; }
    /// Length of the codes, q^3 - 1.
    int length() const { return static_cast<int>(d_.size()); }

    bool on_curve(Element x, Element y) const;

    /// All q^3 + 1 rational points: affine points sorted by (x, y) index, then infinity.
    const std::vector<Point>& points() const { return points_; }
    /// Evaluation set: points() without P0 and P_inf, same relative order.
    const std::vector<Point>& evaluation_points() const { return d_; }
    /// Position of an affine point in evaluation_points(), or -1.
    int evaluation_index(const Point& p) const;

private:
    Field field_;
    std::vector<Point> points_;
    std::vector<Point> d_;
    std::vector<int> d_index_;  // x.index * size + y.index -> position in d_
};

}  // namespace hermitian

#endif
