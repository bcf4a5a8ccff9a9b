#include "hermitian/curve.hpp"

#include <stdexcept>

namespace hermitian {

namespace {

long long floor_mod(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

void check_monomial(int q, Monomial m) {
    if (m.i < 0 || m.i > q) throw std::out_of_range("monomial x-exponent must lie in [0, q]");
}

}  // namespace

int valuation_pinf(int q, Monomial m) {
    check_monomial(q, m);
    return -(q * m.i + (q + 1) * m.j);
}

int valuation_p0(int q, Monomial m) {
    check_monomial(q, m);
    return m.i + (q + 1) * m.j;
}

PointMultipleEquivalence equiv_to_point_multiple(int q, long long A, long long B) {
    return {floor_mod(B, q + 1) == 0, floor_mod(A, q + 1) == 0};
}

Curve::Curve(int q) : field_(Field::make(q)) {
    const int size = field_.size();
    d_index_.assign(static_cast<std::size_t>(size) * size, -1);
    for (Element x : field_.elements()) {
        const Element rhs = field_.pow(x, q + 1);
        for (Element y : field_.elements()) {
            if (field_.trace_to_Fq(y) != rhs) continue;
            const Point p = Point::affine(x, y);
            points_.push_back(p);
            if (!p.is_origin()) {
                d_index_[x.index * size + y.index] = static_cast<int>(d_.size());
                d_.push_back(p);
            }
        }
    }
    points_.push_back(Point::at_infinity());
}

bool Curve::on_curve(Element x, Element y) const {
    return field_.trace_to_Fq(y) == field_.pow(x, q() + 1);
}

int Curve::evaluation_index(const Point& p) const {
    if (p.infinity) return -1;
    return d_index_[p.x.index * field_.size() + p.y.index];
}

}  // namespace hermitian
