#include "hermitian/rrspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermitian {

namespace {

int floor_div(int a, int b) {
    int d = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? d - 1 : d;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

}  // namespace

std::vector<Monomial> monomial_basis(int q, int A, int B) {
    std::vector<Monomial> out;
    for (int i = 0; i <= q; ++i) {
        const int j_lo = ceil_div(-B - i, q + 1);
        const int j_hi = floor_div(A - q * i, q + 1);
        for (int j = j_lo; j <= j_hi; ++j) out.push_back({i, j});
    }
    std::sort(out.begin(), out.end(), [q](Monomial l, Monomial r) {
        return pole_order_pinf(q, l) < pole_order_pinf(q, r);
    });
    return out;
}

int rr_dim(int q, int A, int B) {
    int count = 0;
    for (int i = 0; i <= q; ++i) {
        const int span = floor_div(A - q * i, q + 1) - ceil_div(-B - i, q + 1) + 1;
        if (span > 0) count += span;
    }
    return count;
}

Element evaluate_monomial(const Field& field, Monomial m, const Point& p) {
    if (p.infinity) throw std::invalid_argument("cannot evaluate at the point at infinity");
    if (p.y.is_zero()) throw std::invalid_argument("cannot evaluate at a point with y = 0");
    return field.mul(field.pow(p.x, m.i), field.pow(p.y, m.j));
}

}  // namespace hermitian
