#include "hermitian/multiplicity.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermitian/curve.hpp"

namespace hermitian {

namespace {

int floor_mod(int v, int m) {
    int r = v % m;
    return r < 0 ? r + m : r;
}

int floor_div(int v, int m) { return (v - floor_mod(v, m)) / m; }

// Unique monomial with the given pole order at P_inf.
Monomial monomial_with_pinf_pole(int q, int pole) {
    const int i = floor_mod(-pole, q + 1);
    return {i, (pole - q * i) / (q + 1)};
}

// Unique monomial with the given valuation at P0.
Monomial monomial_with_p0_valuation(int q, int v) {
    const int i = floor_mod(v, q + 1);
    return {i, (v - i) / (q + 1)};
}

int closed_form(int q, int s, int own1, int other1) {
    if (own1 < s) return (s - own1) * (q + 1) - other1 + own1 * q;
    if (own1 <= s + q - 1) return own1 * (q + s - own1) - std::min(own1, other1);
    return 0;
}

}  // namespace

const char* to_string(Place p) { return p == Place::Pinf ? "pinf" : "p0"; }

MinusDecomposition decompose_minus(int q, int v) {
    const int v1 = floor_mod(-v, q + 1);
    return {(v + v1) / (q + 1), v1};
}

PlusDecomposition decompose_plus(int q, int v) { return {floor_div(v, q + 1), floor_mod(v, q + 1)}; }

ShiftedParams shifted_params(int q, int a, int b) {
    const auto [a0, a1] = decompose_minus(q, a);
    const auto [b0, b1] = decompose_minus(q, b);
    return {a, b, a0, a1, b0, b1};
}

int mult_pinf_closed(int q, int a, int b) {
    const ShiftedParams p = shifted_params(q, a, b);
    return closed_form(q, p.s(), p.a1, p.b1);
}

int mult_p0_closed(int q, int a, int b) {
    const ShiftedParams p = shifted_params(q, a, b);
    return closed_form(q, p.s(), p.b1, p.a1);
}

int mult_thm32(int q, int a, int b, Place at) {
    const ShiftedParams p = shifted_params(q, a, b);
    const int s = p.s();
    const int own1 = at == Place::Pinf ? p.a1 : p.b1;
    const int other1 = at == Place::Pinf ? p.b1 : p.a1;
    if (own1 < s) return p.d_star();
    if (own1 <= s + q - 1) return p.d_star() + (own1 - s) * (q + 1 - own1) + std::max(0, other1 - own1);
    return 0;
}

int mult_lattice_count(int q, int a, int b, Place at) {
    const ShiftedParams p = shifted_params(q, a, b);
    const int s = p.s();
    const int own1 = at == Place::Pinf ? p.a1 : p.b1;
    const int other1 = at == Place::Pinf ? p.b1 : p.a1;
    int count = 0;
    for (int i1 = 0; i1 <= own1 - 1; ++i1)
        for (int j1 = 0; j1 <= q - 1 + s - own1; ++j1)
            if (j1 > 0 || i1 >= other1) ++count;
    for (int i1 = own1; i1 <= q; ++i1)
        for (int j1 = 0; j1 <= s - own1 - 1; ++j1)
            if (j1 > 0 || i1 >= other1) ++count;
    return count;
}

int mult_definition_oracle(int q, int A, int B, Place at) {
    if (q > definition_oracle_max_q) throw std::invalid_argument("definition oracle is limited to small q");
    int count = 0;
    if (at == Place::Pinf) {
        for (int i = -B; i <= A + 1; ++i) {
            const Monomial f = monomial_with_pinf_pole(q, i);
            if (valuation_p0(q, f) < -B) continue;
            const int g_pole = A + 1 - i;
            if (g_pole > A + 1 + B) continue;
            const Monomial g = monomial_with_pinf_pole(q, g_pole);
            if (valuation_p0(q, g) < 0) continue;
            // f g must lie in L((A+1) P_inf + B P0) \ L(A P_inf + B P0).
            if (valuation_pinf(q, f) + valuation_pinf(q, g) != -(A + 1)) continue;
            if (valuation_p0(q, f) + valuation_p0(q, g) < -B) continue;
            ++count;
        }
    } else {
        for (int j = -A; j <= B + 1; ++j) {
            const Monomial f = monomial_with_p0_valuation(q, -j);
            if (valuation_pinf(q, f) < -A) continue;
            const int g_pole = B + 1 - j;
            if (g_pole > A + B + 1) continue;
            const Monomial g = monomial_with_p0_valuation(q, -g_pole);
            if (valuation_pinf(q, g) < 0) continue;
            if (valuation_p0(q, f) + valuation_p0(q, g) != -(B + 1)) continue;
            if (valuation_pinf(q, f) + valuation_pinf(q, g) < -A) continue;
            ++count;
        }
    }
    return count;
}

}  // namespace hermitian
