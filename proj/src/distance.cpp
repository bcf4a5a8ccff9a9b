#include "hermitian/distance.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermitian/curve.hpp"
#include "hermitian/multiplicity.hpp"

namespace hermitian {

const char* to_string(Regime r) {
    switch (r) {
        case Regime::ParkHigh: return "ParkHigh";
        case Regime::ParkLow: return "ParkLow";
        case Regime::OutOfScope: return "OutOfScope";
    }
    return "?";
}

const char* to_string(ParkCase c) {
    switch (c) {
        case ParkCase::None: return "none";
        case ParkCase::Case1: return "1";
        case ParkCase::Case2: return "2";
        case ParkCase::Case2Prime: return "2'";
        case ParkCase::Case3: return "3";
        case ParkCase::Case3Prime: return "3'";
        case ParkCase::Case4: return "4";
        case ParkCase::MaxForm: return "maxForm";
    }
    return "?";
}

namespace {

int degree_k(int q) { return q * q - q - 2; }

}  // namespace

bool park_high_hypotheses(int q, int A, int B) {
    const int K = degree_k(q);
    const int deg = A + B;
    const auto eq = equiv_to_point_multiple(q, A, B);
    return deg > K + q || (deg >= K && !eq.equiv_s_pinf && !eq.equiv_t_p0);
}

namespace {

ParkCase printed_case(int q, const ShiftedParams& p) {
    const int s = p.s(), a1 = p.a1, b1 = p.b1;
    if (a1 <= s && b1 <= s) return ParkCase::Case1;
    if (b1 <= s && s < a1) return ParkCase::Case2;
    if (a1 <= s && s < b1) return ParkCase::Case2Prime;
    if (s < a1 && a1 <= b1 && b1 < q) return ParkCase::Case3;
    if (s < b1 && b1 <= a1 && a1 < q) return ParkCase::Case3Prime;
    if (s < a1 && s < b1 && a1 == q && b1 == q) return ParkCase::Case4;
    return ParkCase::MaxForm;
}

}  // namespace

RegimeTag classify_case(int q, int A, int B) {
    if (park_high_hypotheses(q, A, B)) {
        const ShiftedParams p = shifted_params(q, A - degree_k(q), B);
        if (p.s() > q * q - q - 1)
            return {Regime::OutOfScope, ParkCase::None, "a0+b0 exceeds q^2-q-1"};
        return {Regime::ParkHigh, printed_case(q, p), ""};
    }
    const auto [a0, a1] = decompose_plus(q, A);
    const auto [b0, b1] = decompose_plus(q, B);
    if (a0 + b0 + 2 < 1) return {Regime::OutOfScope, ParkCase::None, "formula value below 1"};
    return {Regime::ParkLow, ParkCase::None, ""};
}

ParkResult park_distance(int q, int A, int B) {
    RegimeTag tag = classify_case(q, A, B);
    if (tag.regime == Regime::OutOfScope) return {std::nullopt, tag};
    if (tag.regime == Regime::ParkLow) {
        const int s = decompose_plus(q, A).v0 + decompose_plus(q, B).v0;
        return {s + 2, tag};
    }
    const ShiftedParams p = shifted_params(q, A - degree_k(q), B);
    const int s = p.s();
    if (p.a1 == q && p.b1 == q && s < q) return {p.d_star() + q - s, tag};
    const int extra = std::max({0, p.a1 - s, p.b1 - s, p.a1 + p.b1 - 2 * s});
    return {p.d_star() + extra, tag};
}

std::optional<int> park_printed_case_value(int q, int A, int B) {
    if (!park_high_hypotheses(q, A, B)) return std::nullopt;
    const ShiftedParams p = shifted_params(q, A - degree_k(q), B);
    const int s = p.s(), d = p.d_star();
    switch (printed_case(q, p)) {
        case ParkCase::Case1: return d;
        case ParkCase::Case2: return d + p.a1 - s;
        case ParkCase::Case2Prime: return d + p.b1 - s;
        case ParkCase::Case3:
        case ParkCase::Case3Prime: return d + p.a1 + p.b1 - 2 * s;
        case ParkCase::Case4: return d + q - s;
        default: return std::nullopt;
    }
}

HKParams hk_params(int q, int m, int n) {
    HKParams h;
    h.m = m;
    h.n = n;
    h.b = ((m % q) + q) % q;
    h.a = (m - h.b) / q;
    h.rho = q * q - h.a;
    h.in_I_tilde = h.b <= h.a || (h.b == q - 1 && h.a >= 0 && h.a <= q - 2) || m == -1;
    h.in_J = h.b + q * q <= h.a || (h.b == q - 1 && q * q - 2 <= h.a);
    return h;
}

std::vector<HKMatch> hk_matches(int q, int m, int n) {
    if (n < 0 || n > q) throw std::invalid_argument("n must lie in [0, q]");
    const HKParams h = hk_params(q, m, n);
    const int a = h.a, b = h.b, rho = h.rho;
    const int q2 = q * q, q3 = q * q * q;
    std::vector<HKMatch> out;
    if (n == 0) {
        if (!(b <= a && a <= std::min(b + q2 - 1, q2 + q - 3))) return out;
        if (a <= b + q2 - q - 1) out.push_back({"n0-i", q3 - 1 - m});
        if (1 <= rho && rho <= q && 0 <= b && b <= q - rho) out.push_back({"n0-ii", rho * q - 1});
        if (q2 - 1 <= a) out.push_back({"n0-iii", q2 + q - a - 2});
    } else if (n <= q - 1) {
        if (m >= 0) {
            if (b <= a && a <= q - (n + 1)) out.push_back({"I", q3 - 1 - m});
            if ((b <= q - 2 && q2 - 1 <= a && a <= b + q2 - 1) || (b == q - 1 && q2 - 1 <= a && a <= q2 + q - (n + 3)))
                out.push_back({"II", q2 + q - a - 2});
            if ((b == 0 && q - n <= a && a <= q2 - (n + 1)) ||
                (1 <= b && b <= q - 2 && std::max(b, q - n) <= a && a <= std::min(b + q2 - (q + 1), q2 - (n + 2))) ||
                (b == q - 1 && q - (n + 1) <= a && a <= q2 - (n + 2)))
                out.push_back({"III", q3 - 1 - (m + n)});
        }
        if (rho >= 1) {
            if (1 <= b && n + 1 <= rho && rho + b <= q) out.push_back({"IV", rho * q - (n + 1)});
            if (rho <= n + 1 && q < rho + b) out.push_back({"V", rho * (q - 1) - (b - 1)});
            if (2 <= rho && rho <= n && rho + b <= q) {
                if (n <= q - 2 || (n == q - 1 && rho + b < q)) out.push_back({"VI-1", rho * (q - 1)});
                if (n == q - 1 && rho + b == q) out.push_back({"VI-2", (rho - 1) * q});
            }
        }
    } else {
        if (!h.in_I_tilde || h.in_J) return out;
        if ((b <= q - 2 && b <= a && a <= b + q2 - q - 1) || (b == q - 1 && -1 <= a && a <= q2 - 3))
            out.push_back({"A", q3 - q - m - 1});
        if (b + q2 - q <= a && a <= q2 - 2) out.push_back({"B", (q2 - a - 1) * q});
        if (b <= q - 2 && q2 - 1 <= a && a <= b + q2 - 1) out.push_back({"C", q2 + q - a - 2});
    }
    return out;
}

std::optional<int> hk_distance(int q, int m, int n) {
    const auto matches = hk_matches(q, m, n);
    if (matches.empty()) return std::nullopt;
    for (const auto& mt : matches)
        if (mt.d != matches.front().d)
            throw std::logic_error("overlapping cases disagree at m = " + std::to_string(m) + ", n = " + std::to_string(n));
    return matches.front().d;
}

}  // namespace hermitian
