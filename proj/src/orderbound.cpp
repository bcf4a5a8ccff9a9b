#include "hermitian/orderbound.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermitian/agcode.hpp"
#include "hermitian/distance.hpp"
#include "hermitian/rrspace.hpp"

namespace hermitian {

int ExtendedInt::value() const {
    if (infinite_) throw std::logic_error("value() of infinity");
    return value_;
}

std::string ExtendedInt::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

TerminalMode default_terminal_mode(int q) { return q <= 4 ? TerminalMode::Rank : TerminalMode::Degree; }

OrderBound::OrderBound(const Curve& curve, TerminalMode mode)
    : curve_(curve), mode_(mode), top_(curve.length() + 2 * curve.genus() - 1) {}

bool OrderBound::is_terminal(int A, int B) {
    if (A + B >= top_) return true;
    if (mode_ == TerminalMode::Degree) return false;
    const auto key = std::make_pair(A, B);
    auto it = terminal_.find(key);
    if (it != terminal_.end()) return it->second;
    const bool full = is_full_space(curve_, A, B);
    terminal_.emplace(key, full);
    return full;
}

ExtendedInt OrderBound::edge_multiplicity(int A, int B, Place edge) const {
    const int q = curve_.q();
    const int next = edge == Place::Pinf ? rr_dim(q, A + 1, B) : rr_dim(q, A, B + 1);
    if (next == rr_dim(q, A, B)) return ExtendedInt::infinity();
    return ExtendedInt::finite(mult_closed(q, A - curve_.canonical_degree(), B, edge));
}

const OrderBound::Entry& OrderBound::solve(int A, int B) {
    const auto key = std::make_pair(A, B);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Entry e{ExtendedInt::infinity(), Place::Pinf};
    if (!is_terminal(A, B)) {
        const ExtendedInt via_pinf = std::min(edge_multiplicity(A, B, Place::Pinf), solve(A + 1, B).value);
        const ExtendedInt via_p0 = std::min(edge_multiplicity(A, B, Place::P0), solve(A, B + 1).value);
        e = via_p0 > via_pinf ? Entry{via_p0, Place::P0} : Entry{via_pinf, Place::Pinf};
    }
    return memo_.emplace(key, e).first->second;
}

ExtendedInt OrderBound::bound(int A, int B) { return compute(A, B).bound; }

BoundResult OrderBound::compute(int A, int B) {
    if (is_terminal(A, B)) throw std::invalid_argument("C(A, B) is already the full space");
    BoundResult r;
    r.bound = solve(A, B).value;
    int a = A, b = B;
    while (!is_terminal(a, b)) {
        const Place edge = solve(a, b).choice;
        r.path.push_back({a, b, edge, edge_multiplicity(a, b, edge)});
        if (edge == Place::Pinf)
            ++a;
        else
            ++b;
    }
    r.terminal_A = a;
    r.terminal_B = b;
    return r;
}

BoundResult order_bound(const Curve& curve, int A, int B, TerminalMode mode) {
    OrderBound ob(curve, mode);
    return ob.compute(A, B);
}

namespace {

void require_high(int q, int a, int b) {
    if (!park_high_hypotheses(q, q * q - q - 2 + a, b))
        throw std::invalid_argument("segment minima need the high-degree hypotheses on G");
}

int segment_min(int q, int a, int b, int steps, Place at) {
    require_high(q, a, b);
    int best = mult_closed(q, a, b, at);
    for (int t = 1; t <= steps; ++t)
        best = std::min(best, at == Place::Pinf ? mult_closed(q, a + t, b, at) : mult_closed(q, a, b + t, at));
    return best;
}

}  // namespace

int segment_min_I2(int q, int a, int b) {
    const ShiftedParams p = shifted_params(q, a, b);
    if (!(p.b1 <= p.s() && p.s() <= p.a1)) throw std::invalid_argument("segment I2 requires b1 <= a0+b0 <= a1");
    return segment_min(q, a, b, p.a1 - p.s(), Place::Pinf);
}

int segment_min_I2_prime(int q, int a, int b) {
    const ShiftedParams p = shifted_params(q, a, b);
    if (!(p.a1 <= p.s() && p.s() <= p.b1)) throw std::invalid_argument("segment I2' requires a1 <= a0+b0 <= b1");
    return segment_min(q, a, b, p.b1 - p.s(), Place::P0);
}

int segment_min_I3(int q, int a, int b) {
    const ShiftedParams p = shifted_params(q, a, b);
    if (!(p.s() <= p.a1 && p.a1 <= p.b1 && p.b1 < q))
        throw std::invalid_argument("segment I3 requires a0+b0 <= a1 <= b1 < q");
    return segment_min(q, a, b, p.a1 - p.s(), Place::Pinf);
}

int segment_min_I3_prime(int q, int a, int b) {
    const ShiftedParams p = shifted_params(q, a, b);
    if (!(p.s() <= p.b1 && p.b1 <= p.a1 && p.a1 < q))
        throw std::invalid_argument("segment I3' requires a0+b0 <= b1 <= a1 < q");
    return segment_min(q, a, b, p.b1 - p.s(), Place::P0);
}

int segment_closed_I2(int q, int a, int b) {
    const ShiftedParams p = shifted_params(q, a, b);
    return p.d_star() + p.a1 - p.s();
}

int segment_closed_I2_prime(int q, int a, int b) {
    const ShiftedParams p = shifted_params(q, a, b);
    return p.d_star() + p.b1 - p.s();
}

int segment_closed_I3(int q, int a, int b) {
    const ShiftedParams p = shifted_params(q, a, b);
    return p.d_star() + p.a1 + p.b1 - 2 * p.s();
}

}  // namespace hermitian
