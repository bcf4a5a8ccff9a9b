#ifndef HERMITIAN_ORDERBOUND_HPP
#define HERMITIAN_ORDERBOUND_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hermitian/curve.hpp"
#include "hermitian/multiplicity.hpp"

namespace hermitian {

/// An integer or +infinity. Infinity is its own state, never a large integer.
class ExtendedInt {
public:
    static constexpr ExtendedInt infinity() { return ExtendedInt(true, 0); }
    static constexpr ExtendedInt finite(int v) { return ExtendedInt(false, v); }

    constexpr bool is_infinite() const { return infinite_; }
    /// Throws std::logic_error on infinity.
    int value() const;
    std::string to_string() const;

    friend constexpr bool operator==(ExtendedInt, ExtendedInt) = default;
    friend constexpr std::strong_ordering operator<=>(ExtendedInt l, ExtendedInt r) {
        if (l.infinite_ || r.infinite_) return l.infinite_ <=> r.infinite_;
        return l.value_ <=> r.value_;
    }

private:
    constexpr ExtendedInt(bool inf, int v) : infinite_(inf), value_(v) {}
    bool infinite_;
    int value_;
};

enum class TerminalMode {
    /// C(A, B) is the full space by an exact rank computation.
    Rank,
    /// A + B >= n + 2g - 1 only.
    Degree,
};

/// Rank for q <= 4, Degree above.
TerminalMode default_terminal_mode(int q);

struct PathStep {
    int A = 0;
    int B = 0;
    Place edge = Place::Pinf;  ///< P_inf: to (A+1, B); P0: to (A, B+1)
    ExtendedInt mult = ExtendedInt::infinity();
};

struct BoundResult {
    ExtendedInt bound = ExtendedInt::infinity();
    std::vector<PathStep> path;  ///< ends at the terminal node (terminal_A, terminal_B)
    int terminal_A = 0;
    int terminal_B = 0;
};

/// Max over monotone lattice paths to the full space of the smallest edge
/// multiplicity on the path; a lower bound for d(C(A, B)^perp).
///
/// The edge (A,B) -> (A+1,B) carries m_{P_inf}(A, B) and (A,B) -> (A,B+1)
/// carries m_{P0}(A, B). An edge along which L(G) does not grow leaves the
/// code unchanged and is treated as +infinity. Ties prefer the P_inf edge.
/// Memoized per instance; not thread-safe.
class OrderBound {
public:
    OrderBound(const Curve& curve, TerminalMode mode);

    /// Throws std::invalid_argument when C(A, B) is already the full space.
    BoundResult compute(int A, int B);
    ExtendedInt bound(int A, int B);

    bool is_terminal(int A, int B);
    ExtendedInt edge_multiplicity(int A, int B, Place edge) const;
    TerminalMode mode() const { return mode_; }

private:
    struct Entry {
        ExtendedInt value;
        Place choice;
    };
    const Entry& solve(int A, int B);

    const Curve& curve_;
    TerminalMode mode_;
    int top_;
    std::map<std::pair<int, int>, Entry> memo_;
    std::map<std::pair<int, int>, bool> terminal_;
};

BoundResult order_bound(const Curve& curve, int A, int B, TerminalMode mode);

// Minima of one multiplicity along the straight segments used in the
// high-degree distance proof. All take shifted (a, b) and throw
// std::invalid_argument unless (2g-2+a, b) meets park_high_hypotheses and the
// segment's own inequalities hold.

/// 0 <= b1 <= s <= a1: min of m_{P_inf}(2g-2+a+t, b), 0 <= t <= a1-s.
int segment_min_I2(int q, int a, int b);
/// 0 <= a1 <= s <= b1: min of m_{P0}(2g-2+a, b+t), 0 <= t <= b1-s.
int segment_min_I2_prime(int q, int a, int b);
/// s <= a1 <= b1 < q: min of m_{P_inf}(2g-2+a+t, b), 0 <= t <= a1-s.
int segment_min_I3(int q, int a, int b);
/// s <= b1 <= a1 < q: min of m_{P0}(2g-2+a, b+t), 0 <= t <= b1-s.
int segment_min_I3_prime(int q, int a, int b);

/// d* + a1 - s (= s q - b1).
int segment_closed_I2(int q, int a, int b);
/// d* + b1 - s (= s q - a1).
int segment_closed_I2_prime(int q, int a, int b);
/// d* + a1 + b1 - 2 s (= s (q-1)); also the I3' value.
int segment_closed_I3(int q, int a, int b);

}  // namespace hermitian

#endif
