#ifndef HERMITIAN_DISTANCE_HPP
#define HERMITIAN_DISTANCE_HPP

#include <optional>
#include <string>
#include <vector>

namespace hermitian {

enum class Regime {
    /// deg G > deg K + q, or deg K <= deg G <= deg K + q with G not
    /// equivalent to a multiple of P_inf or of P0.
    ParkHigh,
    /// deg G < deg K, or deg K <= deg G <= deg K + q with G equivalent to a
    /// multiple of P_inf or of P0.
    ParkLow,
    /// No formula applies.
    OutOfScope,
};

enum class ParkCase { None, Case1, Case2, Case2Prime, Case3, Case3Prime, Case4, MaxForm };

const char* to_string(Regime r);
const char* to_string(ParkCase c);

struct RegimeTag {
    Regime regime = Regime::OutOfScope;
    ParkCase case_label = ParkCase::None;  ///< ParkHigh only
    std::string note;                      ///< why a cell is out of scope
};

/// The high-degree hypotheses on G = A P_inf + B P0: deg G > deg K + q, or
/// deg K <= deg G <= deg K + q with G equivalent to neither s P_inf nor t P0.
bool park_high_hypotheses(int q, int A, int B);

/// Regime and, for ParkHigh, the single printed case whose hypotheses hold
/// (MaxForm when none does).
///
/// ParkHigh cells with a0+b0 > q^2-q-1 are OutOfScope: the formula
/// undercounts there (for q = 2, C(1,5)^perp has distance 7, not 6).
/// ParkLow cells whose formula value is below 1 are OutOfScope as well.
RegimeTag classify_case(int q, int A, int B);

struct ParkResult {
    std::optional<int> d;
    RegimeTag tag;
};

/// Closed-form d(C(A, B)^perp). ParkHigh uses the max form with the case 4
/// override on (A - (2g-2), B) decomposed with the minus convention; ParkLow
/// returns a0 + b0 + 2 on the raw (A, B) decomposed with the plus convention.
ParkResult park_distance(int q, int A, int B);

/// Value of the printed ParkHigh case formula matching (A, B), if any.
std::optional<int> park_printed_case_value(int q, int A, int B);

/// m = a q + b = (q^2 - rho) q + b with 0 <= b < q.
struct HKParams {
    int m = 0;
    int n = 0;
    int a = 0;
    int b = 0;
    int rho = 0;
    bool in_I_tilde = false;
    bool in_J = false;
};
HKParams hk_params(int q, int m, int n);

struct HKMatch {
    std::string label;
    int d = 0;
};

/// Every printed primal-distance case whose range condition holds for
/// C(m, n) = C(D, m P_inf + n P0). Cases [IV]-[VI] are taken only for
/// rho >= 1. Throws std::invalid_argument unless 0 <= n <= q.
std::vector<HKMatch> hk_matches(int q, int m, int n);

/// The common value of hk_matches, or nothing when no case applies. Throws
/// std::logic_error if two matching cases disagree.
std::optional<int> hk_distance(int q, int m, int n);

}  // namespace hermitian

#endif
