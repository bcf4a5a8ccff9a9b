#ifndef HERMITIAN_VERIFY_HPP
#define HERMITIAN_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hermitian/curve.hpp"
#include "hermitian/distance.hpp"
#include "hermitian/min_distance.hpp"
#include "hermitian/orderbound.hpp"

namespace hermitian {

struct DistanceSweepOptions {
    int A_min = 0, A_max = 12;
    int B_min = 0, B_max = 12;
    /// Largest dual dimension handed to the exhaustive oracle; 0 = default_k_max.
    int k_max = 0;
    int workers = 1;
    /// Build and certify witnesses even where the oracle already ran.
    bool witness_all = false;
    TerminalMode terminal = TerminalMode::Rank;
};

struct CellReport {
    int A = 0, B = 0;
    int dual_dimension = 0;
    RegimeTag tag;
    std::optional<int> park;
    std::optional<ExtendedInt> bound;
    std::optional<int> brute;
    std::optional<int> witness_weight;
    bool mismatch = false;
    std::string detail;
};

struct DistanceSweepSummary {
    int cells = 0;
    int full_space = 0;
    int out_of_scope = 0;
    int brute_checked = 0;
    int witness_checked = 0;
    int cache_hits = 0;
    std::vector<CellReport> mismatches;
    /// In scope, but the oracle was infeasible and no witness recipe fit.
    /// These are reported, not counted as mismatches.
    std::vector<CellReport> unverified;
    std::vector<CellReport> out_of_scope_cells;
};

/// For every (A, B) in the box whose code is not the full space:
///   the exhaustive dual distance (when the dual dimension <= k_max) equals
///   the closed form and is >= the order bound; the order bound equals the
///   closed form; elsewhere a certified witness has weight equal to the closed
///   form. Oracle results are shared between codes that differ by a power of y.
DistanceSweepSummary verify_distance_sweep(const Curve& curve, const DistanceSweepOptions& opts);

struct GridSummary {
    int checked = 0;
    int mismatches = 0;
    std::vector<std::string> details;  ///< first few mismatches
};

/// Closed form = lattice count = d*-form at both places over a, b in [lo, hi];
/// with_oracle adds the definition oracle at (2g-2+a, b).
GridSummary verify_multiplicity_grid(int q, int lo, int hi, bool with_oracle);

/// Segment minima against their closed forms wherever the hypotheses hold.
GridSummary verify_segment_grid(int q, int lo, int hi);

/// Printed case values against the max form on ParkHigh cells other than case 4.
GridSummary verify_case_consistency(int q, int lo, int hi);

struct HKSweepSummary {
    int in_range = 0;
    int checked = 0;
    int skipped = 0;
    int mismatches = 0;
    std::vector<std::string> details;
};

/// Every in-range formula value for 0 <= n <= q and m in [m_lo, m_hi] against
/// the exhaustive primal distance, when the dimension is at most k_max.
HKSweepSummary verify_hk_sweep(const Curve& curve, int m_lo, int m_hi, int k_max, int workers);

}  // namespace hermitian

#endif
