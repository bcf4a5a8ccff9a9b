#ifndef HERMITIAN_MIN_DISTANCE_HPP
#define HERMITIAN_MIN_DISTANCE_HPP

#include <stdexcept>
#include <string>

#include "hermitian/linalg.hpp"

namespace hermitian {

/// Raised when the code dimension exceeds the configured k_max.
class OracleInfeasible : public std::runtime_error {
public:
    OracleInfeasible(int dimension, int k_max)
        : std::runtime_error("oracle infeasible: dimension " + std::to_string(dimension) + " exceeds k_max " +
                             std::to_string(k_max)),
          dimension(dimension),
          k_max(k_max) {}
    int dimension;
    int k_max;
};

enum class DistanceMethod {
    Auto,
    /// Every nonzero codeword up to scalars, in Gray-code order.
    Enumerate,
    /// Smallest linearly dependent set of parity-check columns.
    DependentColumns,
};

const char* to_string(DistanceMethod m);

struct MinDistanceOptions {
    /// Largest dimension accepted; 0 selects default_k_max.
    int k_max = 0;
    DistanceMethod method = DistanceMethod::Auto;
    int workers = 1;
};

struct MinDistanceResult {
    int distance = 0;
    int dimension = 0;
    DistanceMethod method = DistanceMethod::Auto;
};

/// Largest k with field_size^k <= 2^26.
int default_k_max(int field_size);

/// Exact minimum Hamming weight of the nonzero words in the row space of
/// `rows`. Rows need not be independent. Throws OracleInfeasible when the
/// dimension exceeds k_max and std::invalid_argument for the zero code.
MinDistanceResult min_distance_exhaustive(const Field& field, const Matrix& rows, const MinDistanceOptions& opts = {});

}  // namespace hermitian

#endif
