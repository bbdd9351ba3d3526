#pragma once

#include <cstdint>
#include <string_view>

#include "entbounds/linalg.hpp"

namespace entbounds {

/// Coefficients of the canonical three-qubit pure-state form
/// l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
struct ThreeQubitCanonical {
    double lambda0 = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double lambda4 = 0.0;
    double phi = 0.0;  ///< in [0, pi]
};

struct RandomSeed {
    std::uint64_t seed = 0;
};

/// Name of the amplitude-sampling recipe, recorded in audit metadata so runs
/// can be reproduced.
inline constexpr std::string_view kHaarGeneratorName =
    "mt19937_64(splitmix64(seed,index)) + std::normal_distribution";

PureState build_canonical(const ThreeQubitCanonical& c);

/// Three-qubit fixture whose squared-concurrence marginals saturate the
/// one-to-many monogamy identity (zero residual tangle).
PureState monogamy_benchmark_state();

/// Three-qubit fixture used for the assisted-entanglement comparisons.
PureState polygamy_benchmark_state();

/// Haar-random pure state of 2..4 qubits: independent complex Gaussian
/// amplitudes, normalized. Deterministic per (seed, sample_index).
PureState sample_haar_pure(std::size_t n_qubits, RandomSeed seed,
                           std::uint64_t sample_index = 0);

}  // namespace entbounds
