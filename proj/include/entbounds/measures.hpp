#pragma once

#include <array>
#include <string>
#include <vector>

#include "entbounds/linalg.hpp"

namespace entbounds {

enum class MeasureKind { concurrence, concurrence_of_assistance };

/// A single entanglement-measure evaluation tagged with its bipartition.
struct MeasureValue {
    double value = 0.0;
    MeasureKind kind = MeasureKind::concurrence;
    std::string partition;
};

/// Descending square roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho),
/// the shared kernel of the two-qubit concurrence and its assisted dual.
std::array<double, 4> wootters_lambdas(const DensityMatrix& rho);

/// Pure-state concurrence sqrt(2 (1 - Tr rho_cut^2)) across cut|complement.
MeasureValue concurrence_pure(const PureState& psi, const std::vector<std::size_t>& cut);

/// Two-qubit mixed-state concurrence max(0, l1 - l2 - l3 - l4).
MeasureValue concurrence_two_qubit(const DensityMatrix& rho, std::string partition = {});

/// Two-qubit concurrence of assistance l1 + l2 + l3 + l4.
MeasureValue coa_two_qubit(const DensityMatrix& rho, std::string partition = {});

/// Label "A|B1B2"-style for a cut of an N-subsystem state; subsystem 0 is A.
std::string partition_label(std::size_t subsystem_count, const std::vector<std::size_t>& cut);

}  // namespace entbounds
