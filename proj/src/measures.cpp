#include "entbounds/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entbounds {

namespace {

constexpr double kEigenvalueFloor = -1e-10;
constexpr double kMeasureSlack = 1e-9;

double clamp_measure(double value, double upper, const char* what) {
    if (!(value >= -kMeasureSlack) || value > upper + kMeasureSlack) {
        throw std::runtime_error(std::string(what) + " left its admissible range");
    }
    return std::clamp(value, 0.0, upper);
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
    const auto eig = hermitian_eigendecomposition(m);
    const std::size_t n = m.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double ev = eig.values[k];
        if (ev < kEigenvalueFloor) {
            throw std::runtime_error("matrix square root of an indefinite matrix");
        }
        const double root = std::sqrt(std::max(ev, 0.0));
        if (root == 0.0) continue;
        for (std::size_t r = 0; r < n; ++r) {
            const Complex vr = eig.vectors(r, k) * root;
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += vr * std::conj(eig.vectors(c, k));
            }
        }
    }
    return out;
}

void require_two_qubits(const DensityMatrix& rho, const char* what) {
    if (rho.subsystem_dims() != std::vector<std::size_t>{2, 2}) {
        throw std::invalid_argument(std::string(what) + " requires a two-qubit density matrix");
    }
}

}  // namespace

std::array<double, 4> wootters_lambdas(const DensityMatrix& rho) {
    require_two_qubits(rho, "wootters_lambdas");
    const ComplexMatrix root = sqrt_psd(rho.matrix());
    const ComplexMatrix flipped = spin_flip(rho);
    ComplexMatrix m = root * flipped * root;

    // Kill sub-tolerance asymmetry before the second eigenproblem.
    const ComplexMatrix mh = m.adjoint();
    m += mh;
    m *= Complex{0.5, 0.0};

    const auto eigs = hermitian_eigenvalues(m);
    // Structurally zero eigenvalues (rank-deficient inputs such as pure-state
    // marginals) pick up O(eps) noise that the square root would amplify to
    // ~1e-8; a relative clamp keeps them exact.
    const double clamp = 1e-12 * std::max(eigs[0], 0.0);
    std::array<double, 4> lambdas{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (eigs[i] < kEigenvalueFloor) {
            throw std::runtime_error("spin-flip kernel produced an eigenvalue below the floor");
        }
        lambdas[i] = eigs[i] <= clamp ? 0.0 : std::sqrt(eigs[i]);
    }
    return lambdas;
}

MeasureValue concurrence_pure(const PureState& psi, const std::vector<std::size_t>& cut) {
    if (cut.empty() || cut.size() >= psi.subsystem_count()) {
        throw std::invalid_argument("cut must be a nonempty strict subset of subsystems");
    }
    const DensityMatrix reduced = partial_trace(psi, cut);
    const double purity = reduced.purity();
    const double value = std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));

    const std::size_t cut_dim = reduced.dim();
    const std::size_t comp_dim = psi.dim() / cut_dim;
    const double upper = (cut_dim == 2 && comp_dim == 2) ? 1.0 : std::sqrt(2.0);
    return MeasureValue{clamp_measure(value, upper, "pure-state concurrence"),
                        MeasureKind::concurrence,
                        partition_label(psi.subsystem_count(), cut)};
}

MeasureValue concurrence_two_qubit(const DensityMatrix& rho, std::string partition) {
    require_two_qubits(rho, "concurrence_two_qubit");
    const auto l = wootters_lambdas(rho);
    const double value = std::max(0.0, l[0] - l[1] - l[2] - l[3]);
    return MeasureValue{clamp_measure(value, 1.0, "two-qubit concurrence"),
                        MeasureKind::concurrence, std::move(partition)};
}

MeasureValue coa_two_qubit(const DensityMatrix& rho, std::string partition) {
    require_two_qubits(rho, "coa_two_qubit");
    const auto l = wootters_lambdas(rho);
    const double value = l[0] + l[1] + l[2] + l[3];
    return MeasureValue{clamp_measure(value, 1.0, "concurrence of assistance"),
                        MeasureKind::concurrence_of_assistance, std::move(partition)};
}

std::string partition_label(std::size_t subsystem_count, const std::vector<std::size_t>& cut) {
    auto name = [](std::size_t s) {
        return s == 0 ? std::string("A") : "B" + std::to_string(s);
    };
    std::vector<bool> in_cut(subsystem_count, false);
    for (std::size_t s : cut) {
        if (s >= subsystem_count) {
            throw std::invalid_argument("cut references an unknown subsystem");
        }
        in_cut[s] = true;
    }
    std::string left;
    std::string right;
    for (std::size_t s = 0; s < subsystem_count; ++s) {
        (in_cut[s] ? left : right) += name(s);
    }
    if (right.empty()) return left;
    return left + "|" + right;
}

}  // namespace entbounds
