#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "entbounds/linalg.hpp"
#include "entbounds/states.hpp"

namespace entbounds::testing {

/// Haar-ish random unitary via modified Gram-Schmidt on a Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            a(r, c) = Complex{gauss(rng), gauss(rng)};
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            Complex overlap{0.0, 0.0};
            for (std::size_t r = 0; r < n; ++r) {
                overlap += std::conj(a(r, prev)) * a(r, c);
            }
            for (std::size_t r = 0; r < n; ++r) {
                a(r, c) -= overlap * a(r, prev);
            }
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < n; ++r) norm += std::norm(a(r, c));
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < n; ++r) a(r, c) /= norm;
    }
    return a;
}

/// Random mixture of 2..4 Haar pure two-qubit states.
inline DensityMatrix random_mixed_two_qubit(std::mt19937_64& rng, std::uint64_t tag) {
    std::uniform_int_distribution<int> n_components(2, 4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = n_components(rng);
    std::vector<double> weights(n);
    double total = 0.0;
    for (auto& w : weights) {
        w = unit(rng) + 1e-3;
        total += w;
    }
    ComplexMatrix rho(4, 4);
    for (int i = 0; i < n; ++i) {
        const PureState psi =
            sample_haar_pure(2, {0xabcdef12u + tag}, (tag << 8) + static_cast<std::uint64_t>(i));
        const double w = weights[static_cast<std::size_t>(i)] / total;
        const auto& amp = psi.amplitudes();
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) {
                rho(r, c) += w * amp[r] * std::conj(amp[c]);
            }
        }
    }
    return DensityMatrix({2, 2}, std::move(rho));
}

/// Vector satisfying e_i >= k * tail(i) for i <= m and k' * e_j <= tail(j)
/// for j > m, scaled so the entries sum to at most one.
inline std::vector<double> admissible_vector(std::mt19937_64& rng, int n_parties, double k,
                                             double k_prime, int m) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int len = n_parties - 1;
    std::vector<double> e(static_cast<std::size_t>(len), 0.0);
    e[static_cast<std::size_t>(len - 1)] = 0.2 + 0.8 * unit(rng);
    double tail = e[static_cast<std::size_t>(len - 1)];
    for (int j = len - 2; j >= 0; --j) {
        const bool head = j < m;
        const double value = head ? k * tail * (1.0 + unit(rng))
                                  : tail / k_prime * unit(rng);
        e[static_cast<std::size_t>(j)] = value;
        tail += value;
    }
    const double scale = 1.0 / tail;
    for (auto& value : e) value *= scale;
    return e;
}

inline PureState bell_phi_plus() {
    const double s = 1.0 / std::sqrt(2.0);
    return PureState({2, 2}, {Complex{s, 0}, Complex{0, 0}, Complex{0, 0}, Complex{s, 0}});
}

}  // namespace entbounds::testing
