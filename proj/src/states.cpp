#include "entbounds/states.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace entbounds {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

PureState build_canonical(const ThreeQubitCanonical& c) {
    const double ls[5] = {c.lambda0, c.lambda1, c.lambda2, c.lambda3, c.lambda4};
    double norm2 = 0.0;
    for (double l : ls) {
        if (!(l >= 0.0) || !std::isfinite(l)) {
            throw std::invalid_argument("canonical coefficients must be nonnegative");
        }
        norm2 += l * l;
    }
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw std::invalid_argument("canonical coefficients are not normalized");
    }
    if (!(c.phi >= 0.0 && c.phi <= std::numbers::pi)) {
        throw std::invalid_argument("phi must lie in [0, pi]");
    }
    std::vector<Complex> amps(8, Complex{0.0, 0.0});
    amps[0b000] = c.lambda0;
    amps[0b100] = c.lambda1 * Complex{std::cos(c.phi), std::sin(c.phi)};
    amps[0b101] = c.lambda2;
    amps[0b110] = c.lambda3;
    amps[0b111] = c.lambda4;
    return PureState({2, 2, 2}, std::move(amps));
}

PureState monogamy_benchmark_state() {
    ThreeQubitCanonical c;
    c.lambda0 = std::sqrt(2.0) / 3.0;
    c.lambda2 = std::sqrt(2.0) / 3.0;
    c.lambda3 = std::sqrt(5.0) / 3.0;
    return build_canonical(c);
}

PureState polygamy_benchmark_state() {
    ThreeQubitCanonical c;
    c.lambda0 = 0.5;
    c.lambda1 = std::sqrt(2.0) / 12.0;
    c.lambda2 = std::sqrt(2.0) / 2.0;
    c.lambda3 = std::sqrt(2.0) / 3.0;
    c.lambda4 = std::sqrt(2.0) / 12.0;
    return build_canonical(c);
}

PureState sample_haar_pure(std::size_t n_qubits, RandomSeed seed, std::uint64_t sample_index) {
    if (n_qubits < 2 || n_qubits > 4) {
        throw std::invalid_argument("sample_haar_pure supports 2 to 4 qubits");
    }
    std::mt19937_64 rng(splitmix64(seed.seed ^ splitmix64(sample_index)));
    std::normal_distribution<double> gauss(0.0, 1.0);

    const std::size_t dim = std::size_t{1} << n_qubits;
    std::vector<Complex> amps(dim);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (auto& a : amps) {
            a = Complex{gauss(rng), gauss(rng)};
            norm2 += std::norm(a);
        }
    } while (norm2 < 1e-12);

    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;
    return PureState(std::vector<std::size_t>(n_qubits, 2), std::move(amps));
}

}  // namespace entbounds
