#include <doctest.h>

#include <cmath>
#include <random>

#include "entbounds/linalg.hpp"
#include "entbounds/measures.hpp"
#include "entbounds/states.hpp"
#include "support.hpp"

using namespace entbounds;
using entbounds::testing::bell_phi_plus;
using entbounds::testing::random_mixed_two_qubit;
using entbounds::testing::random_unitary;

TEST_CASE("bell state carries unit concurrence across the single-qubit cut") {
    const auto value = concurrence_pure(bell_phi_plus(), {0});
    CHECK(value.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(value.partition == "A|B1");
}

TEST_CASE("product states carry no entanglement") {
    const double s = 1.0 / std::sqrt(2.0);
    const PureState psi({2, 2}, {Complex{s, 0}, Complex{s, 0}, Complex{0, 0}, Complex{0, 0}});
    CHECK(concurrence_pure(psi, {0}).value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("benchmark state reproduces the printed global-cut concurrence") {
    const auto psi = monogamy_benchmark_state();
    const double expected = 2.0 * std::sqrt(14.0) / 9.0;
    CHECK(std::abs(concurrence_pure(psi, {0}).value - expected) < 1e-10);
}

TEST_CASE("concurrence_pure rejects degenerate cuts") {
    const auto psi = monogamy_benchmark_state();
    CHECK_THROWS_AS(concurrence_pure(psi, {}), std::invalid_argument);
    CHECK_THROWS_AS(concurrence_pure(psi, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("wootters concurrence of the bell projector is one") {
    const auto rho = bell_phi_plus().to_density_matrix();
    CHECK(concurrence_two_qubit(rho).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("maximally mixed two-qubit state is separable") {
    ComplexMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = 0.25;
    const DensityMatrix rho({2, 2}, std::move(m));
    CHECK(concurrence_two_qubit(rho).value == 0.0);
    // every decomposition of the maximally mixed state averages to a bell basis
    CHECK(coa_two_qubit(rho).value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("benchmark marginals reproduce the printed wootters values") {
    const auto psi = monogamy_benchmark_state();
    const double c_ab1 = concurrence_two_qubit(partial_trace(psi, {0, 1})).value;
    const double c_ab2 = concurrence_two_qubit(partial_trace(psi, {0, 2})).value;
    CHECK(std::abs(c_ab1 - 2.0 * std::sqrt(10.0) / 9.0) < 1e-10);
    CHECK(std::abs(c_ab2 - 4.0 / 9.0) < 1e-10);
}

TEST_CASE("assisted-concurrence marginals reproduce the printed values") {
    const auto psi = polygamy_benchmark_state();
    const double ca_ab1 = coa_two_qubit(partial_trace(psi, {0, 1})).value;
    const double ca_ab2 = coa_two_qubit(partial_trace(psi, {0, 2})).value;
    CHECK(std::abs(ca_ab1 - std::sqrt(34.0) / 12.0) < 1e-10);
    CHECK(std::abs(ca_ab2 - std::sqrt(74.0) / 12.0) < 1e-10);
    CHECK(std::abs(concurrence_pure(psi, {0}).value - std::sqrt(106.0) / 12.0) < 1e-10);
}

TEST_CASE("assisted concurrence equals concurrence on pure inputs") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        const PureState psi = sample_haar_pure(2, {0xc0a}, i);
        const auto rho = psi.to_density_matrix();
        const double c = concurrence_two_qubit(rho).value;
        const double ca = coa_two_qubit(rho).value;
        CHECK(std::abs(c - ca) < 1e-10);
    }
}

TEST_CASE("two-qubit measures reject other dimensions") {
    const auto psi = monogamy_benchmark_state();
    const auto rho = psi.to_density_matrix();
    CHECK_THROWS_AS(concurrence_two_qubit(rho), std::invalid_argument);
    CHECK_THROWS_AS(coa_two_qubit(rho), std::invalid_argument);
    CHECK_THROWS_AS(wootters_lambdas(rho), std::invalid_argument);
}

TEST_CASE("cut symmetry: every cut matches its complement") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        const PureState psi = sample_haar_pure(3, {0x57}, i);
        const std::vector<std::vector<std::size_t>> cuts = {{0}, {1}, {2}};
        const std::vector<std::vector<std::size_t>> complements = {{1, 2}, {0, 2}, {0, 1}};
        for (std::size_t c = 0; c < cuts.size(); ++c) {
            const double direct = concurrence_pure(psi, cuts[c]).value;
            const double mirrored = concurrence_pure(psi, complements[c]).value;
            CHECK(std::abs(direct - mirrored) < 1e-12);
        }
    }
}

TEST_CASE("wootters formula agrees with the pure-state expression") {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const PureState psi = sample_haar_pure(2, {0xa9ee}, i);
        const double from_mixed = concurrence_two_qubit(psi.to_density_matrix()).value;
        const double from_pure = concurrence_pure(psi, {0}).value;
        worst = std::max(worst, std::abs(from_mixed - from_pure));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("concurrence is invariant under local unitaries") {
    std::mt19937_64 rng(0xfeed);
    for (std::uint64_t i = 0; i < 100; ++i) {
        const DensityMatrix rho = random_mixed_two_qubit(rng, i);
        const auto u = random_unitary(2, rng);
        const auto v = random_unitary(2, rng);
        const auto uv = tensor_product(u, v);
        const DensityMatrix rotated({2, 2}, uv * rho.matrix() * uv.adjoint());
        const double before = concurrence_two_qubit(rho).value;
        const double after = concurrence_two_qubit(rotated).value;
        CHECK(std::abs(before - after) < 1e-9);
    }
}

TEST_CASE("squared concurrence is monogamous on three-qubit states") {
    double min_slack = 1.0;
    for (std::uint64_t i = 0; i < 2000; ++i) {
        const PureState psi = sample_haar_pure(3, {0xcc}, i);
        const double c_cut = concurrence_pure(psi, {0}).value;
        const double c1 = concurrence_two_qubit(partial_trace(psi, {0, 1})).value;
        const double c2 = concurrence_two_qubit(partial_trace(psi, {0, 2})).value;
        min_slack = std::min(min_slack, c_cut * c_cut - c1 * c1 - c2 * c2);
    }
    CHECK(min_slack >= -1e-9);
}

TEST_CASE("assistance dominates the plain concurrence on mixed states") {
    std::mt19937_64 rng(0xd00d);
    for (std::uint64_t i = 0; i < 200; ++i) {
        const DensityMatrix rho = random_mixed_two_qubit(rng, 1000 + i);
        const double c = concurrence_two_qubit(rho).value;
        const double ca = coa_two_qubit(rho).value;
        CHECK(ca >= c - 1e-12);
    }
}

TEST_CASE("partition labels read kept versus traced subsystems") {
    CHECK(partition_label(3, {0}) == "A|B1B2");
    CHECK(partition_label(3, {0, 1}) == "AB1|B2");
    CHECK(partition_label(3, {1}) == "B1|AB2");
    CHECK(partition_label(2, {0, 1}) == "AB1");
}
