#include <doctest.h>

#include <cmath>
#include <random>

#include "entbounds/linalg.hpp"
#include "entbounds/states.hpp"
#include "support.hpp"

using namespace entbounds;
using entbounds::testing::bell_phi_plus;
using entbounds::testing::random_unitary;

namespace {

DensityMatrix maximally_mixed_two_qubit() {
    ComplexMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = 0.25;
    return DensityMatrix({2, 2}, std::move(m));
}

double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    REQUIRE(a.rows() == b.rows());
    REQUIRE(a.cols() == b.cols());
    double diff = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            diff = std::max(diff, std::abs(a(r, c) - b(r, c)));
        }
    }
    return diff;
}

}  // namespace

TEST_CASE("tensor product of identities") {
    const auto i2 = ComplexMatrix::identity(2);
    const auto i4 = tensor_product(i2, i2);
    CHECK(max_entry_diff(i4, ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("tensor product of pauli-y with itself is the anti-diagonal flip") {
    const auto yy = tensor_product(pauli_y(), pauli_y());
    const double expected[4] = {-1.0, 1.0, 1.0, -1.0};
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const double want = (c == 3 - r) ? expected[r] : 0.0;
            CHECK(yy(r, c).real() == doctest::Approx(want).epsilon(0.0));
            CHECK(yy(r, c).imag() == 0.0);
        }
    }
}

TEST_CASE("tensor product of basis projectors lands on the composite index") {
    // Index arithmetic oracle: P_i (x) P_j must be the projector onto
    // i * dim_b + j, for every basis pair.
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            ComplexMatrix pa(2, 2);
            pa(i, i) = 1.0;
            ComplexMatrix pb(3, 3);
            pb(j, j) = 1.0;
            const auto prod = tensor_product(pa, pb);
            for (std::size_t r = 0; r < 6; ++r) {
                for (std::size_t c = 0; c < 6; ++c) {
                    const double want = (r == i * 3 + j && c == r) ? 1.0 : 0.0;
                    CHECK(std::abs(prod(r, c) - Complex{want, 0.0}) == 0.0);
                }
            }
        }
    }
}

TEST_CASE("tensor product rejects oversized results") {
    const auto big = ComplexMatrix::identity(64);
    CHECK_THROWS_AS(tensor_product(big, ComplexMatrix::identity(2)), std::length_error);
}

TEST_CASE("tensor product rejects non-finite operands") {
    ComplexMatrix bad(2, 2);
    bad(0, 0) = Complex{std::numeric_limits<double>::quiet_NaN(), 0.0};
    CHECK_THROWS_AS(tensor_product(bad, ComplexMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("partial trace of the bell state is maximally mixed") {
    const auto reduced = partial_trace(bell_phi_plus(), {0});
    CHECK(reduced.dim() == 2);
    CHECK(std::abs(reduced.matrix()(0, 0) - Complex{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(reduced.matrix()(1, 1) - Complex{0.5, 0.0}) < 1e-15);
    CHECK(std::abs(reduced.matrix()(0, 1)) < 1e-15);
}

TEST_CASE("partial trace of a product state factorizes") {
    const PureState psi({2, 2}, {Complex{0, 0}, Complex{1, 0}, Complex{0, 0}, Complex{0, 0}});
    const auto reduced = partial_trace(psi, {0});  // |0> (x) |1>, keep the first
    CHECK(std::abs(reduced.matrix()(0, 0) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(reduced.matrix()(1, 1)) < 1e-15);
}

TEST_CASE("partial trace rejects an empty keep set") {
    CHECK_THROWS_AS(partial_trace(bell_phi_plus(), {}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(bell_phi_plus(), {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(bell_phi_plus(), {2}), std::invalid_argument);
}

TEST_CASE("tracing subsystems one at a time matches tracing them together") {
    std::mt19937_64 rng(7);
    for (std::uint64_t i = 0; i < 32; ++i) {
        const PureState psi = sample_haar_pure(3, {11}, i);
        const auto direct = partial_trace(psi, {0});
        const auto rho = psi.to_density_matrix();
        const auto drop_last = partial_trace(rho, {0, 1});
        const auto stepwise = partial_trace(drop_last, {0});
        CHECK(max_entry_diff(direct.matrix(), stepwise.matrix()) < 1e-12);
    }
}

TEST_CASE("marginal purity stays between 1/d and 1") {
    for (std::uint64_t i = 0; i < 64; ++i) {
        const PureState psi = sample_haar_pure(3, {23}, i);
        const auto reduced = partial_trace(psi, {0});
        const double purity = reduced.purity();
        CHECK(purity >= 0.5 - 1e-12);
        CHECK(purity <= 1.0 + 1e-12);
    }
}

TEST_CASE("eigenvalues of a diagonal matrix come back sorted") {
    ComplexMatrix m(3, 3);
    m(0, 0) = 3.0;
    m(1, 1) = 1.0;
    m(2, 2) = 2.0;
    const auto eigs = hermitian_eigenvalues(m);
    CHECK(eigs[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(eigs[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(eigs[2] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigenvalues of known two-by-two matrices") {
    ComplexMatrix half(2, 2);
    half(0, 0) = half(1, 1) = 0.5;
    const auto e1 = hermitian_eigenvalues(half);
    CHECK(e1[0] == doctest::Approx(0.5));
    CHECK(e1[1] == doctest::Approx(0.5));

    const auto e2 = hermitian_eigenvalues(pauli_x());
    CHECK(e2[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e2[1] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("eigendecomposition recovers a planted spectrum") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = trial % 2 == 0 ? 6 : 16;
        const auto u = random_unitary(n, rng);
        std::vector<double> planted(n);
        for (auto& d : planted) d = unit(rng);
        ComplexMatrix diag(n, n);
        for (std::size_t i = 0; i < n; ++i) diag(i, i) = planted[i];
        const auto m = u * diag * u.adjoint();
        const auto eigs = hermitian_eigenvalues(m);
        std::sort(planted.begin(), planted.end(), std::greater<>());
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(eigs[i] - planted[i]) < 1e-10);
        }
        double trace_sum = 0.0;
        for (double e : eigs) trace_sum += e;
        CHECK(std::abs(trace_sum - m.trace().real()) < 1e-10);
    }
}

TEST_CASE("eigendecomposition rejects a non-hermitian matrix") {
    ComplexMatrix m(2, 2);
    m(0, 1) = Complex{1.0, 0.0};
    m(1, 0) = Complex{0.5, 0.0};
    CHECK_THROWS_AS(hermitian_eigenvalues(m), std::invalid_argument);
}

TEST_CASE("spin flip leaves the bell state fixed") {
    const auto rho = bell_phi_plus().to_density_matrix();
    const auto flipped = spin_flip(rho);
    CHECK(max_entry_diff(flipped, rho.matrix()) < 1e-15);
}

TEST_CASE("spin flip swaps the computational extremes") {
    ComplexMatrix m(4, 4);
    m(0, 0) = 1.0;  // |00><00|
    const auto flipped = spin_flip(DensityMatrix({2, 2}, std::move(m)));
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const double want = (r == 3 && c == 3) ? 1.0 : 0.0;
            CHECK(std::abs(flipped(r, c) - Complex{want, 0.0}) < 1e-15);
        }
    }
}

TEST_CASE("spin flip fixes the maximally mixed state") {
    const auto rho = maximally_mixed_two_qubit();
    CHECK(max_entry_diff(spin_flip(rho), rho.matrix()) < 1e-15);
}

TEST_CASE("spin flip rejects wrong dimensions") {
    ComplexMatrix m(2, 2);
    m(0, 0) = m(1, 1) = 0.5;
    const DensityMatrix single({2}, std::move(m));
    CHECK_THROWS_AS(spin_flip(single), std::invalid_argument);
}

TEST_CASE("spin flip is an involution") {
    for (std::uint64_t i = 0; i < 16; ++i) {
        const PureState psi = sample_haar_pure(2, {31}, i);
        const auto rho = psi.to_density_matrix();
        const auto once = spin_flip(rho);
        const auto twice = spin_flip(DensityMatrix({2, 2}, once));
        CHECK(max_entry_diff(twice, rho.matrix()) < 1e-12);
    }
}

TEST_CASE("density matrix construction enforces its invariants") {
    ComplexMatrix not_unit_trace(2, 2);
    not_unit_trace(0, 0) = 0.7;
    not_unit_trace(1, 1) = 0.7;
    CHECK_THROWS_AS(DensityMatrix({2}, std::move(not_unit_trace)), std::invalid_argument);

    ComplexMatrix not_psd(2, 2);
    not_psd(0, 0) = 1.5;
    not_psd(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix({2}, std::move(not_psd)), std::invalid_argument);

    ComplexMatrix not_hermitian(2, 2);
    not_hermitian(0, 0) = 0.5;
    not_hermitian(1, 1) = 0.5;
    not_hermitian(0, 1) = Complex{0.1, 0.0};
    CHECK_THROWS_AS(DensityMatrix({2}, std::move(not_hermitian)), std::invalid_argument);
}

TEST_CASE("pure state construction enforces normalization") {
    CHECK_THROWS_AS(PureState({2}, {Complex{1.0, 0.0}, Complex{0.5, 0.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PureState({2}, {Complex{1.0, 0.0}}), std::invalid_argument);
}
