#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace entbounds {

using Complex = std::complex<double>;

/// Largest entry count any operation is allowed to produce (6 qubits squared).
inline constexpr std::size_t kMaxMatrixEntries = std::size_t{1} << 12;

/// Dense row-major complex matrix sized for few-qubit Hilbert spaces.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
        return data_[r * cols_ + c];
    }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    /// max_ij |a(i,j) - conj(a(j,i))|; requires a square matrix.
    double hermiticity_error() const;

    /// Throws std::invalid_argument when any entry is NaN or Inf.
    void require_finite(const std::string& what) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex scale) { return a *= scale; }
    friend ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

class DensityMatrix;

/// Normalized pure state over an ordered list of subsystems.
/// Subsystem 0 carries the most significant digit of the basis index.
class PureState {
public:
    PureState(std::vector<std::size_t> subsystem_dims, std::vector<Complex> amplitudes);

    const std::vector<std::size_t>& subsystem_dims() const noexcept { return dims_; }
    const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::size_t subsystem_count() const noexcept { return dims_.size(); }

    DensityMatrix to_density_matrix() const;

private:
    std::vector<std::size_t> dims_;
    std::vector<Complex> amplitudes_;
};

/// Hermitian, PSD, unit-trace matrix with subsystem structure.
/// Construction validates Hermiticity (1e-12 entrywise), trace (1e-12) and
/// the eigenvalue floor (>= -1e-10).
class DensityMatrix {
public:
    DensityMatrix(std::vector<std::size_t> subsystem_dims, ComplexMatrix matrix);

    const std::vector<std::size_t>& subsystem_dims() const noexcept { return dims_; }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    std::size_t dim() const noexcept { return matrix_.rows(); }
    std::size_t subsystem_count() const noexcept { return dims_.size(); }

    /// Tr(rho^2), real by Hermiticity.
    double purity() const;

private:
    std::vector<std::size_t> dims_;
    ComplexMatrix matrix_;
};

/// Kronecker product with big-endian subsystem ordering (first factor is the
/// most significant index). Rejects results above kMaxMatrixEntries.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Marginal on the `keep` subsystems (kept in ascending subsystem order).
DensityMatrix partial_trace(const DensityMatrix& state, const std::vector<std::size_t>& keep);

/// Marginal of a pure state, computed directly from amplitudes.
DensityMatrix partial_trace(const PureState& psi, const std::vector<std::size_t>& keep);

struct HermitianEigen {
    std::vector<double> values;  ///< descending
    ComplexMatrix vectors;       ///< columns ordered like `values`
};

/// Cyclic Jacobi eigendecomposition for Hermitian matrices up to 64x64.
/// Input must be Hermitian within 1e-10 entrywise.
HermitianEigen hermitian_eigendecomposition(const ComplexMatrix& m);

/// Eigenvalues only, sorted descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// rho -> (sigma_y (x) sigma_y) conj(rho) (sigma_y (x) sigma_y) for a
/// two-qubit state.
ComplexMatrix spin_flip(const DensityMatrix& rho);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace entbounds
