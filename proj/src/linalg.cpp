#include "entbounds/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entbounds {

namespace {

constexpr double kHermitianInputTol = 1e-10;
constexpr double kDensityHermitianTol = 1e-12;
constexpr double kDensityTraceTol = 1e-12;
constexpr double kEigenvalueFloor = -1e-10;
constexpr double kJacobiRelTol = 1e-15;
constexpr int kJacobiMaxSweeps = 64;

// States live on at most six qubits, so their density matrices stay within
// the kMaxMatrixEntries cap.
constexpr std::size_t kMaxStateDim = 64;

std::size_t checked_product(const std::vector<std::size_t>& dims) {
    if (dims.empty()) {
        throw std::invalid_argument("subsystem_dims must not be empty");
    }
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d == 0) {
            throw std::invalid_argument("subsystem dimension must be positive");
        }
        total *= d;
        if (total > kMaxStateDim) {
            throw std::length_error("Hilbert-space dimension exceeds configured maximum");
        }
    }
    return total;
}

std::vector<std::size_t> strides_for(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t i = dims.size(); i-- > 1;) {
        strides[i - 1] = strides[i] * dims[i];
    }
    return strides;
}

// Basis offsets reachable by the given subsystem group: all digit
// combinations of the group, each mapped through the full-space strides.
std::vector<std::size_t> group_offsets(const std::vector<std::size_t>& dims,
                                       const std::vector<std::size_t>& strides,
                                       const std::vector<std::size_t>& group) {
    std::size_t count = 1;
    for (std::size_t s : group) count *= dims[s];
    std::vector<std::size_t> offsets(count, 0);
    std::size_t repeat = count;
    for (std::size_t s : group) {
        repeat /= dims[s];
        std::size_t idx = 0;
        while (idx < count) {
            for (std::size_t digit = 0; digit < dims[s]; ++digit) {
                for (std::size_t r = 0; r < repeat; ++r, ++idx) {
                    offsets[idx] += digit * strides[s];
                }
            }
        }
    }
    return offsets;
}

std::vector<std::size_t> sorted_keep_set(std::size_t subsystem_count,
                                         const std::vector<std::size_t>& keep) {
    if (keep.empty()) {
        throw std::invalid_argument("keep set must not be empty");
    }
    std::vector<std::size_t> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("keep set contains duplicate subsystem indices");
    }
    if (sorted.back() >= subsystem_count) {
        throw std::invalid_argument("keep set references an unknown subsystem");
    }
    return sorted;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw std::invalid_argument("entry count does not match rows x cols");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out = *this;
    for (auto& z : out.data_) z = std::conj(z);
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw std::invalid_argument("trace requires a square matrix");
    }
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto& z : data_) sum += std::norm(z);
    return std::sqrt(sum);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::hermiticity_error() const {
    if (!is_square()) {
        throw std::invalid_argument("hermiticity_error requires a square matrix");
    }
    double err = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            err = std::max(err, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return err;
}

void ComplexMatrix::require_finite(const std::string& what) const {
    for (const auto& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument(what + " contains a non-finite entry");
        }
    }
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix addition requires matching shapes");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix subtraction requires matching shapes");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product requires inner dimensions to match");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

PureState::PureState(std::vector<std::size_t> subsystem_dims, std::vector<Complex> amplitudes)
    : dims_(std::move(subsystem_dims)), amplitudes_(std::move(amplitudes)) {
    const std::size_t total = checked_product(dims_);
    if (amplitudes_.size() != total) {
        throw std::invalid_argument("amplitude count does not match subsystem dimensions");
    }
    double norm2 = 0.0;
    for (const auto& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("state amplitudes contain a non-finite entry");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw std::invalid_argument("state is not normalized");
    }
}

DensityMatrix PureState::to_density_matrix() const {
    const std::size_t n = dim();
    ComplexMatrix rho(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            rho(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
        }
    }
    return DensityMatrix(dims_, std::move(rho));
}

DensityMatrix::DensityMatrix(std::vector<std::size_t> subsystem_dims, ComplexMatrix matrix)
    : dims_(std::move(subsystem_dims)), matrix_(std::move(matrix)) {
    const std::size_t total = checked_product(dims_);
    if (!matrix_.is_square() || matrix_.rows() != total) {
        throw std::invalid_argument("density matrix dimension does not match subsystems");
    }
    matrix_.require_finite("density matrix");
    if (matrix_.hermiticity_error() > kDensityHermitianTol) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace().real() - 1.0) > kDensityTraceTol ||
        std::abs(matrix_.trace().imag()) > kDensityTraceTol) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    const auto eigs = hermitian_eigenvalues(matrix_);
    if (eigs.back() < kEigenvalueFloor) {
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = ||rho||_F^2 for Hermitian rho.
    const double f = matrix_.frobenius_norm();
    return f * f;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_finite("tensor_product operand a");
    b.require_finite("tensor_product operand b");
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("tensor_product operands must be non-empty");
    }
    if (rows * cols > kMaxMatrixEntries) {
        throw std::length_error("tensor_product result exceeds configured maximum size");
    }
    ComplexMatrix out(rows, cols);
    for (std::size_t ra = 0; ra < a.rows(); ++ra) {
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            const Complex f = a(ra, ca);
            if (f == Complex{0.0, 0.0}) continue;
            for (std::size_t rb = 0; rb < b.rows(); ++rb) {
                for (std::size_t cb = 0; cb < b.cols(); ++cb) {
                    out(ra * b.rows() + rb, ca * b.cols() + cb) = f * b(rb, cb);
                }
            }
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& state, const std::vector<std::size_t>& keep) {
    const auto& dims = state.subsystem_dims();
    const auto sorted = sorted_keep_set(dims.size(), keep);
    if (sorted.size() == dims.size()) {
        return state;
    }
    std::vector<std::size_t> traced;
    for (std::size_t s = 0, j = 0; s < dims.size(); ++s) {
        if (j < sorted.size() && sorted[j] == s) {
            ++j;
        } else {
            traced.push_back(s);
        }
    }
    const auto strides = strides_for(dims);
    const auto keep_off = group_offsets(dims, strides, sorted);
    const auto traced_off = group_offsets(dims, strides, traced);

    const std::size_t dk = keep_off.size();
    ComplexMatrix out(dk, dk);
    const auto& m = state.matrix();
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t j = 0; j < dk; ++j) {
            Complex sum{0.0, 0.0};
            for (std::size_t t : traced_off) {
                sum += m(keep_off[i] + t, keep_off[j] + t);
            }
            out(i, j) = sum;
        }
    }
    std::vector<std::size_t> kept_dims;
    kept_dims.reserve(sorted.size());
    for (std::size_t s : sorted) kept_dims.push_back(dims[s]);
    return DensityMatrix(std::move(kept_dims), std::move(out));
}

DensityMatrix partial_trace(const PureState& psi, const std::vector<std::size_t>& keep) {
    const auto& dims = psi.subsystem_dims();
    const auto sorted = sorted_keep_set(dims.size(), keep);
    if (sorted.size() == dims.size()) {
        return psi.to_density_matrix();
    }
    std::vector<std::size_t> traced;
    for (std::size_t s = 0, j = 0; s < dims.size(); ++s) {
        if (j < sorted.size() && sorted[j] == s) {
            ++j;
        } else {
            traced.push_back(s);
        }
    }
    const auto strides = strides_for(dims);
    const auto keep_off = group_offsets(dims, strides, sorted);
    const auto traced_off = group_offsets(dims, strides, traced);

    const std::size_t dk = keep_off.size();
    const auto& amp = psi.amplitudes();
    ComplexMatrix out(dk, dk);
    for (std::size_t i = 0; i < dk; ++i) {
        for (std::size_t j = 0; j < dk; ++j) {
            Complex sum{0.0, 0.0};
            for (std::size_t t : traced_off) {
                sum += amp[keep_off[i] + t] * std::conj(amp[keep_off[j] + t]);
            }
            out(i, j) = sum;
        }
    }
    std::vector<std::size_t> kept_dims;
    kept_dims.reserve(sorted.size());
    for (std::size_t s : sorted) kept_dims.push_back(dims[s]);
    return DensityMatrix(std::move(kept_dims), std::move(out));
}

HermitianEigen hermitian_eigendecomposition(const ComplexMatrix& m) {
    if (!m.is_square()) {
        throw std::invalid_argument("eigendecomposition requires a square matrix");
    }
    m.require_finite("eigendecomposition input");
    if (m.hermiticity_error() > kHermitianInputTol) {
        throw std::invalid_argument("matrix is not Hermitian within tolerance");
    }
    const std::size_t n = m.rows();

    // Work on the Hermitian average so sub-tolerance asymmetry cannot drift.
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double norm = a.frobenius_norm();
    const double threshold = kJacobiRelTol * norm;

    auto off_norm = [&]() {
        double sum = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = r + 1; c < n; ++c) {
                sum += 2.0 * std::norm(a(r, c));
            }
        }
        return std::sqrt(sum);
    };

    int sweep = 0;
    while (norm > 0.0 && off_norm() > threshold) {
        if (++sweep > kJacobiMaxSweeps) {
            throw std::runtime_error("Jacobi eigensolver did not converge");
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                const Complex phase = apq / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // a <- G^dagger a G with G the complex rotation in plane (p,q).
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex aip = a(i, p);
                    const Complex aiq = a(i, q);
                    a(i, p) = c * aip - s * std::conj(phase) * aiq;
                    a(i, q) = s * phase * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex apj = a(p, j);
                    const Complex aqj = a(q, j);
                    a(p, j) = c * apj - s * phase * aqj;
                    a(q, j) = s * std::conj(phase) * apj + c * aqj;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex vip = v(i, p);
                    const Complex viq = v(i, q);
                    v(i, p) = c * vip - s * std::conj(phase) * viq;
                    v(i, q) = s * phase * vip + c * viq;
                }
                a(p, q) = Complex{0.0, 0.0};
                a(q, p) = Complex{0.0, 0.0};
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t l, std::size_t r) { return a(l, l).real() > a(r, r).real(); });

    HermitianEigen out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        out.values[col] = a(order[col], order[col]).real();
        for (std::size_t row = 0; row < n; ++row) {
            out.vectors(row, col) = v(row, order[col]);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    return hermitian_eigendecomposition(m).values;
}

ComplexMatrix spin_flip(const DensityMatrix& rho) {
    if (rho.subsystem_dims() != std::vector<std::size_t>{2, 2}) {
        throw std::invalid_argument("spin_flip requires a two-qubit density matrix");
    }
    const ComplexMatrix yy = tensor_product(pauli_y(), pauli_y());
    return yy * rho.matrix().conjugate() * yy;
}

ComplexMatrix pauli_x() {
    return ComplexMatrix(2, 2, {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}});
}

ComplexMatrix pauli_y() {
    return ComplexMatrix(2, 2, {Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0}});
}

ComplexMatrix pauli_z() {
    return ComplexMatrix(2, 2, {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}});
}

}  // namespace entbounds
