#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace holo {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. The universal numerical carrier: overlap
/// matrices, projectors, holonomies and composite interferometer states all
/// live here. Values are immutable by convention once handed to callers.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    /// Row-major nested initializer, e.g. {{1, 0}, {0, 1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    static ComplexMatrix diagonal(const std::vector<cplx>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return a_.size(); }
    bool empty() const { return a_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }
    cplx* row(std::size_t i) { return a_.data() + i * cols_; }
    const cplx* row(std::size_t i) const { return a_.data() + i * cols_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;

    std::vector<cplx> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<cplx>& col);

    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool is_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

    /// Matrix product through the kernel layer.
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

/// a† * b without materializing the adjoint.
ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b);

/// a * b†.
ComplexMatrix times_adjoint(const ComplexMatrix& a, const ComplexMatrix& b);

/// Frobenius distance ||a - b||_F; dimensions must agree.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest |a_ij - b_ij|.
double max_abs_distance(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace holo
