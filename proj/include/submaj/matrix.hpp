// Copyright 2026 the submaj authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace submaj {

using cplx = std::complex<double>;

/// Thrown when an operation's preconditions on its inputs are violated.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Dense complex matrix, row-major storage, value semantics.
/// All algebra below is pure: results are fresh values, operands untouched.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw input_error("Matrix: entries length " + std::to_string(data_.size()) +
                              " != rows*cols = " + std::to_string(rows_ * cols_));
    }

    /// Row-of-rows construction, convenient in tests: Matrix{{1,0},{0,1}}.
    Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw input_error("Matrix: ragged initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diagonal(const std::vector<double>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    static Matrix diagonal(const std::vector<cplx>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return data_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cplx>& entries() const { return data_; }

    Matrix adjoint() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cplx& z : data_) s += std::norm(z);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    bool all_finite() const {
        for (const cplx& z : data_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b, "+");
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b, "-");
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw input_error("Matrix multiply: inner dimensions " + std::to_string(a.cols_) +
                              " and " + std::to_string(b.rows_) + " differ");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                const cplx* brow = &b.data_[k * b.cols_];
                cplx* rrow = &r.data_[i * r.cols_];
                for (std::size_t j = 0; j < b.cols_; ++j) rrow[j] += aik * brow[j];
            }
        }
        return r;
    }

    friend Matrix operator*(cplx s, const Matrix& a) {
        Matrix r = a;
        for (cplx& z : r.data_) z *= s;
        return r;
    }

    friend Matrix operator*(double s, const Matrix& a) { return cplx(s, 0.0) * a; }
    friend Matrix operator*(const Matrix& a, cplx s) { return s * a; }
    friend Matrix operator*(const Matrix& a, double s) { return s * a; }

private:
    static void check_same_shape(const Matrix& a, const Matrix& b, const char* op) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw input_error(std::string("Matrix ") + op + ": shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

inline void require_finite(const Matrix& a, const char* where) {
    if (!a.all_finite()) throw input_error(std::string(where) + ": non-finite entries");
}

inline void require_square(const Matrix& a, const char* where) {
    if (!a.is_square()) throw input_error(std::string(where) + ": matrix not square");
}

/// Relative tolerance used to accept a matrix as Hermitian / PSD,
/// scaled by 1 + Frobenius norm of the input.
inline constexpr double kHermitianRtol = 1e-10;
inline constexpr double kPsdRtol = 1e-10;

inline double hermitian_tolerance(const Matrix& a) {
    return kHermitianRtol * (1.0 + a.frobenius_norm());
}

inline double psd_tolerance(const Matrix& a) {
    return kPsdRtol * (1.0 + a.frobenius_norm());
}

inline double hermitian_deviation(const Matrix& a) {
    if (!a.is_square()) return std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
    return std::sqrt(s);
}

inline bool is_hermitian(const Matrix& a) {
    return a.is_square() && hermitian_deviation(a) <= hermitian_tolerance(a);
}

inline void require_hermitian(const Matrix& a, const char* where) {
    if (!a.is_square()) throw input_error(std::string(where) + ": matrix not square");
    if (!is_hermitian(a))
        throw input_error(std::string(where) + ": matrix not Hermitian within tolerance");
}

/// Exact Hermitian part (a + a*)/2; removes rounding-level asymmetry
/// before spectral routines that assume a == a*.
inline Matrix hermitian_part(const Matrix& a) {
    Matrix h(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        h(i, i) = cplx(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

/// 2n x 2n block matrix [[a00, a01], [a10, a11]]; blocks must be n x n.
inline Matrix block2x2(const Matrix& a00, const Matrix& a01, const Matrix& a10,
                       const Matrix& a11) {
    const std::size_t n = a00.rows();
    if (a00.cols() != n || a01.rows() != n || a01.cols() != n || a10.rows() != n ||
        a10.cols() != n || a11.rows() != n || a11.cols() != n)
        throw input_error("block2x2: all four blocks must be square of equal size");
    Matrix r(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            r(i, j) = a00(i, j);
            r(i, n + j) = a01(i, j);
            r(n + i, j) = a10(i, j);
            r(n + i, n + j) = a11(i, j);
        }
    return r;
}

/// FNV-1a over the raw shape + entry bits; stable across runs, used for
/// input digests in reports.
inline std::uint64_t matrix_digest(const Matrix& a) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const void* p, std::size_t n) {
        const unsigned char* b = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= b[i];
            h *= 1099511628211ull;
        }
    };
    std::uint64_t r = a.rows(), c = a.cols();
    mix(&r, sizeof r);
    mix(&c, sizeof c);
    for (const cplx& z : a.entries()) {
        double re = z.real(), im = z.imag();
        mix(&re, sizeof re);
        mix(&im, sizeof im);
    }
    return h;
}

inline std::string digest_hex(std::uint64_t h) {
    static const char* hexd = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = hexd[h & 0xf];
        h >>= 4;
    }
    return s;
}

}  // namespace submaj
