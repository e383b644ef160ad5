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

#include <numeric>
#include <string_view>

#include "submaj/hermitian_eig.hpp"
#include "submaj/matrix.hpp"

namespace submaj {

/// Splittable counter-style generator: every (seed, path) pair names an
/// independent stream with no sequential dependency between streams, so
/// trials can run on any thread in any order and still reproduce bit-for-bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal (Box-Muller; the spare is cached).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    /// Standard complex normal: E|z|^2 = 1.
    cplx complex_gaussian() {
        const double re = gaussian(), im = gaussian();
        return {re * 0.7071067811865476, im * 0.7071067811865476};
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline std::uint64_t hash_label(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
}  // namespace detail

/// Stream derivation: fold each path component into the key through the
/// splitmix finalizer. Documented scheme: stream(seed, c1, c2, ...) =
/// mix(...mix(mix(seed) ^ c1) ^ c2 ...).
inline std::uint64_t derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = detail::mix64(seed + 0x9e3779b97f4a7c15ull);
    for (std::uint64_t c : path) h = detail::mix64(h ^ (c + 0x9e3779b97f4a7c15ull));
    return h;
}

/// n x n matrix of independent standard complex Gaussians; bit-identical for
/// identical (n, seed).
inline Matrix gen_ginibre(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw input_error("gen_ginibre: n must be >= 1");
    Rng rng(seed);
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
    return g;
}

/// (g + g^*)/2, entry-level symmetrization, rescaled so the operator norm is
/// at most norm_cap.
inline Matrix gen_hermitian(std::size_t n, std::uint64_t seed, double norm_cap) {
    if (n < 1) throw input_error("gen_hermitian: n must be >= 1");
    if (!(norm_cap > 0.0)) throw input_error("gen_hermitian: norm_cap must be > 0");
    Matrix h = hermitian_part(gen_ginibre(n, seed));
    const double opnorm = max_abs_eigenvalue(eig_hermitian(h));
    if (opnorm > norm_cap) h = (norm_cap / opnorm) * h;
    return hermitian_part(h);
}

/// Gram matrix g g^* (exactly Hermitian, PSD). With allow_singular, a random
/// non-empty subset of g's columns is zeroed first, so the result is
/// rank-deficient with probability 1.
inline Matrix gen_psd(std::size_t n, std::uint64_t seed, bool allow_singular) {
    if (n < 1) throw input_error("gen_psd: n must be >= 1");
    Matrix g = gen_ginibre(n, derive_stream(seed, {1}));
    if (allow_singular) {
        Rng rng(derive_stream(seed, {2}));
        const std::size_t max_zero = std::max<std::size_t>(1, n / 2);
        const std::size_t n_zero = 1 + rng.next_u64() % max_zero;
        std::vector<std::size_t> cols(n);
        std::iota(cols.begin(), cols.end(), std::size_t{0});
        for (std::size_t i = 0; i < n_zero; ++i) {
            const std::size_t j = i + rng.next_u64() % (n - i);
            std::swap(cols[i], cols[j]);
            for (std::size_t r = 0; r < n; ++r) g(r, cols[i]) = 0.0;
        }
    }
    return g * g.adjoint();
}

/// Haar-distributed unitary: QR of a Ginibre matrix with the R-diagonal
/// phases folded into Q.
inline Matrix haar_unitary(std::size_t n, Rng& rng) {
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();

    // Householder QR; reflectors applied to I from the left give Q.
    std::vector<std::vector<cplx>> reflectors;
    std::vector<cplx> rdiag(n);
    for (std::size_t k = 0; k < n; ++k) {
        double xnorm2 = 0.0;
        for (std::size_t i = k; i < n; ++i) xnorm2 += std::norm(g(i, k));
        const double xnorm = std::sqrt(xnorm2);
        const cplx alpha = g(k, k);
        const cplx phase = (alpha == cplx{}) ? cplx{1.0, 0.0} : alpha / std::abs(alpha);
        const cplx beta = -phase * xnorm;

        std::vector<cplx> v(n, cplx{});
        double vnorm2 = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            v[i] = g(i, k);
            if (i == k) v[i] -= beta;
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 > 0.0) {
            const double inv = 1.0 / std::sqrt(vnorm2);
            for (std::size_t i = k; i < n; ++i) v[i] *= inv;
            for (std::size_t j = k; j < n; ++j) {
                cplx dot = 0.0;
                for (std::size_t i = k; i < n; ++i) dot += std::conj(v[i]) * g(i, j);
                dot *= 2.0;
                for (std::size_t i = k; i < n; ++i) g(i, j) -= dot * v[i];
            }
        } else {
            v.assign(n, cplx{});
        }
        reflectors.push_back(std::move(v));
        rdiag[k] = g(k, k);
    }

    Matrix q = Matrix::identity(n);
    for (std::size_t k = n; k-- > 0;) {
        const auto& v = reflectors[k];
        for (std::size_t j = 0; j < n; ++j) {
            cplx dot = 0.0;
            for (std::size_t i = k; i < n; ++i) dot += std::conj(v[i]) * q(i, j);
            dot *= 2.0;
            for (std::size_t i = k; i < n; ++i) q(i, j) -= dot * v[i];
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        const double r = std::abs(rdiag[j]);
        const cplx phase = (r == 0.0) ? cplx{1.0, 0.0} : rdiag[j] / r;
        for (std::size_t i = 0; i < n; ++i) q(i, j) *= phase;
    }
    return q;
}

inline Matrix haar_unitary(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return haar_unitary(n, rng);
}

}  // namespace submaj
