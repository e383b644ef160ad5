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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "submaj/matrix_functions.hpp"
#include "submaj/rng.hpp"
#include "submaj/svd.hpp"

using namespace submaj;

namespace {

double reconstruction_error(const Matrix& a, const SvdResult& s) {
    Matrix rec(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            cplx z = 0.0;
            for (std::size_t k = 0; k < s.singular_values.size(); ++k)
                z += s.u(i, k) * s.singular_values[k] * std::conj(s.v(j, k));
            rec(i, j) = z;
        }
    return (a - rec).frobenius_norm();
}

double isometry_error(const Matrix& u) {
    const Matrix g = u.adjoint() * u;
    return (g - Matrix::identity(u.cols())).frobenius_norm();
}

}  // namespace

TEST_CASE("svd on spec'd examples") {
    SUBCASE("identity 2x2") {
        auto s = svd(Matrix::identity(2));
        CHECK(s.singular_values[0] == doctest::Approx(1.0));
        CHECK(s.singular_values[1] == doctest::Approx(1.0));
    }
    SUBCASE("rank-one nilpotent") {
        // a^* a = diag(0, 1), so the singular values are exactly {1, 0}
        auto s = svd(Matrix{{0.0, 1.0}, {0.0, 0.0}});
        CHECK(s.singular_values[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(s.singular_values[1] == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("diagonal with signs") {
        auto s = svd(Matrix::diagonal(std::vector<double>{3.0, -1.0, 2.0}));
        CHECK(s.singular_values == std::vector<double>{3.0, 2.0, 1.0});
    }
    SUBCASE("non-finite entries rejected") {
        Matrix bad(2, 2);
        bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(svd(bad), input_error);
    }
}

TEST_CASE("svd invariants on random inputs") {
    const std::vector<std::pair<std::size_t, std::size_t>> shapes = {
        {1, 1}, {2, 2}, {3, 3}, {5, 3}, {3, 5}, {8, 8}, {16, 16}, {12, 7}};
    for (auto [m, n] : shapes) {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            Rng rng(derive_stream(1234, {m, n, seed}));
            Matrix a(m, n);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.complex_gaussian();

            auto s = svd(a);
            const std::size_t k = std::min(m, n);
            REQUIRE(s.singular_values.size() == k);
            for (std::size_t i = 0; i + 1 < k; ++i) {
                CHECK(s.singular_values[i] >= s.singular_values[i + 1]);
                CHECK(s.singular_values[i + 1] >= 0.0);
            }
            const double rtol = 1e-12 * (1.0 + a.frobenius_norm());
            CHECK(reconstruction_error(a, s) <= rtol * 10);
            CHECK(isometry_error(s.u) <= 1e-13 * k * 10);
            CHECK(isometry_error(s.v) <= 1e-13 * k * 10);
        }
    }
}

TEST_CASE("svd of 2x2 matches the closed form") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(derive_stream(77, {seed}));
        Matrix a(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) a(i, j) = rng.complex_gaussian();
        auto s = svd(a);
        auto [s1, s2] = oracle::svd2x2(a);
        CHECK(s.singular_values[0] == doctest::Approx(s1).epsilon(1e-11));
        CHECK(s.singular_values[1] == doctest::Approx(s2).epsilon(1e-11));
    }
}

TEST_CASE("svd handles rank deficiency and the zero matrix") {
    SUBCASE("zero matrix") {
        auto s = svd(Matrix::zero(3, 3));
        for (double v : s.singular_values) CHECK(v == 0.0);
        CHECK(isometry_error(s.u) <= 1e-14);
        CHECK(rank_of(s) == 0);
    }
    SUBCASE("singular gram matrices") {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const Matrix b = gen_psd(6, seed, /*allow_singular=*/true);
            auto s = svd(b);
            CHECK(rank_of(s) < 6);
            CHECK(isometry_error(s.u) <= 1e-12);
            CHECK(reconstruction_error(b, s) <= 1e-11 * (1.0 + b.frobenius_norm()));
        }
    }
}

TEST_CASE("eig_hermitian on spec'd examples") {
    SUBCASE("diagonal") {
        auto e = eig_hermitian(Matrix::diagonal(std::vector<double>{2.0, -1.0}));
        CHECK(e.eigenvalues == std::vector<double>{-1.0, 2.0});
    }
    SUBCASE("off-diagonal flip has char poly l^2 - 1") {
        auto e = eig_hermitian(Matrix{{0.0, 1.0}, {1.0, 0.0}});
        CHECK(e.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("zero matrix") {
        auto e = eig_hermitian(Matrix::zero(3, 3));
        for (double l : e.eigenvalues) CHECK(l == 0.0);
    }
    SUBCASE("rejects non-square and non-Hermitian") {
        CHECK_THROWS_AS(eig_hermitian(Matrix(2, 3)), input_error);
        CHECK_THROWS_AS(eig_hermitian(Matrix{{0.0, 1.0}, {0.0, 0.0}}), input_error);
    }
}

TEST_CASE("eig_hermitian invariants on random Hermitian inputs") {
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 16u, 32u}) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const Matrix a = gen_hermitian(n, derive_stream(9, {n, seed}), 3.0);
            auto e = eig_hermitian(a);
            CHECK(isometry_error(e.vectors) <= 1e-13 * n * 10);
            // a * V = V * diag(lambda)
            const Matrix av = a * e.vectors;
            double err = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    err += std::norm(av(i, k) - e.vectors(i, k) * e.eigenvalues[k]);
            CHECK(std::sqrt(err) <= 1e-12 * (1.0 + a.frobenius_norm()) * 10);
            for (std::size_t k = 0; k + 1 < n; ++k)
                CHECK(e.eigenvalues[k] <= e.eigenvalues[k + 1]);
        }
    }
}

TEST_CASE("matrix_exp on spec'd examples") {
    SUBCASE("exp(0) = I") {
        const Matrix e = matrix_exp(Matrix::zero(3, 3));
        CHECK((e - Matrix::identity(3)).frobenius_norm() <= 1e-15);
    }
    SUBCASE("diagonal") {
        const Matrix e = matrix_exp(Matrix::diagonal(std::vector<double>{1.5, -0.5}));
        CHECK(e(0, 0).real() == doctest::Approx(std::exp(1.5)).epsilon(1e-14));
        CHECK(e(1, 1).real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
        CHECK(std::abs(e(0, 1)) <= 1e-15);
    }
    SUBCASE("nilpotent: series terminates at k = 1") {
        const Matrix a{{0.0, 1.0}, {0.0, 0.0}};
        const Matrix e = matrix_exp_series(a);
        CHECK((e - (Matrix::identity(2) + a)).frobenius_norm() <= 1e-15);
    }
    SUBCASE("rejects non-square") { CHECK_THROWS_AS(matrix_exp(Matrix(2, 3)), input_error); }
}

TEST_CASE("matrix_exp properties") {
    SUBCASE("exp(a) exp(-a) = I for moderate norms") {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            Rng rng(derive_stream(21, {seed}));
            Matrix a(4, 4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) a(i, j) = 0.5 * rng.complex_gaussian();
            const Matrix prod = matrix_exp_series(a) * matrix_exp_series(cplx(-1.0) * a);
            const double bound = 1e-12 * std::exp(2.0 * a.frobenius_norm());
            CHECK((prod - Matrix::identity(4)).frobenius_norm() <= bound * 100);
        }
    }
    SUBCASE("series route agrees with the eigendecomposition route on Hermitian input") {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const Matrix a = gen_hermitian(5, derive_stream(22, {seed}), 2.0);
            const Matrix e1 = matrix_exp_series(a);
            const Matrix e2 = matrix_exp_hermitian(a);
            CHECK((e1 - e2).frobenius_norm() <= 1e-12 * (1.0 + e2.frobenius_norm()) * 10);
        }
    }
    SUBCASE("series route agrees with a naive long-double series") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Rng rng(derive_stream(23, {seed}));
            Matrix a(3, 3);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) a(i, j) = rng.complex_gaussian();
            const Matrix e1 = matrix_exp_series(a);
            const Matrix e2 = oracle::naive_exp(a);
            CHECK((e1 - e2).frobenius_norm() <= 1e-12 * (1.0 + e2.frobenius_norm()) * 10);
        }
    }
}

TEST_CASE("psd_power on spec'd examples") {
    SUBCASE("square root of diag(4, 9)") {
        const Matrix r = psd_power(Matrix::diagonal(std::vector<double>{4.0, 9.0}), 0.5);
        CHECK(r(0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(r(1, 1).real() == doctest::Approx(3.0).epsilon(1e-14));
    }
    SUBCASE("theta = 1 returns the input") {
        const Matrix b = gen_psd(4, 5, false);
        CHECK((psd_power(b, 1.0) - b).frobenius_norm() <= 1e-12 * (1.0 + b.frobenius_norm()));
    }
    SUBCASE("identity at any theta") {
        const Matrix r = psd_power(Matrix::identity(3), 0.3);
        CHECK((r - Matrix::identity(3)).frobenius_norm() <= 1e-14);
    }
    SUBCASE("rejects negative eigenvalues and bad theta") {
        const Matrix neg = Matrix::diagonal(std::vector<double>{1.0, -1.0});
        CHECK_THROWS_AS(psd_power(neg, 0.5), input_error);
        CHECK_THROWS_AS(psd_power(Matrix::identity(2), 1.5), input_error);
        CHECK_THROWS_AS(psd_power(Matrix::identity(2), -0.1), input_error);
    }
    SUBCASE("tiny negative eigenvalues are clamped, not rejected") {
        Matrix almost = Matrix::diagonal(std::vector<double>{1.0, -1e-14});
        const Matrix r = psd_power(almost, 0.5);
        CHECK(r(1, 1).real() == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("psd_power(b, t) * psd_power(b, 1-t) reassembles b") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Matrix b = gen_psd(5, derive_stream(31, {seed}), seed % 2 == 1);
        for (double theta : {0.0, 0.25, 0.5, 0.8, 1.0}) {
            const Matrix prod = psd_power(b, theta) * psd_power(b, 1.0 - theta);
            CHECK((prod - b).frobenius_norm() <= 1e-11 * (1.0 + b.frobenius_norm()) * 10);
        }
    }
}

TEST_CASE("polar decomposition") {
    SUBCASE("PSD input: modulus is the input itself") {
        const Matrix a = Matrix::diagonal(std::vector<double>{2.0, 0.0});
        auto [u, mod] = polar(a);
        CHECK((mod - a).frobenius_norm() <= 1e-13);
        CHECK(u(0, 0).real() == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::abs(u(1, 1)) <= 1e-12);  // support projection excludes the kernel
    }
    SUBCASE("nilpotent: modulus diag(0, 1), u maps e2 to e1") {
        auto [u, mod] = polar(Matrix{{0.0, 1.0}, {0.0, 0.0}});
        CHECK(mod(1, 1).real() == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::abs(mod(0, 0)) <= 1e-13);
        CHECK(std::abs(u(0, 1) - cplx(1.0)) <= 1e-12);
    }
    SUBCASE("unitary input: u = a, modulus = I") {
        const Matrix q = haar_unitary(4, 99);
        auto [u, mod] = polar(q);
        CHECK((mod - Matrix::identity(4)).frobenius_norm() <= 1e-12);
        CHECK((u - q).frobenius_norm() <= 1e-11);
    }
    SUBCASE("a = u |a| and u^* u is the support projection") {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            Rng rng(derive_stream(41, {seed}));
            Matrix a(5, 5);
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 5; ++j) a(i, j) = rng.complex_gaussian();
            auto [u, mod] = polar(a);
            CHECK((u * mod - a).frobenius_norm() <= 1e-11 * (1.0 + a.frobenius_norm()));
            CHECK(hermitian_deviation(mod) <= 1e-12 * (1.0 + mod.frobenius_norm()));
            const Matrix p = u.adjoint() * u;
            CHECK((p * p - p).frobenius_norm() <= 1e-11);
            CHECK((p * mod - mod).frobenius_norm() <= 1e-11 * (1.0 + mod.frobenius_norm()));
        }
    }
}
