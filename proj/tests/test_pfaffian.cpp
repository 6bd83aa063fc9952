#include <doctest.h>

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "squeezechain/pfaffian.hpp"

using namespace squeezechain;
using Complex = std::complex<double>;

namespace {

SkewMatrix random_skew(int dim, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SkewMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            m.set_upper(i, j, Complex{dist(rng), dist(rng)});
        }
    }
    return m;
}

Complex det_eigen(const SkewMatrix& m) {
    Eigen::MatrixXcd a(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) a(i, j) = m(i, j);
    }
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(a).determinant();
}

}  // namespace

TEST_SUITE("pfaffian") {

TEST_CASE("2x2 definition") {
    const Complex a{1.7, -0.4};
    SkewMatrix m(2);
    m.set_upper(0, 1, a);
    CHECK(pfaffian(m) == a);  // single pivot, no arithmetic
    CHECK(pfaffian_oracle(m) == a);
}

TEST_CASE("4x4 closed form") {
    // upper entries (a,b,c | d,e | f): pf = a f - b e + c d
    SUBCASE("power-of-two entries evaluate exactly") {
        SkewMatrix m(4);
        m.set_upper(0, 1, 1.0);
        m.set_upper(0, 2, 2.0);
        m.set_upper(0, 3, 4.0);
        m.set_upper(1, 2, 8.0);
        m.set_upper(1, 3, 16.0);
        m.set_upper(2, 3, 32.0);
        CHECK(pfaffian(m) == Complex{1.0 * 32 - 2.0 * 16 + 4.0 * 8, 0.0});
    }
    SUBCASE("random complex entries") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 50; ++trial) {
            const SkewMatrix m = random_skew(4, rng);
            const Complex closed = m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) +
                                   m(0, 3) * m(1, 2);
            CHECK(std::abs(pfaffian(m) - closed) < 1e-13);
        }
    }
}

TEST_CASE("odd dimension is exactly zero") {
    std::mt19937 rng(5);
    for (int dim : {1, 3, 7}) {
        const SkewMatrix m = random_skew(dim, rng);
        CHECK(pfaffian(m) == Complex{0.0, 0.0});
        CHECK(pfaffian_oracle(m) == Complex{0.0, 0.0});
    }
}

TEST_CASE("matches the recursive oracle") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        for (int dim : {2, 4, 6, 8, 10}) {
            const SkewMatrix m = random_skew(dim, rng);
            const Complex expected = pfaffian_oracle(m);
            CHECK(std::abs(pfaffian(m) - expected) <=
                  1e-10 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST_CASE("oracle rejects large matrices") {
    std::mt19937 rng(9);
    const SkewMatrix m = random_skew(12, rng);
    CHECK_THROWS_AS(pfaffian_oracle(m), DimensionTooLargeError);
}

TEST_CASE("pf^2 = det") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dims(1, 60);
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = dims(rng);
        const SkewMatrix m = random_skew(dim, rng);
        const Complex pf = pfaffian(m);
        const Complex det = det_eigen(m);
        if (dim % 2 == 1) {
            CHECK(pf == Complex{0.0, 0.0});
            continue;
        }
        CHECK(std::abs(pf * pf - det) <= 1e-8 * std::max(1.0, std::abs(det)));
    }
}

TEST_CASE("congruence by a permutation scales by det(P)") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 8;
        const SkewMatrix m = random_skew(dim, rng);
        std::vector<int> perm(dim);
        for (int i = 0; i < dim; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        // sign of the permutation
        double det_p = 1.0;
        std::vector<bool> seen(dim, false);
        for (int i = 0; i < dim; ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = perm[j]) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) det_p = -det_p;
        }
        SkewMatrix pm(dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = i + 1; j < dim; ++j) {
                pm.set_upper(i, j, m(perm[i], perm[j]));
            }
        }
        const Complex lhs = pfaffian(pm);
        const Complex rhs = det_p * pfaffian(m);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("scaling pf(c M) = c^{dim/2} pf(M)") {
    std::mt19937 rng(17);
    const int dim = 6;
    const SkewMatrix m = random_skew(dim, rng);
    const Complex base = pfaffian(m);
    for (Complex c : {Complex{2.0, 0.0}, Complex{-1.0, 0.0},
                      Complex{0.0, 1.0}}) {
        SkewMatrix scaled(dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = i + 1; j < dim; ++j) {
                scaled.set_upper(i, j, c * m(i, j));
            }
        }
        const Complex expected = c * c * c * base;  // c^{dim/2}, dim = 6
        CHECK(std::abs(pfaffian(scaled) - expected) <=
              1e-10 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("singular matrices return zero") {
    // rank-2 skew matrix u v^T - v u^T has pf = 0 for dim >= 4
    const int dim = 6;
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> u(dim), v(dim);
    for (int i = 0; i < dim; ++i) {
        u[i] = Complex{dist(rng), dist(rng)};
        v[i] = Complex{dist(rng), dist(rng)};
    }
    SkewMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            m.set_upper(i, j, u[i] * v[j] - v[i] * u[j]);
        }
    }
    CHECK(std::abs(pfaffian(m)) < 1e-12);
}

TEST_CASE("from_dense validates skew symmetry") {
    std::vector<Complex> good{{0, 0}, {1, 2}, {-1, -2}, {0, 0}};
    CHECK_NOTHROW(SkewMatrix::from_dense(good, 2));
    std::vector<Complex> bad{{0, 0}, {1, 2}, {1, 2}, {0, 0}};
    CHECK_THROWS_AS(SkewMatrix::from_dense(bad, 2), InvalidParameterError);
    std::vector<Complex> bad_diag{{1e-3, 0}, {1, 0}, {-1, 0}, {0, 0}};
    CHECK_THROWS_AS(SkewMatrix::from_dense(bad_diag, 2),
                    InvalidParameterError);
}

TEST_CASE("real and complex instantiations agree") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 12;
        std::vector<double> real_buf(dim * dim, 0.0);
        std::vector<Complex> cplx_buf(dim * dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = i + 1; j < dim; ++j) {
                const double v = dist(rng);
                real_buf[i * dim + j] = v;
                real_buf[j * dim + i] = -v;
                cplx_buf[i * dim + j] = v;
                cplx_buf[j * dim + i] = -v;
            }
        }
        const double pf_real = detail::pfaffian_inplace(real_buf.data(), dim);
        const Complex pf_cplx = detail::pfaffian_inplace(cplx_buf.data(), dim);
        CHECK(std::abs(pf_cplx - Complex{pf_real, 0.0}) <=
              1e-12 * std::max(1.0, std::abs(pf_real)));
    }
}

}  // TEST_SUITE
