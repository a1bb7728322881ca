#include "tasirs/errors.hpp"
#include "tasirs/kernels.hpp"
#include "tasirs/numerics.hpp"
#include "tasirs/random.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <numbers>
#include <set>

using namespace tasirs;
using test::max_abs_diff;
using test::random_matrix;

TEST_CASE("philox4x32-10 known-answer vectors") {
    using A4 = std::array<std::uint32_t, 4>;
    CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("random source determinism and stream separation") {
    RandomSource a(42, 7), b(42, 7), c(42, 8), d(43, 7), e(42, 7, 1);
    std::vector<std::uint64_t> va, vb, vc, vd, ve;
    for (int i = 0; i < 16; ++i) {
        va.push_back(a());
        vb.push_back(b());
        vc.push_back(c());
        vd.push_back(d());
        ve.push_back(e());
    }
    CHECK(va == vb);
    CHECK(va != vc);
    CHECK(va != vd);
    CHECK(va != ve);

    RandomSource r1(5, 3), r2(5, 3);
    const ComplexMatrix m1 = sample_complex_gaussian(r1, 3, 5);
    const ComplexMatrix m2 = sample_complex_gaussian(r2, 3, 5);
    CHECK(m1 == m2);  // bit-identical
}

TEST_CASE("distinct streams are uncorrelated") {
    // Correlation of paired draws from neighbouring streams, 1e5 pairs.
    constexpr int n = 100000;
    double sxy = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0;
    for (int i = 0; i < n; ++i) {
        RandomSource x(11, static_cast<std::uint64_t>(i)), y(11, static_cast<std::uint64_t>(i) + 1);
        const double u = x.uniform01(), v = y.uniform01();
        sx += u, sy += v, sxy += u * v, sxx += u * u, syy += v * v;
    }
    const double cov = sxy / n - sx / n * sy / n;
    const double corr = cov / std::sqrt((sxx / n - sx / n * sx / n) * (syy / n - sy / n * sy / n));
    CHECK(std::abs(corr) < 0.02);
}

TEST_CASE("complex Gaussian moments over 1e5 draws") {
    RandomSource rng(2024, 0);
    const ComplexMatrix m = sample_complex_gaussian(rng, 1000, 100);
    Complex mean = 0.0;
    double var_re = 0.0, var_im = 0.0;
    for (const auto& v : m.entries()) {
        mean += v;
        var_re += v.real() * v.real();
        var_im += v.imag() * v.imag();
    }
    const double n = static_cast<double>(m.size());
    mean /= n;
    var_re /= n;
    var_im /= n;
    CHECK(std::abs(mean.real()) < 0.02);
    CHECK(std::abs(mean.imag()) < 0.02);
    CHECK(std::abs(var_re + var_im - 1.0) < 0.02);
    CHECK(std::abs(var_re - 0.5) < 0.01);
    CHECK(std::abs(var_im - 0.5) < 0.01);
    CHECK_THROWS_AS(sample_complex_gaussian(rng, 0, 3), ValidationError);
}

TEST_CASE("uniform phases: range and chi-square uniformity") {
    RandomSource rng(77, 1);
    CHECK_THROWS_AS(sample_uniform_phase(rng, 0), ValidationError);
    const auto ph = sample_uniform_phase(rng, 100000);
    constexpr int bins = 20;
    std::array<int, bins> count{};
    for (double t : ph) {
        REQUIRE(t >= 0.0);
        REQUIRE(t < 2.0 * std::numbers::pi);
        ++count[static_cast<std::size_t>(t / (2.0 * std::numbers::pi) * bins)];
    }
    const double expected = 100000.0 / bins;
    double chi2 = 0.0;
    for (int c : count) chi2 += (c - expected) * (c - expected) / expected;
    // 99th percentile of chi-square with 19 degrees of freedom.
    CHECK(chi2 < 36.191);
}

TEST_CASE("frobenius_norm_sq") {
    CHECK(frobenius_norm_sq(ComplexMatrix::identity(2)) == 2.0);
    CHECK(frobenius_norm_sq(ComplexMatrix(3, 2)) == 0.0);
    RandomSource rng(3, 3);
    const ComplexMatrix m = random_matrix(rng, 1, 4);
    double brute = 0.0;
    for (std::size_t c = 0; c < 4; ++c) brute += m(0, c).real() * m(0, c).real() + m(0, c).imag() * m(0, c).imag();
    CHECK(frobenius_norm_sq(m) == doctest::Approx(brute).epsilon(1e-14));
}

TEST_CASE("matmul") {
    RandomSource rng(4, 4);
    const ComplexMatrix a = random_matrix(rng, 2, 3);
    CHECK(max_abs_diff(matmul(a, ComplexMatrix::identity(3)), a) == 0.0);

    const ComplexMatrix row(1, 2, {1.0, Complex(0, 1)});
    const ComplexMatrix col(2, 1, {1.0, Complex(0, -1)});
    const ComplexMatrix s = matmul(row, col);
    REQUIRE(s.rows() == 1);
    REQUIRE(s.cols() == 1);
    CHECK(std::abs(s(0, 0) - Complex(2.0, 0.0)) < 1e-15);

    CHECK_THROWS_AS(matmul(a, a), ValidationError);

    for (int i = 0; i < 100; ++i) {
        const ComplexMatrix x = random_matrix(rng, 2, 2), y = random_matrix(rng, 2, 2), z = random_matrix(rng, 2, 2);
        CHECK(max_abs_diff(matmul(matmul(x, y), z), matmul(x, matmul(y, z))) < 1e-12);
        CHECK(max_abs_diff(matmul(x, y + z), matmul(x, y) + matmul(x, z)) < 1e-12);
    }
}

TEST_CASE("matmul against an elementwise triple loop") {
    RandomSource rng(8, 8);
    const ComplexMatrix a = random_matrix(rng, 3, 17), b = random_matrix(rng, 17, 5);
    const ComplexMatrix c = matmul(a, b);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < 17; ++k) s += a(i, k) * b(k, j);
            CHECK(std::abs(c(i, j) - s) < 1e-12);
        }
}

TEST_CASE("hermitian") {
    RandomSource rng(5, 5);
    const ComplexMatrix m = random_matrix(rng, 3, 4);
    const ComplexMatrix h = hermitian(m);
    REQUIRE(h.rows() == 4);
    REQUIRE(h.cols() == 3);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(h(i, j) == std::conj(m(j, i)));
    CHECK(hermitian(h) == m);
    const std::array<Complex, 3> d{1.5, -2.0, 0.25};
    CHECK(hermitian(ComplexMatrix::diagonal(d)) == ComplexMatrix::diagonal(d));
    for (int i = 0; i < 50; ++i) {
        const ComplexMatrix x = random_matrix(rng, 2, 5);
        CHECK(frobenius_norm_sq(x) == doctest::Approx(frobenius_norm_sq(hermitian(x))).epsilon(1e-14));
    }
}

TEST_CASE("invert_gram") {
    const ComplexMatrix h(1, 2, {1.0, Complex(0, 1)});
    const ComplexMatrix g = invert_gram(h);
    REQUIRE(g.rows() == 1);
    CHECK(std::abs(g(0, 0) - 0.5) < 1e-15);

    CHECK(max_abs_diff(invert_gram(ComplexMatrix::identity(2)), ComplexMatrix::identity(2)) < 1e-15);

    RandomSource rng(6, 6);
    for (int i = 0; i < 1000; ++i) {
        const ComplexMatrix x = random_matrix(rng, 1 + i % 2, 2 + i % 3);
        const ComplexMatrix gram = matmul(x, hermitian(x));
        const ComplexMatrix residual = matmul(gram, invert_gram(x)) - ComplexMatrix::identity(x.rows());
        CHECK(std::sqrt(frobenius_norm_sq(residual)) < 1e-10);
    }

    CHECK_THROWS_AS(invert_gram(ComplexMatrix(1, 2)), SingularityError);
    // Rank-one 2x2 Gram: identical rows.
    CHECK_THROWS_AS(invert_gram(ComplexMatrix(2, 2, {1.0, 2.0, 1.0, 2.0})), SingularityError);
    CHECK_THROWS_AS(invert_gram(ComplexMatrix(3, 3)), ValidationError);
}

TEST_CASE("matrix construction checks entry count") {
    CHECK_THROWS_AS(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), ValidationError);
    const std::array<std::size_t, 2> cols{2, 0};
    const ComplexMatrix m(1, 3, {1.0, 2.0, 3.0});
    CHECK(m.select_columns(cols) == ComplexMatrix(1, 2, {3.0, 1.0}));
}
