#include "cmplane/cyclo_matrix.hpp"
#include "cmplane/cyclotomic_field.hpp"
#include "cmplane/errors.hpp"

#include <doctest.h>

#include <random>

using namespace cmplane;

namespace {

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9)
{
    return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

CyclotomicNumber random_element(std::mt19937& rng, unsigned long n)
{
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    std::vector<mpq_class> c;
    for (unsigned long i = 0; i < n; ++i) {
        mpq_class q(num(rng), den(rng));
        q.canonicalize();
        c.push_back(q);
    }
    return CyclotomicNumber::from_coeffs(n, c);
}

} // namespace

TEST_CASE("field arithmetic matches the complex embedding")
{
    std::mt19937 rng(7);
    for (unsigned long n : {1UL, 3UL, 4UL, 5UL, 8UL, 12UL, 15UL, 20UL}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = random_element(rng, n);
            const auto b = random_element(rng, n);
            INFO("n = " << n << " a = " << a.to_string() << " b = " << b.to_string());
            REQUIRE(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
            REQUIRE(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
            if (!b.is_zero()) {
                REQUIRE(a / b * b == a);
                REQUIRE(close(b.inverse().to_complex(), 1.0 / b.to_complex(), 1e-7));
            }
        }
    }
}

TEST_CASE("roots of unity")
{
    for (unsigned long n = 1; n <= 30; ++n) {
        const auto z = CyclotomicNumber::zeta(n);
        REQUIRE(pow(z, static_cast<unsigned>(n)) == CyclotomicNumber(1));
        REQUIRE(CyclotomicNumber::zeta(n, -1) * z == CyclotomicNumber(1));
        CyclotomicNumber sum;
        for (unsigned long k = 0; k < n; ++k)
            sum += CyclotomicNumber::zeta(n, static_cast<long>(k));
        REQUIRE(sum == CyclotomicNumber(n == 1 ? 1 : 0));
    }
    const auto i = CyclotomicNumber::zeta(4);
    CHECK(i * i == CyclotomicNumber(-1));
    // zeta_3 in Q(zeta_12) is zeta_12^4.
    CHECK(CyclotomicNumber::zeta(3) + CyclotomicNumber::zeta(4) ==
          CyclotomicNumber::zeta(12, 4) + CyclotomicNumber::zeta(12, 3));
    CHECK(CyclotomicNumber::zeta(3).lift(12) == CyclotomicNumber::zeta(12, 4));
    CHECK_THROWS_AS(CyclotomicNumber().inverse(), PreconditionError);
}

TEST_CASE("exact rank")
{
    const CyclotomicNumber z = CyclotomicNumber::zeta(5);
    auto m = CycloMatrix::from_rows({{1, z, z * z}, {z, z * z, z * z * z}, {1, 1, 1}});
    CHECK(rank(m) == 2);
    CHECK(numeric_rank(m) == 2);
    CHECK(rank(CycloMatrix(3, 4, 7)) == 0);
    CHECK_THROWS_AS(CycloMatrix::from_rows({{1, 2}, {3}}), PreconditionError);
}

TEST_CASE("exact rank of products of random factors equals numeric rank")
{
    std::mt19937 rng(11);
    for (unsigned long n : {3UL, 4UL, 12UL, 20UL}) {
        for (std::size_t inner = 0; inner <= 5; ++inner) {
            const std::size_t rows = 6, cols = 7;
            std::vector<std::vector<CyclotomicNumber>> a(rows, std::vector<CyclotomicNumber>(inner));
            std::vector<std::vector<CyclotomicNumber>> b(inner, std::vector<CyclotomicNumber>(cols));
            for (auto& r : a)
                for (auto& x : r)
                    x = random_element(rng, n);
            for (auto& r : b)
                for (auto& x : r)
                    x = random_element(rng, n);
            CycloMatrix m(rows, cols, n);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) {
                    CyclotomicNumber s = CyclotomicNumber(0).lift(n);
                    for (std::size_t k = 0; k < inner; ++k)
                        s += a[i][k] * b[k][j];
                    m.set(i, j, s.lift(n));
                }
            const std::size_t r = rank(m);
            INFO("n = " << n << " inner = " << inner);
            REQUIRE(r <= inner);
            REQUIRE(r == numeric_rank(m));

            // Invariance under elementary row operations.
            CycloMatrix e = m;
            e.swap_rows(0, 5);
            const auto c = random_element(rng, n);
            for (std::size_t j = 0; j < cols; ++j)
                e.set(2, j, (e(2, j) + c * e(4, j)).lift(n));
            REQUIRE(rank(e) == r);
        }
    }
}
