#include "cmplane/belyi.hpp"
#include "cmplane/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <numeric>

using namespace cmplane;

namespace {

// Riemann-Hurwitz for a cyclic d-fold cover of P^1 branched over three
// points with local monodromy exponents a, b, c.
long hurwitz_genus(long a, long b, long c, long d)
{
    const long ramified = 3 * d - std::gcd(a, d) - std::gcd(b, d) - std::gcd(c, d);
    return 1 + (-2 * d + ramified) / 2;
}

long lattice_count(long d, long l)
{
    long count = 0;
    for (long u = 1; u < l; ++u)
        for (long v = 1; v < d; ++v)
            count += d * u + l * v <= d * l;
    return count;
}

long adjunction_or_smooth(long d, long l)
{
    return l == 1 ? 0 : adjunction_count(d, l);
}

template <class F>
void for_each_cover(long max_d, F&& f)
{
    for (long d = 3; d <= max_d; ++d)
        for (long a = 1; a < d; ++a)
            for (long b = 1; a + b < d; ++b) {
                const long c = d - a - b;
                if (std::gcd(std::gcd(a, b), std::gcd(c, d)) == 1)
                    f(BelyiCover(a, b, c, d));
            }
}

} // namespace

TEST_CASE("Belyi cover validation")
{
    CHECK_THROWS_AS(BelyiCover(4, 1, 4, 10), PreconditionError);
    CHECK_THROWS_AS(BelyiCover(2, 2, 2, 6), PreconditionError);
    CHECK_THROWS_AS(BelyiCover(0, 1, 2, 3), PreconditionError);
    CHECK(BelyiCover(4, 1, 5, 10).to_string() == "y^10 = x^4 (x-z)^1 z^5");
}

TEST_CASE("worked cover (4,1,5,10)")
{
    const BelyiCover c(4, 1, 5, 10);
    CHECK(genus(c) == 2);
    CHECK(cm_exponents(c) == std::vector<long>{1, 3});
    CHECK(cm_conductors(c) == std::set<unsigned long>{10});
    CHECK(deck_charpoly(c) == CyclotomicProduct::phi(10));
    CHECK(genus(BelyiCover(1, 1, 1, 3)) == 1);
    CHECK(cm_exponents(BelyiCover(1, 1, 1, 3)).size() == 1);
    CHECK_THROWS_AS(eigen_multiplicity(c, 0), PreconditionError);
    CHECK_THROWS_AS(eigen_multiplicity(c, 10), PreconditionError);
}

TEST_CASE("exhaustive scan d <= 60")
{
    long covers = 0;
    for_each_cover(60, [&](const BelyiCover& c) {
        ++covers;
        const long g = genus(c);
        REQUIRE(g == hurwitz_genus(c.a(), c.b(), c.c(), c.d()));
        long total = 0;
        for (long j = 1; j < c.d(); ++j) {
            const int m = eigen_multiplicity(c, j);
            REQUIRE((m == 0 || m == 1));
            total += m;
        }
        REQUIRE(total == g);
        REQUIRE(deck_charpoly(c).degree() == 2 * g);
        REQUIRE(static_cast<long>(cm_exponents(c).size()) == g);
        REQUIRE(g == (c.d() - 1) * (c.d() - 2) / 2 - adjunction_or_smooth(c.d(), c.a()) -
                         adjunction_or_smooth(c.d(), c.b()) - adjunction_or_smooth(c.d(), c.c()));
    });
    CHECK(covers > 10000);
}

TEST_CASE("deck polynomial agrees with the eigenvalue product on small covers")
{
    for_each_cover(24, [&](const BelyiCover& c) {
        std::vector<std::complex<double>> roots;
        for (long j = 1; j < c.d(); ++j) {
            const int m = eigen_multiplicity(c, j) + eigen_multiplicity(c, c.d() - j);
            for (int k = 0; k < m; ++k)
                roots.push_back(oracle::root_of_unity(j, c.d()));
        }
        oracle::Poly got;
        const IntPolynomial deck = deck_charpoly(c).expand();
        for (const auto& x : deck.coeffs())
            got.push_back(x.get_si());
        REQUIRE(got == oracle::from_roots(roots));
        for (long j : cm_exponents(c))
            REQUIRE(cm_conductors(c).count(static_cast<unsigned long>(c.d() / std::gcd(j, c.d()))) == 1);
    });
}

TEST_CASE("adjunction count equals the lattice count for 2 <= d, l <= 40")
{
    CHECK(adjunction_count(2, 3) == 1);
    CHECK(adjunction_count(10, 4) == 14);
    CHECK(adjunction_count(3, 3) == 3);
    for (long d = 2; d <= 40; ++d)
        for (long l = 2; l <= 40; ++l)
            REQUIRE(adjunction_count(d, l) == lattice_count(d, l));
    CHECK_THROWS_AS(adjunction_count(1, 5), PreconditionError);
}
