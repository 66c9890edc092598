#include "cmplane/errors.hpp"
#include "cmplane/singularity.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <numeric>

#include <algorithm>
#include <set>

using namespace cmplane;

namespace {

oracle::Poly to_oracle(const IntPolynomial& p)
{
    oracle::Poly out;
    for (const auto& c : p.coeffs())
        out.push_back(c.get_si());
    return out;
}

// Milnor number of a unibranched germ from its semigroup: twice the number of gaps.
long semigroup_milnor_number(const PuiseuxCharacteristic& pc)
{
    // Generators: n, and w_i * n_{i+1} ... n_g.
    const auto w = pc.cabling_numbers();
    std::vector<long> gens{pc.multiplicity()};
    for (std::size_t i = 0; i < w.size(); ++i) {
        long tail = 1;
        for (std::size_t j = i + 1; j < pc.size(); ++j)
            tail *= pc.pairs()[j].n;
        gens.push_back(w[i] * tail);
    }
    const long bound = 2 * std::accumulate(gens.begin(), gens.end(), 1L, std::multiplies<>()) + 2;
    std::vector<char> in(static_cast<std::size_t>(bound), 0);
    in[0] = 1;
    for (long v = 1; v < bound; ++v)
        for (long g : gens)
            if (v >= g && in[static_cast<std::size_t>(v - g)]) {
                in[static_cast<std::size_t>(v)] = 1;
                break;
            }
    return 2 * std::count(in.begin(), in.end(), 0);
}

} // namespace

TEST_CASE("one-pair characteristic polynomial")
{
    CHECK(charpoly_one_pair(2, 3) == CyclotomicProduct::phi(6));
    CHECK(charpoly_one_pair(2, 5) == CyclotomicProduct::phi(10));
    CHECK(charpoly_one_pair(3, 4) == CyclotomicProduct::phi(6) * CyclotomicProduct::phi(12));
    for (long p = 2; p <= 30; ++p)
        for (long q = 2; q <= 30; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            const auto d = charpoly_one_pair(p, q);
            REQUIRE(d.degree() == (p - 1) * (q - 1));
            REQUIRE(d.is_cyclotomic());
            const IntPolynomial lhs = d.expand() * IntPolynomial::power_minus_one(p) * IntPolynomial::power_minus_one(q);
            REQUIRE(lhs == IntPolynomial::power_minus_one(p * q) * IntPolynomial::power_minus_one(1));
        }
    CHECK_THROWS_AS(charpoly_one_pair(4, 6), PreconditionError);
    CHECK_THROWS_AS(charpoly_one_pair(1, 3), PreconditionError);
}

TEST_CASE("spectrum of u^p = v^q")
{
    const auto s = spectrum_one_pair(2, 3);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == mpq_class(5, 6));
    for (long p = 2; p <= 30; ++p)
        for (long q = 2; q <= 30; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            const auto spec = spectrum_one_pair(p, q);
            REQUIRE(static_cast<long>(spec.size()) == (p - 1) * (q - 1) / 2);
            REQUIRE(std::is_sorted(spec.begin(), spec.end()));
            // The spectrum and its mirror 2 - alpha exponentiate to the roots of
            // Delta: zeta_{pq}^k with p and q not dividing k, each once.
            INFO("(" << p << "," << q << ")");
            std::multiset<long> ks;
            std::vector<std::complex<double>> roots;
            for (const auto& a : spec) {
                const mpq_class scaled = a * p * q;
                const long num = scaled.get_num().get_si();
                ks.insert(num);
                ks.insert(p * q - num);
                roots.push_back(oracle::root_of_unity(num, p * q));
                roots.push_back(oracle::root_of_unity(-num, p * q));
            }
            std::multiset<long> want;
            for (long k = 1; k < p * q; ++k)
                if (k % p != 0 && k % q != 0)
                    want.insert(k);
            REQUIRE(ks == want);
            if (p * q > 60)
                continue;
            REQUIRE(oracle::from_roots(roots) == to_oracle(charpoly_one_pair(p, q).expand()));
        }
}

TEST_CASE("Puiseux characteristic validation and cabling numbers")
{
    CHECK_THROWS_AS(PuiseuxCharacteristic({}), PreconditionError);
    CHECK_THROWS_AS(PuiseuxCharacteristic({{4, 2}}), PreconditionError);
    CHECK_THROWS_AS(PuiseuxCharacteristic({{1, 2}}), PreconditionError);
    CHECK_THROWS_AS(PuiseuxCharacteristic({{3, 2}, {2, 4}}), PreconditionError);
    const PuiseuxCharacteristic pc({{3, 2}, {6, 5}});
    CHECK(pc.cabling_numbers() == std::vector<long>{3, 36});
    CHECK(pc.multiplicity() == 10);
    CHECK(pc.exponents() == std::vector<mpq_class>{mpq_class(3, 2), mpq_class(21, 10)});
    CHECK(PuiseuxCharacteristic({{3, 2}, {1, 2}}).cabling_numbers() == std::vector<long>{3, 13});
}

TEST_CASE("Puiseux characteristic polynomial degree equals the semigroup Milnor number")
{
    std::vector<PuiseuxCharacteristic> germs;
    for (long k1 = 3; k1 <= 9; ++k1)
        for (long n1 = 2; n1 < k1; ++n1) {
            if (std::gcd(k1, n1) != 1)
                continue;
            germs.emplace_back(std::vector<PuiseuxPair>{{k1, n1}});
            for (long n2 = 2; n2 <= 3; ++n2)
                for (long k2 = 1; k2 <= 4; ++k2)
                    if (std::gcd(k2, n2) == 1)
                        germs.emplace_back(std::vector<PuiseuxPair>{{k1, n1}, {k2, n2}});
        }
    germs.emplace_back(std::vector<PuiseuxPair>{{3, 2}, {1, 2}, {1, 2}});
    for (const auto& pc : germs) {
        const auto d = charpoly_puiseux(pc);
        REQUIRE(d.is_cyclotomic());
        REQUIRE(d.degree() == semigroup_milnor_number(pc));
        REQUIRE(d.exponent(1) == 0);
    }
    CHECK(charpoly_puiseux(PuiseuxCharacteristic({{3, 2}, {1, 2}})) ==
          CyclotomicProduct::phi(26) * CyclotomicProduct::phi(12));
}

TEST_CASE("ADE characteristic polynomials agree with the weighted-homogeneous oracle")
{
    struct Case {
        std::string name;
        long long ax, ay, d;
    };
    std::vector<Case> cases{{"E6", 4, 3, 12}, {"E7", 3, 2, 9}, {"E8", 5, 3, 15}};
    for (int m = 1; m <= 12; ++m)
        cases.push_back({"A" + std::to_string(m), m + 1, 2, 2 * (m + 1)}); // x^2 + y^{m+1}
    for (int n = 4; n <= 12; ++n)
        cases.push_back({"D" + std::to_string(n), n - 2, 2, 2 * (n - 1)}); // x^2 y + y^{n-1}
    for (const auto& c : cases) {
        INFO(c.name);
        const auto got = charpoly_ade(parse_ade(c.name));
        REQUIRE(to_oracle(got.expand()) == oracle::from_roots(oracle::quasi_homogeneous_eigenvalues(c.ax, c.ay, c.d)));
    }
    CHECK(charpoly_ade(parse_ade("E7")) == CyclotomicProduct::phi(1) * CyclotomicProduct::phi(9));
    CHECK(charpoly_ade(parse_ade("d4")).expand() == IntPolynomial::power_minus_one(3) * IntPolynomial{-1, 1});
    CHECK_THROWS_AS(parse_ade("D3"), PreconditionError);
    CHECK_THROWS_AS(parse_ade("E9"), PreconditionError);
    CHECK_THROWS_AS(parse_ade("A0"), PreconditionError);
    CHECK_THROWS_AS(parse_ade("X5"), PreconditionError);
}

TEST_CASE("descriptors")
{
    const SingularityDescriptor a4{AdeType{'A', 4}};
    CHECK(a4.is_unibranched());
    CHECK(a4.one_pair_type() == OnePair{2, 5});
    CHECK_FALSE(SingularityDescriptor{AdeType{'A', 3}}.is_unibranched());
    CHECK(SingularityDescriptor{AdeType{'A', 1}}.is_node());
    CHECK(SingularityDescriptor{OnePair{3, 2}}.one_pair_type() == OnePair{2, 3});
    CHECK(SingularityDescriptor{AdeType{'E', 8}}.one_pair_type() == OnePair{3, 5});
    CHECK_FALSE(SingularityDescriptor{PuiseuxCharacteristic({{3, 2}, {1, 2}})}.one_pair_type().has_value());
    CHECK(local_charpoly(a4) == charpoly_one_pair(2, 5));
}

TEST_CASE("CM verdicts")
{
    CHECK(cm_verdict(SingularityDescriptor{OnePair{2, 3}}).status == CmStatus::CmByUnibranched);
    CHECK(cm_verdict(SingularityDescriptor{PuiseuxCharacteristic({{3, 2}, {6, 5}})}).status ==
          CmStatus::CmByUnibranched);

    // D4: (t^3 - 1)(t - 1) has no multiple root other than 1 and Delta(-1) = 4.
    const auto d4 = cm_verdict(SingularityDescriptor{AdeType{'D', 4}});
    CHECK(d4.status == CmStatus::CmByCriterion);
    CHECK(d4.value_at_minus_one == 4);

    // A3 = (t - 1)(t^2 + 1) is two-branched but satisfies the criterion.
    const auto a3 = cm_verdict(SingularityDescriptor{AdeType{'A', 3}});
    CHECK(a3.status == CmStatus::CmByCriterion);
    CHECK(a3.value_at_minus_one == -4);

    const IntPolynomial four_fold = pow(IntPolynomial{-1, 1}, 3) * pow(IntPolynomial{1, 0, 1}, 2) * pow(IntPolynomial{1, 1}, 2);
    const auto v = cm_verdict(SingularityDescriptor{RawCharpoly{four_fold}});
    CHECK(v.status == CmStatus::CriterionInapplicable);
    CHECK(v.multiple_roots == std::vector<std::pair<unsigned long, unsigned>>{{2, 2}, {4, 2}});
    CHECK(to_string(v.status) == "criterion-inapplicable");

    // Criterion status implies no multiple roots besides 1 and Delta(-1) != 0.
    for (int n = 4; n <= 20; ++n) {
        const auto r = cm_verdict(SingularityDescriptor{AdeType{'D', n}});
        if (r.status == CmStatus::CmByCriterion) {
            REQUIRE(r.multiple_roots.empty());
            REQUIRE(r.value_at_minus_one != 0);
        }
    }
}
