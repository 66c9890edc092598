#include "cmplane/alexander.hpp"
#include "cmplane/errors.hpp"
#include "cmplane/fixtures.hpp"
#include "cmplane/mordell_weil.hpp"

#include <doctest.h>

using namespace cmplane;

TEST_CASE("rank bounds")
{
    const FiberDescriptor cm10{10, true, true};
    const auto r = rank_report(CyclotomicProduct::phi(10), 10, cm10, true);
    CHECK(r.phi_multiplicity == 1);
    CHECK(r.bound == 4);
    CHECK(r.exact == 4);
    CHECK(r.reason == RankReason::ExactFromAlbaneseMultiplicity);

    const auto b = rank_report(CyclotomicProduct::phi(10), 10, cm10, false);
    CHECK(b.bound == 4);
    CHECK_FALSE(b.exact.has_value());
    CHECK(to_string(b.reason) == "bound-from-multiplicity");

    const auto none = rank_report(CyclotomicProduct::phi(6), 10, cm10, true);
    CHECK(none.exact == 0);
    CHECK(none.reason == RankReason::NoPhiDFactor);

    const auto no_cm = rank_report(CyclotomicProduct::phi(10), 10, FiberDescriptor{0, true, true}, true);
    CHECK(no_cm.exact == 0);
    CHECK(no_cm.reason == RankReason::NoCmFiber);

    for (unsigned long p : {3UL, 5UL, 7UL}) {
        const auto h = rank_report(CyclotomicProduct::phi(2 * p, 3), 2 * p, FiberDescriptor{2 * p, true, true}, true);
        CHECK(h.exact == static_cast<long>(3 * (p - 1)));
    }
    // Q(zeta_5) = Q(zeta_10).
    CHECK(rank_report(CyclotomicProduct::phi(10), 10, FiberDescriptor{5, true, true}, false).bound == 4);
}

TEST_CASE("rank preconditions")
{
    const auto phi10 = CyclotomicProduct::phi(10);
    CHECK_THROWS_AS(rank_report(phi10, 1, FiberDescriptor{10, true, true}, false), PreconditionError);
    CHECK_THROWS_AS(rank_report(phi10, 10, FiberDescriptor{10, true, false}, false), PreconditionError);
    CHECK_THROWS_AS(rank_report(phi10, 10, FiberDescriptor{10, false, true}, true), PreconditionError);
    CHECK_THROWS_AS(rank_report(phi10, 10, FiberDescriptor{12, true, true}, true), PreconditionError);
    CHECK(same_cyclotomic_field(3, 6));
    CHECK_FALSE(same_cyclotomic_field(4, 8));
}

TEST_CASE("bound is monotone in the Phi_d exponent and zero bound means exact zero")
{
    for (unsigned long d = 2; d <= 30; ++d) {
        const FiberDescriptor fiber{d, true, true};
        long previous = -1;
        for (unsigned s = 0; s <= 4; ++s) {
            const auto alex = CyclotomicProduct::phi(d, s) * CyclotomicProduct::phi(d + 1);
            const auto r = rank_report(alex, d, fiber, false);
            if (d < 3) {
                REQUIRE(r.exact == 0);
                continue;
            }
            REQUIRE(r.bound >= previous);
            previous = r.bound;
            if (r.bound == 0)
                REQUIRE(r.exact == 0);
            if (r.exact)
                REQUIRE(*r.exact == r.bound);
        }
    }
}

TEST_CASE("C_{p,2} family scaling")
{
    for (long p : {3L, 5L, 7L}) {
        const auto d = static_cast<unsigned long>(2 * p);
        const auto cfg = c_p2_configuration(p);
        const auto alex = *alexander_polynomial(cfg, 2, p).polynomial;
        const auto r = rank_report(alex, d, FiberDescriptor{d, true, true}, false);
        CHECK(r.bound == p - 1);
    }
}

TEST_CASE("holonomy consistency")
{
    CHECK(holonomy_consistency(6, {CyclotomicProduct::phi(6), CyclotomicProduct::phi(6)}));
    CHECK_FALSE(holonomy_consistency(10, {CyclotomicProduct::phi(6)}));
    std::vector<CyclotomicProduct> locals;
    for (const auto& pt : c_p2_configuration(5).points)
        locals.push_back(local_charpoly(pt.descriptor()));
    CHECK(holonomy_consistency(10, locals));

    // Without Phi_d locally, any divisor of the local product gives rank 0.
    const auto bound = CyclotomicProduct::phi(6, 3) * CyclotomicProduct::phi(12);
    REQUIRE_FALSE(holonomy_consistency(10, {bound}));
    for (const auto& alex : {CyclotomicProduct(), CyclotomicProduct::phi(6), bound})
        REQUIRE(rank_report(alex, 10, FiberDescriptor{10, true, true}, true).exact == 0);
}
