#include "cmplane/fixtures.hpp"

#include "cmplane/belyi.hpp"
#include "cmplane/errors.hpp"
#include "cmplane/mordell_weil.hpp"
#include "cmplane/resolution.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cmplane {

CurveConfiguration c_p2_configuration(long p)
{
    if (p < 3 || p % 2 == 0)
        throw PreconditionError("c_p2_configuration: p must be an odd integer >= 3");
    const auto n = static_cast<unsigned long>(4 * p);
    const CyclotomicNumber i = CyclotomicNumber::zeta(n, p);
    CurveConfiguration cfg;
    cfg.degree = 2 * p;
    const SingularityDescriptor cusp{OnePair{2, p}};
    for (const CyclotomicNumber& y : {i, -i})
        for (long k = 0; k < p; ++k)
            cfg.points.emplace_back(ProjectiveCoords{-y * CyclotomicNumber::zeta(n, 4 * k), y, CyclotomicNumber(1)},
                                    cusp);
    return cfg;
}

namespace {

FixtureResult check(std::string name, const std::function<std::string()>& body)
{
    FixtureResult r{std::move(name), false, ""};
    try {
        r.detail = body();
        r.passed = r.detail.empty();
        if (r.passed)
            r.detail = "ok";
    } catch (const std::exception& e) {
        r.detail = std::string("threw: ") + e.what();
    }
    return r;
}

std::string expect_poly(const CyclotomicProduct& got, const IntPolynomial& want)
{
    if (got.expand() == want)
        return "";
    return "got " + got.to_string() + " = " + got.expand().to_string() + ", expected " + want.to_string();
}

std::string expect_eq(long got, long want, const std::string& what)
{
    if (got == want)
        return "";
    return what + " = " + std::to_string(got) + ", expected " + std::to_string(want);
}

IntPolynomial phis(std::initializer_list<unsigned long> ns)
{
    IntPolynomial out{1};
    for (auto n : ns)
        out = out * cyclotomic(n);
    return out;
}

} // namespace

std::vector<FixtureResult> run_worked_examples()
{
    std::vector<FixtureResult> out;

    out.push_back(check("resolution (5,2): rupture m=10, neighbors {5,4,1}", [] {
        const ResolutionTree t = resolution_tree(PuiseuxCharacteristic({{5, 2}}));
        if (t.rupture_ids().size() != 1)
            return std::string("expected one rupture node");
        const int r = t.rupture_ids().front();
        std::vector<long> nb;
        for (int v : t.neighbors(r))
            nb.push_back(t.node(v).multiplicity);
        std::sort(nb.begin(), nb.end());
        if (t.node(r).multiplicity != 10 || nb != std::vector<long>{1, 4, 5})
            return std::string("wrong multiplicities");
        return std::string();
    }));

    out.push_back(check("monodromy ((3,2),(6,5)) closed form", [] {
        const IntPolynomial t10 = IntPolynomial::monomial(10) - IntPolynomial::monomial(5) + IntPolynomial{1};
        const IntPolynomial num = IntPolynomial::power_minus_one(180) * IntPolynomial::power_minus_one(1);
        const IntPolynomial den = IntPolynomial::power_minus_one(36) * IntPolynomial::power_minus_one(5);
        return expect_poly(charpoly_puiseux(PuiseuxCharacteristic({{3, 2}, {6, 5}})), t10 * *exact_quotient(num, den));
    }));

    out.push_back(check("monodromy ((3,2),(1,2)) = Phi_26 Phi_12", [] {
        return expect_poly(charpoly_puiseux(PuiseuxCharacteristic({{3, 2}, {1, 2}})), phis({26, 12}));
    }));

    out.push_back(check("cabling numbers ((3,2),(6,5)) = {3, 36}", [] {
        const auto w = PuiseuxCharacteristic({{3, 2}, {6, 5}}).cabling_numbers();
        return w == std::vector<long>{3, 36} ? std::string() : std::string("wrong cabling numbers");
    }));

    for (const auto& [name, want] : std::vector<std::pair<std::string, IntPolynomial>>{
             {"A2", phis({6})}, {"E6", phis({6, 12})}, {"E7", phis({1, 9})}, {"E8", phis({15})}}) {
        out.push_back(check("ADE " + name, [name = name, want = want] {
            return expect_poly(charpoly_ade(parse_ade(name)), want);
        }));
    }

    out.push_back(check("ordinary 4-fold point: criterion inapplicable", [] {
        const IntPolynomial p = pow(IntPolynomial{-1, 1}, 3) * pow(IntPolynomial{1, 0, 1}, 2) * pow(IntPolynomial{1, 1}, 2);
        const CmVerdict v = cm_verdict(SingularityDescriptor{RawCharpoly{p}});
        return v.status == CmStatus::CriterionInapplicable ? std::string() : "status " + to_string(v.status);
    }));

    out.push_back(check("Belyi (4,1,5,10): genus 2, exponents {1,3}, Phi_10", [] {
        const BelyiCover c(4, 1, 5, 10);
        std::string err = expect_eq(genus(c), 2, "genus");
        if (cm_exponents(c) != std::vector<long>{1, 3})
            err += " exponents wrong";
        return err + expect_poly(deck_charpoly(c), phis({10}));
    }));

    out.push_back(check("local Albanese of z^10 = x^5 + y^2: one genus-2 factor", [] {
        const auto rep = local_albanese(PuiseuxCharacteristic({{5, 2}}), 10);
        std::string err = expect_eq(rep.total_dimension, 2, "dimension");
        if (rep.factors.size() != 1 || rep.factors[0].belyi.d() != 10)
            err += " expected a single degree-10 Belyi factor";
        return err;
    }));

    for (long p : {3L, 5L}) {
        out.push_back(check("C_{" + std::to_string(p) + ",2}: s = 1, Alexander Phi_" + std::to_string(2 * p), [p] {
            const auto cfg = c_p2_configuration(p);
            const AlexanderReport rep = alexander_polynomial(cfg, 2, p);
            std::string err = expect_eq(rep.superabundance.value_or(-1), 1, "superabundance");
            if (p == 3)
                err += expect_eq(superabundance_details(cfg, 2, p).rank, 5, "rank");
            return err + expect_poly(*rep.polynomial, cyclotomic(static_cast<unsigned long>(2 * p)));
        }));
    }

    out.push_back(check("Mordell-Weil C_{5,2}: bound 4, exact 4", [] {
        const auto alex = *alexander_polynomial(c_p2_configuration(5), 2, 5).polynomial;
        const auto rep = rank_report(alex, 10, FiberDescriptor{10, true, true}, true);
        return expect_eq(rep.bound, 4, "bound") + expect_eq(rep.exact.value_or(-1), 4, "exact");
    }));

    for (long p : {3L, 5L, 7L}) {
        out.push_back(check("Hirano Phi_{2p}^3, p = " + std::to_string(p) + ": rank 3(p-1)", [p] {
            const auto d = static_cast<unsigned long>(2 * p);
            const CyclotomicProduct alex(1, {{d, 3}}, IntPolynomial{1});
            const auto rep = rank_report(alex, d, FiberDescriptor{d, true, true}, true);
            return expect_eq(rep.exact.value_or(-1), 3 * (p - 1), "rank");
        }));
    }

    out.push_back(check("no Phi_d factor: rank 0", [] {
        const CyclotomicProduct alex(1, {{6, 1}}, IntPolynomial{1});
        const auto rep = rank_report(alex, 10, FiberDescriptor{10, true, true}, false);
        return expect_eq(rep.exact.value_or(-1), 0, "rank");
    }));

    return out;
}

} // namespace cmplane
