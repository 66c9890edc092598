#include "cmplane/mordell_weil.hpp"

#include "cmplane/errors.hpp"

namespace cmplane {

std::string to_string(RankReason reason)
{
    switch (reason) {
    case RankReason::NoCmFiber:
        return "no-cm-fiber";
    case RankReason::NoPhiDFactor:
        return "no-phi-d-factor";
    case RankReason::BoundFromMultiplicity:
        return "bound-from-multiplicity";
    case RankReason::ExactFromAlbaneseMultiplicity:
        return "exact-from-albanese-multiplicity";
    }
    return "unknown";
}

bool same_cyclotomic_field(unsigned long a, unsigned long b)
{
    const auto canon = [](unsigned long n) { return n % 2 == 1 ? 2 * n : n; };
    return canon(a) == canon(b);
}

MWRankReport rank_report(const CyclotomicProduct& alexander, unsigned long holonomy_order,
                         const FiberDescriptor& fiber, bool albanese_multiplicity_known)
{
    if (holonomy_order < 2)
        throw PreconditionError("rank_report: holonomy order must be >= 2");
    if (!fiber.trivial_trace)
        throw PreconditionError("rank_report: the fiber has a nontrivial holonomy-fixed part; the bound applies "
                                "to the quotient by the trace, supply that quotient instead");

    MWRankReport rep;
    rep.holonomy_order = holonomy_order;
    rep.fiber = fiber;
    rep.albanese_multiplicity_known = albanese_multiplicity_known;
    rep.phi_multiplicity = alexander.exponent(holonomy_order);

    if (fiber.cm_conductor < 3) {
        rep.exact = 0;
        rep.reason = RankReason::NoCmFiber;
        return rep;
    }
    if (rep.phi_multiplicity == 0) {
        rep.exact = 0;
        rep.reason = RankReason::NoPhiDFactor;
        return rep;
    }
    if (!same_cyclotomic_field(fiber.cm_conductor, holonomy_order))
        throw PreconditionError("rank_report: CM field Q(zeta_" + std::to_string(fiber.cm_conductor) +
                                ") differs from Q(zeta_" + std::to_string(holonomy_order) + ")");
    if (!fiber.simple)
        throw PreconditionError("rank_report: the bound requires a simple fiber");

    rep.bound = static_cast<long>(rep.phi_multiplicity) * static_cast<long>(euler_phi(holonomy_order));
    if (albanese_multiplicity_known) {
        rep.exact = rep.bound;
        rep.reason = RankReason::ExactFromAlbaneseMultiplicity;
    } else {
        rep.reason = RankReason::BoundFromMultiplicity;
    }
    return rep;
}

bool holonomy_consistency(unsigned long d, const std::vector<CyclotomicProduct>& local_polys)
{
    for (const auto& p : local_polys)
        if (p.exponent(d) > 0)
            return true;
    return false;
}

} // namespace cmplane
