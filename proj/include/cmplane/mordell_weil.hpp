#pragma once

#include "cmplane/cyclotomic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmplane {

/// What is known (or assumed) about the generic fiber A of the family.
/// None of these flags is verified; they are echoed into reports.
struct FiberDescriptor {
    /// n with End(A) (x) Q = Q(zeta_n); values below 3 mean no cyclotomic CM.
    unsigned long cm_conductor = 0;
    bool simple = true;
    /// The holonomy-fixed part A^G is zero.
    bool trivial_trace = true;
};

enum class RankReason { NoCmFiber, NoPhiDFactor, BoundFromMultiplicity, ExactFromAlbaneseMultiplicity };

std::string to_string(RankReason reason);

struct MWRankReport {
    unsigned long holonomy_order = 0;
    /// Exponent of Phi_d in the Alexander polynomial.
    unsigned phi_multiplicity = 0;
    long bound = 0;
    std::optional<long> exact;
    RankReason reason = RankReason::BoundFromMultiplicity;
    FiberDescriptor fiber;
    bool albanese_multiplicity_known = false;
};

/// Mordell-Weil rank bound s * phi(d) for an isotrivial family over
/// C(x, y) with discriminant Alexander polynomial `alexander`.
///
/// Exact 0 when the fiber has no cyclotomic CM or Phi_d does not occur;
/// exact = bound when the Albanese multiplicity hypothesis is flagged.
/// Throws PreconditionError for d < 2, a nontrivial trace, and, on the
/// bound path, a CM field
/// other than Q(zeta_d) or a non-simple fiber.
MWRankReport rank_report(const CyclotomicProduct& alexander, unsigned long holonomy_order,
                         const FiberDescriptor& fiber, bool albanese_multiplicity_known);

/// True iff Phi_d occurs in some local characteristic polynomial.
bool holonomy_consistency(unsigned long d, const std::vector<CyclotomicProduct>& local_polys);

/// Q(zeta_a) = Q(zeta_b); equivalently a and b agree after mapping odd n to 2n.
bool same_cyclotomic_field(unsigned long a, unsigned long b);

} // namespace cmplane
