#pragma once

#include "cmplane/cyclo_matrix.hpp"
#include "cmplane/cyclotomic.hpp"
#include "cmplane/cyclotomic_field.hpp"
#include "cmplane/singularity.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cmplane {

using ProjectiveCoords = std::array<CyclotomicNumber, 3>;

/// A singular point of a plane curve, coordinates normalized so that the
/// last nonzero coordinate is 1.
class SingularPoint {
public:
    /// Throws PreconditionError when all coordinates vanish.
    SingularPoint(ProjectiveCoords location, SingularityDescriptor descriptor);

    const ProjectiveCoords& location() const { return location_; }
    const SingularityDescriptor& descriptor() const { return descriptor_; }
    /// lcm of the coordinate conductors.
    unsigned long conductor() const;

private:
    ProjectiveCoords location_;
    SingularityDescriptor descriptor_;
};

struct CurveConfiguration {
    long degree = 1;
    std::vector<SingularPoint> points;
    long components = 1;
    bool irreducible = true;
    bool transversal_at_infinity = true;
};

enum class AlexanderMethod { SpecializedFormula, BoundOnly, UserSupplied };

std::string to_string(AlexanderMethod method);

struct AlexanderReport {
    CyclotomicProduct local_bound;
    std::optional<long> superabundance;
    std::optional<CyclotomicProduct> polynomial;
    AlexanderMethod method = AlexanderMethod::BoundOnly;
};

/// prod over points of the local monodromy characteristic polynomial.
CyclotomicProduct local_bound(const CurveConfiguration& cfg);

/// (1/p + 1/q) d - 3.  Throws PreconditionError when not an integer.
long twist_degree(long degree, long p, long q);

/// Rows: points; columns: monomials x^a y^b z^c of degree m, a then b
/// descending.  All coordinates are lifted to one common conductor.
CycloMatrix evaluation_matrix(const std::vector<SingularPoint>& points, long m);

struct SuperabundanceResult {
    long twist_degree = 0;
    std::size_t points = 0;
    std::size_t rank = 0;
    unsigned long conductor = 1;
    long superabundance = 0;
};

/// Failure of the non-node singular points, all of type u^p = v^q, to
/// impose independent conditions on curves of degree (1/p + 1/q) d - 3.
SuperabundanceResult superabundance_details(const CurveConfiguration& cfg, long p, long q);
long superabundance(const CurveConfiguration& cfg, long p, long q);

/// Delta_D = (t - 1)^{r-1} Delta_{p,q}^s, checked against local_bound.
AlexanderReport alexander_polynomial(const CurveConfiguration& cfg, long p, long q);

AlexanderReport alexander_bound_only(const CurveConfiguration& cfg);

/// Wraps a known Alexander polynomial; throws ComputationError unless it
/// divides the local bound.
AlexanderReport alexander_user_supplied(const CurveConfiguration& cfg, const IntPolynomial& polynomial);

/// prod_i gcd(t^N - 1, lambda_i): the deck generator on H_1 of the N-fold
/// cyclic branched cover, lambda_i the cyclic summands of the Alexander module.
CyclotomicProduct cover_h1_charpoly(const std::vector<IntPolynomial>& modules, long n);

struct CoverAlbaneseReport {
    long superabundance = 0;
    CyclotomicProduct h1_charpoly;
    long dimension = 0;
    std::set<unsigned long> cm_conductors;
};

CoverAlbaneseReport cover_albanese_report(const CurveConfiguration& cfg, long p, long q, long n);

} // namespace cmplane
