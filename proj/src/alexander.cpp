#include "cmplane/alexander.hpp"

#include "cmplane/errors.hpp"

#include <algorithm>
#include <numeric>

namespace cmplane {

SingularPoint::SingularPoint(ProjectiveCoords location, SingularityDescriptor descriptor)
    : location_(std::move(location)), descriptor_(std::move(descriptor))
{
    int last = -1;
    for (int i = 2; i >= 0; --i) {
        if (!location_[static_cast<std::size_t>(i)].is_zero()) {
            last = i;
            break;
        }
    }
    if (last < 0)
        throw PreconditionError("singular point: all projective coordinates are zero");
    const CyclotomicNumber scale = location_[static_cast<std::size_t>(last)].inverse();
    for (auto& c : location_)
        c = c * scale;
}

unsigned long SingularPoint::conductor() const
{
    unsigned long n = 1;
    for (const auto& c : location_)
        n = std::lcm(n, c.conductor());
    return n;
}

std::string to_string(AlexanderMethod method)
{
    switch (method) {
    case AlexanderMethod::SpecializedFormula:
        return "specialized-formula";
    case AlexanderMethod::BoundOnly:
        return "bound-only";
    case AlexanderMethod::UserSupplied:
        return "user-supplied";
    }
    return "unknown";
}

CyclotomicProduct local_bound(const CurveConfiguration& cfg)
{
    CyclotomicProduct out;
    for (const auto& pt : cfg.points)
        out = out * local_charpoly(pt.descriptor());
    return out;
}

long twist_degree(long degree, long p, long q)
{
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw PreconditionError("twist_degree: need coprime p, q >= 2");
    const long num = degree * (p + q) - 3 * p * q;
    if (num % (p * q) != 0)
        throw PreconditionError("twist degree (1/" + std::to_string(p) + " + 1/" + std::to_string(q) + ")*" +
                                std::to_string(degree) + " - 3 is not an integer");
    return num / (p * q);
}

CycloMatrix evaluation_matrix(const std::vector<SingularPoint>& points, long m)
{
    unsigned long conductor = 1;
    for (const auto& pt : points)
        conductor = std::lcm(conductor, pt.conductor());
    std::vector<std::array<long, 3>> monomials;
    for (long a = m; a >= 0; --a)
        for (long b = m - a; b >= 0; --b)
            monomials.push_back({a, b, m - a - b});

    CycloMatrix mat(points.size(), monomials.size(), conductor);
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::array<std::vector<CyclotomicNumber>, 3> powers;
        for (std::size_t v = 0; v < 3; ++v) {
            const CyclotomicNumber c = points[i].location()[v].lift(conductor);
            powers[v].push_back(CyclotomicNumber(mpq_class(1), conductor));
            for (long k = 1; k <= m; ++k)
                powers[v].push_back(powers[v].back() * c);
        }
        for (std::size_t j = 0; j < monomials.size(); ++j) {
            const auto& [a, b, c] = monomials[j];
            mat.set(i, j,
                    powers[0][static_cast<std::size_t>(a)] * powers[1][static_cast<std::size_t>(b)] *
                        powers[2][static_cast<std::size_t>(c)]);
        }
    }
    return mat;
}

namespace {

std::vector<SingularPoint> conditioned_points(const CurveConfiguration& cfg, long p, long q)
{
    const OnePair want{std::min(p, q), std::max(p, q)};
    std::vector<SingularPoint> out;
    for (const auto& pt : cfg.points) {
        if (pt.descriptor().is_node())
            continue;
        const auto type = pt.descriptor().one_pair_type();
        if (!type || !(*type == want))
            throw PreconditionError("superabundance: point of type " + pt.descriptor().to_string() +
                                    " is not locally u^" + std::to_string(p) + " = v^" + std::to_string(q));
        out.push_back(pt);
    }
    return out;
}

} // namespace

SuperabundanceResult superabundance_details(const CurveConfiguration& cfg, long p, long q)
{
    if (cfg.degree < 1)
        throw PreconditionError("curve degree must be positive");
    SuperabundanceResult res;
    res.twist_degree = twist_degree(cfg.degree, p, q);
    const auto points = conditioned_points(cfg, p, q);
    res.points = points.size();
    if (res.twist_degree < -2)
        throw PreconditionError("superabundance: twist degree " + std::to_string(res.twist_degree) +
                                " < -2 is not supported");
    if (res.twist_degree < 0) {
        res.rank = 0;
    } else {
        const CycloMatrix mat = evaluation_matrix(points, res.twist_degree);
        res.conductor = mat.conductor();
        res.rank = rank(mat);
    }
    res.superabundance = static_cast<long>(res.points - res.rank);
    return res;
}

long superabundance(const CurveConfiguration& cfg, long p, long q)
{
    return superabundance_details(cfg, p, q).superabundance;
}

AlexanderReport alexander_polynomial(const CurveConfiguration& cfg, long p, long q)
{
    if (!cfg.irreducible)
        throw PreconditionError("alexander_polynomial: the curve must be declared irreducible");
    if (cfg.components != 1)
        throw PreconditionError("alexander_polynomial: an irreducible curve has exactly one component");
    AlexanderReport rep;
    rep.method = AlexanderMethod::SpecializedFormula;
    rep.local_bound = local_bound(cfg);
    const long s = superabundance(cfg, p, q);
    rep.superabundance = s;
    CyclotomicProduct poly = pow(charpoly_one_pair(p, q), static_cast<unsigned>(s));
    if (!poly.divides(rep.local_bound))
        throw ComputationError("alexander_polynomial: " + poly.to_string() + " does not divide the local bound " +
                               rep.local_bound.to_string());
    rep.polynomial = std::move(poly);
    return rep;
}

AlexanderReport alexander_bound_only(const CurveConfiguration& cfg)
{
    AlexanderReport rep;
    rep.method = AlexanderMethod::BoundOnly;
    rep.local_bound = local_bound(cfg);
    return rep;
}

AlexanderReport alexander_user_supplied(const CurveConfiguration& cfg, const IntPolynomial& polynomial)
{
    AlexanderReport rep;
    rep.method = AlexanderMethod::UserSupplied;
    rep.local_bound = local_bound(cfg);
    CyclotomicProduct poly = factor_cyclotomic(polynomial);
    if (!poly.divides(rep.local_bound))
        throw ComputationError("supplied Alexander polynomial " + poly.to_string() +
                               " does not divide the local bound " + rep.local_bound.to_string());
    rep.polynomial = std::move(poly);
    return rep;
}

CyclotomicProduct cover_h1_charpoly(const std::vector<IntPolynomial>& modules, long n)
{
    if (n < 2)
        throw PreconditionError("cover_h1_charpoly: N must be >= 2");
    const IntPolynomial tn = IntPolynomial::power_minus_one(static_cast<std::size_t>(n));
    CyclotomicProduct out;
    for (const auto& lambda : modules) {
        if (lambda.is_zero())
            throw PreconditionError("cover_h1_charpoly: zero polynomial in module list");
        out = out * factor_cyclotomic(gcd(tn, lambda));
    }
    return out;
}

CoverAlbaneseReport cover_albanese_report(const CurveConfiguration& cfg, long p, long q, long n)
{
    const AlexanderReport alex = alexander_polynomial(cfg, p, q);
    CoverAlbaneseReport rep;
    rep.superabundance = *alex.superabundance;
    const std::vector<IntPolynomial> modules(static_cast<std::size_t>(rep.superabundance),
                                             charpoly_one_pair(p, q).expand());
    rep.h1_charpoly = cover_h1_charpoly(modules, n);
    const int deg = rep.h1_charpoly.degree();
    if (deg % 2 != 0)
        throw ComputationError("cover_albanese_report: odd-degree H_1 characteristic polynomial");
    rep.dimension = deg / 2;
    for (const auto& [m, e] : rep.h1_charpoly.factors())
        rep.cm_conductors.insert(m);
    return rep;
}

} // namespace cmplane
