#include "cmplane/belyi.hpp"

#include "cmplane/errors.hpp"

#include <numeric>

namespace cmplane {

namespace {

// Mathematical floor of num / den for den > 0.
long floor_div(long num, long den)
{
    long q = num / den;
    if ((num % den != 0) && (num < 0))
        --q;
    return q;
}

} // namespace

BelyiCover::BelyiCover(long a, long b, long c, long d) : a_(a), b_(b), c_(c), d_(d)
{
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0)
        throw PreconditionError("Belyi cover " + to_string() + ": exponents must be positive");
    if (a + b + c != d)
        throw PreconditionError("Belyi cover " + to_string() + ": a+b+c != d");
    if (std::gcd(std::gcd(a, b), std::gcd(c, d)) != 1)
        throw PreconditionError("Belyi cover " + to_string() + ": gcd(a,b,c,d) != 1 (reducible cover)");
}

std::string BelyiCover::to_string() const
{
    return "y^" + std::to_string(d_) + " = x^" + std::to_string(a_) + " (x-z)^" + std::to_string(b_) + " z^" +
           std::to_string(c_);
}

long genus(const BelyiCover& cover)
{
    const long d = cover.d();
    const long twice = d - std::gcd(cover.a(), d) - std::gcd(cover.b(), d) - std::gcd(cover.c(), d) + 2;
    if (twice < 0 || twice % 2 != 0)
        throw ComputationError("genus: Riemann-Hurwitz count is not a nonnegative even number for " +
                               cover.to_string());
    return twice / 2;
}

int eigen_multiplicity(const BelyiCover& cover, long j)
{
    const long d = cover.d();
    if (j < 1 || j > d - 1)
        throw PreconditionError("eigen_multiplicity: j = " + std::to_string(j) + " outside 1.." +
                                std::to_string(d - 1));
    const long m = -(floor_div(-cover.a() * j, d) + floor_div(-cover.b() * j, d) +
                     floor_div((cover.a() + cover.b()) * j, d) + 1);
    if (m != 0 && m != 1)
        throw ComputationError("eigen_multiplicity: value outside {0,1}");
    return static_cast<int>(m);
}

CyclotomicProduct deck_charpoly(const BelyiCover& cover)
{
    const auto d = static_cast<unsigned long>(cover.d());
    const auto g = [&](long e) { return static_cast<unsigned long>(std::gcd(e, cover.d())); };
    const CyclotomicProduct num = CyclotomicProduct::power_minus_one(d) * CyclotomicProduct::phi(1, 2);
    const CyclotomicProduct den = CyclotomicProduct::power_minus_one(g(cover.a())) *
                                  CyclotomicProduct::power_minus_one(g(cover.b())) *
                                  CyclotomicProduct::power_minus_one(g(cover.c()));
    return num.exact_divide(den);
}

std::vector<long> cm_exponents(const BelyiCover& cover)
{
    std::vector<long> out;
    for (long j = 1; j < cover.d(); ++j)
        if (eigen_multiplicity(cover, j) == 1)
            out.push_back(j);
    return out;
}

std::set<unsigned long> cm_conductors(const BelyiCover& cover)
{
    std::set<unsigned long> out;
    for (long j : cm_exponents(cover))
        out.insert(static_cast<unsigned long>(cover.d() / std::gcd(j, cover.d())));
    return out;
}

long adjunction_count(long d, long l)
{
    if (d < 2 || l < 2)
        throw PreconditionError("adjunction_count: need d, l >= 2");
    return ((d - 1) * (l - 1) + std::gcd(d, l) - 1) / 2;
}

} // namespace cmplane
