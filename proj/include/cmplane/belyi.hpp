#pragma once

#include "cmplane/cyclotomic.hpp"

#include <set>
#include <string>
#include <vector>

namespace cmplane {

/// The cyclic cover y^d = x^a (x - z)^b z^c of P^1, with a + b + c = d and
/// gcd(a, b, c, d) = 1 (irreducible).  The deck generator is
/// (x, y, z) -> (x, exp(2 pi i / d) y, z).
class BelyiCover {
public:
    /// Throws PreconditionError when an exponent is not positive,
    /// a + b + c != d, or gcd(a, b, c, d) != 1.
    BelyiCover(long a, long b, long c, long d);

    long a() const { return a_; }
    long b() const { return b_; }
    long c() const { return c_; }
    long d() const { return d_; }

    std::string to_string() const;

    friend bool operator==(const BelyiCover&, const BelyiCover&) = default;

private:
    long a_, b_, c_, d_;
};

/// Riemann-Hurwitz: (d - gcd(a,d) - gcd(b,d) - gcd(c,d) + 2) / 2.
long genus(const BelyiCover& cover);

/// Multiplicity of exp(2 pi i j / d) on holomorphic 1-forms,
/// -(floor(-aj/d) + floor(-bj/d) + floor((a+b)j/d) + 1).  Always 0 or 1.
/// Throws PreconditionError unless 1 <= j <= d - 1.
int eigen_multiplicity(const BelyiCover& cover, long j);

/// (t^d - 1)(t - 1)^2 / ((t^gcd(a,d) - 1)(t^gcd(b,d) - 1)(t^gcd(c,d) - 1)),
/// the characteristic polynomial of the deck generator on H_1.
CyclotomicProduct deck_charpoly(const BelyiCover& cover);

/// {j : eigen_multiplicity(cover, j) = 1}, ascending; size = genus.
std::vector<long> cm_exponents(const BelyiCover& cover);

/// Orders d / gcd(j, d) of the eigenvalues on holomorphic forms: the
/// cyclotomic fields Q(zeta_n) acting on the Jacobian's isogeny factors.
std::set<unsigned long> cm_conductors(const BelyiCover& cover);

/// ((d-1)(l-1) + gcd(d,l) - 1) / 2, the number of adjunction conditions of
/// y^d + x^l.  Throws PreconditionError unless d, l >= 2.
long adjunction_count(long d, long l);

} // namespace cmplane
