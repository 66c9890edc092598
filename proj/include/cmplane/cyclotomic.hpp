#pragma once

#include "cmplane/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace cmplane {

unsigned long euler_phi(unsigned long n);
int moebius(unsigned long n);
std::vector<unsigned long> divisors(unsigned long n);
unsigned long lcm(unsigned long a, unsigned long b);

/// The n-th cyclotomic polynomial, via the Moebius product of t^d - 1.
IntPolynomial cyclotomic(unsigned long n);

/// A polynomial written as sign * prod Phi_n^e * remainder, where the
/// remainder has no root-of-unity roots and positive leading coefficient.
class CyclotomicProduct {
public:
    using FactorMap = std::map<unsigned long, unsigned>;

    CyclotomicProduct() = default;
    CyclotomicProduct(int sign, FactorMap factors, IntPolynomial remainder = IntPolynomial{1});

    static CyclotomicProduct phi(unsigned long n, unsigned exponent = 1);
    /// t^M - 1 = prod_{d | M} Phi_d
    static CyclotomicProduct power_minus_one(unsigned long m);

    int sign() const { return sign_; }
    const FactorMap& factors() const { return factors_; }
    const IntPolynomial& remainder() const { return remainder_; }
    unsigned exponent(unsigned long n) const;

    bool is_cyclotomic() const { return remainder_.is_one(); }
    int degree() const;
    /// lcm of the cyclotomic indices; the order of a semisimple operator
    /// with this characteristic polynomial when the remainder is trivial.
    unsigned long order() const;

    IntPolynomial expand() const;
    /// p(t^k), factor by factor.
    CyclotomicProduct compose_power(unsigned long k) const;

    /// "Phi_6^2 * Phi_10" style rendering; "1" for the empty product.
    std::string to_string() const;

    /// Exponent-wise quotient; throws ComputationError when it would not
    /// be a polynomial.
    CyclotomicProduct exact_divide(const CyclotomicProduct& rhs) const;
    bool divides(const CyclotomicProduct& rhs) const;

    friend CyclotomicProduct operator*(const CyclotomicProduct& a, const CyclotomicProduct& b);
    friend bool operator==(const CyclotomicProduct& a, const CyclotomicProduct& b);

private:
    int sign_ = 1;
    FactorMap factors_;
    IntPolynomial remainder_{1};
};

CyclotomicProduct pow(const CyclotomicProduct& base, unsigned exponent);

/// Trial division by Phi_n for every n with phi(n) <= deg p.
/// Throws PreconditionError on the zero polynomial.
CyclotomicProduct factor_cyclotomic(const IntPolynomial& p);

} // namespace cmplane
