#pragma once

#include "cmplane/polynomial.hpp"

#include <gmpxx.h>

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace cmplane {

namespace detail {
struct CyclotomicFieldData;
}

/// Element of Q(zeta_n), stored as a rational polynomial in zeta_n of
/// degree < phi(n), reduced modulo Phi_n.
///
/// Binary operations on elements of different conductors first lift both
/// operands to Q(zeta_lcm).
class CyclotomicNumber {
public:
    /// Zero of Q.
    CyclotomicNumber();
    CyclotomicNumber(const mpq_class& value, unsigned long conductor = 1);
    CyclotomicNumber(long value) : CyclotomicNumber(mpq_class(value)) {}

    /// sum_i coeffs[i] zeta_n^i, reduced (any length accepted).
    static CyclotomicNumber from_coeffs(unsigned long conductor, const std::vector<mpq_class>& coeffs);
    /// zeta_n^k for any integer k.
    static CyclotomicNumber zeta(unsigned long conductor, long k = 1);

    unsigned long conductor() const;
    /// phi(conductor) reduced coefficients, lowest power first.
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    /// The same element viewed in Q(zeta_m); m must be a multiple of the conductor.
    CyclotomicNumber lift(unsigned long m) const;
    /// Throws PreconditionError on zero.
    CyclotomicNumber inverse() const;
    /// Embedding zeta_n -> exp(2 pi i / n).
    std::complex<double> to_complex() const;
    std::string to_string() const;

    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs) { return *this = *this + rhs; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs) { return *this = *this - rhs; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs) { return *this = *this * rhs; }
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

private:
    CyclotomicNumber(std::shared_ptr<const detail::CyclotomicFieldData> field, std::vector<mpq_class> coeffs);

    std::shared_ptr<const detail::CyclotomicFieldData> field_;
    std::vector<mpq_class> coeffs_;
};

CyclotomicNumber pow(const CyclotomicNumber& base, unsigned exponent);

} // namespace cmplane
