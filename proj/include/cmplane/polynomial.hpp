#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace cmplane {

/// Dense univariate polynomial over Z in the variable t.
///
/// Coefficients are stored lowest degree first and kept trimmed, so the
/// leading coefficient is nonzero unless the polynomial is zero (empty
/// coefficient vector, degree -1).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const mpz_class& c);
    static IntPolynomial monomial(std::size_t degree, const mpz_class& c = 1);
    /// t^n - 1
    static IntPolynomial power_minus_one(std::size_t n);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    mpz_class coeff(std::size_t i) const;

    mpz_class operator()(const mpz_class& t) const;
    /// p(t^k)
    IntPolynomial compose_power(std::size_t k) const;

    std::string to_string(char var = 't') const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);

private:
    void trim();

    std::vector<mpz_class> coeffs_;
};

IntPolynomial pow(const IntPolynomial& base, unsigned exponent);

struct DivisionResult {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/// Division with remainder by a divisor whose leading coefficient is +-1.
DivisionResult divmod_monic(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// The quotient a / b when it exists in Z[t], otherwise nullopt.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// True when b | a in Z[t].
bool divides(const IntPolynomial& b, const IntPolynomial& a);

mpz_class content(const IntPolynomial& p);

/// p / content(p), sign-normalized to a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

} // namespace cmplane
