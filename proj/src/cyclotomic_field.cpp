#include "cmplane/cyclotomic_field.hpp"

#include "cmplane/cyclotomic.hpp"
#include "cmplane/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace cmplane {

namespace detail {

struct CyclotomicFieldData {
    unsigned long conductor;
    std::size_t degree;
    // Phi_n coefficients, monic, lowest first.
    std::vector<mpq_class> modulus;

    explicit CyclotomicFieldData(unsigned long n) : conductor(n)
    {
        const IntPolynomial phi = cyclotomic(n);
        degree = static_cast<std::size_t>(phi.degree());
        modulus.reserve(phi.coeffs().size());
        for (const auto& c : phi.coeffs())
            modulus.emplace_back(c);
    }
};

} // namespace detail

namespace {

using RatPoly = std::vector<mpq_class>;
using FieldPtr = std::shared_ptr<const detail::CyclotomicFieldData>;

void trim(RatPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

FieldPtr make_field(unsigned long n)
{
    if (n == 0)
        throw PreconditionError("cyclotomic field: conductor must be positive");
    return std::make_shared<const detail::CyclotomicFieldData>(n);
}

// Reduce modulo the monic modulus, padding to exactly `degree` coefficients.
RatPoly reduce(RatPoly p, const detail::CyclotomicFieldData& f)
{
    const std::size_t d = f.degree;
    for (std::size_t i = p.size(); i-- > d;) {
        if (p[i] == 0)
            continue;
        const mpq_class top = p[i];
        const std::size_t shift = i - d;
        for (std::size_t j = 0; j <= d; ++j)
            p[shift + j] -= top * f.modulus[j];
    }
    p.resize(d);
    return p;
}

RatPoly multiply(const RatPoly& a, const RatPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    RatPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

// Quotient and remainder in Q[t]; b nonzero and trimmed.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b)
{
    trim(a);
    if (a.size() < b.size())
        return {RatPoly{}, a};
    RatPoly q(a.size() - b.size() + 1);
    const mpq_class inv_lead = 1 / b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (a[i] == 0)
            continue;
        const mpq_class c = a[i] * inv_lead;
        const std::size_t shift = i - (b.size() - 1);
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= c * b[j];
        q[shift] = c;
    }
    trim(a);
    trim(q);
    return {q, a};
}

RatPoly subtract(const RatPoly& a, const RatPoly& b)
{
    RatPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

} // namespace

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(mpq_class(0)) {}

CyclotomicNumber::CyclotomicNumber(const mpq_class& value, unsigned long conductor)
    : field_(make_field(conductor))
{
    coeffs_.assign(field_->degree, mpq_class(0));
    coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, std::vector<mpq_class> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs))
{
}

CyclotomicNumber CyclotomicNumber::from_coeffs(unsigned long conductor, const std::vector<mpq_class>& coeffs)
{
    auto field = make_field(conductor);
    RatPoly r = reduce(coeffs, *field);
    for (auto& c : r)
        c.canonicalize();
    return CyclotomicNumber(std::move(field), std::move(r));
}

CyclotomicNumber CyclotomicNumber::zeta(unsigned long conductor, long k)
{
    if (conductor == 0)
        throw PreconditionError("zeta: conductor must be positive");
    const long n = static_cast<long>(conductor);
    const auto e = static_cast<std::size_t>(((k % n) + n) % n);
    RatPoly p(e + 1);
    p[e] = 1;
    return from_coeffs(conductor, p);
}

unsigned long CyclotomicNumber::conductor() const
{
    return field_->conductor;
}

bool CyclotomicNumber::is_zero() const
{
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

CyclotomicNumber CyclotomicNumber::lift(unsigned long m) const
{
    const unsigned long n = conductor();
    if (m == n)
        return *this;
    if (m == 0 || m % n != 0)
        throw PreconditionError("lift: target conductor " + std::to_string(m) +
                                " is not a multiple of " + std::to_string(n));
    // zeta_n = zeta_m^(m/n)
    const std::size_t step = m / n;
    RatPoly p(coeffs_.empty() ? 1 : (coeffs_.size() - 1) * step + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        p[i * step] = coeffs_[i];
    return from_coeffs(m, p);
}

CyclotomicNumber CyclotomicNumber::inverse() const
{
    if (is_zero())
        throw PreconditionError("inverse of zero in a cyclotomic field");
    // Extended Euclid: s * a + t * Phi = 1 in Q[t].
    RatPoly a = coeffs_;
    trim(a);
    RatPoly m = field_->modulus;
    RatPoly s0{1}, s1{};
    RatPoly r0 = a, r1 = m;
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = subtract(s0, multiply(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since Phi_n is irreducible.
    if (r0.size() != 1)
        throw ComputationError("inverse: cyclotomic modulus not coprime to element");
    const mpq_class scale = 1 / r0[0];
    for (auto& c : s0)
        c *= scale;
    return CyclotomicNumber(field_, reduce(std::move(s0), *field_));
}

std::complex<double> CyclotomicNumber::to_complex() const
{
    const double n = static_cast<double>(conductor());
    std::complex<double> z = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
        z += coeffs_[i].get_d() * std::polar(1.0, angle);
    }
    return z;
}

std::string CyclotomicNumber::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        if (!first)
            out << " + ";
        first = false;
        out << "(" << coeffs_[i].get_str() << ")";
        if (i > 0)
            out << "*z" << conductor() << "^" << i;
    }
    if (first)
        out << "0";
    return out.str();
}

namespace {

std::pair<CyclotomicNumber, CyclotomicNumber> coerce(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    if (a.conductor() == b.conductor())
        return {a, b};
    const unsigned long m = lcm(a.conductor(), b.conductor());
    return {a.lift(m), b.lift(m)};
}

} // namespace

CyclotomicNumber CyclotomicNumber::operator-() const
{
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    if (a.conductor() != b.conductor()) {
        auto [x, y] = coerce(a, b);
        return x + y;
    }
    CyclotomicNumber r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] += b.coeffs_[i];
    return r;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    return a + (-b);
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    if (a.conductor() != b.conductor()) {
        auto [x, y] = coerce(a, b);
        return x * y;
    }
    return CyclotomicNumber(a.field_, reduce(multiply(a.coeffs_, b.coeffs_), *a.field_));
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    return a * b.inverse();
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    if (a.conductor() != b.conductor()) {
        auto [x, y] = coerce(a, b);
        return x == y;
    }
    return a.coeffs_ == b.coeffs_;
}

CyclotomicNumber pow(const CyclotomicNumber& base, unsigned exponent)
{
    CyclotomicNumber result(mpq_class(1), base.conductor());
    CyclotomicNumber sq = base;
    while (exponent > 0) {
        if (exponent & 1U)
            result *= sq;
        exponent >>= 1U;
        if (exponent > 0)
            sq *= sq;
    }
    return result;
}

} // namespace cmplane
