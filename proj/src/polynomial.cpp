#include "cmplane/polynomial.hpp"

#include "cmplane/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace cmplane {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c)
{
    return IntPolynomial(std::vector<mpz_class>{c});
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const mpz_class& c)
{
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::power_minus_one(std::size_t n)
{
    if (n == 0)
        return {};
    std::vector<mpz_class> v(n + 1);
    v[0] = -1;
    v[n] = 1;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const mpz_class& IntPolynomial::leading() const
{
    static const mpz_class zero = 0;
    return coeffs_.empty() ? zero : coeffs_.back();
}

mpz_class IntPolynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

mpz_class IntPolynomial::operator()(const mpz_class& t) const
{
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

IntPolynomial IntPolynomial::compose_power(std::size_t k) const
{
    if (k == 0)
        throw PreconditionError("compose_power: exponent must be positive");
    if (is_zero())
        return {};
    std::vector<mpz_class> v(static_cast<std::size_t>(degree()) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i * k] = coeffs_[i];
    return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string(char var) const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0)
                out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1)
            out << mag.get_str();
        if (i > 0) {
            out << var;
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

IntPolynomial IntPolynomial::operator-() const
{
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs)
{
    return *this = *this * rhs;
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.coeffs_.size() != b.coeffs_.size())
        return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i])
            return false;
    return true;
}

IntPolynomial pow(const IntPolynomial& base, unsigned exponent)
{
    IntPolynomial result = IntPolynomial::constant(1);
    IntPolynomial sq = base;
    while (exponent > 0) {
        if (exponent & 1U)
            result *= sq;
        exponent >>= 1U;
        if (exponent > 0)
            sq *= sq;
    }
    return result;
}

namespace {

// Long division; returns nullopt as soon as a leading coefficient is not
// divisible (only possible when the divisor is not monic).
std::optional<DivisionResult> long_division(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero())
        throw PreconditionError("polynomial division by zero");
    std::vector<mpz_class> rem = a.coeffs();
    const auto& den = b.coeffs();
    const int db = b.degree();
    if (a.degree() < db)
        return DivisionResult{IntPolynomial{}, a};
    std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const mpz_class& lead = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        mpz_class& top = rem[static_cast<std::size_t>(i)];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            return std::nullopt;
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        const auto shift = static_cast<std::size_t>(i - db);
        for (std::size_t j = 0; j < den.size(); ++j)
            rem[shift + j] -= q * den[j];
        quot[shift] = q;
    }
    return DivisionResult{IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

} // namespace

DivisionResult divmod_monic(const IntPolynomial& dividend, const IntPolynomial& divisor)
{
    if (divisor.is_zero() || abs(divisor.leading()) != 1)
        throw PreconditionError("divmod_monic: divisor must have leading coefficient +-1");
    return *long_division(dividend, divisor);
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b)
{
    auto res = long_division(a, b);
    if (!res || !res->remainder.is_zero())
        return std::nullopt;
    return std::move(res->quotient);
}

bool divides(const IntPolynomial& b, const IntPolynomial& a)
{
    if (b.is_zero())
        return a.is_zero();
    return exact_quotient(a, b).has_value();
}

mpz_class content(const IntPolynomial& p)
{
    mpz_class g = 0;
    for (const auto& c : p.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p)
{
    if (p.is_zero())
        return {};
    mpz_class g = content(p);
    if (p.leading() < 0)
        g = -g;
    std::vector<mpz_class> v = p.coeffs();
    for (auto& c : v)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(v));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<mpz_class> rem = a.coeffs();
    const auto& den = b.coeffs();
    const int db = b.degree();
    const mpz_class& lead = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        mpz_class top = rem[static_cast<std::size_t>(i)];
        if (top == 0)
            continue;
        for (int k = 0; k <= i; ++k)
            rem[static_cast<std::size_t>(k)] *= lead;
        const auto shift = static_cast<std::size_t>(i - db);
        for (std::size_t j = 0; j < den.size(); ++j)
            rem[shift + j] -= top * den[j];
    }
    rem.resize(static_cast<std::size_t>(std::max(db, 0)));
    return IntPolynomial(std::move(rem));
}

} // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b)
{
    IntPolynomial u = primitive_part(a);
    IntPolynomial v = primitive_part(b);
    if (u.degree() < v.degree())
        std::swap(u, v);
    while (!v.is_zero()) {
        IntPolynomial r = pseudo_remainder(u, v);
        u = std::move(v);
        v = primitive_part(r);
    }
    return primitive_part(u);
}

} // namespace cmplane
