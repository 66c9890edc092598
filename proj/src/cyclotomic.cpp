#include "cmplane/cyclotomic.hpp"

#include "cmplane/errors.hpp"

#include <numeric>
#include <sstream>

namespace cmplane {

unsigned long euler_phi(unsigned long n)
{
    if (n == 0)
        throw PreconditionError("euler_phi: n must be positive");
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

int moebius(unsigned long n)
{
    if (n == 0)
        throw PreconditionError("moebius: n must be positive");
    int mu = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        mu = -mu;
    }
    if (n > 1)
        mu = -mu;
    return mu;
}

std::vector<unsigned long> divisors(unsigned long n)
{
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        small.push_back(d);
        if (d * d != n)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

unsigned long lcm(unsigned long a, unsigned long b)
{
    return std::lcm(a, b);
}

IntPolynomial cyclotomic(unsigned long n)
{
    if (n == 0)
        throw PreconditionError("cyclotomic: n must be positive");
    IntPolynomial num{1};
    IntPolynomial den{1};
    for (unsigned long d : divisors(n)) {
        int mu = moebius(n / d);
        if (mu == 1)
            num *= IntPolynomial::power_minus_one(d);
        else if (mu == -1)
            den *= IntPolynomial::power_minus_one(d);
    }
    auto q = divmod_monic(num, den);
    if (!q.remainder.is_zero())
        throw ComputationError("cyclotomic: Moebius quotient not exact");
    return q.quotient;
}

CyclotomicProduct::CyclotomicProduct(int sign, FactorMap factors, IntPolynomial remainder)
    : sign_(sign < 0 ? -1 : 1), factors_(std::move(factors)), remainder_(std::move(remainder))
{
    for (auto it = factors_.begin(); it != factors_.end();) {
        if (it->first == 0)
            throw PreconditionError("CyclotomicProduct: index 0");
        it = it->second == 0 ? factors_.erase(it) : std::next(it);
    }
    if (remainder_.is_zero())
        throw PreconditionError("CyclotomicProduct: zero remainder");
    if (remainder_.leading() < 0) {
        remainder_ = -remainder_;
        sign_ = -sign_;
    }
}

CyclotomicProduct CyclotomicProduct::phi(unsigned long n, unsigned exponent)
{
    return CyclotomicProduct(1, FactorMap{{n, exponent}});
}

CyclotomicProduct CyclotomicProduct::power_minus_one(unsigned long m)
{
    FactorMap f;
    for (unsigned long d : divisors(m))
        f[d] = 1;
    return CyclotomicProduct(1, std::move(f));
}

unsigned CyclotomicProduct::exponent(unsigned long n) const
{
    auto it = factors_.find(n);
    return it == factors_.end() ? 0 : it->second;
}

int CyclotomicProduct::degree() const
{
    long deg = remainder_.degree();
    for (const auto& [n, e] : factors_)
        deg += static_cast<long>(euler_phi(n)) * e;
    return static_cast<int>(deg);
}

unsigned long CyclotomicProduct::order() const
{
    unsigned long ord = 1;
    for (const auto& [n, e] : factors_)
        ord = std::lcm(ord, n);
    return ord;
}

IntPolynomial CyclotomicProduct::expand() const
{
    IntPolynomial result = remainder_;
    for (const auto& [n, e] : factors_)
        result *= pow(cyclotomic(n), e);
    return sign_ < 0 ? -result : result;
}

CyclotomicProduct CyclotomicProduct::compose_power(unsigned long k) const
{
    if (k == 0)
        throw PreconditionError("compose_power: exponent must be positive");
    // Phi_n(t^k) = prod of Phi_m over m | nk with m / gcd(m, k) = n.
    FactorMap out;
    for (const auto& [n, e] : factors_)
        for (unsigned long m : divisors(n * k))
            if (m / std::gcd(m, k) == n)
                out[m] += e;
    return CyclotomicProduct(sign_, std::move(out), remainder_.compose_power(k));
}

std::string CyclotomicProduct::to_string() const
{
    std::ostringstream out;
    bool first = true;
    if (sign_ < 0)
        out << "-";
    for (const auto& [n, e] : factors_) {
        if (!first)
            out << " * ";
        first = false;
        out << "Phi_" << n;
        if (e > 1)
            out << "^" << e;
    }
    if (!remainder_.is_one()) {
        if (!first)
            out << " * ";
        first = false;
        out << "(" << remainder_.to_string() << ")";
    }
    if (first)
        out << "1";
    return out.str();
}

CyclotomicProduct CyclotomicProduct::exact_divide(const CyclotomicProduct& rhs) const
{
    FactorMap out = factors_;
    for (const auto& [n, e] : rhs.factors_) {
        auto it = out.find(n);
        if (it == out.end() || it->second < e)
            throw ComputationError("exact_divide: Phi_" + std::to_string(n) + " does not divide");
        it->second -= e;
    }
    auto rem = exact_quotient(remainder_, rhs.remainder_);
    if (!rem)
        throw ComputationError("exact_divide: remainder does not divide");
    return CyclotomicProduct(sign_ * rhs.sign_, std::move(out), std::move(*rem));
}

bool CyclotomicProduct::divides(const CyclotomicProduct& rhs) const
{
    for (const auto& [n, e] : factors_)
        if (rhs.exponent(n) < e)
            return false;
    return cmplane::divides(remainder_, rhs.remainder_);
}

CyclotomicProduct operator*(const CyclotomicProduct& a, const CyclotomicProduct& b)
{
    CyclotomicProduct::FactorMap f = a.factors_;
    for (const auto& [n, e] : b.factors_)
        f[n] += e;
    return CyclotomicProduct(a.sign_ * b.sign_, std::move(f), a.remainder_ * b.remainder_);
}

bool operator==(const CyclotomicProduct& a, const CyclotomicProduct& b)
{
    return a.sign_ == b.sign_ && a.factors_ == b.factors_ && a.remainder_ == b.remainder_;
}

CyclotomicProduct pow(const CyclotomicProduct& base, unsigned exponent)
{
    CyclotomicProduct::FactorMap f;
    for (const auto& [n, e] : base.factors())
        f[n] = e * exponent;
    int sign = (base.sign() < 0 && exponent % 2 == 1) ? -1 : 1;
    return CyclotomicProduct(sign, std::move(f), pow(base.remainder(), exponent));
}

CyclotomicProduct factor_cyclotomic(const IntPolynomial& p)
{
    if (p.is_zero())
        throw PreconditionError("factor_cyclotomic: zero polynomial");
    int sign = p.leading() < 0 ? -1 : 1;
    IntPolynomial rest = sign < 0 ? -p : p;
    CyclotomicProduct::FactorMap factors;
    const auto deg = static_cast<unsigned long>(rest.degree());
    // phi(n) <= deg implies n <= 3 deg^2 for every deg >= 1 (phi(n) >= sqrt(n/2)).
    const unsigned long bound = 3 * deg * deg;
    for (unsigned long n = 1; n <= bound && rest.degree() > 0; ++n) {
        if (euler_phi(n) > static_cast<unsigned long>(rest.degree()))
            continue;
        const IntPolynomial phi_n = cyclotomic(n);
        for (;;) {
            auto q = divmod_monic(rest, phi_n);
            if (!q.remainder.is_zero())
                break;
            rest = std::move(q.quotient);
            ++factors[n];
        }
    }
    return CyclotomicProduct(sign, std::move(factors), std::move(rest));
}

} // namespace cmplane
