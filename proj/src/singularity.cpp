#include "cmplane/singularity.hpp"

#include "cmplane/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cmplane {

namespace {

void require_coprime_pair(long p, long q, const char* where)
{
    if (p < 2 || q < 2)
        throw PreconditionError(std::string(where) + ": need p, q >= 2, got (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
    if (std::gcd(p, q) != 1)
        throw PreconditionError(std::string(where) + ": gcd(" + std::to_string(p) + "," + std::to_string(q) +
                                ") != 1");
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

} // namespace

PuiseuxCharacteristic::PuiseuxCharacteristic(std::vector<PuiseuxPair> pairs) : pairs_(std::move(pairs))
{
    if (pairs_.empty())
        throw PreconditionError("Puiseux characteristic: at least one pair required");
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        const auto [k, n] = pairs_[i];
        const std::string where = "Puiseux pair " + std::to_string(i + 1) + " (" + std::to_string(k) + "," +
                                  std::to_string(n) + ")";
        if (n < 2)
            throw PreconditionError(where + ": n must be >= 2");
        if (k < 1)
            throw PreconditionError(where + ": k must be positive");
        if (std::gcd(k, n) != 1)
            throw PreconditionError(where + ": gcd(k, n) != 1");
    }
    if (pairs_.front().k <= pairs_.front().n)
        throw PreconditionError("Puiseux characteristic: k_1 must exceed n_1");
}

long PuiseuxCharacteristic::multiplicity() const
{
    long m = 1;
    for (const auto& pr : pairs_)
        m *= pr.n;
    return m;
}

std::vector<mpq_class> PuiseuxCharacteristic::exponents() const
{
    std::vector<mpq_class> out;
    mpq_class e = 0;
    long denom = 1;
    for (const auto& pr : pairs_) {
        denom *= pr.n;
        e += mpq_class(pr.k, denom);
        e.canonicalize();
        out.push_back(e);
    }
    return out;
}

std::vector<long> PuiseuxCharacteristic::cabling_numbers() const
{
    std::vector<long> w;
    w.push_back(pairs_.front().k);
    for (std::size_t i = 1; i < pairs_.size(); ++i)
        w.push_back(w.back() * pairs_[i - 1].n * pairs_[i].n + pairs_[i].k);
    return w;
}

bool SingularityDescriptor::is_unibranched() const
{
    return std::visit(overloaded{
                          [](const OnePair&) { return true; },
                          [](const PuiseuxCharacteristic&) { return true; },
                          [](const AdeType& t) {
                              return (t.letter == 'A' && t.index % 2 == 0) ||
                                     (t.letter == 'E' && t.index != 7);
                          },
                          [](const RawCharpoly&) { return false; },
                      },
                      kind);
}

std::optional<OnePair> SingularityDescriptor::one_pair_type() const
{
    auto sorted = [](long a, long b) { return OnePair{std::min(a, b), std::max(a, b)}; };
    return std::visit(overloaded{
                          [&](const OnePair& o) -> std::optional<OnePair> { return sorted(o.p, o.q); },
                          [&](const PuiseuxCharacteristic& pc) -> std::optional<OnePair> {
                              if (pc.size() != 1)
                                  return std::nullopt;
                              return sorted(pc.pairs()[0].k, pc.pairs()[0].n);
                          },
                          [&](const AdeType& t) -> std::optional<OnePair> {
                              if (t.letter == 'A' && t.index % 2 == 0)
                                  return sorted(2, t.index + 1);
                              if (t.letter == 'E' && t.index == 6)
                                  return OnePair{3, 4};
                              if (t.letter == 'E' && t.index == 8)
                                  return OnePair{3, 5};
                              return std::nullopt;
                          },
                          [](const RawCharpoly&) -> std::optional<OnePair> { return std::nullopt; },
                      },
                      kind);
}

bool SingularityDescriptor::is_node() const
{
    const auto* ade = std::get_if<AdeType>(&kind);
    return ade != nullptr && ade->letter == 'A' && ade->index == 1;
}

std::string SingularityDescriptor::to_string() const
{
    return std::visit(overloaded{
                          [](const OnePair& o) {
                              return "u^" + std::to_string(o.p) + " = v^" + std::to_string(o.q);
                          },
                          [](const PuiseuxCharacteristic& pc) {
                              std::ostringstream out;
                              out << "puiseux";
                              for (const auto& pr : pc.pairs())
                                  out << " (" << pr.k << "," << pr.n << ")";
                              return out.str();
                          },
                          [](const AdeType& t) { return std::string(1, t.letter) + std::to_string(t.index); },
                          [](const RawCharpoly& r) { return "charpoly " + r.polynomial.to_string(); },
                      },
                      kind);
}

AdeType parse_ade(const std::string& name)
{
    if (name.size() < 2)
        throw PreconditionError("unknown ADE type '" + name + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    int index = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])) || index > 100000)
            throw PreconditionError("unknown ADE type '" + name + "'");
        index = index * 10 + (name[i] - '0');
    }
    AdeType t{letter, index};
    charpoly_ade(t); // validates
    return t;
}

CyclotomicProduct charpoly_one_pair(long p, long q)
{
    require_coprime_pair(p, q, "charpoly_one_pair");
    // Roots: the d-th roots of unity with d | pq, d not dividing p or q.
    CyclotomicProduct::FactorMap f;
    for (unsigned long d : divisors(static_cast<unsigned long>(p * q)))
        if (p % static_cast<long>(d) != 0 && q % static_cast<long>(d) != 0)
            f[d] = 1;
    return CyclotomicProduct(1, std::move(f));
}

CyclotomicProduct charpoly_puiseux(const PuiseuxCharacteristic& pc)
{
    const auto& pairs = pc.pairs();
    const auto w = pc.cabling_numbers();
    CyclotomicProduct result;
    long tail = pc.multiplicity();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        tail /= pairs[i].n;
        result = result * charpoly_one_pair(w[i], pairs[i].n).compose_power(static_cast<unsigned long>(tail));
    }
    return result;
}

CyclotomicProduct charpoly_ade(const AdeType& type)
{
    const auto bad = [&] {
        return PreconditionError("unknown ADE type " + std::string(1, type.letter) + std::to_string(type.index));
    };
    switch (type.letter) {
    case 'A': {
        if (type.index < 1)
            throw bad();
        // (t^{m+1} - (-1)^{m+1}) / (t + 1); equals Delta_{2,m+1} for m even.
        const auto m1 = static_cast<unsigned long>(type.index + 1);
        if (m1 % 2 == 1)
            return CyclotomicProduct::power_minus_one(2 * m1).exact_divide(
                CyclotomicProduct::power_minus_one(m1) * CyclotomicProduct::phi(2));
        return CyclotomicProduct::power_minus_one(m1).exact_divide(CyclotomicProduct::phi(2));
    }
    case 'D': {
        if (type.index < 4)
            throw bad();
        // (t^{n-1} + (-1)^{n-1}) (t - 1)
        const auto k = static_cast<unsigned long>(type.index - 1);
        CyclotomicProduct head = k % 2 == 1 ? CyclotomicProduct::power_minus_one(k)
                                            : CyclotomicProduct::power_minus_one(2 * k).exact_divide(
                                                  CyclotomicProduct::power_minus_one(k));
        return head * CyclotomicProduct::phi(1);
    }
    case 'E':
        switch (type.index) {
        case 6:
            return charpoly_one_pair(3, 4);
        case 7:
            // x^3 + x y^3: eigenvalue 1 and the primitive 9th roots of unity.
            return CyclotomicProduct::phi(1) * CyclotomicProduct::phi(9);
        case 8:
            return charpoly_one_pair(3, 5);
        default:
            throw bad();
        }
    default:
        throw bad();
    }
}

CyclotomicProduct local_charpoly(const SingularityDescriptor& s)
{
    return std::visit(overloaded{
                          [](const OnePair& o) { return charpoly_one_pair(o.p, o.q); },
                          [](const PuiseuxCharacteristic& pc) { return charpoly_puiseux(pc); },
                          [](const AdeType& t) { return charpoly_ade(t); },
                          [](const RawCharpoly& r) { return factor_cyclotomic(r.polynomial); },
                      },
                      s.kind);
}

std::vector<mpq_class> spectrum_one_pair(long p, long q)
{
    require_coprime_pair(p, q, "spectrum_one_pair");
    std::vector<mpq_class> out;
    for (long i = 1; i < p; ++i) {
        for (long j = 1; j < q; ++j) {
            mpq_class a = mpq_class(i, p) + mpq_class(j, q);
            a.canonicalize();
            if (a < 1)
                out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(CmStatus status)
{
    switch (status) {
    case CmStatus::CmByUnibranched:
        return "cm-by-unibranched";
    case CmStatus::CmByCriterion:
        return "cm-by-criterion";
    case CmStatus::CriterionInapplicable:
        return "criterion-inapplicable";
    }
    return "unknown";
}

CmVerdict cm_verdict(const SingularityDescriptor& s)
{
    const CyclotomicProduct delta = local_charpoly(s);
    CmVerdict v;
    for (const auto& [n, e] : delta.factors())
        if (n > 1 && e >= 2)
            v.multiple_roots.emplace_back(n, e);
    v.value_at_minus_one = delta.expand()(-1);

    if (s.is_unibranched()) {
        v.status = CmStatus::CmByUnibranched;
        v.explanation = "unibranched germ: every exceptional curve of z^N = f is a Belyi cyclic cover";
        return v;
    }
    if (!delta.is_cyclotomic()) {
        v.status = CmStatus::CriterionInapplicable;
        v.explanation = "characteristic polynomial has roots that are not roots of unity";
        return v;
    }
    const bool simple = v.multiple_roots.empty();
    const bool nonzero = v.value_at_minus_one != 0;
    if (simple && nonzero) {
        v.status = CmStatus::CmByCriterion;
        v.explanation = "no multiple roots other than 1 and Delta(-1) != 0";
    } else {
        v.status = CmStatus::CriterionInapplicable;
        std::ostringstream out;
        if (!simple) {
            out << "multiple roots:";
            for (const auto& [n, e] : v.multiple_roots)
                out << " Phi_" << n << "^" << e;
        }
        if (!nonzero)
            out << (simple ? "" : "; ") << "Delta(-1) = 0";
        v.explanation = out.str();
    }
    return v;
}

} // namespace cmplane
