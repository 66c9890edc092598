#pragma once

#include "cmplane/cyclotomic.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cmplane {

/// The germ u^p = v^q; gcd(p, q) = 1 and p, q >= 2.
struct OnePair {
    long p = 0;
    long q = 0;
    friend bool operator==(const OnePair&, const OnePair&) = default;
};

struct PuiseuxPair {
    long k = 0;
    long n = 0;
    friend bool operator==(const PuiseuxPair&, const PuiseuxPair&) = default;
};

/// Characteristic pairs (k_1, n_1), ..., (k_g, n_g) of a unibranched germ.
///
/// Increment convention: the germ is y = x^{e_1} + ... + x^{e_g} with
/// e_1 = k_1 / n_1 and e_i = e_{i-1} + k_i / (n_1 ... n_i).  So
/// ((3,2),(1,2)) is y = x^{3/2} + x^{7/4}.
class PuiseuxCharacteristic {
public:
    /// Throws PreconditionError unless every n_i >= 2, k_i >= 1,
    /// gcd(k_i, n_i) = 1, and k_1 > n_1.
    explicit PuiseuxCharacteristic(std::vector<PuiseuxPair> pairs);

    const std::vector<PuiseuxPair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    /// n_1 ... n_g, the multiplicity of the germ.
    long multiplicity() const;
    /// The characteristic exponents e_i.
    std::vector<mpq_class> exponents() const;
    /// Cabling data: w_1 = k_1, w_{i+1} = w_i n_i n_{i+1} + k_{i+1}.
    std::vector<long> cabling_numbers() const;

    friend bool operator==(const PuiseuxCharacteristic&, const PuiseuxCharacteristic&) = default;

private:
    std::vector<PuiseuxPair> pairs_;
};

/// Simple singularity A_m (m >= 1), D_n (n >= 4), E_6, E_7, E_8.
struct AdeType {
    char letter = 'A';
    int index = 1;
    friend bool operator==(const AdeType&, const AdeType&) = default;
};

/// A germ known only through a user-supplied monodromy characteristic
/// polynomial (e.g. an ordinary multiple point).
struct RawCharpoly {
    IntPolynomial polynomial;
    friend bool operator==(const RawCharpoly&, const RawCharpoly&) = default;
};

using SingularityKind = std::variant<OnePair, PuiseuxCharacteristic, AdeType, RawCharpoly>;

struct SingularityDescriptor {
    SingularityKind kind;

    bool is_unibranched() const;
    /// (p, q) when the germ is topologically u^p = v^q: a one-pair germ, a
    /// single Puiseux pair, A_{2k}, E_6 or E_8.  The pair is sorted p < q.
    std::optional<OnePair> one_pair_type() const;
    bool is_node() const;
    std::string to_string() const;

    friend bool operator==(const SingularityDescriptor&, const SingularityDescriptor&) = default;
};

/// Parses "A2", "D5", "E7" (case-insensitive letter).
AdeType parse_ade(const std::string& name);

/// Delta_{p,q} = (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)).
CyclotomicProduct charpoly_one_pair(long p, long q);

/// prod_i Delta_{w_i, n_i}(t^{n_{i+1} ... n_g}).
CyclotomicProduct charpoly_puiseux(const PuiseuxCharacteristic& pc);

CyclotomicProduct charpoly_ade(const AdeType& type);

/// Monodromy characteristic polynomial of any supported descriptor.
CyclotomicProduct local_charpoly(const SingularityDescriptor& s);

/// {i/p + j/q : 0 < i < p, 0 < j < q} intersected with (0, 1), ascending.
std::vector<mpq_class> spectrum_one_pair(long p, long q);

enum class CmStatus { CmByUnibranched, CmByCriterion, CriterionInapplicable };

std::string to_string(CmStatus status);

struct CmVerdict {
    CmStatus status = CmStatus::CriterionInapplicable;
    /// Phi_n (n > 1) occurring with exponent >= 2.
    std::vector<std::pair<unsigned long, unsigned>> multiple_roots;
    mpz_class value_at_minus_one;
    std::string explanation;
};

CmVerdict cm_verdict(const SingularityDescriptor& s);

} // namespace cmplane
