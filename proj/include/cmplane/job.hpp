#pragma once

#include "cmplane/alexander.hpp"
#include "cmplane/belyi.hpp"
#include "cmplane/mordell_weil.hpp"
#include "cmplane/singularity.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cmplane {

inline constexpr const char* report_schema_id = "cmplane.report/v1";

/// A job document failed validation.  Each violation reads "<path>: <rule>".
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

namespace jobs {

struct Monodromy {
    SingularityDescriptor singularity;
};
struct Spectrum {
    long p, q;
};
struct Resolve {
    PuiseuxCharacteristic pairs;
};
struct AlbaneseLocal {
    PuiseuxCharacteristic pairs;
    long n;
};
struct Belyi {
    BelyiCover cover;
};
struct Alexander {
    CurveConfiguration curve;
    std::optional<OnePair> type;
    std::optional<IntPolynomial> supplied;
};
struct Superabundance {
    CurveConfiguration curve;
    long p, q;
};
struct Cover {
    std::optional<CurveConfiguration> curve;
    long p = 0, q = 0;
    std::vector<IntPolynomial> modules;
    long n;
};
struct MwRank {
    std::optional<CyclotomicProduct> alexander;
    std::optional<CurveConfiguration> curve;
    long p = 0, q = 0;
    unsigned long holonomy_order;
    FiberDescriptor fiber;
    bool albanese_multiplicity_known = false;
};

} // namespace jobs

using JobPayload = std::variant<jobs::Monodromy, jobs::Spectrum, jobs::Resolve, jobs::AlbaneseLocal, jobs::Belyi,
                                jobs::Alexander, jobs::Superabundance, jobs::Cover, jobs::MwRank>;

struct JobDescription {
    std::string command;
    JobPayload payload;
};

/// Command names in canonical order.
const std::vector<std::string>& job_commands();

/// Parses and validates a job document; throws SchemaError listing every
/// violation found (malformed JSON, unknown command, missing or ill-typed
/// fields, failed domain invariants such as a+b+c != d).
JobDescription parse_job(std::string_view document);
JobDescription parse_job(const nlohmann::json& document);

struct JobResult {
    /// Machine-readable report (keys sorted, so dumps are deterministic).
    nlohmann::json report;
    std::string summary;
};

/// Runs a validated job.  Mathematical precondition failures surface as
/// PreconditionError, internal exactness failures as ComputationError.
JobResult run_job(const JobDescription& job);

/// Structural check of a report against the v1 report layout; returns the
/// violations (empty when valid).
std::vector<std::string> validate_report(const nlohmann::json& report);

/// JSON rendering of a polynomial: factored text, factor list, expanded
/// coefficients as decimal strings (lowest degree first).
nlohmann::json polynomial_json(const CyclotomicProduct& p);

} // namespace cmplane
