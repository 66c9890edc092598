#include "cmplane/job.hpp"

#include "cmplane/errors.hpp"
#include "cmplane/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cmplane {

using nlohmann::json;

SchemaError::SchemaError(std::vector<std::string> violations)
    : std::runtime_error([&] {
          std::string msg = "invalid job document";
          for (const auto& v : violations)
              msg += "\n  " + v;
          return msg;
      }()),
      violations_(std::move(violations))
{
}

const std::vector<std::string>& job_commands()
{
    static const std::vector<std::string> names{"monodromy", "spectrum", "resolve",  "albanese-local", "belyi",
                                                "alexander", "superabundance", "cover", "mw-rank"};
    return names;
}

namespace {

// Collects violations while walking a document.
class Reader {
public:
    std::vector<std::string> errors;

    void fail(const std::string& path, const std::string& rule) { errors.push_back(path + ": " + rule); }

    const json* member(const json& obj, const std::string& key, const std::string& path, bool required)
    {
        if (!obj.is_object()) {
            fail(path, "expected an object");
            return nullptr;
        }
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required)
                fail(path + "." + key, "required field missing");
            return nullptr;
        }
        return &*it;
    }

    std::optional<long> integer(const json& v, const std::string& path, long min)
    {
        if (!v.is_number_integer()) {
            fail(path, "expected an integer");
            return std::nullopt;
        }
        const long x = v.get<long>();
        if (x < min) {
            fail(path, "must be >= " + std::to_string(min));
            return std::nullopt;
        }
        return x;
    }

    std::optional<long> integer_field(const json& obj, const std::string& key, const std::string& path, long min,
                                      bool required = true)
    {
        const json* v = member(obj, key, path, required);
        return v ? integer(*v, path + "." + key, min) : std::nullopt;
    }

    std::optional<bool> boolean_field(const json& obj, const std::string& key, const std::string& path, bool fallback)
    {
        const json* v = member(obj, key, path, false);
        if (!v)
            return fallback;
        if (!v->is_boolean()) {
            fail(path + "." + key, "expected a boolean");
            return std::nullopt;
        }
        return v->get<bool>();
    }

    std::optional<mpz_class> big_integer(const json& v, const std::string& path)
    {
        if (v.is_number_integer())
            return mpz_class(std::to_string(v.get<long long>()));
        if (v.is_string()) {
            mpz_class z;
            const auto s = v.get<std::string>();
            if (!s.empty() && z.set_str(s, 10) == 0)
                return z;
        }
        fail(path, "expected an integer or a decimal integer string");
        return std::nullopt;
    }

    std::optional<mpq_class> rational(const json& v, const std::string& path)
    {
        if (v.is_number_integer())
            return mpq_class(mpz_class(std::to_string(v.get<long long>())));
        if (v.is_string()) {
            mpq_class q;
            const auto s = v.get<std::string>();
            if (!s.empty() && q.set_str(s, 10) == 0 && q.get_den() != 0) {
                q.canonicalize();
                return q;
            }
        }
        fail(path, "expected an integer or a rational string \"p/q\"");
        return std::nullopt;
    }

    std::optional<IntPolynomial> coefficient_list(const json& v, const std::string& path)
    {
        if (!v.is_array()) {
            fail(path, "expected an array of integer coefficients, lowest degree first");
            return std::nullopt;
        }
        std::vector<mpz_class> c;
        bool ok = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto z = big_integer(v[i], path + "[" + std::to_string(i) + "]");
            ok = ok && z.has_value();
            c.push_back(z.value_or(0));
        }
        if (!ok)
            return std::nullopt;
        IntPolynomial p(std::move(c));
        if (p.is_zero()) {
            fail(path, "polynomial must be nonzero");
            return std::nullopt;
        }
        return p;
    }

    // Either a coefficient array or {"factors": [[n, e], ...], "sign": +-1, "remainder": [...]}.
    std::optional<CyclotomicProduct> polynomial(const json& v, const std::string& path)
    {
        if (v.is_array()) {
            auto p = coefficient_list(v, path);
            if (!p)
                return std::nullopt;
            return factor_cyclotomic(*p);
        }
        if (!v.is_object()) {
            fail(path, "expected a coefficient array or a factored polynomial object");
            return std::nullopt;
        }
        const std::size_t before = errors.size();
        CyclotomicProduct::FactorMap f;
        if (const json* fs = member(v, "factors", path, true)) {
            if (!fs->is_array()) {
                fail(path + ".factors", "expected an array of [n, e] pairs");
            } else {
                for (std::size_t i = 0; i < fs->size(); ++i) {
                    const std::string at = path + ".factors[" + std::to_string(i) + "]";
                    const json& pr = (*fs)[i];
                    if (!pr.is_array() || pr.size() != 2) {
                        fail(at, "expected [n, e]");
                        continue;
                    }
                    auto n = integer(pr[0], at + "[0]", 1);
                    auto e = integer(pr[1], at + "[1]", 0);
                    if (n && e)
                        f[static_cast<unsigned long>(*n)] += static_cast<unsigned>(*e);
                }
            }
        }
        long sign = 1;
        if (const json* s = member(v, "sign", path, false)) {
            auto sv = integer(*s, path + ".sign", -1);
            if (sv && *sv != 1 && *sv != -1)
                fail(path + ".sign", "must be 1 or -1");
            sign = sv.value_or(1);
        }
        IntPolynomial rem{1};
        if (const json* r = member(v, "remainder", path, false)) {
            auto rp = coefficient_list(*r, path + ".remainder");
            if (rp) {
                const auto refactored = factor_cyclotomic(*rp);
                if (!refactored.factors().empty())
                    fail(path + ".remainder", "remainder must not contain cyclotomic factors");
                rem = *rp;
            }
        }
        if (errors.size() != before)
            return std::nullopt;
        return CyclotomicProduct(static_cast<int>(sign), std::move(f), std::move(rem));
    }

    // Integer, rational string, or {"conductor": n, "coeffs": [...]} / {"conductor": n, "zeta_power": k}.
    std::optional<CyclotomicNumber> cyclotomic_number(const json& v, const std::string& path)
    {
        if (v.is_number_integer() || v.is_string()) {
            auto q = rational(v, path);
            return q ? std::optional<CyclotomicNumber>(CyclotomicNumber(*q)) : std::nullopt;
        }
        if (!v.is_object()) {
            fail(path, "expected a cyclotomic number {\"conductor\": n, \"coeffs\": [...]}");
            return std::nullopt;
        }
        auto n = integer_field(v, "conductor", path, 1);
        if (!n)
            return std::nullopt;
        const json* coeffs = member(v, "coeffs", path, false);
        const json* power = member(v, "zeta_power", path, false);
        if ((coeffs != nullptr) == (power != nullptr)) {
            fail(path, "exactly one of \"coeffs\" or \"zeta_power\" is required");
            return std::nullopt;
        }
        if (power) {
            if (!power->is_number_integer()) {
                fail(path + ".zeta_power", "expected an integer");
                return std::nullopt;
            }
            return CyclotomicNumber::zeta(static_cast<unsigned long>(*n), power->get<long>());
        }
        if (!coeffs->is_array()) {
            fail(path + ".coeffs", "expected an array of rationals");
            return std::nullopt;
        }
        std::vector<mpq_class> c;
        bool ok = true;
        for (std::size_t i = 0; i < coeffs->size(); ++i) {
            auto q = rational((*coeffs)[i], path + ".coeffs[" + std::to_string(i) + "]");
            ok = ok && q.has_value();
            c.push_back(q.value_or(0));
        }
        if (!ok)
            return std::nullopt;
        return CyclotomicNumber::from_coeffs(static_cast<unsigned long>(*n), c);
    }

    std::optional<PuiseuxCharacteristic> pairs(const json& v, const std::string& path)
    {
        if (!v.is_array() || v.empty()) {
            fail(path, "expected a nonempty array of [k, n] pairs");
            return std::nullopt;
        }
        std::vector<PuiseuxPair> out;
        bool ok = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const std::string at = path + "[" + std::to_string(i) + "]";
            if (!v[i].is_array() || v[i].size() != 2) {
                fail(at, "expected [k, n]");
                ok = false;
                continue;
            }
            auto k = integer(v[i][0], at + "[0]", 1);
            auto n = integer(v[i][1], at + "[1]", 1);
            ok = ok && k && n;
            out.push_back({k.value_or(0), n.value_or(0)});
        }
        if (!ok)
            return std::nullopt;
        return invariant(path, [&] { return PuiseuxCharacteristic(out); });
    }

    template <class F>
    auto invariant(const std::string& path, F&& make) -> std::optional<decltype(make())>
    {
        try {
            return make();
        } catch (const PreconditionError& e) {
            fail(path, e.what());
            return std::nullopt;
        }
    }

    std::optional<OnePair> one_pair(const json& obj, const std::string& path)
    {
        auto p = integer_field(obj, "p", path, 2);
        auto q = integer_field(obj, "q", path, 2);
        if (!p || !q)
            return std::nullopt;
        if (std::gcd(*p, *q) != 1) {
            fail(path, "gcd(p, q) != 1");
            return std::nullopt;
        }
        return OnePair{*p, *q};
    }

    // {"type": "one-pair"|"puiseux"|"ade"|"charpoly", ...}
    std::optional<SingularityDescriptor> descriptor(const json& v, const std::string& path)
    {
        const json* type = member(v, "type", path, true);
        if (!type)
            return std::nullopt;
        if (!type->is_string()) {
            fail(path + ".type", "expected a string");
            return std::nullopt;
        }
        const auto t = type->get<std::string>();
        if (t == "one-pair") {
            auto o = one_pair(v, path);
            return o ? std::optional<SingularityDescriptor>(SingularityDescriptor{*o}) : std::nullopt;
        }
        if (t == "puiseux") {
            const json* ps = member(v, "pairs", path, true);
            auto pc = ps ? pairs(*ps, path + ".pairs") : std::nullopt;
            return pc ? std::optional<SingularityDescriptor>(SingularityDescriptor{*pc}) : std::nullopt;
        }
        if (t == "ade") {
            const json* name = member(v, "name", path, true);
            if (!name)
                return std::nullopt;
            if (!name->is_string()) {
                fail(path + ".name", "expected a string such as \"E6\"");
                return std::nullopt;
            }
            auto a = invariant(path + ".name", [&] { return parse_ade(name->get<std::string>()); });
            return a ? std::optional<SingularityDescriptor>(SingularityDescriptor{*a}) : std::nullopt;
        }
        if (t == "charpoly") {
            const json* c = member(v, "coeffs", path, true);
            auto p = c ? coefficient_list(*c, path + ".coeffs") : std::nullopt;
            return p ? std::optional<SingularityDescriptor>(SingularityDescriptor{RawCharpoly{*p}}) : std::nullopt;
        }
        fail(path + ".type", "unknown singularity type '" + t + "' (one-pair, puiseux, ade, charpoly)");
        return std::nullopt;
    }

    std::optional<CurveConfiguration> curve(const json& v, const std::string& path)
    {
        const std::size_t before = errors.size();
        CurveConfiguration cfg;
        cfg.degree = integer_field(v, "degree", path, 1).value_or(1);
        cfg.components = integer_field(v, "components", path, 1, false).value_or(1);
        cfg.irreducible = boolean_field(v, "irreducible", path, true).value_or(true);
        cfg.transversal_at_infinity = boolean_field(v, "transversal_at_infinity", path, true).value_or(true);
        if (const json* pts = member(v, "points", path, true)) {
            if (!pts->is_array()) {
                fail(path + ".points", "expected an array");
            } else {
                for (std::size_t i = 0; i < pts->size(); ++i) {
                    const std::string at = path + ".points[" + std::to_string(i) + "]";
                    const json& pt = (*pts)[i];
                    const json* loc = member(pt, "location", at, true);
                    const json* sing = member(pt, "singularity", at, true);
                    std::optional<SingularityDescriptor> desc = sing ? descriptor(*sing, at + ".singularity")
                                                                     : std::nullopt;
                    if (!loc)
                        continue;
                    if (!loc->is_array() || loc->size() != 3) {
                        fail(at + ".location", "expected three projective coordinates");
                        continue;
                    }
                    std::array<std::optional<CyclotomicNumber>, 3> c;
                    for (std::size_t k = 0; k < 3; ++k)
                        c[k] = cyclotomic_number((*loc)[k], at + ".location[" + std::to_string(k) + "]");
                    if (!c[0] || !c[1] || !c[2] || !desc)
                        continue;
                    auto point = invariant(at + ".location",
                                           [&] { return SingularPoint({*c[0], *c[1], *c[2]}, *desc); });
                    if (point)
                        cfg.points.push_back(std::move(*point));
                }
            }
        }
        if (errors.size() != before)
            return std::nullopt;
        return cfg;
    }
};

JobPayload parse_payload(Reader& r, const std::string& command, const json& doc)
{
    const std::string root = "$";
    auto must = [&](auto opt) {
        if (!opt)
            throw SchemaError(r.errors);
        return *opt;
    };

    if (command == "monodromy") {
        if (doc.contains("singularity"))
            return jobs::Monodromy{must(r.descriptor(doc["singularity"], root + ".singularity"))};
        if (doc.contains("pairs"))
            return jobs::Monodromy{{must(r.pairs(doc["pairs"], root + ".pairs"))}};
        if (doc.contains("ade")) {
            json d = {{"type", "ade"}, {"name", doc["ade"]}};
            return jobs::Monodromy{must(r.descriptor(d, root))};
        }
        if (doc.contains("charpoly")) {
            json d = {{"type", "charpoly"}, {"coeffs", doc["charpoly"]}};
            return jobs::Monodromy{must(r.descriptor(d, root))};
        }
        if (doc.contains("p") || doc.contains("q"))
            return jobs::Monodromy{{must(r.one_pair(doc, root))}};
        r.fail(root, "monodromy needs one of: singularity, pairs, ade, charpoly, p/q");
        throw SchemaError(r.errors);
    }
    if (command == "spectrum") {
        auto o = must(r.one_pair(doc, root));
        return jobs::Spectrum{o.p, o.q};
    }
    if (command == "resolve") {
        const json* ps = r.member(doc, "pairs", root, true);
        return jobs::Resolve{must(ps ? r.pairs(*ps, root + ".pairs") : std::nullopt)};
    }
    if (command == "albanese-local") {
        const json* ps = r.member(doc, "pairs", root, true);
        auto pc = ps ? r.pairs(*ps, root + ".pairs") : std::nullopt;
        auto n = r.integer_field(doc, "N", root, 2);
        return jobs::AlbaneseLocal{must(pc), must(n)};
    }
    if (command == "belyi") {
        auto a = r.integer_field(doc, "a", root, 1);
        auto b = r.integer_field(doc, "b", root, 1);
        auto c = r.integer_field(doc, "c", root, 1);
        auto d = r.integer_field(doc, "d", root, 1);
        if (a && b && c && d) {
            if (*a + *b + *c != *d)
                r.fail(root, "a+b+c != d");
            else if (std::gcd(std::gcd(*a, *b), std::gcd(*c, *d)) != 1)
                r.fail(root, "gcd(a,b,c,d) != 1 (reducible cover)");
        }
        if (!r.errors.empty())
            throw SchemaError(r.errors);
        return jobs::Belyi{BelyiCover(*a, *b, *c, *d)};
    }

    const json* cv = r.member(doc, "curve", root, false);
    std::optional<CurveConfiguration> curve = cv ? r.curve(*cv, root + ".curve") : std::nullopt;
    const auto pq = [&]() -> std::optional<OnePair> {
        if (!doc.contains("p") && !doc.contains("q"))
            return std::nullopt;
        return r.one_pair(doc, root);
    };

    if (command == "alexander") {
        if (!cv)
            r.fail(root + ".curve", "required field missing");
        jobs::Alexander job{curve.value_or(CurveConfiguration{}), pq(), std::nullopt};
        if (const json* sup = r.member(doc, "alexander_polynomial", root, false))
            job.supplied = r.coefficient_list(*sup, root + ".alexander_polynomial");
        if (job.type && job.supplied)
            r.fail(root, "give either p/q or alexander_polynomial, not both");
        if (!r.errors.empty())
            throw SchemaError(r.errors);
        return job;
    }
    if (command == "superabundance") {
        if (!cv)
            r.fail(root + ".curve", "required field missing");
        auto o = r.one_pair(doc, root);
        if (!r.errors.empty())
            throw SchemaError(r.errors);
        return jobs::Superabundance{*curve, o->p, o->q};
    }
    if (command == "cover") {
        jobs::Cover job{curve, 0, 0, {}, r.integer_field(doc, "N", root, 2).value_or(0)};
        if (const json* mods = r.member(doc, "modules", root, false)) {
            if (cv)
                r.fail(root, "give either curve (with p, q) or modules, not both");
            if (!mods->is_array()) {
                r.fail(root + ".modules", "expected an array of coefficient arrays");
            } else {
                for (std::size_t i = 0; i < mods->size(); ++i) {
                    auto p = r.coefficient_list((*mods)[i], root + ".modules[" + std::to_string(i) + "]");
                    if (p)
                        job.modules.push_back(*p);
                }
            }
        } else if (cv) {
            auto o = r.one_pair(doc, root);
            if (o) {
                job.p = o->p;
                job.q = o->q;
            }
        } else {
            r.fail(root, "cover needs curve (with p, q) or modules");
        }
        if (!r.errors.empty())
            throw SchemaError(r.errors);
        return job;
    }
    if (command == "mw-rank") {
        jobs::MwRank job{};
        job.curve = curve;
        job.holonomy_order = static_cast<unsigned long>(r.integer_field(doc, "holonomy_order", root, 2).value_or(2));
        if (const json* alex = r.member(doc, "alexander", root, false))
            job.alexander = r.polynomial(*alex, root + ".alexander");
        if (cv) {
            if (auto o = pq()) {
                job.p = o->p;
                job.q = o->q;
            } else if (!job.alexander) {
                r.fail(root, "with a curve and no alexander polynomial, p and q are required");
            }
        } else if (!doc.contains("alexander")) {
            r.fail(root, "mw-rank needs an alexander polynomial or a curve with p, q");
        }
        if (const json* fib = r.member(doc, "fiber", root, true)) {
            const std::string at = root + ".fiber";
            job.fiber.cm_conductor =
                static_cast<unsigned long>(r.integer_field(*fib, "cm_conductor", at, 0).value_or(0));
            job.fiber.simple = r.boolean_field(*fib, "simple", at, true).value_or(true);
            job.fiber.trivial_trace = r.boolean_field(*fib, "trivial_trace", at, true).value_or(true);
        }
        job.albanese_multiplicity_known =
            r.boolean_field(doc, "albanese_multiplicity_known", root, false).value_or(false);
        if (!r.errors.empty())
            throw SchemaError(r.errors);
        return job;
    }
    throw SchemaError({"$.command: unknown command '" + command + "'"});
}

json string_list(const std::vector<mpz_class>& v)
{
    json out = json::array();
    for (const auto& c : v)
        out.push_back(c.get_str());
    return out;
}

template <class Range>
json int_list(const Range& r)
{
    json out = json::array();
    for (const auto& x : r)
        out.push_back(x);
    return out;
}

json cover_json(const BelyiCover& c)
{
    return {{"a", c.a()}, {"b", c.b()}, {"c", c.c()}, {"d", c.d()}};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

template <class T>
std::string join_numbers(const T& r)
{
    std::vector<std::string> parts;
    for (const auto& x : r)
        parts.push_back(std::to_string(x));
    return "{" + join(parts, ", ") + "}";
}

std::string poly_summary(const CyclotomicProduct& p)
{
    const std::string factored = p.to_string();
    const std::string expanded = p.expand().to_string();
    return factored == expanded ? factored : factored + " = " + expanded;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

JobResult run_monodromy(const jobs::Monodromy& job)
{
    const auto& s = job.singularity;
    const CyclotomicProduct delta = local_charpoly(s);
    const CmVerdict v = cm_verdict(s);
    json res;
    res["singularity"] = s.to_string();
    res["charpoly"] = polynomial_json(delta);
    res["milnor_number"] = delta.degree();
    res["monodromy_order"] = delta.is_cyclotomic() ? json(delta.order()) : json(nullptr);
    json roots = json::array();
    for (const auto& [n, e] : v.multiple_roots)
        roots.push_back({{"n", n}, {"e", e}});
    res["cm_verdict"] = {{"status", to_string(v.status)},
                         {"multiple_roots", roots},
                         {"delta_at_minus_one", v.value_at_minus_one.get_str()},
                         {"explanation", v.explanation}};
    std::ostringstream sum;
    sum << "singularity: " << s.to_string() << "\n"
        << "monodromy characteristic polynomial: " << poly_summary(delta) << "\n"
        << "Milnor number: " << delta.degree() << "\n"
        << "CM verdict: " << to_string(v.status) << " (" << v.explanation << ")\n";
    if (const auto* pc = std::get_if<PuiseuxCharacteristic>(&s.kind)) {
        res["cabling_numbers"] = int_list(pc->cabling_numbers());
        sum << "cabling numbers w_i: " << join_numbers(pc->cabling_numbers()) << "\n";
    }
    if (auto o = s.one_pair_type()) {
        json spec = json::array();
        for (const auto& a : spectrum_one_pair(o->p, o->q))
            spec.push_back(a.get_str());
        res["spectrum"] = spec;
    }
    return {res, sum.str()};
}

JobResult run_spectrum(const jobs::Spectrum& job)
{
    const auto spec = spectrum_one_pair(job.p, job.q);
    json list = json::array();
    std::vector<std::string> parts;
    for (const auto& a : spec) {
        list.push_back(a.get_str());
        parts.push_back(a.get_str());
    }
    json res = {{"p", job.p}, {"q", job.q}, {"spectrum", list}, {"count", spec.size()}};
    std::string sum = "spectrum of u^" + std::to_string(job.p) + " = v^" + std::to_string(job.q) + " in (0,1): {" +
                      join(parts, ", ") + "} (" + std::to_string(spec.size()) + " values)\n";
    return {res, sum};
}

JobResult run_resolve(const jobs::Resolve& job)
{
    const ResolutionTree tree = resolution_tree(job.pairs);
    const CyclotomicProduct acampo = acampo_charpoly(tree);
    const CyclotomicProduct puiseux = charpoly_puiseux(job.pairs);
    json nodes = json::array();
    for (const auto& n : tree.nodes())
        nodes.push_back({{"id", n.id}, {"multiplicity", n.multiplicity}, {"strict_transform", n.is_strict_transform}});
    json edges = json::array();
    for (const auto& [u, v] : tree.edges())
        edges.push_back({u, v});
    json res = {{"nodes", nodes},
                {"edges", edges},
                {"rupture_ids", int_list(tree.rupture_ids())},
                {"acampo_charpoly", polynomial_json(acampo)},
                {"puiseux_charpoly", polynomial_json(puiseux)},
                {"oracle_agrees", acampo == puiseux}};
    std::ostringstream sum;
    sum << "resolution: " << tree.nodes().size() - 1 << " exceptional components, " << tree.rupture_ids().size()
        << " rupture node(s)\n";
    for (int id : tree.rupture_ids()) {
        std::vector<long> nb;
        for (int v : tree.neighbors(id))
            nb.push_back(tree.node(v).multiplicity);
        sum << "  rupture node " << id << ": m = " << tree.node(id).multiplicity << ", neighbors "
            << join_numbers(nb) << "\n";
    }
    sum << "A'Campo characteristic polynomial: " << acampo.to_string()
        << (acampo == puiseux ? " (agrees with cabling formula)" : " (DISAGREES with cabling formula)") << "\n";
    return {res, sum.str()};
}

JobResult run_albanese_local(const jobs::AlbaneseLocal& job)
{
    const LocalAlbaneseReport rep = local_albanese(job.pairs, job.n);
    json factors = json::array();
    std::ostringstream sum;
    sum << "local Albanese of z^" << job.n << " = f: dimension " << rep.total_dimension << "\n";
    for (const auto& f : rep.factors) {
        factors.push_back({{"node_id", f.node_id},
                           {"node_multiplicity", f.node_multiplicity},
                           {"belyi", cover_json(f.belyi)},
                           {"genus", f.genus},
                           {"cm_exponents", int_list(f.cm_exponents)},
                           {"cm_conductors", int_list(f.cm_conductors)}});
        sum << "  node " << f.node_id << " (m = " << f.node_multiplicity << "): " << f.belyi.to_string() << ", genus "
            << f.genus << ", CM exponents " << join_numbers(f.cm_exponents) << ", fields Q(zeta_n) for n in "
            << join_numbers(f.cm_conductors) << "\n";
    }
    json res = {{"N", job.n},
                {"factors", factors},
                {"total_dimension", rep.total_dimension},
                {"milnor_number", charpoly_puiseux(job.pairs).degree()}};
    return {res, sum.str()};
}

JobResult run_belyi(const jobs::Belyi& job)
{
    const BelyiCover& c = job.cover;
    json mults = json::array();
    for (long j = 1; j < c.d(); ++j)
        mults.push_back(eigen_multiplicity(c, j));
    const CyclotomicProduct deck = deck_charpoly(c);
    const auto exps = cm_exponents(c);
    const auto conds = cm_conductors(c);
    json res = {{"cover", cover_json(c)},
                {"genus", genus(c)},
                {"eigen_multiplicities", mults},
                {"cm_exponents", int_list(exps)},
                {"cm_conductors", int_list(conds)},
                {"deck_charpoly", polynomial_json(deck)}};
    std::ostringstream sum;
    sum << "Belyi cover " << c.to_string() << "\n"
        << "genus: " << genus(c) << "\n"
        << "holomorphic eigenvalue exponents j (exp(2 pi i j/" << c.d() << ")): " << join_numbers(exps) << "\n"
        << "deck transformation on H_1: " << poly_summary(deck) << "\n";
    return {res, sum.str()};
}

JobResult run_alexander(const jobs::Alexander& job)
{
    AlexanderReport rep = job.type       ? alexander_polynomial(job.curve, job.type->p, job.type->q)
                          : job.supplied ? alexander_user_supplied(job.curve, *job.supplied)
                                         : alexander_bound_only(job.curve);
    json res = {{"method", to_string(rep.method)}, {"local_bound", polynomial_json(rep.local_bound)}};
    std::ostringstream sum;
    sum << "local bound: " << rep.local_bound.to_string() << "\n";
    if (rep.superabundance) {
        res["superabundance"] = *rep.superabundance;
        sum << "superabundance s = " << *rep.superabundance << "\n";
    }
    if (rep.polynomial) {
        res["polynomial"] = polynomial_json(*rep.polynomial);
        res["divides_local_bound"] = rep.polynomial->divides(rep.local_bound);
        sum << "Alexander polynomial (" << to_string(rep.method) << "): " << poly_summary(*rep.polynomial) << "\n";
    }
    return {res, sum.str()};
}

JobResult run_superabundance(const jobs::Superabundance& job)
{
    const SuperabundanceResult sa = superabundance_details(job.curve, job.p, job.q);
    json res = {{"twist_degree", sa.twist_degree},
                {"points", sa.points},
                {"rank", sa.rank},
                {"conductor", sa.conductor},
                {"superabundance", sa.superabundance}};
    if (sa.twist_degree >= 0) {
        // Float cross-check of the exact elimination.
        std::vector<SingularPoint> pts;
        for (const auto& p : job.curve.points)
            if (!p.descriptor().is_node())
                pts.push_back(p);
        res["numeric_rank"] = numeric_rank(evaluation_matrix(pts, sa.twist_degree));
    }
    std::ostringstream sum;
    sum << sa.points << " points, curves of degree " << sa.twist_degree << ", exact rank " << sa.rank
        << " over Q(zeta_" << sa.conductor << "), superabundance " << sa.superabundance << "\n";
    return {res, sum.str()};
}

JobResult run_cover(const jobs::Cover& job)
{
    json res = {{"N", job.n}};
    std::ostringstream sum;
    CyclotomicProduct h1;
    long dim = 0;
    std::set<unsigned long> conds;
    if (job.curve) {
        const CoverAlbaneseReport rep = cover_albanese_report(*job.curve, job.p, job.q, job.n);
        h1 = rep.h1_charpoly;
        dim = rep.dimension;
        conds = rep.cm_conductors;
        res["superabundance"] = rep.superabundance;
    } else {
        h1 = cover_h1_charpoly(job.modules, job.n);
        dim = h1.degree() / 2;
        for (const auto& [m, e] : h1.factors())
            conds.insert(m);
    }
    res["h1_charpoly"] = polynomial_json(h1);
    res["dimension"] = dim;
    res["cm_conductors"] = int_list(conds);
    sum << job.n << "-fold cyclic cover: H_1 characteristic polynomial " << h1.to_string() << ", Albanese dimension "
        << dim << ", CM fields Q(zeta_n) for n in " << join_numbers(conds) << "\n";
    return {res, sum.str()};
}

JobResult run_mw_rank(const jobs::MwRank& job)
{
    json res;
    std::ostringstream sum;
    CyclotomicProduct alexander;
    if (job.alexander) {
        alexander = *job.alexander;
    } else {
        alexander = *alexander_polynomial(*job.curve, job.p, job.q).polynomial;
    }
    const MWRankReport rep = rank_report(alexander, job.holonomy_order, job.fiber, job.albanese_multiplicity_known);
    res["alexander"] = polynomial_json(alexander);
    res["holonomy_order"] = rep.holonomy_order;
    res["phi_multiplicity"] = rep.phi_multiplicity;
    res["bound"] = rep.bound;
    res["exact"] = rep.exact ? json(*rep.exact) : json(nullptr);
    res["reason"] = to_string(rep.reason);
    res["assumptions"] = {{"cm_conductor", rep.fiber.cm_conductor},
                          {"simple", rep.fiber.simple},
                          {"trivial_trace", rep.fiber.trivial_trace},
                          {"albanese_multiplicity_known", rep.albanese_multiplicity_known}};
    if (job.curve) {
        std::vector<CyclotomicProduct> locals;
        for (const auto& p : job.curve->points)
            locals.push_back(local_charpoly(p.descriptor()));
        res["holonomy_consistency"] = holonomy_consistency(job.holonomy_order, locals);
    }
    sum << "Alexander polynomial: " << alexander.to_string() << "\n"
        << "multiplicity of Phi_" << rep.holonomy_order << ": " << rep.phi_multiplicity << "\n"
        << "Mordell-Weil rank bound: " << rep.bound;
    if (rep.exact)
        sum << ", exact rank " << *rep.exact;
    sum << " (" << to_string(rep.reason) << ")\n"
        << std::boolalpha << "assumed: cm_conductor=" << rep.fiber.cm_conductor << " simple=" << rep.fiber.simple
        << " trivial_trace=" << rep.fiber.trivial_trace
        << " albanese_multiplicity_known=" << rep.albanese_multiplicity_known << "\n";
    return {res, sum.str()};
}

} // namespace

json polynomial_json(const CyclotomicProduct& p)
{
    json factors = json::array();
    for (const auto& [n, e] : p.factors())
        factors.push_back({{"n", n}, {"e", e}});
    return {{"factored", p.to_string()},
            {"sign", p.sign()},
            {"factors", factors},
            {"remainder", string_list(p.remainder().coeffs())},
            {"expanded", string_list(p.expand().coeffs())},
            {"degree", p.degree()}};
}

JobDescription parse_job(std::string_view document)
{
    json doc = json::parse(document, nullptr, false);
    if (doc.is_discarded())
        throw SchemaError({"$: malformed JSON document"});
    return parse_job(doc);
}

JobDescription parse_job(const json& doc)
{
    Reader r;
    if (!doc.is_object())
        throw SchemaError({"$: expected a JSON object"});
    const json* cmd = r.member(doc, "command", "$", true);
    if (!cmd)
        throw SchemaError(r.errors);
    if (!cmd->is_string())
        throw SchemaError({"$.command: expected a string"});
    const auto name = cmd->get<std::string>();
    const auto& names = job_commands();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw SchemaError({"$.command: unknown command '" + name + "'"});
    JobPayload payload = parse_payload(r, name, doc);
    if (!r.errors.empty())
        throw SchemaError(r.errors);
    return {name, std::move(payload)};
}

JobResult run_job(const JobDescription& job)
{
    JobResult out = std::visit(overloaded{
                                   [](const jobs::Monodromy& j) { return run_monodromy(j); },
                                   [](const jobs::Spectrum& j) { return run_spectrum(j); },
                                   [](const jobs::Resolve& j) { return run_resolve(j); },
                                   [](const jobs::AlbaneseLocal& j) { return run_albanese_local(j); },
                                   [](const jobs::Belyi& j) { return run_belyi(j); },
                                   [](const jobs::Alexander& j) { return run_alexander(j); },
                                   [](const jobs::Superabundance& j) { return run_superabundance(j); },
                                   [](const jobs::Cover& j) { return run_cover(j); },
                                   [](const jobs::MwRank& j) { return run_mw_rank(j); },
                               },
                               job.payload);
    out.report = json{{"schema", report_schema_id}, {"command", job.command}, {"result", std::move(out.report)}};
    return out;
}

namespace {

enum class Kind { Integer, Boolean, String, Array, Object, Polynomial, IntegerOrNull };

void check_polynomial(const json& v, const std::string& path, std::vector<std::string>& errs)
{
    if (!v.is_object()) {
        errs.push_back(path + ": expected a polynomial object");
        return;
    }
    const auto need = [&](const char* key, bool ok) {
        if (!v.contains(key) || !ok)
            errs.push_back(path + "." + key + ": missing or ill-typed");
    };
    need("factored", v.contains("factored") && v["factored"].is_string());
    need("sign", v.contains("sign") && v["sign"].is_number_integer());
    need("degree", v.contains("degree") && v["degree"].is_number_integer());
    need("factors", v.contains("factors") && v["factors"].is_array());
    for (const char* key : {"expanded", "remainder"}) {
        bool ok = v.contains(key) && v[key].is_array();
        if (ok)
            for (const auto& c : v[key])
                ok = ok && c.is_string();
        need(key, ok);
    }
    if (v.contains("factors") && v["factors"].is_array())
        for (const auto& f : v["factors"])
            if (!f.is_object() || !f.contains("n") || !f.contains("e") || !f["n"].is_number_integer() ||
                !f["e"].is_number_integer())
                errs.push_back(path + ".factors: entries must be {\"n\": int, \"e\": int}");
}

bool matches(const json& v, Kind k)
{
    switch (k) {
    case Kind::Integer:
        return v.is_number_integer();
    case Kind::Boolean:
        return v.is_boolean();
    case Kind::String:
        return v.is_string();
    case Kind::Array:
        return v.is_array();
    case Kind::Object:
        return v.is_object();
    case Kind::Polynomial:
        return v.is_object();
    case Kind::IntegerOrNull:
        return v.is_number_integer() || v.is_null();
    }
    return false;
}

} // namespace

std::vector<std::string> validate_report(const json& report)
{
    using K = Kind;
    static const std::map<std::string, std::vector<std::pair<std::string, Kind>>> required{
        {"monodromy",
         {{"singularity", K::String}, {"charpoly", K::Polynomial}, {"milnor_number", K::Integer},
          {"cm_verdict", K::Object}}},
        {"spectrum", {{"p", K::Integer}, {"q", K::Integer}, {"spectrum", K::Array}, {"count", K::Integer}}},
        {"resolve",
         {{"nodes", K::Array}, {"edges", K::Array}, {"rupture_ids", K::Array}, {"acampo_charpoly", K::Polynomial},
          {"puiseux_charpoly", K::Polynomial}, {"oracle_agrees", K::Boolean}}},
        {"albanese-local",
         {{"N", K::Integer}, {"factors", K::Array}, {"total_dimension", K::Integer}, {"milnor_number", K::Integer}}},
        {"belyi",
         {{"cover", K::Object}, {"genus", K::Integer}, {"eigen_multiplicities", K::Array},
          {"cm_exponents", K::Array}, {"cm_conductors", K::Array}, {"deck_charpoly", K::Polynomial}}},
        {"alexander", {{"method", K::String}, {"local_bound", K::Polynomial}}},
        {"superabundance",
         {{"twist_degree", K::Integer}, {"points", K::Integer}, {"rank", K::Integer}, {"conductor", K::Integer},
          {"superabundance", K::Integer}}},
        {"cover",
         {{"N", K::Integer}, {"h1_charpoly", K::Polynomial}, {"dimension", K::Integer}, {"cm_conductors", K::Array}}},
        {"mw-rank",
         {{"alexander", K::Polynomial}, {"holonomy_order", K::Integer}, {"phi_multiplicity", K::Integer},
          {"bound", K::Integer}, {"exact", K::IntegerOrNull}, {"reason", K::String}, {"assumptions", K::Object}}},
    };
    std::vector<std::string> errs;
    if (!report.is_object())
        return {"$: expected an object"};
    if (!report.contains("schema") || report["schema"] != report_schema_id)
        errs.push_back(std::string("$.schema: must be \"") + report_schema_id + "\"");
    if (!report.contains("command") || !report["command"].is_string() ||
        !required.contains(report["command"].get<std::string>())) {
        errs.push_back("$.command: missing or unknown");
        return errs;
    }
    if (!report.contains("result") || !report["result"].is_object()) {
        errs.push_back("$.result: expected an object");
        return errs;
    }
    const json& res = report["result"];
    for (const auto& [key, kind] : required.at(report["command"].get<std::string>())) {
        const std::string path = "$.result." + key;
        if (!res.contains(key)) {
            errs.push_back(path + ": required field missing");
            continue;
        }
        if (!matches(res[key], kind)) {
            errs.push_back(path + ": wrong type");
            continue;
        }
        if (kind == K::Polynomial)
            check_polynomial(res[key], path, errs);
    }
    for (const char* key : {"polynomial"})
        if (res.contains(key))
            check_polynomial(res[key], std::string("$.result.") + key, errs);
    if (report.contains("summary") && !report["summary"].is_string())
        errs.push_back("$.summary: expected a string");
    return errs;
}

} // namespace cmplane
