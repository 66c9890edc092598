#include "cmplane/resolution.hpp"

#include "cmplane/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace cmplane {

ResolutionTree::ResolutionTree(std::vector<ResolutionNode> nodes, std::vector<std::pair<int, int>> edges)
    : nodes_(std::move(nodes))
{
    const std::size_t count = nodes_.size();
    if (count == 0)
        throw PreconditionError("resolution tree: no nodes");
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j)
            if (nodes_[i].id == nodes_[j].id)
                throw PreconditionError("resolution tree: duplicate id " + std::to_string(nodes_[i].id));
        if (nodes_[i].multiplicity <= 0)
            throw PreconditionError("resolution tree: node " + std::to_string(nodes_[i].id) +
                                    " has non-positive multiplicity");
        if (nodes_[i].is_strict_transform) {
            if (strict_id_ != -1)
                throw PreconditionError("resolution tree: more than one strict transform node");
            strict_id_ = nodes_[i].id;
            if (nodes_[i].multiplicity != 1)
                throw PreconditionError("resolution tree: strict transform must have multiplicity 1");
        }
    }
    if (strict_id_ == -1)
        throw PreconditionError("resolution tree: no strict transform node");

    adjacency_.assign(count, {});
    for (auto [u, v] : edges) {
        if (u == v)
            throw PreconditionError("resolution tree: self loop at " + std::to_string(u));
        const std::size_t iu = index_of(u);
        const std::size_t iv = index_of(v);
        auto e = std::minmax(u, v);
        if (std::find(edges_.begin(), edges_.end(), std::pair<int, int>(e.first, e.second)) != edges_.end())
            throw PreconditionError("resolution tree: repeated edge");
        edges_.emplace_back(e.first, e.second);
        adjacency_[iu].push_back(v);
        adjacency_[iv].push_back(u);
    }
    std::sort(edges_.begin(), edges_.end());
    if (edges_.size() + 1 != count)
        throw PreconditionError("resolution tree: edge count does not match a tree");

    // Connectivity from the strict transform; with |E| = |V| - 1 this also rules out cycles.
    parent_.assign(count, -2);
    std::vector<int> stack{strict_id_};
    parent_[index_of(strict_id_)] = -1;
    std::size_t seen = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adjacency_[index_of(u)]) {
            auto& p = parent_[index_of(v)];
            if (p != -2)
                continue;
            p = u;
            ++seen;
            stack.push_back(v);
        }
    }
    if (seen != count)
        throw PreconditionError("resolution tree: graph is not connected");

    if (adjacency_[index_of(strict_id_)].size() != 1)
        throw PreconditionError("resolution tree: strict transform must meet exactly one component");
    for (std::size_t i = 0; i < count; ++i) {
        if (nodes_[i].is_strict_transform || adjacency_[i].size() < 3)
            continue;
        if (adjacency_[i].size() != 3)
            throw PreconditionError("resolution tree: rupture node " + std::to_string(nodes_[i].id) +
                                    " has valency " + std::to_string(adjacency_[i].size()));
        rupture_ids_.push_back(nodes_[i].id);
    }
    std::sort(rupture_ids_.begin(), rupture_ids_.end());
}

std::size_t ResolutionTree::index_of(int id) const
{
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].id == id)
            return i;
    throw PreconditionError("resolution tree: unknown node id " + std::to_string(id));
}

const ResolutionNode& ResolutionTree::node(int id) const
{
    return nodes_[index_of(id)];
}

std::vector<int> ResolutionTree::neighbors(int id) const
{
    auto out = adjacency_[index_of(id)];
    std::sort(out.begin(), out.end());
    return out;
}

int ResolutionTree::toward_strict_transform(int id) const
{
    return parent_[index_of(id)];
}

namespace {

constexpr std::size_t infinite_order = std::numeric_limits<std::size_t>::max();

// Truncated power series in t; coefficients of t^0 .. t^{size-1} are exact.
using Series = std::vector<mpq_class>;

std::size_t order(const Series& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != 0)
            return i;
    return infinite_order;
}

// num / den with ord(den) = k <= ord(num); the result is exact to size - k terms.
Series divide(const Series& num, const Series& den, std::size_t k)
{
    const std::size_t len = std::min(num.size(), den.size()) - k;
    Series out(len);
    const mpq_class inv = 1 / den[k];
    for (std::size_t i = 0; i < len; ++i) {
        mpq_class acc = num[i + k];
        for (std::size_t j = 1; j <= i; ++j)
            if (den[j + k] != 0 && out[i - j] != 0)
                acc -= den[j + k] * out[i - j];
        out[i] = acc * inv;
    }
    return out;
}

struct BlowupState {
    Series x, y;
    int axis_x = -1; // component with local equation x = 0 through the point
    int axis_y = -1; // component with local equation y = 0
};

} // namespace

ResolutionTree resolution_tree(const PuiseuxCharacteristic& pc)
{
    const long n = pc.multiplicity();
    const auto exps = pc.exponents();
    std::vector<std::size_t> y_powers;
    for (const auto& e : exps) {
        mpq_class v = e * n;
        y_powers.push_back(static_cast<std::size_t>(v.get_num().get_ui()));
    }
    // Each blow-up consumes (multiplicity of the branch) terms of precision;
    // the multiplicities sum to well below n + top exponent.
    const std::size_t top = y_powers.back();
    const std::size_t precision = 2 * (top + static_cast<std::size_t>(n)) + 16;

    BlowupState st;
    st.x.assign(precision, 0);
    st.y.assign(precision, 0);
    st.x[static_cast<std::size_t>(n)] = 1;
    for (auto p : y_powers)
        st.y[p] = 1;

    std::vector<long> mult;
    std::vector<std::pair<int, int>> edges;
    const auto remove_edge = [&](int u, int v) {
        auto e = std::minmax(u, v);
        edges.erase(std::remove(edges.begin(), edges.end(), std::pair<int, int>(e.first, e.second)), edges.end());
    };

    const std::size_t max_steps = 4 * (top + static_cast<std::size_t>(n)) + 16;
    for (std::size_t step = 0;; ++step) {
        if (step > max_steps)
            throw ComputationError("resolution_tree: blow-up sequence did not terminate");
        const std::size_t ox = order(st.x);
        const std::size_t oy = order(st.y);
        const std::size_t e = std::min(ox, oy);
        if (e == infinite_order || e == 0)
            throw ComputationError("resolution_tree: series precision exhausted");

        const int on_divisors = (st.axis_x >= 0 ? 1 : 0) + (st.axis_y >= 0 ? 1 : 0);
        const bool normal_crossing = e == 1 && (on_divisors == 0 || (on_divisors == 1 && ((st.axis_x >= 0 && ox == 1) ||
                                                                                       (st.axis_y >= 0 && oy == 1))));
        if (normal_crossing)
            break;

        const int id = static_cast<int>(mult.size());
        long m = static_cast<long>(e);
        for (int axis : {st.axis_x, st.axis_y}) {
            if (axis < 0)
                continue;
            m += mult[static_cast<std::size_t>(axis)];
            edges.emplace_back(axis, id);
        }
        if (on_divisors == 2)
            remove_edge(st.axis_x, st.axis_y);
        mult.push_back(m);

        if (ox <= oy) {
            // chart (x, y/x): the new component is {x = 0}
            st.y = divide(st.y, st.x, ox);
            st.x.resize(st.y.size());
            st.axis_x = id;
            if (st.y[0] != 0) {
                st.y[0] = 0;
                st.axis_y = -1;
            }
        } else {
            // chart (x/y, y): the new component is {y = 0}
            st.x = divide(st.x, st.y, oy);
            st.y.resize(st.x.size());
            st.axis_y = id;
        }
    }

    const int strict = static_cast<int>(mult.size());
    const int carrier = st.axis_x >= 0 ? st.axis_x : st.axis_y;
    if (carrier < 0)
        throw PreconditionError("resolution_tree: germ is already smooth");
    edges.emplace_back(carrier, strict);

    std::vector<ResolutionNode> nodes;
    for (std::size_t i = 0; i < mult.size(); ++i)
        nodes.push_back({static_cast<int>(i), mult[i], false});
    nodes.push_back({strict, 1, true});
    return ResolutionTree(std::move(nodes), std::move(edges));
}

CyclotomicProduct acampo_charpoly(const ResolutionTree& tree)
{
    // Signed exponent of Phi_d in (t - 1) prod (t^m - 1)^{-chi(E°)}.
    std::map<unsigned long, long> exponent{{1, 1}};
    for (const auto& nd : tree.nodes()) {
        if (nd.is_strict_transform)
            continue;
        const long weight = static_cast<long>(tree.valency(nd.id)) - 2;
        if (weight == 0)
            continue;
        for (unsigned long d : divisors(static_cast<unsigned long>(nd.multiplicity)))
            exponent[d] += weight;
    }
    CyclotomicProduct::FactorMap factors;
    for (const auto& [d, e] : exponent) {
        if (e < 0)
            throw ComputationError("acampo_charpoly: Phi_" + std::to_string(d) + " has negative exponent " +
                                   std::to_string(e));
        if (e > 0)
            factors[d] = static_cast<unsigned>(e);
    }
    return CyclotomicProduct(1, std::move(factors));
}

LocalAlbaneseReport local_albanese(const PuiseuxCharacteristic& pc, long n)
{
    if (n < 2)
        throw PreconditionError("local_albanese: N must be >= 2");
    const ResolutionTree tree = resolution_tree(pc);
    LocalAlbaneseReport report;
    report.cover_degree_n = n;
    for (int id : tree.rupture_ids()) {
        const long m = tree.node(id).multiplicity;
        const long d = std::gcd(n, m);
        if (d < 2)
            continue;

        // Branch exponents ordered (a, b, c): b on the path to the strict
        // transform, a the smaller-id remaining neighbor, c the last one.
        const int toward = tree.toward_strict_transform(id);
        std::vector<int> others;
        for (int v : tree.neighbors(id))
            if (v != toward)
                others.push_back(v);
        std::vector<long> r;
        for (int v : {others[0], toward, others[1]})
            r.push_back(tree.node(v).multiplicity % d);

        // An unbranched point leaves at most two branch points: genus 0.
        if (std::find(r.begin(), r.end(), 0L) != r.end())
            continue;
        const long sum = r[0] + r[1] + r[2];
        if (sum == 2 * d) {
            // y -> x(x-1)/y: same curve, inverse deck generator.
            for (auto& v : r)
                v = d - v;
        } else if (sum != d) {
            throw ComputationError("local_albanese: branch exponents do not sum to a multiple of the degree");
        }
        // gcd > 1 splits the cover into that many isomorphic components.
        const long components = std::gcd(std::gcd(r[0], r[1]), std::gcd(r[2], d));
        const BelyiCover cover(r[0] / components, r[1] / components, r[2] / components, d / components);
        const long g = genus(cover);
        if (g == 0)
            continue;
        for (long k = 0; k < components; ++k) {
            report.factors.push_back(AlbaneseFactor{id, m, cover, g, cm_exponents(cover), cm_conductors(cover)});
            report.total_dimension += g;
        }
    }
    return report;
}

} // namespace cmplane
