#pragma once

#include "cmplane/belyi.hpp"
#include "cmplane/cyclotomic.hpp"
#include "cmplane/singularity.hpp"

#include <set>
#include <utility>
#include <vector>

namespace cmplane {

struct ResolutionNode {
    int id = 0;
    /// Multiplicity m(D) of the total transform of f along the component.
    long multiplicity = 0;
    bool is_strict_transform = false;
};

/// Dual graph of an embedded resolution, strict transform included.
class ResolutionTree {
public:
    /// Validates: unique ids, edges between known ids, the graph is a
    /// tree, exactly one strict-transform node (multiplicity 1, a leaf),
    /// and every rupture node (an exceptional node of valency >= 3) has
    /// valency exactly 3.  Violations throw PreconditionError.
    ResolutionTree(std::vector<ResolutionNode> nodes, std::vector<std::pair<int, int>> edges);

    const std::vector<ResolutionNode>& nodes() const { return nodes_; }
    /// Normalized (min, max), sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& rupture_ids() const { return rupture_ids_; }

    const ResolutionNode& node(int id) const;
    int strict_transform_id() const { return strict_id_; }
    std::vector<int> neighbors(int id) const;
    std::size_t valency(int id) const { return neighbors(id).size(); }
    /// Neighbor of `id` on the path towards the strict transform
    /// (-1 for the strict transform itself).
    int toward_strict_transform(int id) const;

private:
    std::size_t index_of(int id) const;

    std::vector<ResolutionNode> nodes_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<int> rupture_ids_;
    std::vector<int> parent_; // toward the strict transform, by node index
    int strict_id_ = -1;
};

/// Minimal embedded resolution of the germ, by explicit point blow-ups of
/// the parametrization x = t^n, y = sum t^{n e_i}.  Exceptional components
/// get ids 0, 1, ... in blow-up order; the strict transform comes last.
ResolutionTree resolution_tree(const PuiseuxCharacteristic& pc);

/// Monodromy characteristic polynomial on H^1 of the Milnor fiber from the
/// resolution data: (t - 1) prod_E (t^{m_E} - 1)^{valency(E) - 2}.
/// Throws ComputationError when the product is not a polynomial.
CyclotomicProduct acampo_charpoly(const ResolutionTree& tree);

struct AlbaneseFactor {
    int node_id = 0;
    long node_multiplicity = 0;
    BelyiCover belyi;
    long genus = 0;
    std::vector<long> cm_exponents;
    std::set<unsigned long> cm_conductors;
};

struct LocalAlbaneseReport {
    long cover_degree_n = 0;
    std::vector<AlbaneseFactor> factors;
    long total_dimension = 0;
};

/// Positive-genus exceptional curves of the resolution of z^N = f(x, y),
/// one factor per connected component over each rupture node.
/// Throws PreconditionError for N < 2.
LocalAlbaneseReport local_albanese(const PuiseuxCharacteristic& pc, long n);

} // namespace cmplane
