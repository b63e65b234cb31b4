#pragma once

#include "disjcalc/perm.hpp"
#include "disjcalc/space.hpp"

#include <string>
#include <vector>

namespace disjcalc {

struct InadmissibleTree : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Planar rooted tree over the generating operations: unary extensions
/// ext(U,V) for U strictly inside V, binary products bin(U,V) for disjoint
/// U,V with output U|V.  Leaves carry 1-based labels.  The vertex-free tree
/// (a bare leaf) is the identity operation, distinct from any ext.
struct ETree {
    enum class Kind { leaf, ext, bin };

    Kind kind = Kind::leaf;
    int label = 0;     // leaves only
    OpenId color = -1; // output color of the subtree
    std::vector<ETree> kids;

    static ETree leaf(int label, OpenId color);
    /// ext with output v over the given subtree (strictness checked lazily).
    static ETree ext(OpenId v, ETree child);
    static ETree bin(const FiniteSpace& sp, ETree left, ETree right);

    int arity() const;
    int weight() const; // number of vertices
    int min_label() const;
    /// Colors of the inputs in label order 1..k.
    std::vector<OpenId> leaf_colors() const;

    /// Shuffle admissibility: edge colors consistent with the vertex
    /// generators (strict inclusion at ext, disjointness at bin) and
    /// children in increasing min-label order at every vertex; leaf labels
    /// must be exactly {1..arity}.
    bool admissible(const FiniteSpace& sp) const;
    void require_admissible(const FiniteSpace& sp) const;

    /// Children re-sorted by min label at every vertex (no signs: all
    /// generators sit in degree 0).
    ETree canonical() const;

    bool operator==(const ETree&) const;
    bool operator<(const ETree&) const;
};

/// Grafts `inner` into the leaf of `outer` labeled `slot` (1-based); leaf
/// labels renumber in the standard operadic way.  Result is canonical.
ETree graft(const FiniteSpace& sp, const ETree& outer, int slot, const ETree& inner);

/// Right action on leaf labels: the leaf labeled l is relabeled p(l)
/// (p is 0-based internally).  Result is canonical.
ETree act(const Perm& p, const ETree& t);

/// All admissible trees of exactly the given weight, over all colors and
/// arities, leaf labels 1..k.  Deterministic order.
std::vector<ETree> enumerate_trees(const FiniteSpace& sp, int weight);

std::string tree_str(const FiniteSpace& sp, const ETree& t);
std::string tree_dot(const FiniteSpace& sp, const ETree& t, const std::string& graph_name = "tree");

} // namespace disjcalc
