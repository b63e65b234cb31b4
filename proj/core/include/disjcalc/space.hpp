#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace disjcalc {

struct TopologyViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Index of an open set inside its FiniteSpace (position in the canonical
/// order: opens sorted lexicographically by their sorted point lists).
using OpenId = int;

/// A finite topological space: the open-set lattice that colors every
/// operation of the calculus.  Points are arbitrary integer labels; opens
/// are stored as bitmasks over the point list (at most 64 points, far above
/// desk scale).  Immutable after construction.
class FiniteSpace {
public:
    /// Validates the axioms: contains {} and the full point set, closed
    /// under pairwise union and intersection.  Throws TopologyViolation.
    FiniteSpace(std::vector<int> points, std::vector<std::vector<int>> opens,
                std::string name = "");

    static FiniteSpace empty();
    static FiniteSpace point();
    static FiniteSpace sierpinski();
    static FiniteSpace discrete(int n);
    static FiniteSpace indiscrete(int n);
    /// Points {1,2,3}, opens {{},{1},{3},{1,3},{1,2,3}}: two disjoint
    /// "intervals" inside one connected open.
    static FiniteSpace pseudo_line();
    /// Resolves one of the preset names above, or throws.
    static FiniteSpace named(const std::string& name);

    const std::string& name() const { return name_; }
    int num_points() const { return static_cast<int>(points_.size()); }
    int num_opens() const { return static_cast<int>(masks_.size()); }
    const std::vector<int>& points() const { return points_; }

    OpenId empty_open() const { return empty_id_; }
    OpenId total_open() const { return total_id_; }

    bool subset(OpenId u, OpenId v) const { return (mask(u) & ~mask(v)) == 0; }
    bool strict_subset(OpenId u, OpenId v) const { return subset(u, v) && u != v; }
    /// The empty set is disjoint from itself.
    bool disjoint(OpenId u, OpenId v) const { return (mask(u) & mask(v)) == 0; }
    bool pairwise_disjoint(const std::vector<OpenId>& us) const;
    OpenId union_of(OpenId u, OpenId v) const;
    OpenId union_of(const std::vector<OpenId>& us) const;
    OpenId intersection_of(OpenId u, OpenId v) const;

    /// Members of an open as sorted point labels.
    std::vector<int> members(OpenId u) const;
    /// Rendered as "{1,3}" ("{}" when empty) with sorted point labels.
    std::string open_str(OpenId u) const;
    /// Looks up an open by its member list; throws if not an open.
    OpenId open_of(const std::vector<int>& pts) const;
    /// Parses "{1,3}", "{}", or the UTF-8 empty-set symbol.
    OpenId parse_open(const std::string& s) const;

    /// Number of connected components of the subspace u (decomposition of u
    /// into minimal nonempty clopen-in-u pieces is not needed; components
    /// are computed from the open-set lattice restricted to u).
    std::vector<OpenId> components(OpenId u) const;

    bool operator==(const FiniteSpace& other) const
    {
        return points_ == other.points_ && masks_ == other.masks_;
    }

private:
    uint64_t mask(OpenId u) const { return masks_[static_cast<size_t>(u)]; }
    OpenId id_of_mask(uint64_t m) const;

    std::string name_;
    std::vector<int> points_;     // sorted labels
    std::vector<uint64_t> masks_; // canonical order
    OpenId empty_id_ = -1;
    OpenId total_id_ = -1;
};

/// Reference to a single open subset; the handle used by callers who want a
/// value instead of an id.
struct Open {
    const FiniteSpace* space = nullptr;
    OpenId id = -1;
};

/// All topologies on {1..n} (n <= 3 is what the verification suites use),
/// in a deterministic order.
std::vector<FiniteSpace> all_spaces_up_to(int max_points);

} // namespace disjcalc
