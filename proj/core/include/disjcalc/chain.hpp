#pragma once

#include "disjcalc/space.hpp"

#include <compare>
#include <vector>

namespace disjcalc {

/// Strictly increasing chain of opens U_1 < U_2 < ... < U_s, s >= 1.
struct Chain {
    std::vector<OpenId> entries;

    Chain() = default;
    explicit Chain(std::vector<OpenId> e) : entries(std::move(e)) {}

    int length() const { return static_cast<int>(entries.size()); }
    OpenId bottom() const { return entries.front(); }
    OpenId top() const { return entries.back(); }

    bool valid(const FiniteSpace& sp) const;
    auto operator<=>(const Chain&) const = default;
};

/// Ordered list of strict chains with pairwise-disjoint tops.  The spanning
/// index for the dual cooperad and for every higher operation: weight
/// (k-1) + sum(s_i - 1), cohomological degree -weight.
struct ChainFamily {
    std::vector<Chain> chains;

    ChainFamily() = default;
    explicit ChainFamily(std::vector<Chain> c) : chains(std::move(c)) {}

    int arity() const { return static_cast<int>(chains.size()); }
    int weight() const;
    int degree() const { return -weight(); }

    std::vector<OpenId> bottoms() const;
    std::vector<OpenId> tops() const;
    OpenId output(const FiniteSpace& sp) const;

    /// Tops pairwise disjoint (the empty set counts as self-disjoint),
    /// arity >= 1, every chain strict.
    bool valid(const FiniteSpace& sp) const;

    auto operator<=>(const ChainFamily&) const = default;
};

std::string chain_str(const FiniteSpace& sp, const Chain& c);
std::string family_str(const FiniteSpace& sp, const ChainFamily& f);

/// All strict chains in sp with the given bottom and top, any length.
std::vector<Chain> chains_between(const FiniteSpace& sp, OpenId bottom, OpenId top);

/// All strict chains with the given bottom (any top), grouped deterministically.
std::vector<Chain> chains_from(const FiniteSpace& sp, OpenId bottom);

/// All ordered lists of k strict chains with pairwise-disjoint tops and
/// (k-1) + sum(s_i-1) == weight.  Deterministic order: by output color,
/// then lexicographically on the chain lists.
std::vector<ChainFamily> enumerate_chain_families(const FiniteSpace& sp, int k, int weight);

/// Same, restricted to the given ordered bottom colors.
std::vector<ChainFamily> enumerate_chain_families_with_bottoms(
    const FiniteSpace& sp, const std::vector<OpenId>& bottoms, int weight);

} // namespace disjcalc
