#pragma once

#include "disjcalc/combo.hpp"
#include "disjcalc/etree.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace disjcalc::disj {

struct ColorMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Basis operation m^V_{U_1..U_k}: inputs pairwise disjoint, each inside V.
struct DisjBasisElement {
    OpenId out = -1;
    std::vector<OpenId> in;

    int arity() const { return static_cast<int>(in.size()); }
    bool valid(const FiniteSpace& sp) const;
    auto operator<=>(const DisjBasisElement&) const = default;
};

std::string basis_str(const FiniteSpace& sp, const DisjBasisElement& m);

/// m^V_{U...} with inputs permuted: the right action sends slot i to the
/// input previously at p^{-1}(i).
DisjBasisElement act(const Perm& p, const DisjBasisElement& m);

/// Strict operadic composition.  Returns nullopt (the zero operation) when
/// the composite colors violate disjointness/inclusion; throws ColorMismatch
/// when slot colors do not match at all.
std::optional<DisjBasisElement> compose_strict(const FiniteSpace& sp,
                                               const DisjBasisElement& outer,
                                               const std::vector<DisjBasisElement>& inners);

/// Single-slot composition with identities elsewhere.
std::optional<DisjBasisElement> compose_at(const FiniteSpace& sp, const DisjBasisElement& outer,
                                           int slot, const DisjBasisElement& inner);

/// Rewrites every tree to its normal form m^V_{U...} (coefficient may be any
/// rational for a general combination; individual admissible trees always
/// normalize with coefficient +1).  Strategy: push extensions below the
/// products toward the root, collapse extension ladders, left-comb the
/// products and sort the leaves.
LinearCombo<DisjBasisElement> normal_form(const FiniteSpace& sp, const LinearCombo<ETree>& el);
DisjBasisElement normal_form_tree(const FiniteSpace& sp, const ETree& t);

/// Same result via randomly ordered rewrites; used by the confluence tests.
DisjBasisElement normal_form_random(const FiniteSpace& sp, const ETree& t, uint64_t seed,
                                    std::vector<ETree>* trace = nullptr);

/// The relations presenting the operad: ladders-collapse (r1, quadratic
/// minus linear), symmetry/associativity of the product (r2), and the
/// exchange of products with extensions (r3).  qr1 holds the quadratic
/// projection of r1 (pure extension ladders).
struct RelationBasis {
    std::vector<LinearCombo<ETree>> r1;
    std::vector<LinearCombo<ETree>> r2;
    std::vector<LinearCombo<ETree>> r3;
    std::vector<LinearCombo<ETree>> qr1;

    std::vector<LinearCombo<ETree>> all() const;
    std::vector<LinearCombo<ETree>> quadratic() const; // qr1 + r2 + r3
};

RelationBasis relation_basis(const FiniteSpace& sp);

/// r1 elements whose ladder runs through the given chain bottom<mid<top.
std::vector<LinearCombo<ETree>> r1_for(const FiniteSpace& sp, OpenId bottom, OpenId mid, OpenId top);
/// r2 elements for an ordered disjoint triple.
std::vector<LinearCombo<ETree>> r2_for(const FiniteSpace& sp, OpenId u, OpenId v, OpenId w);

struct QlReport {
    bool ql1 = false;
    bool ql2 = false;
    int fine_tuned_dim = 0;
    bool fine_tuned_matches_documented_basis = false;
    std::vector<std::string> violations;

    bool pass() const { return ql1 && ql2 && violations.empty(); }
    std::string summary() const;
};

/// Verifies the quadratic-linear conditions for the presentation on this
/// space by exact linear algebra over the enumerated tree bases, and solves
/// the formal two-extension coefficient system (nine composites, six cubic
/// tree shapes) whose solution space is three-dimensional.
QlReport check_ql(const FiniteSpace& sp, int weight_bound = 3);

} // namespace disjcalc::disj
