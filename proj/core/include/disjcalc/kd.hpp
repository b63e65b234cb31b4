#pragma once

#include "disjcalc/chain.hpp"
#include "disjcalc/combo.hpp"
#include "disjcalc/matrix.hpp"
#include "disjcalc/perm.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace disjcalc::kd {

struct DisjointnessViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MixedArity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Spanning symbol of the dual cooperad: the cooperation of `fam` composed
/// with the input rerouting `pi` (slot r of the composite feeds chain r of
/// fam from input pi(r)).  Plain families are symbols with pi = identity.
struct Symbol {
    ChainFamily fam;
    Perm pi;

    Symbol() = default;
    Symbol(ChainFamily f, Perm p) : fam(std::move(f)), pi(std::move(p)) {}
    explicit Symbol(ChainFamily f) : fam(std::move(f)), pi(Perm::identity(fam.arity())) {}

    int arity() const { return fam.arity(); }
    int weight() const { return fam.weight(); }
    int degree() const { return -fam.weight(); }
    /// Input color of slot r (0-based): bottom of chain pi^{-1}(r).
    std::vector<OpenId> inputs() const;
    OpenId output(const FiniteSpace& sp) const { return fam.output(sp); }

    auto operator<=>(const Symbol&) const = default;
};

using KDElement = LinearCombo<Symbol>;

std::string symbol_str(const FiniteSpace& sp, const Symbol& s);

/// (fam . sigma): chains permuted so that position r holds chain sigma^{-1}(r).
ChainFamily fam_dot(const ChainFamily& fam, const Perm& sigma);

/// The graded shuffle sign: sgn(sigma) times the Koszul sign of sigma
/// permuting blocks of degrees (s_i - 1).
int delta_sign(const Perm& sigma, const ChainFamily& fam);

// ---------------------------------------------------------------------------
// Strata and reduction
// ---------------------------------------------------------------------------

struct StratumKey {
    OpenId out;
    std::vector<OpenId> in;
    int weight;
    auto operator<=>(const StratumKey&) const = default;
};

struct Stratum {
    StratumKey key;
    std::vector<Symbol> symbols;   // column order: non-identity routings first
    std::map<Symbol, int> index;
    RowReducer relations;          // rref of the shuffle-relation vectors
    std::vector<Symbol> reduced;   // free columns: the canonical basis

    Stratum() : relations(0) {}
    int dim() const { return static_cast<int>(reduced.size()); }
};

/// Per-space cache of strata.  Thread-safe lazily built.
class KdContext {
public:
    explicit KdContext(const FiniteSpace& sp) : sp_(sp) {}
    const FiniteSpace& space() const { return sp_; }

    const Stratum& stratum(const StratumKey& key);
    const Stratum& stratum_of(const Symbol& s);

    /// Canonical representative modulo the graded shuffle relations.
    /// Idempotent and linear; throws MixedArity on inhomogeneous input.
    KDElement reduce(const KDElement& el);

    /// The reduced basis symbols of every stratum with the given arity and
    /// weight (across all color tuples), in canonical order.
    std::vector<Symbol> reduced_basis(int arity, int weight);
    /// All reduced basis symbols of weight 1..weight_bound.
    std::vector<Symbol> reduced_basis_up_to(int weight_bound);

private:
    Stratum build(const StratumKey& key) const;

    const FiniteSpace& sp_;
    std::mutex mu_;
    std::map<StratumKey, Stratum> cache_;
};

// ---------------------------------------------------------------------------
// Structure maps
// ---------------------------------------------------------------------------

/// Differential of the dual cooperad: interior entries of each chain are
/// deleted with sign (-1)^{(k-1)+sum_{j<i}(s_j-1)} (-1)^{pos-1}.  Degree +1,
/// weight -1.  Zero when every chain has length <= 2.
LinearCombo<ChainFamily> kd_differential_raw(const ChainFamily& fam);
/// Same, on symbols, output reduced.
KDElement kd_differential(KdContext& ctx, const Symbol& s);

/// The chain sigma . segments: starts at the union of the segment bottoms
/// and advances, at step r, the segment selected by the shuffle.  Segments
/// must have pairwise-disjoint tops.
Chain shuffle_chain(const FiniteSpace& sp, const Perm& sigma, const std::vector<Chain>& segments);

struct CodistTerm {
    Chain outer_chain;
    ChainFamily bottoms;
    Rational coeff;
};

/// The codistributive law: rewrites the cooperation of fam as a sum of
/// (single shuffled chain) over (product of the bottom colors), with sign
/// (-1)^{(k-1) sum(s_i-1)} sgn(sigma).
std::vector<CodistTerm> codistribute(const FiniteSpace& sp, const ChainFamily& fam);

struct DecompTerm {
    ChainFamily outer;
    int slot = 0; // 1-based
    ChainFamily inner;
    Rational coeff;
};

struct FullDecompTerm {
    ChainFamily outer;
    std::vector<ChainFamily> inners;
    Rational coeff;
};

/// Infinitesimal decomposition (reduced: both trivial terms excluded).
std::vector<DecompTerm> decompose_inf(const FiniteSpace& sp, const ChainFamily& fam);
/// With control over the trivial terms (identity outer / identity inner).
std::vector<DecompTerm> decompose_inf_ext(const FiniteSpace& sp, const ChainFamily& fam,
                                          bool allow_identity_outer, bool allow_identity_inner);

/// Full decomposition; identity inners appear, the identity-outer term does
/// not.  decompose_full_raw keeps it (the counital form used by the
/// coassociativity check).
std::vector<FullDecompTerm> decompose_full(const FiniteSpace& sp, const ChainFamily& fam);
std::vector<FullDecompTerm> decompose_full_raw(const FiniteSpace& sp, const ChainFamily& fam);

bool is_identity_family(const ChainFamily& fam);

// ---------------------------------------------------------------------------
// Consistency suite
// ---------------------------------------------------------------------------

struct CooperadReport {
    bool pass = true;
    int families_checked = 0;
    std::vector<std::string> violations;

    void fail(std::string what)
    {
        pass = false;
        violations.push_back(std::move(what));
    }
    std::string summary() const;
};

/// Asserts, for every family of weight <= bound: d^2 = 0, the differential
/// is a coderivation for the decomposition, coassociativity, consistency of
/// the full and infinitesimal decompositions, codistributive-law
/// compatibility, and weight/color bookkeeping of every term.
CooperadReport verify_cooperad(const FiniteSpace& sp, int weight_bound);

} // namespace disjcalc::kd
