#include "disjcalc/kd.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace disjcalc::kd {

std::vector<OpenId> Symbol::inputs() const
{
    // Slot r feeds chain pi^{-1}... the composite takes input r to chain
    // position r' with pi(r') = r; equivalently input colors are
    // bottoms(fam) read through pi: inputs[pi(r)] = bottom(chain r).
    std::vector<OpenId> in(static_cast<size_t>(arity()));
    auto b = fam.bottoms();
    for (int r = 0; r < arity(); ++r)
        in[static_cast<size_t>(pi(r))] = b[static_cast<size_t>(r)];
    return in;
}

std::string symbol_str(const FiniteSpace& sp, const Symbol& s)
{
    std::string out = family_str(sp, s.fam);
    if (!s.pi.is_identity()) {
        out += "@[";
        for (int i = 0; i < s.pi.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(s.pi(i) + 1);
        }
        out += "]";
    }
    return out;
}

ChainFamily fam_dot(const ChainFamily& fam, const Perm& sigma)
{
    Perm inv = sigma.inverse();
    ChainFamily out;
    out.chains.resize(fam.chains.size());
    for (int r = 0; r < fam.arity(); ++r)
        out.chains[static_cast<size_t>(r)] = fam.chains[static_cast<size_t>(inv(r))];
    return out;
}

int delta_sign(const Perm& sigma, const ChainFamily& fam)
{
    std::vector<int> deg;
    deg.reserve(fam.chains.size());
    for (const auto& c : fam.chains)
        deg.push_back(c.length() - 1);
    return sigma.sign() * koszul_sign(sigma, deg);
}

// ---------------------------------------------------------------------------
// Strata
// ---------------------------------------------------------------------------

namespace {

bool symbol_in_stratum(const FiniteSpace& sp, const Symbol& s, const StratumKey& key)
{
    if (s.weight() != key.weight)
        return false;
    if (s.output(sp) != key.out)
        return false;
    return s.inputs() == key.in;
}

} // namespace

Stratum KdContext::build(const StratumKey& key) const
{
    Stratum st;
    st.key = key;
    int k = static_cast<int>(key.in.size());

    // Symbols (fam, pi): bottoms(fam)[r] = in[pi(r)].
    std::vector<Symbol> with_id, with_pi;
    for (const Perm& pi : all_perms(k)) {
        std::vector<OpenId> bottoms(static_cast<size_t>(k));
        for (int r = 0; r < k; ++r)
            bottoms[static_cast<size_t>(r)] = key.in[static_cast<size_t>(pi(r))];
        for (auto& fam : enumerate_chain_families_with_bottoms(sp_, bottoms, key.weight)) {
            if (fam.output(sp_) != key.out)
                continue;
            Symbol s(fam, pi);
            (pi.is_identity() ? with_id : with_pi).push_back(s);
        }
    }
    std::sort(with_pi.begin(), with_pi.end());
    std::sort(with_id.begin(), with_id.end());
    st.symbols = std::move(with_pi);
    st.symbols.insert(st.symbols.end(), with_id.begin(), with_id.end());
    for (size_t i = 0; i < st.symbols.size(); ++i)
        st.index.emplace(st.symbols[i], static_cast<int>(i));

    // Shuffle relations: for every routing rho, every family with bottoms
    // in.rho, every block profile with >= 2 blocks:
    //   sum_{sigma in Sh(profile)} delta_sigma(fam) (fam.sigma, rho sigma^{-1}).
    st.relations = RowReducer(static_cast<int>(st.symbols.size()));
    if (k >= 2) {
        auto profiles = compositions(k, 2);
        for (const Perm& rho : all_perms(k)) {
            std::vector<OpenId> bottoms(static_cast<size_t>(k));
            for (int r = 0; r < k; ++r)
                bottoms[static_cast<size_t>(r)] = key.in[static_cast<size_t>(rho(r))];
            for (auto& fam : enumerate_chain_families_with_bottoms(sp_, bottoms, key.weight)) {
                if (fam.output(sp_) != key.out)
                    continue;
                for (const auto& profile : profiles) {
                    std::vector<Rational> row(st.symbols.size());
                    for (const auto& sh : shuffles(profile)) {
                        Symbol s(fam_dot(fam, sh.perm), rho * sh.perm.inverse());
                        row[static_cast<size_t>(st.index.at(s))] +=
                            delta_sign(sh.perm, fam);
                    }
                    st.relations.add_row(std::move(row));
                }
            }
        }
    }
    for (int c : st.relations.free_cols())
        st.reduced.push_back(st.symbols[static_cast<size_t>(c)]);
    return st;
}

const Stratum& KdContext::stratum(const StratumKey& key)
{
    std::scoped_lock lock(mu_);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, build(key)).first;
    return it->second;
}

const Stratum& KdContext::stratum_of(const Symbol& s)
{
    return stratum({s.output(sp_), s.inputs(), s.weight()});
}

KDElement KdContext::reduce(const KDElement& el)
{
    if (el.is_zero())
        return el;
    const Symbol& first = el.terms().begin()->first;
    StratumKey key{first.output(sp_), first.inputs(), first.weight()};
    for (const auto& [s, c] : el.terms())
        if (!symbol_in_stratum(sp_, s, key))
            throw MixedArity("reduce: element is not homogeneous in colors and weight");
    const Stratum& st = stratum(key);
    std::vector<Rational> v(st.symbols.size());
    for (const auto& [s, c] : el.terms())
        v[static_cast<size_t>(st.index.at(s))] = c;
    st.relations.reduce(v);
    KDElement out;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            out.add(st.symbols[i], v[i]);
    return out;
}

std::vector<Symbol> KdContext::reduced_basis(int arity, int weight)
{
    std::vector<Symbol> out;
    if (weight < arity - 1)
        return out;
    // Color tuples realized by some family of this arity and weight.
    std::vector<StratumKey> keys;
    for (const auto& fam : enumerate_chain_families(sp_, arity, weight)) {
        for (const Perm& pi : all_perms(arity)) {
            Symbol s(fam, pi);
            StratumKey key{s.output(sp_), s.inputs(), weight};
            keys.push_back(key);
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const auto& key : keys) {
        const Stratum& st = stratum(key);
        out.insert(out.end(), st.reduced.begin(), st.reduced.end());
    }
    return out;
}

std::vector<Symbol> KdContext::reduced_basis_up_to(int weight_bound)
{
    std::vector<Symbol> out;
    for (int w = 1; w <= weight_bound; ++w)
        for (int k = 1; k <= w + 1; ++k) {
            auto b = reduced_basis(k, w);
            out.insert(out.end(), b.begin(), b.end());
        }
    return out;
}

// ---------------------------------------------------------------------------
// Differential
// ---------------------------------------------------------------------------

LinearCombo<ChainFamily> kd_differential_raw(const ChainFamily& fam)
{
    LinearCombo<ChainFamily> out;
    int k = fam.arity();
    int prefix = k - 1; // exponent (k-1) + sum_{j<i}(s_j - 1)
    for (int i = 0; i < k; ++i) {
        const Chain& c = fam.chains[static_cast<size_t>(i)];
        int s = c.length();
        for (int pos = 1; pos <= s - 2; ++pos) { // interior entries, 0-based pos
            ChainFamily g = fam;
            auto& e = g.chains[static_cast<size_t>(i)].entries;
            e.erase(e.begin() + pos);
            int sign = ((prefix + (pos - 1)) % 2 == 0) ? 1 : -1;
            out.add(g, sign);
        }
        prefix += s - 1;
    }
    return out;
}

KDElement kd_differential(KdContext& ctx, const Symbol& s)
{
    KDElement out;
    for (const auto& [g, c] : kd_differential_raw(s.fam).terms())
        out.add(Symbol(g, s.pi), c);
    return ctx.reduce(out);
}

// ---------------------------------------------------------------------------
// Shuffled chains and the codistributive law
// ---------------------------------------------------------------------------

Chain shuffle_chain(const FiniteSpace& sp, const Perm& sigma, const std::vector<Chain>& segments)
{
    std::vector<OpenId> tops;
    for (const auto& seg : segments)
        tops.push_back(seg.top());
    if (!sp.pairwise_disjoint(tops))
        throw DisjointnessViolation("shuffle_chain: segment tops are not pairwise disjoint");

    int steps = 0;
    std::vector<int> block_start;
    for (const auto& seg : segments) {
        block_start.push_back(steps);
        steps += seg.length() - 1;
    }
    if (sigma.size() != steps)
        throw DisjointnessViolation("shuffle_chain: shuffle size mismatch");

    std::vector<int> cursor(segments.size(), 0);
    std::vector<OpenId> current;
    for (const auto& seg : segments)
        current.push_back(seg.entries[0]);

    Chain out;
    out.entries.push_back(sp.union_of(current));
    Perm inv = sigma.inverse();
    for (int r = 0; r < steps; ++r) {
        int elem = inv(r);
        // Which segment owns this step?
        size_t b = 0;
        while (b + 1 < segments.size() && block_start[b + 1] <= elem)
            ++b;
        cursor[b]++;
        current[b] = segments[b].entries[static_cast<size_t>(cursor[b])];
        out.entries.push_back(sp.union_of(current));
    }
    for (size_t i = 0; i + 1 < out.entries.size(); ++i)
        if (!sp.strict_subset(out.entries[i], out.entries[i + 1]))
            throw DisjointnessViolation("shuffle_chain: result is not strictly increasing");
    return out;
}

std::vector<CodistTerm> codistribute(const FiniteSpace& sp, const ChainFamily& fam)
{
    std::vector<CodistTerm> out;
    int k = fam.arity();
    std::vector<int> profile;
    int total_upper = 0;
    for (const auto& c : fam.chains) {
        profile.push_back(c.length() - 1);
        total_upper += c.length() - 1;
    }
    int prefactor = (((k - 1) * total_upper) % 2 == 0) ? 1 : -1;
    ChainFamily bottoms;
    for (const auto& c : fam.chains)
        bottoms.chains.push_back(Chain({c.bottom()}));
    for (const auto& sh : shuffles(profile)) {
        CodistTerm t;
        t.outer_chain = shuffle_chain(sp, sh.perm, fam.chains);
        t.bottoms = bottoms;
        t.coeff = prefactor * sh.sign;
        out.push_back(std::move(t));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition maps
// ---------------------------------------------------------------------------

bool is_identity_family(const ChainFamily& fam)
{
    return fam.arity() == 1 && fam.chains[0].length() == 1;
}

namespace {

Chain lower_segment(const Chain& c, int s2)
{
    return Chain(std::vector<OpenId>(c.entries.begin(), c.entries.begin() + s2));
}

Chain upper_segment(const Chain& c, int s2)
{
    // Anchored at entry s2-1 (0-based), running to the top.
    return Chain(std::vector<OpenId>(c.entries.begin() + (s2 - 1), c.entries.end()));
}

} // namespace

std::vector<DecompTerm> decompose_inf_ext(const FiniteSpace& sp, const ChainFamily& fam,
                                          bool allow_identity_outer, bool allow_identity_inner)
{
    std::vector<DecompTerm> out;
    int k = fam.arity();
    std::vector<int> s;
    for (const auto& c : fam.chains)
        s.push_back(c.length());

    for (int q = 1; q <= k; ++q) {
        int p = k + 1 - q;
        for (int j = 1; j <= p; ++j) {
            // Window chains: j-1 .. j+q-2 (0-based).
            std::vector<int> s2(static_cast<size_t>(k), 1); // s''_i
            auto rec = [&](auto&& self, int idx) -> void {
                if (idx == q) {
                    // Assemble the term for this split.
                    std::vector<int> s1(static_cast<size_t>(k)); // s'_i
                    for (int i = 0; i < k; ++i)
                        s1[static_cast<size_t>(i)] = s[static_cast<size_t>(i)] + 1 -
                                                     s2[static_cast<size_t>(i)];
                    bool inner_id = (q == 1 && s2[static_cast<size_t>(j - 1)] == 1);
                    if (inner_id && !allow_identity_inner)
                        return;
                    int upper_total = 0;
                    for (int i = 0; i < k; ++i)
                        upper_total += s1[static_cast<size_t>(i)] - 1;
                    bool outer_id = (p == 1 && upper_total == 0);
                    if (outer_id && !allow_identity_outer)
                        return;

                    std::vector<Chain> uppers;
                    std::vector<int> profile;
                    for (int i = j - 1; i <= j + q - 2; ++i) {
                        uppers.push_back(upper_segment(fam.chains[static_cast<size_t>(i)],
                                                       s2[static_cast<size_t>(i)]));
                        profile.push_back(s1[static_cast<size_t>(i)] - 1);
                    }
                    ChainFamily inner;
                    for (int i = j - 1; i <= j + q - 2; ++i)
                        inner.chains.push_back(lower_segment(fam.chains[static_cast<size_t>(i)],
                                                             s2[static_cast<size_t>(i)]));

                    long eps = static_cast<long>(q + 1) * (p - j);
                    long sum_s1 = 0;
                    for (int i = 0; i < k; ++i)
                        sum_s1 += s1[static_cast<size_t>(i)] - 1;
                    eps += static_cast<long>(q - 1) * sum_s1;
                    for (int i = 0; i < k; ++i) {
                        long tail = 0;
                        for (int l = i + 1; l < k; ++l)
                            tail += s1[static_cast<size_t>(l)] - 1;
                        eps += static_cast<long>(s2[static_cast<size_t>(i)] - 1) * tail;
                    }

                    for (const auto& sh : shuffles(profile)) {
                        ChainFamily outer;
                        for (int i = 0; i < j - 1; ++i)
                            outer.chains.push_back(fam.chains[static_cast<size_t>(i)]);
                        outer.chains.push_back(shuffle_chain(sp, sh.perm, uppers));
                        for (int i = j + q - 1; i < k; ++i)
                            outer.chains.push_back(fam.chains[static_cast<size_t>(i)]);
                        DecompTerm t;
                        t.outer = std::move(outer);
                        t.slot = j;
                        t.inner = inner;
                        t.coeff = sh.sign * ((eps % 2 == 0) ? 1 : -1);
                        out.push_back(std::move(t));
                    }
                    return;
                }
                int i = j - 1 + idx;
                for (int v = 1; v <= s[static_cast<size_t>(i)]; ++v) {
                    s2[static_cast<size_t>(i)] = v;
                    self(self, idx + 1);
                }
                s2[static_cast<size_t>(i)] = 1;
            };
            rec(rec, 0);
        }
    }
    return out;
}

std::vector<DecompTerm> decompose_inf(const FiniteSpace& sp, const ChainFamily& fam)
{
    return decompose_inf_ext(sp, fam, false, false);
}

namespace {

std::vector<FullDecompTerm> decompose_full_impl(const FiniteSpace& sp, const ChainFamily& fam,
                                                bool allow_identity_outer)
{
    std::vector<FullDecompTerm> out;
    int k = fam.arity();
    std::vector<int> s;
    for (const auto& c : fam.chains)
        s.push_back(c.length());

    for (const auto& q : compositions(k, 1)) {
        int p = static_cast<int>(q.size());
        // window l covers chains Q_{l-1} .. Q_l - 1 (0-based)
        std::vector<int> qstart(static_cast<size_t>(p) + 1, 0);
        for (int l = 0; l < p; ++l)
            qstart[static_cast<size_t>(l) + 1] = qstart[static_cast<size_t>(l)] +
                                                 q[static_cast<size_t>(l)];

        std::vector<int> s2(static_cast<size_t>(k), 1);
        auto rec = [&](auto&& self, int idx) -> void {
            if (idx == k) {
                std::vector<int> s1(static_cast<size_t>(k));
                long sum_s1 = 0;
                for (int i = 0; i < k; ++i) {
                    s1[static_cast<size_t>(i)] = s[static_cast<size_t>(i)] + 1 -
                                                 s2[static_cast<size_t>(i)];
                    sum_s1 += s1[static_cast<size_t>(i)] - 1;
                }
                if (!allow_identity_outer && p == 1 && sum_s1 == 0)
                    return;

                long delta = 0;
                for (int l = 0; l < p; ++l)
                    delta += static_cast<long>(q[static_cast<size_t>(l)] + 1) * (p - (l + 1));
                long qm1 = 0;
                for (int l = 0; l < p; ++l)
                    qm1 += q[static_cast<size_t>(l)] - 1;
                delta += qm1 * sum_s1;
                for (int i = 0; i < k; ++i)
                    for (int l = i + 1; l < k; ++l)
                        delta += static_cast<long>(s2[static_cast<size_t>(i)] - 1) *
                                 (s1[static_cast<size_t>(l)] - 1);
                int base_sign = (delta % 2 == 0) ? 1 : -1;

                // Per-window shuffles.
                std::vector<std::vector<ShuffleWithSign>> win_shuffles;
                for (int l = 0; l < p; ++l) {
                    std::vector<int> profile;
                    for (int i = qstart[static_cast<size_t>(l)];
                         i < qstart[static_cast<size_t>(l) + 1]; ++i)
                        profile.push_back(s1[static_cast<size_t>(i)] - 1);
                    win_shuffles.push_back(shuffles(profile));
                }
                std::vector<size_t> pick(static_cast<size_t>(p), 0);
                auto emit = [&](auto&& self2, int l) -> void {
                    if (l == p) {
                        FullDecompTerm t;
                        int sign = base_sign;
                        for (int m = 0; m < p; ++m) {
                            const auto& sh =
                                win_shuffles[static_cast<size_t>(m)][pick[static_cast<size_t>(m)]];
                            sign *= sh.sign;
                            std::vector<Chain> uppers;
                            ChainFamily inner;
                            for (int i = qstart[static_cast<size_t>(m)];
                                 i < qstart[static_cast<size_t>(m) + 1]; ++i) {
                                uppers.push_back(
                                    upper_segment(fam.chains[static_cast<size_t>(i)],
                                                  s2[static_cast<size_t>(i)]));
                                inner.chains.push_back(
                                    lower_segment(fam.chains[static_cast<size_t>(i)],
                                                  s2[static_cast<size_t>(i)]));
                            }
                            t.outer.chains.push_back(shuffle_chain(sp, sh.perm, uppers));
                            t.inners.push_back(std::move(inner));
                        }
                        t.coeff = sign;
                        out.push_back(std::move(t));
                        return;
                    }
                    for (size_t c = 0; c < win_shuffles[static_cast<size_t>(l)].size(); ++c) {
                        pick[static_cast<size_t>(l)] = c;
                        self2(self2, l + 1);
                    }
                };
                emit(emit, 0);
                return;
            }
            for (int v = 1; v <= s[static_cast<size_t>(idx)]; ++v) {
                s2[static_cast<size_t>(idx)] = v;
                self(self, idx + 1);
            }
            s2[static_cast<size_t>(idx)] = 1;
        };
        rec(rec, 0);
    }
    return out;
}

} // namespace

std::vector<FullDecompTerm> decompose_full(const FiniteSpace& sp, const ChainFamily& fam)
{
    return decompose_full_impl(sp, fam, false);
}

std::vector<FullDecompTerm> decompose_full_raw(const FiniteSpace& sp, const ChainFamily& fam)
{
    return decompose_full_impl(sp, fam, true);
}

// ---------------------------------------------------------------------------
// Consistency suite
// ---------------------------------------------------------------------------

namespace {

using InfKey = std::tuple<ChainFamily, int, ChainFamily>;

LinearCombo<InfKey> inf_as_combo(const std::vector<DecompTerm>& ts)
{
    LinearCombo<InfKey> out;
    for (const auto& t : ts)
        out.add({t.outer, t.slot, t.inner}, t.coeff);
    return out;
}

// Three-level composite in pre-order normal form: root, then for each mid
// chain family its own inner block.
struct ThreeLevel {
    ChainFamily root;
    std::vector<ChainFamily> mids;
    std::vector<std::vector<ChainFamily>> tops;
    auto operator<=>(const ThreeLevel&) const = default;
};

} // namespace

std::string CooperadReport::summary() const
{
    std::ostringstream os;
    os << (pass ? "pass" : "FAIL") << " (" << families_checked << " families)";
    for (const auto& v : violations)
        os << "\n  " << v;
    return os.str();
}

CooperadReport verify_cooperad(const FiniteSpace& sp, int weight_bound)
{
    CooperadReport rep;

    std::vector<ChainFamily> fams;
    for (int w = 1; w <= weight_bound; ++w)
        for (int k = 1; k <= w + 1; ++k) {
            auto f = enumerate_chain_families(sp, k, w);
            fams.insert(fams.end(), f.begin(), f.end());
        }
    rep.families_checked = static_cast<int>(fams.size());

    for (const auto& fam : fams) {
        const std::string fs = family_str(sp, fam);

        // d^2 = 0, raw.
        {
            LinearCombo<ChainFamily> dd;
            for (const auto& [g, c] : kd_differential_raw(fam).terms()) {
                if (g.weight() != fam.weight() - 1) {
                    rep.fail(fs + ": differential term of wrong weight");
                    continue;
                }
                dd.add(kd_differential_raw(g), c);
            }
            if (!dd.is_zero())
                rep.fail(fs + ": d^2 != 0");
        }

        // Term bookkeeping for the infinitesimal decomposition.
        auto inf = decompose_inf(sp, fam);
        for (const auto& t : inf) {
            if (t.outer.weight() + t.inner.weight() != fam.weight())
                rep.fail(fs + ": decomposition term weights do not add up");
            auto outs = t.outer.bottoms();
            if (t.inner.output(sp) != outs[static_cast<size_t>(t.slot - 1)])
                rep.fail(fs + ": decomposition term colors do not match");
        }

        // Coderivation: Delta_inf(d fam) = (d x 1 + 1 x d)(Delta_inf fam).
        {
            LinearCombo<InfKey> lhs;
            for (const auto& [g, c] : kd_differential_raw(fam).terms())
                lhs.add(inf_as_combo(decompose_inf(sp, g)), c);
            LinearCombo<InfKey> rhs;
            for (const auto& t : inf) {
                for (const auto& [g, c] : kd_differential_raw(t.outer).terms())
                    rhs.add({g, t.slot, t.inner}, c * t.coeff);
                int sgn = (t.outer.weight() % 2 == 0) ? 1 : -1; // (-1)^{deg outer}
                for (const auto& [g, c] : kd_differential_raw(t.inner).terms())
                    rhs.add({t.outer, t.slot, g}, c * t.coeff * sgn);
            }
            if (!(lhs == rhs))
                rep.fail(fs + ": differential is not a coderivation for the decomposition");
        }

        // Coassociativity of the counital full decomposition.
        {
            LinearCombo<ThreeLevel> lhs, rhs;
            auto full = decompose_full_raw(sp, fam);
            for (const auto& t : full) {
                // Left: expand the root again.  Pre-order normal form needs
                // the inners of the second expansion interleaved with the
                // first-level inners; the Koszul reordering moves each
                // first-level inner (degree -w) past later mids.
                for (const auto& t2 : decompose_full_raw(sp, t.outer)) {
                    ThreeLevel tl;
                    tl.root = t2.outer;
                    tl.mids = t2.inners;
                    // Attach t.inners to the leaves of the mid level, in order.
                    size_t pos = 0;
                    int sign = 1;
                    // Word before reorder: [root, mids..., inners...]; target:
                    // [root, mid_1, (its inners), mid_2, ...].  Moving inner
                    // block for mid_1 left past mids 2..p costs the product
                    // of degree parities.
                    std::vector<int> mid_deg, inner_deg;
                    for (const auto& m : t2.inners)
                        mid_deg.push_back(m.weight() % 2);
                    for (const auto& z : t.inners)
                        inner_deg.push_back(z.weight() % 2);
                    for (const auto& m : t2.inners) {
                        int take = m.arity();
                        std::vector<ChainFamily> blk(
                            t.inners.begin() + static_cast<std::ptrdiff_t>(pos),
                            t.inners.begin() + static_cast<std::ptrdiff_t>(pos + take));
                        // Koszul: this block jumps over mids after m.
                        int blk_deg = 0;
                        for (const auto& z : blk)
                            blk_deg += z.weight();
                        int later_mids_deg = 0;
                        for (size_t mm = tl.tops.size() + 1; mm < t2.inners.size(); ++mm)
                            later_mids_deg += t2.inners[mm].weight();
                        if ((blk_deg % 2) && (later_mids_deg % 2))
                            sign = -sign;
                        tl.tops.push_back(std::move(blk));
                        pos += static_cast<size_t>(take);
                    }
                    lhs.add(tl, t.coeff * t2.coeff * sign);
                }
                // Right: expand each inner; already in pre-order, but the
                // expansion of inner l must pass no one (degree 0 map), so
                // only the distribution over multiple inners matters.
                std::vector<std::vector<FullDecompTerm>> exp;
                for (const auto& z : t.inners)
                    exp.push_back(decompose_full_raw(sp, z));
                std::vector<size_t> pick(exp.size(), 0);
                auto emit = [&](auto&& self, size_t l, Rational acc) -> void {
                    if (l == exp.size()) {
                        ThreeLevel tl;
                        tl.root = t.outer;
                        for (size_t m = 0; m < exp.size(); ++m) {
                            const auto& tt = exp[m][pick[m]];
                            tl.mids.push_back(tt.outer);
                            tl.tops.push_back(tt.inners);
                        }
                        rhs.add(tl, t.coeff * acc);
                        return;
                    }
                    for (size_t c = 0; c < exp[l].size(); ++c) {
                        pick[l] = c;
                        self(self, l + 1, acc * exp[l][c].coeff);
                    }
                };
                emit(emit, 0, Rational(1));
            }
            if (!(lhs == rhs))
                rep.fail(fs + ": full decomposition is not coassociative");
        }

        // Codistributive law matches the (p=1, bottoms) face of the
        // decomposition.
        {
            std::map<std::pair<Chain, ChainFamily>, Rational> via_inf;
            for (const auto& t :
                 decompose_inf_ext(sp, fam, /*identity outer*/ true, /*identity inner*/ true)) {
                if (t.outer.arity() != 1)
                    continue;
                bool bottoms_only = true;
                for (const auto& c : t.inner.chains)
                    if (c.length() != 1)
                        bottoms_only = false;
                if (!bottoms_only || t.inner.arity() != fam.arity())
                    continue;
                auto key = std::make_pair(t.outer.chains[0], t.inner);
                via_inf[key] += t.coeff;
            }
            std::map<std::pair<Chain, ChainFamily>, Rational> via_codist;
            for (const auto& t : codistribute(sp, fam))
                via_codist[{t.outer_chain, t.bottoms}] += t.coeff;
            if (fam.arity() >= 1) {
                for (auto& [k2, v] : via_codist)
                    if (via_inf[k2] != v)
                        rep.fail(fs + ": codistributive law disagrees with the decomposition");
                for (auto& [k2, v] : via_inf)
                    if (via_codist.find(k2) == via_codist.end() && v != 0)
                        rep.fail(fs + ": decomposition has a bottoms face outside the law");
            }
        }

        // Full vs infinitesimal: exactly one non-identity inner.
        {
            LinearCombo<InfKey> via_full;
            for (const auto& t : decompose_full(sp, fam)) {
                int nontrivial = 0, slot = -1, chain_pos = 0;
                for (size_t l = 0; l < t.inners.size(); ++l) {
                    if (!is_identity_family(t.inners[l])) {
                        ++nontrivial;
                        slot = static_cast<int>(l);
                    }
                }
                if (nontrivial != 1)
                    continue;
                (void)chain_pos;
                via_full.add({t.outer, slot + 1, t.inners[static_cast<size_t>(slot)]}, t.coeff);
            }
            if (!(via_full == inf_as_combo(inf)))
                rep.fail(fs + ": full and infinitesimal decompositions disagree");
        }
    }
    return rep;
}

} // namespace disjcalc::kd
