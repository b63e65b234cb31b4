#include "disjcalc/disj.hpp"

#include "disjcalc/matrix.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <sstream>

namespace disjcalc::disj {

bool DisjBasisElement::valid(const FiniteSpace& sp) const
{
    if (in.empty())
        return false;
    for (OpenId u : in)
        if (!sp.subset(u, out))
            return false;
    return sp.pairwise_disjoint(in);
}

std::string basis_str(const FiniteSpace& sp, const DisjBasisElement& m)
{
    std::string s = "m[" + sp.open_str(m.out) + ";";
    for (size_t i = 0; i < m.in.size(); ++i) {
        if (i)
            s += ",";
        s += sp.open_str(m.in[i]);
    }
    return s + "]";
}

DisjBasisElement act(const Perm& p, const DisjBasisElement& m)
{
    DisjBasisElement r;
    r.out = m.out;
    r.in.resize(m.in.size());
    Perm inv = p.inverse();
    for (int i = 0; i < m.arity(); ++i)
        r.in[static_cast<size_t>(i)] = m.in[static_cast<size_t>(inv(i))];
    return r;
}

std::optional<DisjBasisElement> compose_strict(const FiniteSpace& sp,
                                               const DisjBasisElement& outer,
                                               const std::vector<DisjBasisElement>& inners)
{
    if (static_cast<int>(inners.size()) != outer.arity())
        throw ColorMismatch("composition needs one inner operation per slot");
    DisjBasisElement r;
    r.out = outer.out;
    for (size_t i = 0; i < inners.size(); ++i) {
        if (inners[i].out != outer.in[i])
            throw ColorMismatch("slot color does not match inner output color");
        r.in.insert(r.in.end(), inners[i].in.begin(), inners[i].in.end());
    }
    if (!r.valid(sp))
        return std::nullopt;
    return r;
}

std::optional<DisjBasisElement> compose_at(const FiniteSpace& sp, const DisjBasisElement& outer,
                                           int slot, const DisjBasisElement& inner)
{
    std::vector<DisjBasisElement> inners;
    for (int i = 0; i < outer.arity(); ++i) {
        if (i + 1 == slot)
            inners.push_back(inner);
        else
            inners.push_back(DisjBasisElement{outer.in[static_cast<size_t>(i)],
                                              {outer.in[static_cast<size_t>(i)]}});
    }
    return compose_strict(sp, outer, inners);
}

// ---------------------------------------------------------------------------
// Normal form
// ---------------------------------------------------------------------------

namespace {

// Eliminates every extension vertex: returns the product-only core plus the
// effective output color accumulated by pushing extensions past products and
// collapsing ladders.
struct Core {
    ETree tree; // bin/leaf only
    OpenId out;
};

Core eliminate_exts(const FiniteSpace& sp, const ETree& t)
{
    switch (t.kind) {
    case ETree::Kind::leaf:
        return {t, t.color};
    case ETree::Kind::ext: {
        Core c = eliminate_exts(sp, t.kids[0]);
        c.out = t.color; // ladder collapse
        return c;
    }
    case ETree::Kind::bin: {
        Core l = eliminate_exts(sp, t.kids[0]);
        Core r = eliminate_exts(sp, t.kids[1]);
        ETree core;
        core.kind = ETree::Kind::bin;
        core.color = sp.union_of(l.tree.color, r.tree.color);
        core.kids = {l.tree, r.tree};
        return {core.canonical(), sp.union_of(l.out, r.out)};
    }
    }
    throw InadmissibleTree("unreachable");
}

} // namespace

DisjBasisElement normal_form_tree(const FiniteSpace& sp, const ETree& t)
{
    t.require_admissible(sp);
    Core c = eliminate_exts(sp, t);
    DisjBasisElement m;
    m.out = c.out;
    m.in = t.leaf_colors();
    return m;
}

LinearCombo<DisjBasisElement> normal_form(const FiniteSpace& sp, const LinearCombo<ETree>& el)
{
    LinearCombo<DisjBasisElement> out;
    for (const auto& [t, coeff] : el.terms())
        out.add(normal_form_tree(sp, t), coeff);
    return out;
}

// ---------------------------------------------------------------------------
// Small-step rewriting (used for the confluence checks and step traces)
// ---------------------------------------------------------------------------

namespace {

enum class Redex { push_ext_left, push_ext_right, collapse_ladder, assoc, swap };

struct RedexSite {
    std::vector<int> path;
    Redex kind;
};

void find_redexes(const ETree& t, std::vector<int>& path, std::vector<RedexSite>& out)
{
    if (t.kind == ETree::Kind::bin) {
        if (t.kids[0].kind == ETree::Kind::ext)
            out.push_back({path, Redex::push_ext_left});
        if (t.kids[1].kind == ETree::Kind::ext)
            out.push_back({path, Redex::push_ext_right});
        if (t.kids[1].kind == ETree::Kind::bin)
            out.push_back({path, Redex::assoc});
        if (t.kids[0].kind == ETree::Kind::bin &&
            t.kids[0].kids[1].min_label() > t.kids[1].min_label())
            out.push_back({path, Redex::swap});
    }
    if (t.kind == ETree::Kind::ext && t.kids[0].kind == ETree::Kind::ext)
        out.push_back({path, Redex::collapse_ladder});
    for (size_t i = 0; i < t.kids.size(); ++i) {
        path.push_back(static_cast<int>(i));
        find_redexes(t.kids[i], path, out);
        path.pop_back();
    }
}

ETree& subtree_at(ETree& t, const std::vector<int>& path)
{
    ETree* cur = &t;
    for (int i : path)
        cur = &cur->kids[static_cast<size_t>(i)];
    return *cur;
}

void apply_redex(const FiniteSpace& sp, ETree& t, const RedexSite& site)
{
    ETree& node = subtree_at(t, site.path);
    switch (site.kind) {
    case Redex::push_ext_left:
    case Redex::push_ext_right: {
        size_t e = site.kind == Redex::push_ext_left ? 0 : 1;
        ETree extv = node.kids[e];
        ETree other = node.kids[1 - e];
        ETree inner;
        inner.kind = ETree::Kind::bin;
        inner.color = sp.union_of(extv.kids[0].color, other.color);
        inner.kids = e == 0 ? std::vector<ETree>{extv.kids[0], other}
                            : std::vector<ETree>{other, extv.kids[0]};
        ETree repl;
        repl.kind = ETree::Kind::ext;
        repl.color = node.color;
        repl.kids = {inner};
        node = repl;
        break;
    }
    case Redex::collapse_ladder: {
        ETree repl;
        repl.kind = ETree::Kind::ext;
        repl.color = node.color;
        repl.kids = {node.kids[0].kids[0]};
        node = repl;
        break;
    }
    case Redex::assoc: {
        // bin(A, bin(B, C)) -> bin(bin(A, B), C)
        ETree a = node.kids[0];
        ETree b = node.kids[1].kids[0];
        ETree c = node.kids[1].kids[1];
        ETree inner;
        inner.kind = ETree::Kind::bin;
        inner.color = sp.union_of(a.color, b.color);
        inner.kids = {a, b};
        node.kids = {inner, c};
        break;
    }
    case Redex::swap: {
        // bin(bin(X, B), C) -> bin(bin(X, C), B) when min(B) > min(C)
        ETree x = node.kids[0].kids[0];
        ETree b = node.kids[0].kids[1];
        ETree c = node.kids[1];
        ETree inner;
        inner.kind = ETree::Kind::bin;
        inner.color = sp.union_of(x.color, c.color);
        inner.kids = {x, c};
        node.kids = {inner, b};
        break;
    }
    }
    t = t.canonical();
}

} // namespace

DisjBasisElement normal_form_random(const FiniteSpace& sp, const ETree& t0, uint64_t seed,
                                    std::vector<ETree>* trace)
{
    ETree t = t0.canonical();
    t.require_admissible(sp);
    std::mt19937_64 rng(seed);
    if (trace)
        trace->push_back(t);
    while (true) {
        std::vector<RedexSite> sites;
        std::vector<int> path;
        find_redexes(t, path, sites);
        if (sites.empty())
            break;
        std::uniform_int_distribution<size_t> pick(0, sites.size() - 1);
        apply_redex(sp, t, sites[pick(rng)]);
        t.require_admissible(sp);
        if (trace)
            trace->push_back(t);
    }
    // Terminal shape: optional single extension over a sorted left comb.
    const ETree* core = &t;
    OpenId out = t.color;
    if (core->kind == ETree::Kind::ext)
        core = &core->kids[0];
    DisjBasisElement m;
    m.out = out;
    m.in = t.leaf_colors();
    // Cross-check against the closed form.
    if (!(m == normal_form_tree(sp, t0)))
        throw InadmissibleTree("rewriting reached an unexpected terminal form");
    return m;
}

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

namespace {

ETree tau_I(const FiniteSpace& sp, OpenId u, OpenId v, OpenId w)
{
    return ETree::bin(sp, ETree::bin(sp, ETree::leaf(1, u), ETree::leaf(2, v)), ETree::leaf(3, w));
}

ETree tau_II(const FiniteSpace& sp, OpenId u, OpenId v, OpenId w)
{
    return ETree::bin(sp, ETree::bin(sp, ETree::leaf(1, u), ETree::leaf(3, w)), ETree::leaf(2, v));
}

ETree tau_III(const FiniteSpace& sp, OpenId u, OpenId v, OpenId w)
{
    return ETree::bin(sp, ETree::leaf(1, u), ETree::bin(sp, ETree::leaf(2, v), ETree::leaf(3, w)));
}

} // namespace

std::vector<LinearCombo<ETree>> r1_for(const FiniteSpace& sp, OpenId u, OpenId v, OpenId w)
{
    std::vector<LinearCombo<ETree>> out;
    if (!(sp.strict_subset(u, v) && sp.strict_subset(v, w)))
        return out;
    LinearCombo<ETree> rel(ETree::ext(w, ETree::ext(v, ETree::leaf(1, u))));
    rel.add(ETree::ext(w, ETree::leaf(1, u)), -1);
    out.push_back(rel);
    return out;
}

std::vector<LinearCombo<ETree>> r2_for(const FiniteSpace& sp, OpenId u, OpenId v, OpenId w)
{
    std::vector<LinearCombo<ETree>> out;
    if (!sp.disjoint(u, v) || !sp.disjoint(u, w) || !sp.disjoint(v, w))
        return out;
    {
        LinearCombo<ETree> rel(tau_I(sp, u, v, w));
        rel.add(tau_II(sp, u, v, w), -1);
        if (!rel.is_zero())
            out.push_back(rel);
    }
    {
        LinearCombo<ETree> rel(tau_II(sp, u, v, w));
        rel.add(tau_III(sp, u, v, w), -1);
        if (!rel.is_zero())
            out.push_back(rel);
    }
    return out;
}

RelationBasis relation_basis(const FiniteSpace& sp)
{
    RelationBasis rb;
    int n = sp.num_opens();
    for (OpenId u = 0; u < n; ++u)
        for (OpenId v = 0; v < n; ++v)
            for (OpenId w = 0; w < n; ++w) {
                auto r1 = r1_for(sp, u, v, w);
                rb.r1.insert(rb.r1.end(), r1.begin(), r1.end());
                if (!r1.empty()) {
                    LinearCombo<ETree> q(ETree::ext(w, ETree::ext(v, ETree::leaf(1, u))));
                    rb.qr1.push_back(q);
                }
                auto r2 = r2_for(sp, u, v, w);
                rb.r2.insert(rb.r2.end(), r2.begin(), r2.end());
            }
    // r3, first family: bin(V,W) o_1 ext(U,V) - ext(U|W, V|W) o bin(U,W)
    for (OpenId u = 0; u < n; ++u)
        for (OpenId v = 0; v < n; ++v)
            for (OpenId w = 0; w < n; ++w) {
                if (sp.strict_subset(u, v) && sp.disjoint(v, w)) {
                    ETree lhs = ETree::bin(sp, ETree::ext(v, ETree::leaf(1, u)), ETree::leaf(2, w));
                    ETree rhs = ETree::ext(sp.union_of(v, w),
                                           ETree::bin(sp, ETree::leaf(1, u), ETree::leaf(2, w)));
                    LinearCombo<ETree> rel(lhs);
                    rel.add(rhs, -1);
                    rb.r3.push_back(rel);
                }
                // second family: bin(U,V) o_2 ext(W,V) - ext(U|W, U|V) o_1 bin(U,W)
                if (sp.strict_subset(w, v) && sp.disjoint(v, u)) {
                    ETree lhs = ETree::bin(sp, ETree::leaf(1, u), ETree::ext(v, ETree::leaf(2, w)));
                    ETree rhs = ETree::ext(sp.union_of(u, v),
                                           ETree::bin(sp, ETree::leaf(1, u), ETree::leaf(2, w)));
                    LinearCombo<ETree> rel(lhs);
                    rel.add(rhs, -1);
                    rb.r3.push_back(rel);
                }
            }
    return rb;
}

std::vector<LinearCombo<ETree>> RelationBasis::all() const
{
    std::vector<LinearCombo<ETree>> out;
    out.insert(out.end(), r1.begin(), r1.end());
    out.insert(out.end(), r2.begin(), r2.end());
    out.insert(out.end(), r3.begin(), r3.end());
    return out;
}

std::vector<LinearCombo<ETree>> RelationBasis::quadratic() const
{
    std::vector<LinearCombo<ETree>> out;
    out.insert(out.end(), qr1.begin(), qr1.end());
    out.insert(out.end(), r2.begin(), r2.end());
    out.insert(out.end(), r3.begin(), r3.end());
    return out;
}

// ---------------------------------------------------------------------------
// Quadratic-linear conditions
// ---------------------------------------------------------------------------

namespace {

using Signature = std::pair<OpenId, std::vector<OpenId>>;

Signature signature_of(const ETree& t)
{
    return {t.color, t.leaf_colors()};
}

std::optional<ETree> graft_checked(const FiniteSpace& sp, const ETree& outer, int slot,
                                   const ETree& inner)
{
    // Composition is defined only when the slot color matches.
    std::vector<std::pair<int, OpenId>> pairs;
    std::vector<OpenId> cols = outer.leaf_colors();
    if (slot < 1 || slot > static_cast<int>(cols.size()))
        return std::nullopt;
    if (cols[static_cast<size_t>(slot - 1)] != inner.color)
        return std::nullopt;
    return graft(sp, outer, slot, inner);
}

std::optional<LinearCombo<ETree>> compose_combo(const FiniteSpace& sp,
                                                const LinearCombo<ETree>& outer, int slot,
                                                const LinearCombo<ETree>& inner)
{
    LinearCombo<ETree> out;
    for (const auto& [to, co] : outer.terms())
        for (const auto& [ti, ci] : inner.terms()) {
            auto g = graft_checked(sp, to, slot, ti);
            if (!g)
                return std::nullopt;
            out.add(*g, co * ci);
        }
    return out;
}

// The formal two-extension system.  Colors are symbols U < U' < U'',
// V < V' < V'', with every join identified to W or W' (the wlog step that
// turns per-color equations into one equation per cubic tree shape).
struct FineTuned {
    enum C { cU, cUp, cUpp, cV, cVp, cVpp, cW, cWp, cUV };

    static int join(int a, int b)
    {
        if (a > b)
            std::swap(a, b);
        if (a == cU && b == cV)
            return cUV;
        if ((a == cUpp && b == cV) || (a == cU && b == cVpp) || (a == cUp && b == cVp))
            return cW;
        if ((a == cU && b == cVp) || (a == cUp && b == cV))
            return cWp;
        throw std::logic_error("fine-tuned join not defined");
    }

    // A cubic composite of two extensions and one product, keyed by its
    // planar shape and the colors at each slot:
    //   A  = ext . ext . bin          B1 = ext . (bin o1 ext)
    //   B2 = ext . (bin o2 ext)       C1 = bin o1 (ext . ext)
    //   C2 = bin o2 (ext . ext)       D  = (bin o1 ext) o2 ext
    using Key = std::array<int, 6>;
    struct Term {
        Key key;
        int coeff;
    };

    // Cubic parts of the nine spanning composites, expanded with the join
    // table above (quadratic parts drop out of the cubic-vanishing system).
    static std::vector<std::vector<Term>> expansions()
    {
        auto A = [](int u, int v, int mid, int top) { return Key{0, u, v, mid, top, 0}; };
        auto B1 = [](int u, int up, int v, int top) { return Key{1, u, up, v, top, 0}; };
        auto B2 = [](int v, int vp, int u, int top) { return Key{2, v, vp, u, top, 0}; };
        auto C1 = [](int u, int up, int upp, int v) { return Key{3, u, up, upp, v, 0}; };
        auto C2 = [](int v, int vp, int vpp, int u) { return Key{4, v, vp, vpp, u, 0}; };
        auto D = [](int u, int up, int v, int vp) { return Key{5, u, up, v, vp, 0}; };

        // In the fine-tuned configuration W' is simultaneously U|V' and U'|V,
        // and W is U''|V = U|V'' = U'|V'.
        int W = cW, Wp = join(cU, cVp);
        return {
            /* e1 = (ext(W',W).ext(UV,W') - ext(UV,W)) o bin(U,V)            */
            {{A(cU, cV, Wp, W), +1}},
            /* e2 = bin(U'',V) o1 (ext(U',U'').ext(U,U') - ext(U,U''))       */
            {{C1(cU, cUp, cUpp, cV), +1}},
            /* e3 = bin(U,V'') o2 (ext(V',V'').ext(V,V') - ext(V,V''))       */
            {{C2(cV, cVp, cVpp, cU), +1}},
            /* e4 = (bin(U',V') o1 ext) o2 ext - ext(U|V',U'|V') . (bin o2 ext) */
            {{D(cU, cUp, cV, cVp), +1}, {B2(cV, cVp, cU, join(cUp, cVp)), -1}},
            /* e5 = bin(U'',V) o1 ladder - ext(U'|V,U''|V) . (bin o1 ext)    */
            {{C1(cU, cUp, cUpp, cV), +1}, {B1(cU, cUp, cV, join(cUpp, cV)), -1}},
            /* e6 = ext(U'|V,W) . (bin o1 ext) - ext(U'|V,W) . ext(UV,U'|V) . bin */
            {{B1(cU, cUp, cV, W), +1}, {A(cU, cV, join(cUp, cV), W), -1}},
            /* e7 = (bin(U',V') o1 ext) o2 ext - ext(U|V',U'|V') . (bin o1 ext) */
            {{D(cU, cUp, cV, cVp), +1}, {B1(cU, cUp, cV, join(cUp, cVp)), -1}},
            /* e8 = bin(U,V'') o2 ladder - ext(U|V',U|V'') . (bin o2 ext)    */
            {{C2(cV, cVp, cVpp, cU), +1}, {B2(cV, cVp, cU, join(cU, cVpp)), -1}},
            /* e9 = ext(U|V',W) . (bin o2 ext) - ext(U|V',W) . ext(UV,U|V') . bin */
            {{B2(cV, cVp, cU, W), +1}, {A(cU, cV, join(cU, cVp), W), -1}},
        };
    }
};

} // namespace

QlReport check_ql(const FiniteSpace& sp, int weight_bound)
{
    QlReport rep;
    (void)weight_bound;

    RelationBasis rb = relation_basis(sp);

    // -- ql1: relations meet the generator space trivially -------------------
    // Relations are grouped by color signature; within a signature, order the
    // coordinates [weight-2 trees, weight-1 trees] and demand that no reduced
    // row has its pivot among the weight-1 coordinates.
    auto all_rels = rb.all();
    std::map<Signature, std::vector<const LinearCombo<ETree>*>> by_sig;
    for (const auto& r : all_rels)
        by_sig[signature_of(r.terms().begin()->first)].push_back(&r);

    rep.ql1 = true;
    for (auto& [sig, rels] : by_sig) {
        std::map<ETree, int> coord;
        std::vector<ETree> w2, w1;
        for (auto* r : rels)
            for (const auto& [t, c] : r->terms())
                (t.weight() == 2 ? w2 : w1).push_back(t);
        std::sort(w2.begin(), w2.end());
        w2.erase(std::unique(w2.begin(), w2.end()), w2.end());
        std::sort(w1.begin(), w1.end());
        w1.erase(std::unique(w1.begin(), w1.end()), w1.end());
        for (const auto& t : w2)
            coord.emplace(t, static_cast<int>(coord.size()));
        for (const auto& t : w1)
            coord.emplace(t, static_cast<int>(coord.size()));
        RowReducer rr(static_cast<int>(coord.size()));
        for (auto* r : rels) {
            std::vector<Rational> v(coord.size());
            for (const auto& [t, c] : r->terms())
                v[static_cast<size_t>(coord.at(t))] = c;
            rr.add_row(std::move(v));
        }
        for (int piv : rr.pivot_cols())
            if (piv >= static_cast<int>(w2.size())) {
                rep.ql1 = false;
                rep.violations.push_back("ql1: a relation lies in the generator space");
            }
    }

    // -- ql2 ------------------------------------------------------------------
    // Spanning set of {R o E + E o R}; vectors live in weight-3 + weight-2
    // coordinates.  Elements with vanishing cubic part must reduce to zero
    // against the quadratic part of R.
    std::vector<LinearCombo<ETree>> gens; // generators of S
    std::vector<LinearCombo<ETree>> unit_e;
    for (const auto& t : enumerate_trees(sp, 1))
        unit_e.emplace_back(t);

    for (const auto& r : all_rels) {
        int arity = r.terms().begin()->first.arity();
        for (int slot = 1; slot <= arity; ++slot)
            for (const auto& e : unit_e)
                if (auto g = compose_combo(sp, r, slot, e))
                    gens.push_back(*g);
        for (const auto& e : unit_e) {
            int ea = e.terms().begin()->first.arity();
            for (int slot = 1; slot <= ea; ++slot)
                if (auto g = compose_combo(sp, e, slot, r))
                    gens.push_back(*g);
        }
    }

    std::map<Signature, std::vector<const LinearCombo<ETree>*>> gens_by_sig;
    for (const auto& g : gens)
        if (!g.is_zero())
            gens_by_sig[signature_of(g.terms().begin()->first)].push_back(&g);

    auto quad = rb.quadratic(); // spans R cap T^(2) together with combinations of r1
    std::map<Signature, std::vector<const LinearCombo<ETree>*>> r_by_sig;
    for (const auto& r : all_rels)
        r_by_sig[signature_of(r.terms().begin()->first)].push_back(&r);

    rep.ql2 = true;
    for (auto& [sig, gs] : gens_by_sig) {
        // Coordinates: weight-3 trees first, weight-2 after.
        std::map<ETree, int> coord;
        std::vector<ETree> w3, w2;
        auto note = [&](const ETree& t) { (t.weight() == 3 ? w3 : w2).push_back(t); };
        for (auto* g : gs)
            for (const auto& [t, c] : g->terms())
                note(t);
        std::sort(w3.begin(), w3.end());
        w3.erase(std::unique(w3.begin(), w3.end()), w3.end());
        std::sort(w2.begin(), w2.end());
        w2.erase(std::unique(w2.begin(), w2.end()), w2.end());
        for (const auto& t : w3)
            coord.emplace(t, static_cast<int>(coord.size()));
        for (const auto& t : w2)
            coord.emplace(t, static_cast<int>(coord.size()));

        RowReducer rr(static_cast<int>(coord.size()));
        for (auto* g : gs) {
            std::vector<Rational> v(coord.size());
            for (const auto& [t, c] : g->terms())
                v[static_cast<size_t>(coord.at(t))] = c;
            rr.add_row(std::move(v));
        }

        // R cap T^(2) in the same signature: the quadratic parts of R that
        // survive in weight-2 coordinates.  For the reduction target we use
        // the full relation set restricted to the weight-2 coordinate block:
        // a combination of relations is quadratic iff its weight-1 block
        // vanishes, and those quadratic combinations are spanned by r2, r3
        // and differences of r1 ladders; reducing candidates against the
        // quadratic span is exactly the containment to check.
        RowReducer rquad(static_cast<int>(w2.size()));
        auto it = r_by_sig.find(sig);
        if (it != r_by_sig.end()) {
            // Quadratic combinations of relations: reduce [w1 | w2] and keep
            // rows supported on w2 only.
            std::map<ETree, int> c2;
            std::vector<ETree> w1;
            for (auto* r : it->second)
                for (const auto& [t, c] : r->terms())
                    if (t.weight() == 1)
                        w1.push_back(t);
            std::sort(w1.begin(), w1.end());
            w1.erase(std::unique(w1.begin(), w1.end()), w1.end());
            int n1 = static_cast<int>(w1.size());
            for (size_t i = 0; i < w1.size(); ++i)
                c2.emplace(w1[i], static_cast<int>(i));
            RowReducer rr2(n1 + static_cast<int>(w2.size()));
            for (auto* r : it->second) {
                std::vector<Rational> v(static_cast<size_t>(n1) + w2.size());
                bool in_coords = true;
                for (const auto& [t, c] : r->terms()) {
                    if (t.weight() == 1)
                        v[static_cast<size_t>(c2.at(t))] = c;
                    else {
                        auto pos = std::lower_bound(w2.begin(), w2.end(), t);
                        if (pos == w2.end() || !(*pos == t)) {
                            in_coords = false;
                            break;
                        }
                        v[static_cast<size_t>(n1 + (pos - w2.begin()))] = c;
                    }
                }
                if (in_coords)
                    rr2.add_row(std::move(v));
            }
            for (const auto& row : rr2.rows()) {
                bool quadratic = true;
                for (int j = 0; j < n1; ++j)
                    if (row[static_cast<size_t>(j)] != 0)
                        quadratic = false;
                if (quadratic)
                    rquad.add_row(std::vector<Rational>(row.begin() + n1, row.end()));
            }
        }

        for (const auto& row : rr.rows()) {
            bool cubic_free = true;
            for (size_t j = 0; j < w3.size(); ++j)
                if (row[j] != 0)
                    cubic_free = false;
            if (!cubic_free)
                continue;
            std::vector<Rational> v(row.begin() + static_cast<std::ptrdiff_t>(w3.size()),
                                    row.end());
            rquad.reduce(v);
            if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; })) {
                rep.ql2 = false;
                rep.violations.push_back("ql2: a quadratic consequence escapes the relations");
            }
        }
    }

    // -- The formal two-extension system --------------------------------------
    {
        auto exps = FineTuned::expansions();
        std::map<FineTuned::Key, int> rows;
        for (const auto& e : exps)
            for (const auto& t : e)
                rows.emplace(t.key, static_cast<int>(rows.size()));
        Matrix m(static_cast<int>(rows.size()), 9);
        for (int i = 0; i < 9; ++i)
            for (const auto& t : exps[static_cast<size_t>(i)])
                m.at(rows.at(t.key), i) += t.coeff;
        auto kern = kernel_basis(m);
        rep.fine_tuned_dim = static_cast<int>(kern.size());

        const int doc[3][9] = {{1, -1, 0, 0, 1, 1, 0, 0, 0},
                               {0, 1, -1, -1, -1, 0, 1, 1, 0},
                               {1, -1, 0, 1, 1, 0, -1, 0, 1}};
        RowReducer a(9), b(9);
        for (auto& v : kern)
            a.add_row(v);
        for (auto& row : doc) {
            std::vector<Rational> v(9);
            for (int j = 0; j < 9; ++j)
                v[static_cast<size_t>(j)] = row[j];
            b.add_row(std::move(v));
        }
        rep.fine_tuned_matches_documented_basis = a.rows() == b.rows();
    }

    return rep;
}

std::string QlReport::summary() const
{
    std::ostringstream os;
    os << "ql1=" << (ql1 ? "pass" : "FAIL") << " ql2=" << (ql2 ? "pass" : "FAIL")
       << " two-extension solution space dim=" << fine_tuned_dim
       << (fine_tuned_matches_documented_basis ? " (matches documented basis)"
                                               : " (DOES NOT match documented basis)");
    for (const auto& v : violations)
        os << "\n  " << v;
    return os.str();
}

} // namespace disjcalc::disj
