#include "disjcalc/etree.hpp"

#include <algorithm>
#include <sstream>

namespace disjcalc {

ETree ETree::leaf(int label, OpenId color)
{
    ETree t;
    t.kind = Kind::leaf;
    t.label = label;
    t.color = color;
    return t;
}

ETree ETree::ext(OpenId v, ETree child)
{
    ETree t;
    t.kind = Kind::ext;
    t.color = v;
    t.kids.push_back(std::move(child));
    return t;
}

ETree ETree::bin(const FiniteSpace& sp, ETree left, ETree right)
{
    ETree t;
    t.kind = Kind::bin;
    t.color = sp.union_of(left.color, right.color);
    t.kids.push_back(std::move(left));
    t.kids.push_back(std::move(right));
    return t.canonical();
}

int ETree::arity() const
{
    if (kind == Kind::leaf)
        return 1;
    int a = 0;
    for (const auto& k : kids)
        a += k.arity();
    return a;
}

int ETree::weight() const
{
    if (kind == Kind::leaf)
        return 0;
    int w = 1;
    for (const auto& k : kids)
        w += k.weight();
    return w;
}

int ETree::min_label() const
{
    if (kind == Kind::leaf)
        return label;
    int m = kids.front().min_label();
    for (const auto& k : kids)
        m = std::min(m, k.min_label());
    return m;
}

namespace {

void collect_leaf_colors(const ETree& t, std::vector<std::pair<int, OpenId>>& out)
{
    if (t.kind == ETree::Kind::leaf) {
        out.emplace_back(t.label, t.color);
        return;
    }
    for (const auto& k : t.kids)
        collect_leaf_colors(k, out);
}

} // namespace

std::vector<OpenId> ETree::leaf_colors() const
{
    std::vector<std::pair<int, OpenId>> pairs;
    collect_leaf_colors(*this, pairs);
    std::sort(pairs.begin(), pairs.end());
    std::vector<OpenId> out;
    for (auto& [l, c] : pairs)
        out.push_back(c);
    return out;
}

bool ETree::admissible(const FiniteSpace& sp) const
{
    switch (kind) {
    case Kind::leaf:
        return label >= 1 && color >= 0;
    case Kind::ext:
        if (kids.size() != 1 || !sp.strict_subset(kids[0].color, color))
            return false;
        return kids[0].admissible(sp);
    case Kind::bin: {
        if (kids.size() != 2)
            return false;
        if (!sp.disjoint(kids[0].color, kids[1].color))
            return false;
        if (sp.union_of(kids[0].color, kids[1].color) != color)
            return false;
        if (kids[0].min_label() >= kids[1].min_label())
            return false;
        return kids[0].admissible(sp) && kids[1].admissible(sp);
    }
    }
    return false;
}

void ETree::require_admissible(const FiniteSpace& sp) const
{
    // Also check the label set is exactly {1..k}.
    std::vector<std::pair<int, OpenId>> pairs;
    collect_leaf_colors(*this, pairs);
    std::vector<int> labels;
    for (auto& [l, c] : pairs)
        labels.push_back(l);
    std::sort(labels.begin(), labels.end());
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != static_cast<int>(i) + 1)
            throw InadmissibleTree("leaf labels are not 1..k");
    if (!admissible(sp))
        throw InadmissibleTree("tree has inconsistent edge colors or leaf order");
}

ETree ETree::canonical() const
{
    ETree t = *this;
    for (auto& k : t.kids)
        k = k.canonical();
    if (t.kind == Kind::bin && t.kids[0].min_label() > t.kids[1].min_label())
        std::swap(t.kids[0], t.kids[1]);
    return t;
}

bool ETree::operator==(const ETree& o) const
{
    return kind == o.kind && label == o.label && color == o.color && kids == o.kids;
}

bool ETree::operator<(const ETree& o) const
{
    if (kind != o.kind)
        return kind < o.kind;
    if (color != o.color)
        return color < o.color;
    if (label != o.label)
        return label < o.label;
    return kids < o.kids;
}

namespace {

ETree shift_labels(const ETree& t, int from, int by)
{
    ETree r = t;
    if (r.kind == ETree::Kind::leaf) {
        if (r.label >= from)
            r.label += by;
        return r;
    }
    for (auto& k : r.kids)
        k = shift_labels(k, from, by);
    return r;
}

bool replace_leaf(ETree& t, int slot, const ETree& inner)
{
    if (t.kind == ETree::Kind::leaf) {
        return false;
    }
    for (auto& k : t.kids) {
        if (k.kind == ETree::Kind::leaf && k.label == slot) {
            k = inner;
            return true;
        }
        if (replace_leaf(k, slot, inner))
            return true;
    }
    return false;
}

} // namespace

ETree graft(const FiniteSpace& sp, const ETree& outer, int slot, const ETree& inner)
{
    int n = inner.arity();
    ETree shifted_inner = shift_labels(inner, 1, slot - 1); // labels 1..n -> slot..slot+n-1
    ETree out = shift_labels(outer, slot + 1, n - 1);
    if (out.kind == ETree::Kind::leaf) {
        if (out.label != slot)
            throw InadmissibleTree("graft: no leaf with requested label");
        out = shifted_inner;
    } else if (!replace_leaf(out, slot, shifted_inner)) {
        throw InadmissibleTree("graft: no leaf with requested label");
    }
    out = out.canonical();
    out.require_admissible(sp);
    return out;
}

ETree act(const Perm& p, const ETree& t)
{
    ETree r = t;
    if (r.kind == ETree::Kind::leaf) {
        r.label = p(r.label - 1) + 1;
        return r;
    }
    for (auto& k : r.kids)
        k = act(p, k);
    return r.canonical();
}

namespace {

// Trees over a fixed ordered list of leaf labels with a given weight.
std::vector<ETree> trees_on(const FiniteSpace& sp, const std::vector<int>& labels, int weight)
{
    std::vector<ETree> out;
    if (labels.size() == 1 && weight == 0) {
        for (OpenId u = 0; u < sp.num_opens(); ++u)
            out.push_back(ETree::leaf(labels[0], u));
        return out;
    }
    if (weight == 0)
        return out;
    // ext root
    for (const auto& child : trees_on(sp, labels, weight - 1))
        for (OpenId v = 0; v < sp.num_opens(); ++v)
            if (sp.strict_subset(child.color, v))
                out.push_back(ETree::ext(v, child));
    // bin root: split labels, min stays left
    if (labels.size() >= 2) {
        int n = static_cast<int>(labels.size());
        for (uint32_t sel = 0; sel < (uint32_t(1) << (n - 1)); ++sel) {
            std::vector<int> left{labels[0]}, right;
            for (int i = 1; i < n; ++i)
                ((sel >> (i - 1)) & 1 ? left : right).push_back(labels[static_cast<size_t>(i)]);
            if (right.empty())
                continue;
            for (int wl = 0; wl <= weight - 1; ++wl) {
                int wr = weight - 1 - wl;
                auto ls = trees_on(sp, left, wl);
                if (ls.empty())
                    continue;
                for (const auto& rt : trees_on(sp, right, wr))
                    for (const auto& lt : ls)
                        if (sp.disjoint(lt.color, rt.color)) {
                            ETree t;
                            t.kind = ETree::Kind::bin;
                            t.color = sp.union_of(lt.color, rt.color);
                            t.kids = {lt, rt};
                            out.push_back(t);
                        }
            }
        }
    }
    return out;
}

} // namespace

std::vector<ETree> enumerate_trees(const FiniteSpace& sp, int weight)
{
    std::vector<ETree> out;
    // weight w trees have between max(1, w - ...) and w+1 leaves; a tree with
    // k leaves has k-1 bin vertices, so k-1 <= w.
    for (int k = 1; k <= weight + 1; ++k) {
        std::vector<int> labels(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            labels[static_cast<size_t>(i)] = i + 1;
        auto ts = trees_on(sp, labels, weight);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string tree_str(const FiniteSpace& sp, const ETree& t)
{
    switch (t.kind) {
    case ETree::Kind::leaf:
        return std::to_string(t.label) + ":" + sp.open_str(t.color);
    case ETree::Kind::ext:
        return "ext[" + sp.open_str(t.kids[0].color) + "->" + sp.open_str(t.color) + "](" +
               tree_str(sp, t.kids[0]) + ")";
    case ETree::Kind::bin:
        return "bin[" + sp.open_str(t.color) + "](" + tree_str(sp, t.kids[0]) + "," +
               tree_str(sp, t.kids[1]) + ")";
    }
    return "";
}

namespace {

int dot_rec(const FiniteSpace& sp, const ETree& t, std::ostringstream& os, int& next)
{
    int id = next++;
    switch (t.kind) {
    case ETree::Kind::leaf:
        os << "  n" << id << " [shape=none,label=\"" << t.label << "\"];\n";
        break;
    case ETree::Kind::ext:
        os << "  n" << id << " [shape=box,label=\"ext\"];\n";
        break;
    case ETree::Kind::bin:
        os << "  n" << id << " [shape=circle,label=\"bin\"];\n";
        break;
    }
    for (const auto& k : t.kids) {
        int kid = dot_rec(sp, k, os, next);
        os << "  n" << kid << " -> n" << id << " [label=\"" << sp.open_str(k.color) << "\"];\n";
    }
    return id;
}

} // namespace

std::string tree_dot(const FiniteSpace& sp, const ETree& t, const std::string& graph_name)
{
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n  rankdir=TB;\n";
    int next = 0;
    int root = dot_rec(sp, t, os, next);
    os << "  out [shape=none,label=\"" << sp.open_str(t.color) << "\"];\n";
    os << "  n" << root << " -> out;\n}\n";
    return os.str();
}

} // namespace disjcalc
