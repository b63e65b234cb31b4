#include "disjcalc/chain.hpp"

#include <algorithm>

namespace disjcalc {

bool Chain::valid(const FiniteSpace& sp) const
{
    if (entries.empty())
        return false;
    for (size_t i = 0; i + 1 < entries.size(); ++i)
        if (!sp.strict_subset(entries[i], entries[i + 1]))
            return false;
    return true;
}

int ChainFamily::weight() const
{
    int w = arity() - 1;
    for (const auto& c : chains)
        w += c.length() - 1;
    return w;
}

std::vector<OpenId> ChainFamily::bottoms() const
{
    std::vector<OpenId> out;
    out.reserve(chains.size());
    for (const auto& c : chains)
        out.push_back(c.bottom());
    return out;
}

std::vector<OpenId> ChainFamily::tops() const
{
    std::vector<OpenId> out;
    out.reserve(chains.size());
    for (const auto& c : chains)
        out.push_back(c.top());
    return out;
}

OpenId ChainFamily::output(const FiniteSpace& sp) const { return sp.union_of(tops()); }

bool ChainFamily::valid(const FiniteSpace& sp) const
{
    if (chains.empty())
        return false;
    for (const auto& c : chains)
        if (!c.valid(sp))
            return false;
    return sp.pairwise_disjoint(tops());
}

std::string chain_str(const FiniteSpace& sp, const Chain& c)
{
    std::string s;
    for (size_t i = 0; i < c.entries.size(); ++i) {
        if (i)
            s += "<";
        s += sp.open_str(c.entries[i]);
    }
    return s;
}

std::string family_str(const FiniteSpace& sp, const ChainFamily& f)
{
    std::string s = "(";
    for (size_t i = 0; i < f.chains.size(); ++i) {
        if (i)
            s += "; ";
        s += chain_str(sp, f.chains[i]);
    }
    return s + ")";
}

namespace {

void extend_chains(const FiniteSpace& sp, Chain& cur, std::vector<Chain>& out)
{
    out.push_back(cur);
    OpenId last = cur.top();
    for (OpenId v = 0; v < sp.num_opens(); ++v)
        if (sp.strict_subset(last, v)) {
            cur.entries.push_back(v);
            extend_chains(sp, cur, out);
            cur.entries.pop_back();
        }
}

} // namespace

std::vector<Chain> chains_from(const FiniteSpace& sp, OpenId bottom)
{
    std::vector<Chain> out;
    Chain c({bottom});
    extend_chains(sp, c, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Chain> chains_between(const FiniteSpace& sp, OpenId bottom, OpenId top)
{
    std::vector<Chain> out;
    for (auto& c : chains_from(sp, bottom))
        if (c.top() == top)
            out.push_back(c);
    return out;
}

std::vector<ChainFamily> enumerate_chain_families(const FiniteSpace& sp, int k, int weight)
{
    std::vector<ChainFamily> out;
    if (k < 1 || weight < k - 1)
        return out;
    int chain_budget = weight - (k - 1); // sum of (s_i - 1)

    // All chains grouped: chains[c] for every bottom.
    std::vector<Chain> all;
    for (OpenId u = 0; u < sp.num_opens(); ++u) {
        auto cs = chains_from(sp, u);
        all.insert(all.end(), cs.begin(), cs.end());
    }

    std::vector<Chain> cur;
    std::vector<OpenId> tops;
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == k) {
            if (used == chain_budget)
                out.emplace_back(cur);
            return;
        }
        for (const auto& c : all) {
            int cost = c.length() - 1;
            if (used + cost > chain_budget)
                continue;
            bool ok = true;
            for (OpenId t : tops)
                if (!sp.disjoint(t, c.top()))
                    ok = false;
            if (!ok)
                continue;
            cur.push_back(c);
            tops.push_back(c.top());
            self(self, pos + 1, used + cost);
            tops.pop_back();
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);

    std::sort(out.begin(), out.end(), [&](const ChainFamily& a, const ChainFamily& b) {
        OpenId oa = a.output(sp), ob = b.output(sp);
        if (oa != ob)
            return oa < ob;
        return a.chains < b.chains;
    });
    return out;
}

std::vector<ChainFamily> enumerate_chain_families_with_bottoms(
    const FiniteSpace& sp, const std::vector<OpenId>& bottoms, int weight)
{
    std::vector<ChainFamily> out;
    int k = static_cast<int>(bottoms.size());
    if (k < 1 || weight < k - 1)
        return out;
    int chain_budget = weight - (k - 1);

    std::vector<std::vector<Chain>> per_slot;
    for (OpenId b : bottoms)
        per_slot.push_back(chains_from(sp, b));

    std::vector<Chain> cur;
    std::vector<OpenId> tops;
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == k) {
            if (used == chain_budget)
                out.emplace_back(cur);
            return;
        }
        for (const auto& c : per_slot[static_cast<size_t>(pos)]) {
            int cost = c.length() - 1;
            if (used + cost > chain_budget)
                continue;
            bool ok = true;
            for (OpenId t : tops)
                if (!sp.disjoint(t, c.top()))
                    ok = false;
            if (!ok)
                continue;
            cur.push_back(c);
            tops.push_back(c.top());
            self(self, pos + 1, used + cost);
            tops.pop_back();
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace disjcalc
