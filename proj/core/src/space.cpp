#include "disjcalc/space.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace disjcalc {

namespace {

std::vector<int> mask_to_points(uint64_t m, const std::vector<int>& points)
{
    std::vector<int> out;
    for (size_t i = 0; i < points.size(); ++i)
        if (m & (uint64_t(1) << i))
            out.push_back(points[i]);
    return out;
}

} // namespace

FiniteSpace::FiniteSpace(std::vector<int> points, std::vector<std::vector<int>> opens,
                         std::string name)
    : name_(std::move(name))
{
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw TopologyViolation("duplicate point label");
    if (points.size() > 64)
        throw TopologyViolation("more than 64 points");
    points_ = std::move(points);

    std::map<int, int> index;
    for (size_t i = 0; i < points_.size(); ++i)
        index[points_[i]] = static_cast<int>(i);

    std::set<uint64_t> mask_set;
    for (const auto& o : opens) {
        uint64_t m = 0;
        for (int p : o) {
            auto it = index.find(p);
            if (it == index.end())
                throw TopologyViolation("open contains unknown point " + std::to_string(p));
            m |= uint64_t(1) << it->second;
        }
        mask_set.insert(m);
    }

    uint64_t total = points_.empty() ? 0 : ((points_.size() == 64) ? ~uint64_t(0)
                                                                   : (uint64_t(1) << points_.size()) - 1);
    if (!mask_set.count(0))
        throw TopologyViolation("missing empty set");
    if (!mask_set.count(total))
        throw TopologyViolation("missing total set");
    for (uint64_t a : mask_set)
        for (uint64_t b : mask_set) {
            if (!mask_set.count(a | b))
                throw TopologyViolation("not closed under union");
            if (!mask_set.count(a & b))
                throw TopologyViolation("not closed under intersection");
        }

    // Canonical order: lexicographic on sorted point lists.
    masks_.assign(mask_set.begin(), mask_set.end());
    std::sort(masks_.begin(), masks_.end(), [&](uint64_t a, uint64_t b) {
        return mask_to_points(a, points_) < mask_to_points(b, points_);
    });
    for (size_t i = 0; i < masks_.size(); ++i) {
        if (masks_[i] == 0)
            empty_id_ = static_cast<OpenId>(i);
        if (masks_[i] == total)
            total_id_ = static_cast<OpenId>(i);
    }
}

FiniteSpace FiniteSpace::empty() { return FiniteSpace({}, {{}}, "empty"); }

FiniteSpace FiniteSpace::point() { return FiniteSpace({1}, {{}, {1}}, "point"); }

FiniteSpace FiniteSpace::sierpinski()
{
    return FiniteSpace({1, 2}, {{}, {1}, {1, 2}}, "sierpinski");
}

FiniteSpace FiniteSpace::discrete(int n)
{
    std::vector<int> pts(static_cast<size_t>(n));
    std::iota(pts.begin(), pts.end(), 1);
    std::vector<std::vector<int>> opens;
    for (uint64_t m = 0; m < (uint64_t(1) << n); ++m) {
        std::vector<int> o;
        for (int i = 0; i < n; ++i)
            if (m & (uint64_t(1) << i))
                o.push_back(pts[static_cast<size_t>(i)]);
        opens.push_back(o);
    }
    return FiniteSpace(pts, opens, "discrete" + std::to_string(n));
}

FiniteSpace FiniteSpace::indiscrete(int n)
{
    std::vector<int> pts(static_cast<size_t>(n));
    std::iota(pts.begin(), pts.end(), 1);
    return FiniteSpace(pts, {{}, pts}, "indiscrete" + std::to_string(n));
}

FiniteSpace FiniteSpace::pseudo_line()
{
    return FiniteSpace({1, 2, 3}, {{}, {1}, {3}, {1, 3}, {1, 2, 3}}, "pseudo_line");
}

FiniteSpace FiniteSpace::named(const std::string& name)
{
    if (name == "empty")
        return empty();
    if (name == "point")
        return point();
    if (name == "sierpinski")
        return sierpinski();
    if (name == "pseudo_line" || name == "pseudo-line")
        return pseudo_line();
    if (name.rfind("discrete", 0) == 0 && name.size() > 8)
        return discrete(std::stoi(name.substr(8)));
    if (name.rfind("indiscrete", 0) == 0 && name.size() > 10)
        return indiscrete(std::stoi(name.substr(10)));
    throw TopologyViolation("unknown space preset: " + name);
}

bool FiniteSpace::pairwise_disjoint(const std::vector<OpenId>& us) const
{
    for (size_t i = 0; i < us.size(); ++i)
        for (size_t j = i + 1; j < us.size(); ++j)
            if (!disjoint(us[i], us[j]))
                return false;
    return true;
}

OpenId FiniteSpace::id_of_mask(uint64_t m) const
{
    for (size_t i = 0; i < masks_.size(); ++i)
        if (masks_[i] == m)
            return static_cast<OpenId>(i);
    throw TopologyViolation("set is not open in " + name_);
}

OpenId FiniteSpace::union_of(OpenId u, OpenId v) const { return id_of_mask(mask(u) | mask(v)); }

OpenId FiniteSpace::union_of(const std::vector<OpenId>& us) const
{
    uint64_t m = 0;
    for (OpenId u : us)
        m |= mask(u);
    return id_of_mask(m);
}

OpenId FiniteSpace::intersection_of(OpenId u, OpenId v) const
{
    return id_of_mask(mask(u) & mask(v));
}

std::vector<int> FiniteSpace::members(OpenId u) const
{
    return mask_to_points(mask(u), points_);
}

std::string FiniteSpace::open_str(OpenId u) const
{
    std::string s = "{";
    auto pts = members(u);
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(pts[i]);
    }
    return s + "}";
}

OpenId FiniteSpace::open_of(const std::vector<int>& pts) const
{
    uint64_t m = 0;
    for (int p : pts) {
        auto it = std::lower_bound(points_.begin(), points_.end(), p);
        if (it == points_.end() || *it != p)
            throw TopologyViolation("unknown point " + std::to_string(p));
        m |= uint64_t(1) << (it - points_.begin());
    }
    return id_of_mask(m);
}

OpenId FiniteSpace::parse_open(const std::string& s) const
{
    std::string t = s;
    // UTF-8 empty-set symbol
    if (t == "\xe2\x88\x85" || t == "{}" || t.empty())
        return empty_open();
    if (!t.empty() && t.front() == '{')
        t = t.substr(1);
    if (!t.empty() && t.back() == '}')
        t.pop_back();
    std::vector<int> pts;
    size_t pos = 0;
    while (pos < t.size()) {
        size_t comma = t.find(',', pos);
        std::string tok = t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty())
            pts.push_back(std::stoi(tok));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return open_of(pts);
}

std::vector<OpenId> FiniteSpace::components(OpenId u) const
{
    // Components of the subspace u: equivalence classes of points of u under
    // "cannot be separated by disjoint opens inside u".  Two points p, q are
    // in one component iff every split of u into two disjoint opens keeps
    // them together.
    uint64_t um = mask(u);
    std::vector<uint64_t> splits;
    for (uint64_t a : masks_)
        if ((a & um) == a)
            splits.push_back(a);
    // Union-find over points of u; refine by clopen-in-u splits (a, u\a both open).
    std::vector<int> pts;
    for (size_t i = 0; i < points_.size(); ++i)
        if (um & (uint64_t(1) << i))
            pts.push_back(static_cast<int>(i));
    std::vector<int> comp(pts.size());
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[static_cast<size_t>(x)] != x)
            x = comp[static_cast<size_t>(x)] = comp[static_cast<size_t>(comp[static_cast<size_t>(x)])];
        return x;
    };
    auto unite = [&](int x, int y) { comp[static_cast<size_t>(find(x))] = find(y); };
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            bool separated = false;
            for (uint64_t a : splits) {
                uint64_t b = um & ~a;
                bool b_open = std::find(masks_.begin(), masks_.end(), b) != masks_.end();
                if (!b_open)
                    continue;
                uint64_t mi = uint64_t(1) << pts[i], mj = uint64_t(1) << pts[j];
                if (((a & mi) && (b & mj)) || ((b & mi) && (a & mj))) {
                    separated = true;
                    break;
                }
            }
            if (!separated)
                unite(static_cast<int>(i), static_cast<int>(j));
        }
    std::map<int, uint64_t> groups;
    for (size_t i = 0; i < pts.size(); ++i)
        groups[find(static_cast<int>(i))] |= uint64_t(1) << pts[i];
    std::vector<OpenId> out;
    for (auto& [root, m] : groups)
        out.push_back(id_of_mask(m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FiniteSpace> all_spaces_up_to(int max_points)
{
    std::vector<FiniteSpace> out;
    out.push_back(FiniteSpace::empty());
    for (int n = 1; n <= max_points; ++n) {
        std::vector<int> pts(static_cast<size_t>(n));
        std::iota(pts.begin(), pts.end(), 1);
        int full = 1 << n;
        // Families of subsets of {1..n}: bitmask over the 2^n subsets.
        for (uint64_t fam = 0; fam < (uint64_t(1) << full); ++fam) {
            if (!(fam & 1) || !(fam & (uint64_t(1) << (full - 1))))
                continue; // must contain {} and the total set
            bool closed = true;
            for (int a = 0; a < full && closed; ++a) {
                if (!(fam & (uint64_t(1) << a)))
                    continue;
                for (int b = a; b < full && closed; ++b) {
                    if (!(fam & (uint64_t(1) << b)))
                        continue;
                    if (!(fam & (uint64_t(1) << (a | b))) || !(fam & (uint64_t(1) << (a & b))))
                        closed = false;
                }
            }
            if (!closed)
                continue;
            std::vector<std::vector<int>> opens;
            for (int a = 0; a < full; ++a)
                if (fam & (uint64_t(1) << a)) {
                    std::vector<int> o;
                    for (int i = 0; i < n; ++i)
                        if (a & (1 << i))
                            o.push_back(pts[static_cast<size_t>(i)]);
                    opens.push_back(o);
                }
            out.emplace_back(pts, opens,
                             "top" + std::to_string(n) + "_" + std::to_string(fam));
        }
    }
    return out;
}

} // namespace disjcalc
