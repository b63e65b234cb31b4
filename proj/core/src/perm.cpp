#include "disjcalc/perm.hpp"

#include <algorithm>
#include <numeric>

namespace disjcalc {

Perm Perm::identity(int k)
{
    Perm p;
    p.img.resize(static_cast<size_t>(k));
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

bool Perm::is_identity() const
{
    for (int i = 0; i < size(); ++i)
        if (img[static_cast<size_t>(i)] != i)
            return false;
    return true;
}

Perm Perm::inverse() const
{
    Perm q;
    q.img.resize(img.size());
    for (int i = 0; i < size(); ++i)
        q.img[static_cast<size_t>(img[static_cast<size_t>(i)])] = i;
    return q;
}

Perm operator*(const Perm& a, const Perm& b)
{
    Perm c;
    c.img.resize(a.img.size());
    for (int i = 0; i < a.size(); ++i)
        c.img[static_cast<size_t>(i)] = a(b(i));
    return c;
}

int Perm::sign() const
{
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (img[static_cast<size_t>(i)] > img[static_cast<size_t>(j)])
                ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

int koszul_sign(const Perm& p, const std::vector<int>& deg)
{
    int s = 1;
    int k = p.size();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (p(i) > p(j) && (deg[static_cast<size_t>(p(j))] % 2 != 0) &&
                (deg[static_cast<size_t>(p(i))] % 2 != 0))
                s = -s;
    return s;
}

std::vector<ShuffleWithSign> shuffles(const std::vector<int>& blocks)
{
    int total = 0;
    for (int l : blocks)
        total += l;

    // Choose, for each position, which block advances; within a block the
    // relative order is forced.
    std::vector<ShuffleWithSign> out;
    std::vector<int> starts(blocks.size());
    {
        int acc = 0;
        for (size_t b = 0; b < blocks.size(); ++b) {
            starts[b] = acc;
            acc += blocks[b];
        }
    }
    // Depth-first over positions in increasing order, trying blocks in order;
    // the resulting list is deterministic.
    std::vector<int> choice(static_cast<size_t>(total), 0);
    auto emit = [&]() {
        // choice[r] = block advanced at position r; element = starts[b] + seen so far.
        std::vector<int> seen(blocks.size(), 0);
        Perm p;
        p.img.resize(static_cast<size_t>(total));
        for (int r = 0; r < total; ++r) {
            int b = choice[static_cast<size_t>(r)];
            int elem = starts[static_cast<size_t>(b)] + seen[static_cast<size_t>(b)]++;
            // sigma(elem) = position r
            p.img[static_cast<size_t>(elem)] = r;
        }
        out.push_back({p, p.sign()});
    };

    std::vector<int> rem(blocks.begin(), blocks.end());
    auto rec = [&](auto&& self, int r) -> void {
        if (r == total) {
            emit();
            return;
        }
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (rem[b] == 0)
                continue;
            rem[b]--;
            choice[static_cast<size_t>(r)] = static_cast<int>(b);
            self(self, r + 1);
            rem[b]++;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::vector<int>> compositions(int k, int min_parts)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            if (static_cast<int>(cur.size()) >= min_parts)
                out.push_back(cur);
            return;
        }
        for (int part = 1; part <= left; ++part) {
            cur.push_back(part);
            self(self, left - part);
            cur.pop_back();
        }
    };
    rec(rec, k);
    return out;
}

std::vector<Perm> all_perms(int k)
{
    std::vector<int> v(static_cast<size_t>(k));
    std::iota(v.begin(), v.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace disjcalc
