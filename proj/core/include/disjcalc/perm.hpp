#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace disjcalc {

/// Permutation of {0..k-1}, stored as the image list: p[i] = p(i).
struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(std::vector<int> images) : img(std::move(images)) {}
    static Perm identity(int k);

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[static_cast<size_t>(i)]; }
    bool is_identity() const;

    Perm inverse() const;
    /// (a * b)(i) = a(b(i)).
    friend Perm operator*(const Perm& a, const Perm& b);

    /// Signature (-1)^{inversions}.
    int sign() const;

    auto operator<=>(const Perm&) const = default;
};

/// Koszul sign of rearranging a list of graded objects with degrees `deg`
/// into the order (deg[p(0)], deg[p(1)], ...): the product of
/// (-1)^{deg_i deg_j} over pairs {i<j} whose relative order p reverses.
int koszul_sign(const Perm& p, const std::vector<int>& deg);

struct ShuffleWithSign {
    Perm perm;
    int sign; // signature of perm
};

/// All (l_1,...,l_n)-shuffles: permutations of {0..sum-1} increasing on each
/// consecutive block of size l_i.  Count equals the multinomial coefficient.
/// Zero-length blocks are allowed.
std::vector<ShuffleWithSign> shuffles(const std::vector<int>& blocks);

/// All compositions of k into n >= min_parts positive parts, n up to k.
std::vector<std::vector<int>> compositions(int k, int min_parts = 1);

/// All permutations of {0..k-1} in lexicographic order on the image lists.
std::vector<Perm> all_perms(int k);

} // namespace disjcalc
