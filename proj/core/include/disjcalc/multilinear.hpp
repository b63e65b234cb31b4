#pragma once

#include "disjcalc/complex.hpp"
#include "disjcalc/perm.hpp"

#include <vector>

namespace disjcalc {

/// Multilinear graded map  src_1 (x) ... (x) src_k -> dst  of a fixed
/// degree, stored densely over the tensor basis (slot 0 most significant).
/// All compositions follow the Koszul sign rule.
struct MultiMap {
    std::vector<const GradedComplex*> src;
    const GradedComplex* dst = nullptr;
    int deg = 0;
    Matrix m;

    MultiMap() = default;
    MultiMap(std::vector<const GradedComplex*> s, const GradedComplex* d, int degree);

    int arity() const { return static_cast<int>(src.size()); }
    int src_dim() const;
    bool is_zero() const { return m.is_zero(); }

    /// Degree of the tensor basis element with the given digits.
    int tensor_degree(const std::vector<int>& digits) const;
    std::vector<int> digits_of(int index) const;
    int index_of(const std::vector<int>& digits) const;

    /// Entries only where deg(dst basis) = deg(tensor elt) + deg.
    bool graded() const;

    MultiMap operator+(const MultiMap& o) const;
    MultiMap operator-(const MultiMap& o) const;
    MultiMap scaled(const Rational& c) const;
    bool operator==(const MultiMap& o) const { return deg == o.deg && m == o.m; }
};

MultiMap zero_map(std::vector<const GradedComplex*> src, const GradedComplex* dst, int deg);
MultiMap identity_map(const GradedComplex* cx);

/// f o_j g with identities elsewhere (1-based slot j):
/// (f o_j g)(x...) = (-1)^{|g| (|x_1|+...+|x_{j-1}|)} f(x_1,..,g(..),..).
MultiMap compose_at(const MultiMap& f, int j, const MultiMap& g);

/// f o (g_1 (x) ... (x) g_k), the g_r consuming consecutive blocks:
/// the usual sign (-1)^{sum_r |g_r| (|block_1|+...+|block_{r-1}|)}.
MultiMap compose_tensor(const MultiMap& f, const std::vector<const MultiMap*>& gs);

/// f o P(pi) where P(pi)(x_1,..,x_k) = +-(x_{pi(1)},..,x_{pi(k)}).
MultiMap precompose_perm(const MultiMap& f, const Perm& pi);

/// The differential commutator d_dst o f - (-1)^{|f|} f o d_src.
MultiMap boundary(const MultiMap& f);

} // namespace disjcalc
