#pragma once

#include "disjcalc/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace disjcalc {

struct DifferentialNotSquareZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finite cochain complex over the rationals with a named, graded basis and
/// a degree +1 differential (cohomological grading).  Flat indexing; the
/// degree decomposition is carried by `deg`.
struct GradedComplex {
    std::vector<std::string> names;
    std::vector<int> deg;
    Matrix d; // square, d.at(i,j) = coefficient of basis i in d(basis j)

    GradedComplex() = default;
    GradedComplex(std::vector<std::string> names_, std::vector<int> deg_, Matrix d_);
    static GradedComplex zero() { return GradedComplex({}, {}, Matrix(0, 0)); }
    /// One basis vector in the given degree, zero differential.
    static GradedComplex line(const std::string& name, int degree);

    int dim() const { return static_cast<int>(deg.size()); }
    int dim_in_degree(int n) const;

    /// Throws DifferentialNotSquareZero / invalid_argument on a malformed
    /// complex (d^2 != 0 or degree-inhomogeneous differential).
    void validate() const;

    /// Direct sum; basis order: all of *this, then all of other.
    GradedComplex direct_sum(const GradedComplex& other,
                             const std::string& tag_self = "",
                             const std::string& tag_other = "") const;
};

/// rank H^n for every degree, by exact Gaussian elimination.
/// Degrees with zero rank and zero basis are omitted.
std::map<int, int> homology_ranks(const GradedComplex& cx);

/// Euler characteristic from the basis (sum (-1)^d dim C^d).
Int euler_characteristic(const GradedComplex& cx);

} // namespace disjcalc
