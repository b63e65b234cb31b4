#include "disjcalc/complex.hpp"

#include <algorithm>
#include <set>

namespace disjcalc {

GradedComplex::GradedComplex(std::vector<std::string> names_, std::vector<int> deg_, Matrix d_)
    : names(std::move(names_)), deg(std::move(deg_)), d(std::move(d_))
{
    if (names.size() != deg.size())
        throw std::invalid_argument("complex: names/degrees size mismatch");
    if (d.rows != dim() || d.cols != dim())
        throw std::invalid_argument("complex: differential shape mismatch");
}

GradedComplex GradedComplex::line(const std::string& name, int degree)
{
    return GradedComplex({name}, {degree}, Matrix(1, 1));
}

int GradedComplex::dim_in_degree(int n) const
{
    int c = 0;
    for (int x : deg)
        if (x == n)
            ++c;
    return c;
}

void GradedComplex::validate() const
{
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (d.at(i, j) != 0 && deg[static_cast<size_t>(i)] != deg[static_cast<size_t>(j)] + 1)
                throw std::invalid_argument("complex: differential does not have degree +1");
    if (!(d * d).is_zero())
        throw DifferentialNotSquareZero("complex: d^2 != 0");
}

GradedComplex GradedComplex::direct_sum(const GradedComplex& other, const std::string& tag_self,
                                        const std::string& tag_other) const
{
    std::vector<std::string> nm;
    std::vector<int> dg;
    for (int i = 0; i < dim(); ++i) {
        nm.push_back(tag_self + names[static_cast<size_t>(i)]);
        dg.push_back(deg[static_cast<size_t>(i)]);
    }
    for (int i = 0; i < other.dim(); ++i) {
        nm.push_back(tag_other + other.names[static_cast<size_t>(i)]);
        dg.push_back(other.deg[static_cast<size_t>(i)]);
    }
    Matrix dd(dim() + other.dim(), dim() + other.dim());
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            dd.at(i, j) = d.at(i, j);
    for (int i = 0; i < other.dim(); ++i)
        for (int j = 0; j < other.dim(); ++j)
            dd.at(dim() + i, dim() + j) = other.d.at(i, j);
    return GradedComplex(std::move(nm), std::move(dg), std::move(dd));
}

std::map<int, int> homology_ranks(const GradedComplex& cx)
{
    cx.validate();

    std::set<int> degrees(cx.deg.begin(), cx.deg.end());
    std::map<int, int> ranks;
    for (int n : degrees) {
        // Restrict d to C^n -> C^{n+1} and C^{n-1} -> C^n.
        std::vector<int> idx_n, idx_np1, idx_nm1;
        for (int i = 0; i < cx.dim(); ++i) {
            if (cx.deg[static_cast<size_t>(i)] == n)
                idx_n.push_back(i);
            if (cx.deg[static_cast<size_t>(i)] == n + 1)
                idx_np1.push_back(i);
            if (cx.deg[static_cast<size_t>(i)] == n - 1)
                idx_nm1.push_back(i);
        }
        auto block = [&](const std::vector<int>& ri, const std::vector<int>& ci) {
            Matrix m(static_cast<int>(ri.size()), static_cast<int>(ci.size()));
            for (size_t i = 0; i < ri.size(); ++i)
                for (size_t j = 0; j < ci.size(); ++j)
                    m.at(static_cast<int>(i), static_cast<int>(j)) = cx.d.at(ri[i], ci[j]);
            return m;
        };
        int rank_out = rank_of(block(idx_np1, idx_n));
        int rank_in = rank_of(block(idx_n, idx_nm1));
        int h = static_cast<int>(idx_n.size()) - rank_out - rank_in;
        ranks[n] = h;
    }
    return ranks;
}

Int euler_characteristic(const GradedComplex& cx)
{
    Int chi = 0;
    for (int x : cx.deg)
        chi += (x % 2 == 0) ? 1 : -1;
    return chi;
}

} // namespace disjcalc
