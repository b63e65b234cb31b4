#include "disjcalc/multilinear.hpp"

#include <cassert>
#include <stdexcept>

namespace disjcalc {

MultiMap::MultiMap(std::vector<const GradedComplex*> s, const GradedComplex* d, int degree)
    : src(std::move(s)), dst(d), deg(degree)
{
    m = Matrix(dst->dim(), src_dim());
}

int MultiMap::src_dim() const
{
    int n = 1;
    for (const auto* c : src)
        n *= c->dim();
    return n;
}

std::vector<int> MultiMap::digits_of(int index) const
{
    std::vector<int> digits(src.size());
    for (int r = arity() - 1; r >= 0; --r) {
        int d = src[static_cast<size_t>(r)]->dim();
        digits[static_cast<size_t>(r)] = index % d;
        index /= d;
    }
    return digits;
}

int MultiMap::index_of(const std::vector<int>& digits) const
{
    int idx = 0;
    for (int r = 0; r < arity(); ++r)
        idx = idx * src[static_cast<size_t>(r)]->dim() + digits[static_cast<size_t>(r)];
    return idx;
}

int MultiMap::tensor_degree(const std::vector<int>& digits) const
{
    int d = 0;
    for (int r = 0; r < arity(); ++r)
        d += src[static_cast<size_t>(r)]->deg[static_cast<size_t>(digits[static_cast<size_t>(r)])];
    return d;
}

bool MultiMap::graded() const
{
    for (int col = 0; col < m.cols; ++col) {
        int sdeg = tensor_degree(digits_of(col));
        for (int row = 0; row < m.rows; ++row)
            if (m.at(row, col) != 0 &&
                dst->deg[static_cast<size_t>(row)] != sdeg + deg)
                return false;
    }
    return true;
}

MultiMap MultiMap::operator+(const MultiMap& o) const
{
    assert(deg == o.deg);
    MultiMap r = *this;
    r.m = m + o.m;
    return r;
}

MultiMap MultiMap::operator-(const MultiMap& o) const
{
    assert(deg == o.deg);
    MultiMap r = *this;
    r.m = m - o.m;
    return r;
}

MultiMap MultiMap::scaled(const Rational& c) const
{
    MultiMap r = *this;
    r.m = m.scaled(c);
    return r;
}

MultiMap zero_map(std::vector<const GradedComplex*> src, const GradedComplex* dst, int deg)
{
    return MultiMap(std::move(src), dst, deg);
}

MultiMap identity_map(const GradedComplex* cx)
{
    MultiMap f({cx}, cx, 0);
    f.m = Matrix::identity(cx->dim());
    return f;
}

MultiMap compose_at(const MultiMap& f, int j, const MultiMap& g)
{
    assert(j >= 1 && j <= f.arity());
    assert(g.dst == f.src[static_cast<size_t>(j - 1)]);
    std::vector<const GradedComplex*> src;
    for (int r = 0; r < f.arity(); ++r) {
        if (r == j - 1)
            src.insert(src.end(), g.src.begin(), g.src.end());
        else
            src.push_back(f.src[static_cast<size_t>(r)]);
    }
    MultiMap h(std::move(src), f.dst, f.deg + g.deg);

    int gd = g.src_dim();
    for (int col = 0; col < h.m.cols; ++col) {
        auto digits = h.digits_of(col);
        // Split digits: prefix (j-1 slots), g-block (g.arity()), suffix.
        int prefix_deg = 0;
        for (int r = 0; r < j - 1; ++r)
            prefix_deg += f.src[static_cast<size_t>(r)]
                              ->deg[static_cast<size_t>(digits[static_cast<size_t>(r)])];
        int sign = ((g.deg % 2 != 0) && (prefix_deg % 2 != 0)) ? -1 : 1;

        std::vector<int> gdig(digits.begin() + (j - 1), digits.begin() + (j - 1) + g.arity());
        int gcol = g.index_of(gdig);
        for (int gi = 0; gi < g.dst->dim(); ++gi) {
            const Rational& gv = g.m.at(gi, gcol);
            if (gv == 0)
                continue;
            std::vector<int> fdig;
            for (int r = 0; r < j - 1; ++r)
                fdig.push_back(digits[static_cast<size_t>(r)]);
            fdig.push_back(gi);
            for (size_t r = static_cast<size_t>(j - 1) + g.src.size(); r < digits.size(); ++r)
                fdig.push_back(digits[r]);
            int fcol = f.index_of(fdig);
            for (int row = 0; row < f.dst->dim(); ++row) {
                const Rational& fv = f.m.at(row, fcol);
                if (fv != 0)
                    h.m.at(row, col) += sign * fv * gv;
            }
        }
    }
    (void)gd;
    return h;
}

MultiMap compose_tensor(const MultiMap& f, const std::vector<const MultiMap*>& gs)
{
    assert(static_cast<int>(gs.size()) == f.arity());
    std::vector<const GradedComplex*> src;
    int deg = f.deg;
    for (const auto* g : gs) {
        src.insert(src.end(), g->src.begin(), g->src.end());
        deg += g->deg;
    }
    MultiMap h(std::move(src), f.dst, deg);

    for (int col = 0; col < h.m.cols; ++col) {
        auto digits = h.digits_of(col);
        // Blocks of digits per g_r; sign from moving each g_r past the
        // earlier blocks.
        int sign = 1;
        {
            int acc_deg = 0;
            size_t pos = 0;
            for (const auto* g : gs) {
                if (g->deg % 2 != 0 && acc_deg % 2 != 0)
                    sign = -sign;
                for (int r = 0; r < g->arity(); ++r) {
                    acc_deg += g->src[static_cast<size_t>(r)]
                                   ->deg[static_cast<size_t>(digits[pos])];
                    ++pos;
                }
            }
        }
        // Apply each g_r to its block, collecting (digit, coeff) per slot.
        std::vector<int> fdig(gs.size());
        Rational acc;
        auto rec = [&](auto&& self, size_t r, size_t pos, Rational c) -> void {
            if (r == gs.size()) {
                int fcol = f.index_of(fdig);
                for (int row = 0; row < f.dst->dim(); ++row) {
                    const Rational& fv = f.m.at(row, fcol);
                    if (fv != 0)
                        h.m.at(row, col) += sign * fv * c;
                }
                return;
            }
            const MultiMap* g = gs[r];
            std::vector<int> gdig(digits.begin() + static_cast<std::ptrdiff_t>(pos),
                                  digits.begin() + static_cast<std::ptrdiff_t>(pos) + g->arity());
            int gcol = g->index_of(gdig);
            for (int gi = 0; gi < g->dst->dim(); ++gi) {
                const Rational& gv = g->m.at(gi, gcol);
                if (gv == 0)
                    continue;
                fdig[r] = gi;
                self(self, r + 1, pos + g->src.size(), c * gv);
            }
        };
        rec(rec, 0, 0, Rational(1));
    }
    return h;
}

MultiMap precompose_perm(const MultiMap& f, const Perm& pi)
{
    assert(pi.size() == f.arity());
    std::vector<const GradedComplex*> src(f.src.size());
    // Slot r of the composite feeds f's slot r' with pi(r') = ... the
    // composite evaluates f on (x_{pi(1)},...,x_{pi(k)}), so f's slot r
    // receives composite slot pi(r).
    for (int r = 0; r < f.arity(); ++r)
        src[static_cast<size_t>(pi(r))] = f.src[static_cast<size_t>(r)];
    MultiMap h(std::move(src), f.dst, f.deg);

    for (int col = 0; col < h.m.cols; ++col) {
        auto digits = h.digits_of(col);
        std::vector<int> fdig(digits.size());
        std::vector<int> degs(digits.size());
        for (int r = 0; r < h.arity(); ++r)
            degs[static_cast<size_t>(r)] =
                h.src[static_cast<size_t>(r)]->deg[static_cast<size_t>(digits[static_cast<size_t>(r)])];
        for (int r = 0; r < f.arity(); ++r)
            fdig[static_cast<size_t>(r)] = digits[static_cast<size_t>(pi(r))];
        int sign = koszul_sign(pi, degs);
        int fcol = f.index_of(fdig);
        for (int row = 0; row < f.dst->dim(); ++row) {
            const Rational& fv = f.m.at(row, fcol);
            if (fv != 0)
                h.m.at(row, col) += sign * fv;
        }
    }
    return h;
}

MultiMap boundary(const MultiMap& f)
{
    MultiMap h(f.src, f.dst, f.deg + 1);
    // d_dst o f
    for (int col = 0; col < f.m.cols; ++col)
        for (int mid = 0; mid < f.dst->dim(); ++mid) {
            const Rational& fv = f.m.at(mid, col);
            if (fv == 0)
                continue;
            for (int row = 0; row < f.dst->dim(); ++row) {
                const Rational& dv = f.dst->d.at(row, mid);
                if (dv != 0)
                    h.m.at(row, col) += dv * fv;
            }
        }
    // -(-1)^{|f|} f o d_tensor
    int fsign = (f.deg % 2 == 0) ? 1 : -1;
    for (int col = 0; col < f.m.cols; ++col) {
        auto digits = f.digits_of(col);
        int acc_deg = 0;
        for (int j = 0; j < f.arity(); ++j) {
            const GradedComplex* cx = f.src[static_cast<size_t>(j)];
            int dj = digits[static_cast<size_t>(j)];
            int slot_sign = (acc_deg % 2 == 0) ? 1 : -1;
            for (int to = 0; to < cx->dim(); ++to) {
                const Rational& dv = cx->d.at(to, dj);
                if (dv == 0)
                    continue;
                std::vector<int> nd = digits;
                nd[static_cast<size_t>(j)] = to;
                int ncol = f.index_of(nd);
                for (int row = 0; row < f.dst->dim(); ++row) {
                    const Rational& fv = f.m.at(row, ncol);
                    if (fv != 0)
                        h.m.at(row, col) -= fsign * slot_sign * fv * dv;
                }
            }
            acc_deg += cx->deg[static_cast<size_t>(dj)];
        }
    }
    return h;
}

} // namespace disjcalc
