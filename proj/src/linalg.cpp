#include "relhom/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace relhom {

GroupDescriptor GroupDescriptor::field(std::size_t dim)
{
    GroupDescriptor g;
    g.over_field = true;
    g.field_dim = dim;
    return g;
}

namespace {

std::map<mpz_class, int> factorize(mpz_class n)
{
    std::map<mpz_class, int> out;
    mpz_class d = 2;
    while (d * d <= n) {
        while (n % d == 0) {
            out[d]++;
            n /= d;
        }
        ++d;
    }
    if (n > 1)
        out[n]++;
    return out;
}

}  // namespace

GroupDescriptor GroupDescriptor::abelian(const std::vector<mpz_class>& factors)
{
    GroupDescriptor g;
    g.over_field = false;
    std::size_t zeros = 0;
    std::map<mpz_class, std::vector<int>> powers;  // prime -> exponents, descending
    for (const auto& f : factors) {
        mpz_class a = abs(f);
        if (a == 0) {
            ++zeros;
            continue;
        }
        if (a == 1)
            continue;
        for (const auto& [p, e] : factorize(a))
            powers[p].push_back(e);
    }
    std::size_t depth = 0;
    for (auto& [p, es] : powers) {
        std::sort(es.rbegin(), es.rend());
        depth = std::max(depth, es.size());
    }
    std::vector<mpz_class> inv(depth, 1);
    for (auto& [p, es] : powers)
        for (std::size_t i = 0; i < es.size(); ++i) {
            mpz_class pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(),
                       static_cast<unsigned long>(es[i]));
            inv[i] *= pe;  // inv[0] is the largest factor
        }
    std::reverse(inv.begin(), inv.end());
    g.invariant_factors = std::move(inv);
    g.invariant_factors.insert(g.invariant_factors.end(), zeros, mpz_class(0));
    return g;
}

bool GroupDescriptor::is_trivial() const
{
    return over_field ? field_dim == 0 : invariant_factors.empty();
}

std::size_t GroupDescriptor::free_rank() const
{
    std::size_t n = 0;
    for (const auto& f : invariant_factors)
        if (f == 0)
            ++n;
    return n;
}

std::optional<mpz_class> GroupDescriptor::order() const
{
    if (over_field)
        return std::nullopt;
    mpz_class n = 1;
    for (const auto& f : invariant_factors) {
        if (f == 0)
            return std::nullopt;
        n *= f;
    }
    return n;
}

std::string GroupDescriptor::str() const
{
    std::ostringstream os;
    if (over_field) {
        os << "k^" << field_dim;
        return os.str();
    }
    if (invariant_factors.empty())
        return "0";
    bool first = true;
    for (const auto& f : invariant_factors) {
        os << (first ? "" : " + ");
        if (f == 0)
            os << "Z";
        else
            os << "Z/" << f;
        first = false;
    }
    return os.str();
}

Rref rref(const Matrix& a)
{
    check(a.domain().is_field(), "rref needs a field domain");
    const ScalarDomain dom = a.domain();
    Rref out;
    out.reduced = a;
    Matrix& r = out.reduced;
    std::size_t lead = 0;
    for (std::size_t j = 0; j < a.cols() && lead < a.rows(); ++j) {
        std::size_t piv = lead;
        while (piv < a.rows() && r.at(piv, j) == 0)
            ++piv;
        if (piv == a.rows())
            continue;
        if (piv != lead)
            for (std::size_t c = 0; c < a.cols(); ++c) {
                mpq_class t = r.at(lead, c);
                r.set(lead, c, r.at(piv, c));
                r.set(piv, c, t);
            }
        mpq_class inv = s_inv(dom, r.at(lead, j));
        for (std::size_t c = 0; c < a.cols(); ++c)
            r.set(lead, c, s_mul(dom, r.at(lead, c), inv));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == lead || r.at(i, j) == 0)
                continue;
            mpq_class f = r.at(i, j);
            for (std::size_t c = 0; c < a.cols(); ++c)
                r.set(i, c, s_sub(dom, r.at(i, c), s_mul(dom, f, r.at(lead, c))));
        }
        out.pivot_cols.push_back(j);
        ++lead;
    }
    out.rank = out.pivot_cols.size();
    return out;
}

std::size_t rank(const Matrix& a)
{
    if (a.domain().is_field())
        return rref(a).rank;
    return rref(a.cast_to(ScalarDomain::rationals())).rank;
}

std::vector<mpz_class> SmithForm::diagonal() const
{
    std::vector<mpz_class> d;
    std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i)
        d.push_back(D.at(i, i).get_num());
    return d;
}

std::size_t SmithForm::rank() const
{
    std::size_t r = 0;
    for (const auto& d : diagonal())
        if (d != 0)
            ++r;
    return r;
}

namespace {

// Integer working grid for the Smith reduction.
struct ZGrid {
    std::size_t r = 0, c = 0;
    std::vector<mpz_class> a;
    ZGrid(std::size_t r_, std::size_t c_) : r(r_), c(c_), a(r_ * c_) {}
    mpz_class& at(std::size_t i, std::size_t j) { return a[i * c + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a[i * c + j]; }
    static ZGrid identity(std::size_t n)
    {
        ZGrid g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            g.at(i, i) = 1;
        return g;
    }
};

ZGrid to_grid(const Matrix& m)
{
    ZGrid g(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            check(m.at(i, j).get_den() == 1, "integer matrix expected");
            g.at(i, j) = m.at(i, j).get_num();
        }
    return g;
}

Matrix from_grid(const ZGrid& g)
{
    Matrix m(ScalarDomain::integers(), g.r, g.c);
    for (std::size_t i = 0; i < g.r; ++i)
        for (std::size_t j = 0; j < g.c; ++j)
            m.set(i, j, mpq_class(g.at(i, j)));
    return m;
}

struct SmithWork {
    ZGrid d, u, uinv, v, vinv;

    SmithWork(const Matrix& a)
        : d(to_grid(a)),
          u(ZGrid::identity(a.rows())),
          uinv(ZGrid::identity(a.rows())),
          v(ZGrid::identity(a.cols())),
          vinv(ZGrid::identity(a.cols()))
    {
    }

    void row_swap(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t k = 0; k < d.c; ++k)
            std::swap(d.at(i, k), d.at(j, k));
        for (std::size_t k = 0; k < u.c; ++k)
            std::swap(u.at(i, k), u.at(j, k));
        for (std::size_t k = 0; k < uinv.r; ++k)
            std::swap(uinv.at(k, i), uinv.at(k, j));
    }
    // row i += f * row j
    void row_addmul(std::size_t i, std::size_t j, const mpz_class& f)
    {
        for (std::size_t k = 0; k < d.c; ++k)
            d.at(i, k) += f * d.at(j, k);
        for (std::size_t k = 0; k < u.c; ++k)
            u.at(i, k) += f * u.at(j, k);
        for (std::size_t k = 0; k < uinv.r; ++k)
            uinv.at(k, j) -= f * uinv.at(k, i);
    }
    void row_negate(std::size_t i)
    {
        for (std::size_t k = 0; k < d.c; ++k)
            d.at(i, k) = -d.at(i, k);
        for (std::size_t k = 0; k < u.c; ++k)
            u.at(i, k) = -u.at(i, k);
        for (std::size_t k = 0; k < uinv.r; ++k)
            uinv.at(k, i) = -uinv.at(k, i);
    }
    void col_swap(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t k = 0; k < d.r; ++k)
            std::swap(d.at(k, i), d.at(k, j));
        for (std::size_t k = 0; k < v.r; ++k)
            std::swap(v.at(k, i), v.at(k, j));
        for (std::size_t k = 0; k < vinv.c; ++k)
            std::swap(vinv.at(i, k), vinv.at(j, k));
    }
    // col j += f * col i
    void col_addmul(std::size_t j, std::size_t i, const mpz_class& f)
    {
        for (std::size_t k = 0; k < d.r; ++k)
            d.at(k, j) += f * d.at(k, i);
        for (std::size_t k = 0; k < v.r; ++k)
            v.at(k, j) += f * v.at(k, i);
        for (std::size_t k = 0; k < vinv.c; ++k)
            vinv.at(i, k) -= f * vinv.at(j, k);
    }
};

}  // namespace

SmithForm smith_normal_form(const Matrix& a)
{
    check(a.domain().kind == DomainKind::Integers,
          "smith_normal_form: domain must be Z");
    SmithWork w(a);
    const std::size_t m = a.rows(), n = a.cols();
    const std::size_t nmin = std::min(m, n);

    for (std::size_t s = 0; s < nmin; ++s) {
        for (;;) {
            // Pivot: nonzero entry of minimal |value| in the trailing block,
            // ties broken by smallest row then column index.
            bool found = false;
            std::size_t pi = s, pj = s;
            mpz_class best;
            for (std::size_t i = s; i < m; ++i)
                for (std::size_t j = s; j < n; ++j) {
                    const mpz_class& x = w.d.at(i, j);
                    if (x == 0)
                        continue;
                    mpz_class ax = abs(x);
                    if (!found || ax < best) {
                        found = true;
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found)
                goto done;  // trailing block is zero
            w.row_swap(s, pi);
            w.col_swap(s, pj);

            bool dirty = false;
            for (std::size_t i = s + 1; i < m; ++i) {
                if (w.d.at(i, s) == 0)
                    continue;
                mpz_class q = w.d.at(i, s) / w.d.at(s, s);
                if (q != 0)
                    w.row_addmul(i, s, -q);
                if (w.d.at(i, s) != 0)
                    dirty = true;
            }
            for (std::size_t j = s + 1; j < n; ++j) {
                if (w.d.at(s, j) == 0)
                    continue;
                mpz_class q = w.d.at(s, j) / w.d.at(s, s);
                if (q != 0)
                    w.col_addmul(j, s, -q);
                if (w.d.at(s, j) != 0)
                    dirty = true;
            }
            if (dirty)
                continue;

            // Pivot is lone; make it divide the trailing block.
            bool divides = true;
            for (std::size_t i = s + 1; i < m && divides; ++i)
                for (std::size_t j = s + 1; j < n && divides; ++j)
                    if (w.d.at(i, j) % w.d.at(s, s) != 0) {
                        w.row_addmul(s, i, 1);
                        divides = false;
                    }
            if (divides)
                break;
        }
        if (w.d.at(s, s) < 0)
            w.row_negate(s);
    }
done:
    SmithForm out;
    out.input = a;
    out.D = from_grid(w.d);
    out.U = from_grid(w.u);
    out.V = from_grid(w.v);
    out.Uinv = from_grid(w.uinv);
    out.Vinv = from_grid(w.vinv);
    return out;
}

namespace {

Matrix kernel_basis_field(const Matrix& a)
{
    Rref r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : r.pivot_cols)
        is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!is_pivot[j])
            free_cols.push_back(j);
    Matrix k(a.domain(), a.cols(), free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t f = free_cols[t];
        k.set(f, t, 1);
        for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
            k.set(r.pivot_cols[pr], t, s_neg(a.domain(), r.reduced.at(pr, f)));
    }
    return k;
}

Matrix kernel_basis_integers(const Matrix& a)
{
    SmithForm s = smith_normal_form(a);
    std::size_t r = s.rank();
    return s.V.submatrix(0, r, a.cols(), a.cols() - r);
}

std::optional<Matrix> solve_field(const Matrix& a, const Matrix& b)
{
    Rref r = rref(hstack(a, b));
    for (std::size_t c : r.pivot_cols)
        if (c >= a.cols())
            return std::nullopt;
    Matrix x(a.domain(), a.cols(), b.cols());
    for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.set(r.pivot_cols[pr], j, r.reduced.at(pr, a.cols() + j));
    return x;
}

std::optional<Matrix> solve_integers(const Matrix& a, const Matrix& b)
{
    SmithForm s = smith_normal_form(a);
    Matrix c = s.U * b.cast_to(ScalarDomain::integers());
    std::size_t nmin = std::min(a.rows(), a.cols());
    Matrix y(ScalarDomain::integers(), a.cols(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpz_class d = i < nmin ? s.D.at(i, i).get_num() : mpz_class(0);
        for (std::size_t j = 0; j < b.cols(); ++j) {
            mpz_class rhs = c.at(i, j).get_num();
            if (d == 0) {
                if (rhs != 0)
                    return std::nullopt;
            } else {
                if (rhs % d != 0)
                    return std::nullopt;
                y.set(i, j, mpq_class(rhs / d));
            }
        }
    }
    return s.V * y;
}

}  // namespace

Matrix kernel_basis(const Matrix& a)
{
    if (a.domain().is_field())
        return kernel_basis_field(a);
    return kernel_basis_integers(a);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b)
{
    check(a.rows() == b.rows(), "solve: dimension mismatch");
    check(a.domain() == b.domain(), "solve: domain mismatch");
    if (a.domain().is_field())
        return solve_field(a, b);
    return solve_integers(a, b);
}

GroupDescriptor cokernel_invariants(const Matrix& a)
{
    check(a.domain().kind == DomainKind::Integers,
          "cokernel_invariants: domain must be Z");
    SmithForm s = smith_normal_form(a);
    std::vector<mpz_class> factors = s.diagonal();
    std::size_t rank = s.rank();
    factors.erase(std::remove(factors.begin(), factors.end(), mpz_class(0)),
                  factors.end());
    factors.insert(factors.end(), a.rows() - rank, mpz_class(0));
    return GroupDescriptor::abelian(factors);
}

mpz_class det_integer(const Matrix& a)
{
    check(a.domain().kind == DomainKind::Integers, "det_integer: domain must be Z");
    check(a.rows() == a.cols(), "det_integer: square matrix expected");
    std::size_t n = a.rows();
    if (n == 0)
        return 1;
    ZGrid m = to_grid(a);
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m.at(piv, k) == 0)
                ++piv;
            if (piv == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

Matrix column_lattice_basis(const Matrix& a)
{
    SmithForm s = smith_normal_form(a);
    std::size_t r = s.rank();
    Matrix out(ScalarDomain::integers(), a.rows(), r);
    for (std::size_t i = 0; i < r; ++i) {
        Matrix c = s.Uinv.col(i).scaled(s.D.at(i, i));
        out.set_block(0, i, c);
    }
    return out;
}

Matrix column_space_basis(const Matrix& a)
{
    Rref r = rref(a);
    Matrix out(a.domain(), a.rows(), r.rank);
    for (std::size_t t = 0; t < r.pivot_cols.size(); ++t)
        out.set_block(0, t, a.col(r.pivot_cols[t]));
    return out;
}

}  // namespace relhom
