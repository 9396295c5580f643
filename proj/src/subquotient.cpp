#include "relhom/subquotient.hpp"

#include <cassert>

namespace relhom {

Subquotient Subquotient::of(const Matrix& v_gens, const Matrix& w_gens)
{
    check(v_gens.domain() == w_gens.domain(), "subquotient: domain mismatch");
    check(v_gens.rows() == w_gens.rows(), "subquotient: ambient mismatch");
    Subquotient q;
    q.dom = v_gens.domain();
    q.ambient = v_gens.rows();
    q.lattice = q.dom.is_field() ? column_space_basis(v_gens)
                                 : column_lattice_basis(v_gens);
    auto coords = solve(q.lattice, w_gens);
    check(coords.has_value(), "subquotient: W is not contained in V");
    q.rel_in_basis = *coords;
    const std::size_t r = q.lattice.cols();

    if (q.dom.is_field()) {
        // Complement of span(rel) inside the chosen basis of V: greedily
        // extend the relation columns by coordinate vectors.
        Rref probe = rref(hstack(q.rel_in_basis, Matrix::identity(q.dom, r)));
        std::vector<std::size_t> comp;
        for (std::size_t c : probe.pivot_cols)
            if (c >= q.rel_in_basis.cols())
                comp.push_back(c - q.rel_in_basis.cols());
        q.desc = GroupDescriptor::field(comp.size());
        for (std::size_t i : comp) {
            q.reps.push_back(q.lattice.col(i));
            q.summand_index.push_back(i);
        }
        // Projection onto the complement coordinates: bottom block of the
        // inverse of [basis(rel) | complement].
        Matrix rel_basis = column_space_basis(q.rel_in_basis);
        Matrix full(q.dom, r, r);
        full.set_block(0, 0, rel_basis);
        for (std::size_t t = 0; t < comp.size(); ++t) {
            Matrix e(q.dom, r, 1);
            e.set(comp[t], 0, 1);
            full.set_block(0, rel_basis.cols() + t, e);
        }
        auto inv = solve(full, Matrix::identity(q.dom, r));
        assert(inv.has_value());
        q.quot_transform =
            inv->submatrix(rel_basis.cols(), 0, comp.size(), r);
        return q;
    }

    SmithForm s = smith_normal_form(q.rel_in_basis);
    std::vector<mpz_class> diag = s.diagonal();
    std::vector<mpz_class> factors;
    for (std::size_t i = 0; i < r; ++i) {
        mpz_class d = i < diag.size() ? diag[i] : mpz_class(0);
        if (d == 1)
            continue;
        factors.push_back(d);
        q.summand_index.push_back(i);
        q.reps.push_back(q.lattice * s.Uinv.col(i));
    }
    q.desc = GroupDescriptor::abelian(factors);
    q.quot_transform = s.U;
    // The SNF diagonal is already a divisibility chain, so canonicalization
    // keeps the order and reps stay aligned with the descriptor.
    assert(q.desc.invariant_factors.size() == q.reps.size());
    return q;
}

bool Subquotient::contains(const Matrix& v) const
{
    return solve(lattice, v).has_value();
}

bool Subquotient::is_zero_class(const Matrix& v) const
{
    auto x = solve(lattice, v);
    if (!x)
        return false;
    return solve(rel_in_basis, *x).has_value();
}

bool Subquotient::same_class(const Matrix& a, const Matrix& b) const
{
    return is_zero_class(a - b);
}

std::vector<mpq_class> Subquotient::class_coordinates(const Matrix& v) const
{
    auto x = solve(lattice, v);
    check(x.has_value(), "class_coordinates: vector outside V");
    Matrix c = quot_transform * *x;
    std::vector<mpq_class> out;
    if (dom.is_field()) {
        for (std::size_t i = 0; i < c.rows(); ++i)
            out.push_back(c.at(i, 0));
        return out;
    }
    for (std::size_t k = 0; k < summand_index.size(); ++k) {
        mpz_class val = c.at(summand_index[k], 0).get_num();
        const mpz_class& d = desc.invariant_factors[k];
        if (d != 0) {
            val %= d;
            if (val < 0)
                val += d;
        }
        out.push_back(mpq_class(val));
    }
    return out;
}

}  // namespace relhom
