#pragma once

#include "relhom/matrix.hpp"

#include <optional>

namespace relhom {

/// Canonical description of a computed abelian group: either a vector-space
/// dimension over the ambient field, or the invariant factors over Z
/// (factors > 1 in divisibility order, one 0 per free summand).
struct GroupDescriptor {
    bool over_field = false;
    std::size_t field_dim = 0;
    std::vector<mpz_class> invariant_factors;

    static GroupDescriptor field(std::size_t dim);
    /// Canonicalizes an arbitrary list of cyclic orders (0 = free summand),
    /// so that e.g. [2,3] and [6] describe the same group.
    static GroupDescriptor abelian(const std::vector<mpz_class>& factors);
    static GroupDescriptor trivial_group() { return abelian({}); }

    bool is_trivial() const;
    std::size_t free_rank() const;
    /// Total number of elements for finite groups; nullopt when infinite
    /// or when the descriptor is a field dimension.
    std::optional<mpz_class> order() const;

    bool operator==(const GroupDescriptor&) const = default;
    std::string str() const;
};

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Reduced row echelon form over a field; pivots are the first nonzero
/// entries in column order, so the output is deterministic.
Rref rref(const Matrix& a);

std::size_t rank(const Matrix& a);  // over Q for integer input

struct SmithForm {
    Matrix input;  // provenance
    Matrix U, V, D;
    Matrix Uinv, Vinv;
    std::vector<mpz_class> diagonal() const;
    std::size_t rank() const;
};

/// U*A*V = D with U, V unimodular and D diagonal with d1 | d2 | ... , di >= 0.
/// Pivoting always picks the entry of least absolute value (ties: smallest
/// row, then column), which keeps intermediate entries modest; entries are
/// arbitrary-precision so growth is harmless either way.
SmithForm smith_normal_form(const Matrix& a);

/// Columns form a basis of ker(a); over Z a lattice basis of the integer
/// kernel.  Zero columns never appear; the result may have zero width.
Matrix kernel_basis(const Matrix& a);

/// Exact solution of a*X = b over the matrix domain (over Z: integer
/// solutions only); nullopt when none exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Invariant factors of coker(a : Z^cols -> Z^rows).
GroupDescriptor cokernel_invariants(const Matrix& a);

/// Exact determinant of a square integer matrix (fraction-free elimination).
mpz_class det_integer(const Matrix& a);

/// Lattice basis of the column span of an integer matrix (independent columns).
Matrix column_lattice_basis(const Matrix& a);

/// Basis of the column space over a field (the pivot columns of a).
Matrix column_space_basis(const Matrix& a);

}  // namespace relhom
