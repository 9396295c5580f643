#pragma once

#include "relhom/linalg.hpp"

namespace relhom {

/// A subquotient V/W of the free ambient module (Z^n over the integers,
/// k^n over a field), presented by spanning sets of V and of W <= V.
/// Computes the canonical group descriptor together with representative
/// vectors, one per canonical summand.
struct Subquotient {
    ScalarDomain dom;
    std::size_t ambient = 0;
    Matrix lattice;        // ambient x r basis of V (independent columns)
    Matrix rel_in_basis;   // r x s generators of W in V-coordinates
    GroupDescriptor desc;
    std::vector<Matrix> reps;  // ambient x 1, aligned with desc summands

    /// v_gens and w_gens are column-span generators; every column of w_gens
    /// must lie in the span of v_gens.
    static Subquotient of(const Matrix& v_gens, const Matrix& w_gens);

    bool contains(const Matrix& v) const;
    bool is_zero_class(const Matrix& v) const;
    bool same_class(const Matrix& a, const Matrix& b) const;

    /// Coordinates of the class of v in the canonical summands (torsion
    /// coordinates reduced into [0, d)).  v must lie in V.
    std::vector<mpq_class> class_coordinates(const Matrix& v) const;

private:
    // integers: SNF transform of rel_in_basis; fields: projection to the
    // complement coordinates
    Matrix quot_transform;
    std::vector<std::size_t> summand_index;
};

}  // namespace relhom
