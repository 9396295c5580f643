#pragma once

#include "relhom/linalg.hpp"

#include <optional>

namespace relhom {

/// Assembles block linear systems whose unknowns are matrices.  Equations
/// have the shape  sum_t  scale_t * L_t * X_{v_t} * R_t = RHS, flattened
/// row-major so that a term contributes kron(L, R^T) columns.
class SystemBuilder {
public:
    explicit SystemBuilder(ScalarDomain dom) : dom_(dom) {}

    int add_var(std::size_t rows, std::size_t cols);
    int add_equation(std::size_t rows, std::size_t cols);
    void set_rhs(int eq, const Matrix& rhs);

    /// Adds scale * L * X_v * R to equation eq.
    void add_term(int eq, const Matrix& left, int var, const Matrix& right,
                  const mpq_class& scale = 1);
    void add_term_left(int eq, const Matrix& left, int var,
                       const mpq_class& scale = 1);
    void add_term_right(int eq, int var, const Matrix& right,
                        const mpq_class& scale = 1);
    void add_term_id(int eq, int var, const mpq_class& scale = 1);

    std::size_t var_count() const { return var_cols_; }
    std::pair<std::size_t, std::size_t> var_shape(int var) const;

    Matrix coefficient_matrix() const;
    Matrix rhs_column() const;

    /// One exact solution, split back into the matrix unknowns.
    std::optional<std::vector<Matrix>> solve_all() const;
    /// Basis of homogeneous solutions (columns of length var_count()).
    Matrix kernel() const;
    /// Unflattens the segment of var from a stacked coordinate column.
    Matrix extract(const Matrix& flat, int var) const;
    /// Flattens per-var matrices into one stacked coordinate column.
    Matrix flatten(const std::vector<Matrix>& values) const;

private:
    struct Var {
        std::size_t rows, cols, offset;
    };
    struct Eq {
        std::size_t rows, cols, offset;
        Matrix rhs;
    };
    struct Term {
        int eq, var;
        Matrix left, right;
        mpq_class scale;
        bool has_left, has_right;
    };
    ScalarDomain dom_;
    std::vector<Var> vars_;
    std::vector<Eq> eqs_;
    std::vector<Term> terms_;
    std::size_t var_cols_ = 0;
    std::size_t eq_rows_ = 0;
};

}  // namespace relhom
