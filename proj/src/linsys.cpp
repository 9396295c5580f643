#include "relhom/linsys.hpp"

#include <cassert>

namespace relhom {

int SystemBuilder::add_var(std::size_t rows, std::size_t cols)
{
    vars_.push_back({rows, cols, var_cols_});
    var_cols_ += rows * cols;
    return static_cast<int>(vars_.size()) - 1;
}

int SystemBuilder::add_equation(std::size_t rows, std::size_t cols)
{
    eqs_.push_back({rows, cols, eq_rows_, Matrix(dom_, rows, cols)});
    eq_rows_ += rows * cols;
    return static_cast<int>(eqs_.size()) - 1;
}

void SystemBuilder::set_rhs(int eq, const Matrix& rhs)
{
    check(rhs.rows() == eqs_[eq].rows && rhs.cols() == eqs_[eq].cols,
          "set_rhs: shape mismatch");
    eqs_[eq].rhs = rhs;
}

void SystemBuilder::add_term(int eq, const Matrix& left, int var,
                             const Matrix& right, const mpq_class& scale)
{
    check(left.rows() == eqs_[eq].rows && left.cols() == vars_[var].rows &&
              right.rows() == vars_[var].cols && right.cols() == eqs_[eq].cols,
          "add_term: shape mismatch");
    terms_.push_back({eq, var, left, right, scale, true, true});
}

void SystemBuilder::add_term_left(int eq, const Matrix& left, int var,
                                  const mpq_class& scale)
{
    check(left.rows() == eqs_[eq].rows && left.cols() == vars_[var].rows &&
              vars_[var].cols == eqs_[eq].cols,
          "add_term_left: shape mismatch");
    terms_.push_back({eq, var, left, Matrix(), scale, true, false});
}

void SystemBuilder::add_term_right(int eq, int var, const Matrix& right,
                                   const mpq_class& scale)
{
    check(vars_[var].rows == eqs_[eq].rows && right.rows() == vars_[var].cols &&
              right.cols() == eqs_[eq].cols,
          "add_term_right: shape mismatch");
    terms_.push_back({eq, var, Matrix(), right, scale, false, true});
}

void SystemBuilder::add_term_id(int eq, int var, const mpq_class& scale)
{
    check(vars_[var].rows == eqs_[eq].rows && vars_[var].cols == eqs_[eq].cols,
          "add_term_id: shape mismatch");
    terms_.push_back({eq, var, Matrix(), Matrix(), scale, false, false});
}

std::pair<std::size_t, std::size_t> SystemBuilder::var_shape(int var) const
{
    return {vars_[var].rows, vars_[var].cols};
}

Matrix SystemBuilder::coefficient_matrix() const
{
    Matrix m(dom_, eq_rows_, var_cols_);
    for (const auto& t : terms_) {
        const Var& v = vars_[t.var];
        const Eq& e = eqs_[t.eq];
        Matrix left = t.has_left
                          ? t.left
                          : Matrix::identity(dom_, v.rows);
        Matrix right = t.has_right
                           ? t.right
                           : Matrix::identity(dom_, v.cols);
        Matrix block = kron(left, right.transpose()).scaled(t.scale);
        // accumulate
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
                if (block.at(i, j) != 0)
                    m.set(e.offset + i, v.offset + j,
                          s_add(dom_, m.at(e.offset + i, v.offset + j),
                                block.at(i, j)));
    }
    return m;
}

Matrix SystemBuilder::rhs_column() const
{
    Matrix b(dom_, eq_rows_, 1);
    for (const auto& e : eqs_)
        b.set_block(e.offset, 0, vec_rm(e.rhs));
    return b;
}

std::optional<std::vector<Matrix>> SystemBuilder::solve_all() const
{
    auto x = solve(coefficient_matrix(), rhs_column());
    if (!x)
        return std::nullopt;
    std::vector<Matrix> out;
    for (std::size_t v = 0; v < vars_.size(); ++v)
        out.push_back(extract(*x, static_cast<int>(v)));
    return out;
}

Matrix SystemBuilder::kernel() const
{
    return kernel_basis(coefficient_matrix());
}

Matrix SystemBuilder::extract(const Matrix& flat, int var) const
{
    const Var& v = vars_[var];
    Matrix seg = flat.submatrix(v.offset, 0, v.rows * v.cols, 1);
    return unvec_rm(seg, v.rows, v.cols, dom_);
}

Matrix SystemBuilder::flatten(const std::vector<Matrix>& values) const
{
    check(values.size() == vars_.size(), "flatten: value count mismatch");
    Matrix out(dom_, var_cols_, 1);
    for (std::size_t v = 0; v < vars_.size(); ++v)
        out.set_block(vars_[v].offset, 0, vec_rm(values[v]));
    return out;
}

}  // namespace relhom
