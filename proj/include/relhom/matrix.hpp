#pragma once

#include "relhom/scalar.hpp"

#include <cstddef>
#include <vector>

namespace relhom {

/// Dense exact matrix over one of the three scalar domains.
/// Entries are stored row-major and kept in canonical form.
class Matrix {
public:
    Matrix() : dom_(ScalarDomain::rationals()), rows_(0), cols_(0) {}
    Matrix(ScalarDomain dom, std::size_t rows, std::size_t cols)
        : dom_(dom), rows_(rows), cols_(cols), data_(rows * cols, mpq_class(0))
    {
    }

    static Matrix identity(ScalarDomain dom, std::size_t n);
    static Matrix from_rows(ScalarDomain dom,
                            const std::vector<std::vector<mpq_class>>& rows);
    static Matrix from_ints(ScalarDomain dom,
                            const std::vector<std::vector<long>>& rows);
    static Matrix diagonal(ScalarDomain dom, const std::vector<mpq_class>& d);
    static Matrix column(ScalarDomain dom, const std::vector<mpq_class>& v);

    const ScalarDomain& domain() const { return dom_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

    const mpq_class& at(std::size_t i, std::size_t j) const
    {
        return data_[i * cols_ + j];
    }
    void set(std::size_t i, std::size_t j, const mpq_class& v)
    {
        data_[i * cols_ + j] = s_canon(dom_, v);
    }

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const mpq_class& c) const;
    bool operator==(const Matrix& rhs) const;
    bool is_zero() const;
    bool is_identity() const;

    Matrix submatrix(std::size_t i0, std::size_t j0, std::size_t r,
                     std::size_t c) const;
    void set_block(std::size_t i0, std::size_t j0, const Matrix& b);
    Matrix col(std::size_t j) const { return submatrix(0, j, rows_, 1); }
    Matrix row(std::size_t i) const { return submatrix(i, 0, 1, cols_); }

    /// Reinterpret the same entries over another domain (entries must lie in it).
    Matrix cast_to(ScalarDomain dom) const;

    std::string str() const;

private:
    ScalarDomain dom_;
    std::size_t rows_, cols_;
    std::vector<mpq_class> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

/// Row-major flattening of a matrix into a single column, so that
/// vec_rm(A*G*B) = kron(A, B.transpose()) * vec_rm(G).
Matrix vec_rm(const Matrix& g);
Matrix unvec_rm(const Matrix& v, std::size_t rows, std::size_t cols,
                const ScalarDomain& dom);

}  // namespace relhom
