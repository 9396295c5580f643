#include "relhom/matrix.hpp"

#include <sstream>

namespace relhom {

ScalarDomain ScalarDomain::prime_field(unsigned long p)
{
    check(p >= 2, "prime_field: modulus must be at least 2");
    for (unsigned long d = 2; d * d <= p; ++d)
        check(p % d != 0, "prime_field: modulus must be prime");
    return {DomainKind::PrimeField, p};
}

std::string ScalarDomain::str() const
{
    switch (kind) {
        case DomainKind::Rationals: return "Q";
        case DomainKind::Integers: return "Z";
        case DomainKind::PrimeField: return "F" + std::to_string(p);
    }
    return "?";
}

mpq_class s_canon(const ScalarDomain& dom, const mpq_class& v)
{
    mpq_class r = v;
    r.canonicalize();
    if (dom.kind == DomainKind::PrimeField) {
        check(r.get_den() == 1, "scalar has a denominator in F_p");
        mpz_class m = r.get_num() % static_cast<long>(dom.p);
        if (m < 0)
            m += static_cast<long>(dom.p);
        return mpq_class(m);
    }
    if (dom.kind == DomainKind::Integers)
        check(r.get_den() == 1, "scalar has a denominator in Z");
    return r;
}

bool s_in_domain(const ScalarDomain& dom, const mpq_class& v)
{
    if (dom.kind == DomainKind::Rationals)
        return true;
    mpq_class r = v;
    r.canonicalize();
    if (r.get_den() != 1)
        return false;
    if (dom.kind == DomainKind::PrimeField)
        return r.get_num() >= 0 && r.get_num() < static_cast<long>(dom.p);
    return true;
}

mpq_class s_add(const ScalarDomain& dom, const mpq_class& a, const mpq_class& b)
{
    return s_canon(dom, a + b);
}

mpq_class s_sub(const ScalarDomain& dom, const mpq_class& a, const mpq_class& b)
{
    return s_canon(dom, a - b);
}

mpq_class s_mul(const ScalarDomain& dom, const mpq_class& a, const mpq_class& b)
{
    return s_canon(dom, a * b);
}

mpq_class s_neg(const ScalarDomain& dom, const mpq_class& a)
{
    return s_canon(dom, -a);
}

mpq_class s_inv(const ScalarDomain& dom, const mpq_class& a)
{
    check(dom.is_field(), "inverse requested over Z");
    check(a != 0, "inverse of zero");
    if (dom.kind == DomainKind::Rationals)
        return mpq_class(1) / a;
    mpz_class inv;
    mpz_class m(static_cast<long>(dom.p));
    int ok = mpz_invert(inv.get_mpz_t(), a.get_num().get_mpz_t(), m.get_mpz_t());
    check(ok != 0, "no inverse mod p");
    return s_canon(dom, mpq_class(inv));
}

mpq_class s_div(const ScalarDomain& dom, const mpq_class& a, const mpq_class& b)
{
    return s_mul(dom, a, s_inv(dom, b));
}

std::string s_str(const mpq_class& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

mpq_class s_parse(const std::string& text)
{
    mpq_class q;
    check(q.set_str(text, 10) == 0, "bad scalar literal: " + text);
    q.canonicalize();
    return q;
}

Matrix Matrix::identity(ScalarDomain dom, std::size_t n)
{
    Matrix m(dom, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(ScalarDomain dom,
                         const std::vector<std::vector<mpq_class>>& rows)
{
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(dom, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        check(rows[i].size() == c, "ragged row list");
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_ints(ScalarDomain dom,
                         const std::vector<std::vector<long>>& rows)
{
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(dom, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        check(rows[i].size() == c, "ragged row list");
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, mpq_class(rows[i][j]));
    }
    return m;
}

Matrix Matrix::diagonal(ScalarDomain dom, const std::vector<mpq_class>& d)
{
    Matrix m(dom, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m.set(i, i, d[i]);
    return m;
}

Matrix Matrix::column(ScalarDomain dom, const std::vector<mpq_class>& v)
{
    Matrix m(dom, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m.set(i, 0, v[i]);
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(dom_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    check(dom_ == rhs.dom_, "matrix product: domain mismatch");
    check(cols_ == rhs.rows_, "matrix product: dimension mismatch");
    Matrix out(dom_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpq_class& a = data_[i * cols_ + k];
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const mpq_class& b = rhs.data_[k * rhs.cols_ + j];
                if (b != 0)
                    out.data_[i * rhs.cols_ + j] += a * b;
            }
        }
    for (auto& v : out.data_)
        v = s_canon(dom_, v);
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    check(dom_ == rhs.dom_ && rows_ == rhs.rows_ && cols_ == rhs.cols_,
          "matrix sum: shape mismatch");
    Matrix out(dom_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = s_canon(dom_, data_[i] + rhs.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
    check(dom_ == rhs.dom_ && rows_ == rhs.rows_ && cols_ == rhs.cols_,
          "matrix difference: shape mismatch");
    Matrix out(dom_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = s_canon(dom_, data_[i] - rhs.data_[i]);
    return out;
}

Matrix Matrix::operator-() const
{
    Matrix out(dom_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = s_canon(dom_, -data_[i]);
    return out;
}

Matrix Matrix::scaled(const mpq_class& c) const
{
    Matrix out(dom_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = s_canon(dom_, data_[i] * c);
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const
{
    return dom_ == rhs.dom_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           data_ == rhs.data_;
}

bool Matrix::is_zero() const
{
    for (const auto& v : data_)
        if (v != 0)
            return false;
    return true;
}

bool Matrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

Matrix Matrix::submatrix(std::size_t i0, std::size_t j0, std::size_t r,
                         std::size_t c) const
{
    check(i0 + r <= rows_ && j0 + c <= cols_, "submatrix out of range");
    Matrix out(dom_, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            out.data_[i * c + j] = data_[(i0 + i) * cols_ + (j0 + j)];
    return out;
}

void Matrix::set_block(std::size_t i0, std::size_t j0, const Matrix& b)
{
    check(i0 + b.rows_ <= rows_ && j0 + b.cols_ <= cols_,
          "set_block out of range");
    check(dom_ == b.dom_, "set_block: domain mismatch");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            data_[(i0 + i) * cols_ + (j0 + j)] = b.data_[i * b.cols_ + j];
}

Matrix Matrix::cast_to(ScalarDomain dom) const
{
    Matrix out(dom, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.set(i, j, data_[i * cols_ + j]);
    return out;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " over " << dom_.str() << " [";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? "," : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b)
{
    check(a.domain() == b.domain() && a.rows() == b.rows(),
          "hstack: shape mismatch");
    Matrix out(a.domain(), a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b)
{
    check(a.domain() == b.domain() && a.cols() == b.cols(),
          "vstack: shape mismatch");
    Matrix out(a.domain(), a.rows() + b.rows(), a.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b)
{
    check(a.domain() == b.domain(), "block_diag: domain mismatch");
    Matrix out(a.domain(), a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    check(a.domain() == b.domain(), "kron: domain mismatch");
    Matrix out(a.domain(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out.set(i * b.rows() + k, j * b.cols() + l,
                            a.at(i, j) * b.at(k, l));
        }
    return out;
}

Matrix vec_rm(const Matrix& g)
{
    Matrix out(g.domain(), g.rows() * g.cols(), 1);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            out.set(i * g.cols() + j, 0, g.at(i, j));
    return out;
}

Matrix unvec_rm(const Matrix& v, std::size_t rows, std::size_t cols,
                const ScalarDomain& dom)
{
    check(v.rows() == rows * cols && v.cols() == 1, "unvec_rm: shape mismatch");
    Matrix out(dom, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out.set(i, j, v.at(i * cols + j, 0));
    return out;
}

}  // namespace relhom
