#include "coxalg/matrix.hpp"

#include <sstream>

namespace coxalg {

FieldMatrix FieldMatrix::identity(const CyclotomicField& f, std::size_t n) {
    FieldMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycNum::rational(f, 1);
    return m;
}

FieldMatrix FieldMatrix::from_rows(const CyclotomicField& f,
                                   const std::vector<std::vector<CycNum>>& rows) {
    if (rows.empty()) return FieldMatrix(f, 0, 0);
    FieldMatrix m(f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw error("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    if (cols_ != o.rows_) throw error("matrix dimension mismatch in product");
    FieldMatrix r(*field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const CycNum& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const CycNum& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix dimension mismatch in sum");
    FieldMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

FieldMatrix FieldMatrix::operator-() const {
    FieldMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix r(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

FieldMatrix FieldMatrix::pow(long k) const {
    if (rows_ != cols_) throw error("pow of non-square matrix");
    FieldMatrix r = identity(*field_, rows_);
    FieldMatrix b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

FieldMatrix FieldMatrix::rref(std::vector<std::size_t>* pivots) const {
    FieldMatrix m = *this;
    std::size_t r = 0;
    if (pivots) pivots->clear();
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t piv = rows_;
        for (std::size_t i = r; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
        CycNum inv = m.at(r, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, col).is_zero()) continue;
            CycNum f = m.at(i, col);
            for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        if (pivots) pivots->push_back(col);
        ++r;
    }
    return m;
}

std::size_t FieldMatrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

bool FieldMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

CycNum FieldMatrix::det() const {
    if (rows_ != cols_) throw error("det of non-square matrix");
    FieldMatrix m = *this;
    CycNum d = CycNum::rational(*field_, 1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t piv = rows_;
        for (std::size_t i = col; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv == rows_) return CycNum(*field_);
        if (piv != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        CycNum inv = m.at(col, col).inverse();
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            CycNum f = m.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

FieldMatrix FieldMatrix::inverse() const {
    if (rows_ != cols_) throw error("inverse of non-square matrix");
    FieldMatrix aug(*field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = CycNum::rational(*field_, 1);
    }
    std::vector<std::size_t> piv;
    FieldMatrix red = aug.rref(&piv);
    if (piv.size() != rows_ || piv.back() >= cols_) throw error("matrix is singular");
    FieldMatrix inv(*field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = red.at(i, cols_ + j);
    return inv;
}

std::vector<std::vector<CycNum>> FieldMatrix::kernel_basis() const {
    std::vector<std::size_t> piv;
    FieldMatrix red = rref(&piv);
    std::vector<bool> is_piv(cols_, false);
    for (std::size_t c : piv) is_piv[c] = true;
    std::vector<std::vector<CycNum>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_piv[free]) continue;
        std::vector<CycNum> v(cols_, CycNum(*field_));
        v[free] = CycNum::rational(*field_, 1);
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -red.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

long FieldMatrix::multiplicative_order(long bound) const {
    if (rows_ != cols_) throw error("order of non-square matrix");
    FieldMatrix p = *this;
    for (long k = 1; k <= bound; ++k) {
        if (p.is_identity()) return k;
        p = p * *this;
    }
    throw error("matrix order exceeds bound");
}

void FieldMatrix::hash_into(Fnv1a& h) const {
    h.feed(static_cast<std::int64_t>(rows_));
    h.feed(static_cast<std::int64_t>(cols_));
    for (const auto& x : a_) x.hash_into(h);
}

std::string FieldMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]\n";
    }
    return os.str();
}

std::vector<CycNum> solve_linear(const FieldMatrix& M, const std::vector<CycNum>& rhs) {
    if (M.rows() != rhs.size()) throw error("solve: dimension mismatch");
    FieldMatrix aug(M.field(), M.rows(), M.cols() + 1);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) aug.at(i, j) = M.at(i, j);
        aug.at(i, M.cols()) = rhs[i];
    }
    std::vector<std::size_t> piv;
    FieldMatrix red = aug.rref(&piv);
    if (piv.size() != M.cols() || (piv.size() && piv.back() >= M.cols()))
        throw error("solve: system is singular or inconsistent");
    std::vector<CycNum> x(M.cols(), CycNum(M.field()));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = red.at(r, M.cols());
    return x;
}

Diagonalization diagonalize_finite_order(const FieldMatrix& m, long r) {
    const CyclotomicField& f = m.field();
    if (r < 1) throw error("order must be positive");
    if (f.order() % r != 0)
        throw error("order-incompatibility: " + std::to_string(r) + " does not divide N=" +
                    std::to_string(f.order()));
    if (!m.pow(r).is_identity()) throw error("matrix does not have finite order dividing r");
    std::size_t n = m.rows();
    Diagonalization d;
    d.order_r = static_cast<int>(r);
    d.p = FieldMatrix(f, n, n);
    std::size_t col = 0;
    for (long k = 0; k < r; ++k) {
        CycNum lam = CycNum::root_power(f, k * (f.order() / r));
        FieldMatrix shifted = m;
        for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) -= lam;
        for (const auto& v : shifted.kernel_basis()) {
            if (col >= n) throw error("too many eigenvectors");
            for (std::size_t i = 0; i < n; ++i) d.p.at(i, col) = v[i];
            d.exponents.push_back(static_cast<int>(k));
            ++col;
        }
    }
    if (col != n) throw error("matrix is not diagonalizable over the session field");
    d.p_inv = d.p.inverse();
    return d;
}

}  // namespace coxalg
