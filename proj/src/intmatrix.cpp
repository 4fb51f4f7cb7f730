#include "coxalg/intmatrix.hpp"

#include <sstream>

namespace coxalg {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw error("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw error("matrix dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

BigInt IntMatrix::det() const {
    if (rows_ != cols_) throw error("det of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { piv = i; break; }
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
        os << "]\n";
    }
    return os.str();
}

SmithForm smith_normal_form(const IntMatrix& a) {
    std::size_t m = a.rows(), n = a.cols();
    SmithForm s;
    s.d = a;
    s.u = IntMatrix::identity(m);
    s.v = IntMatrix::identity(n);
    IntMatrix& D = s.d;
    IntMatrix& U = s.u;
    IntMatrix& V = s.v;

    auto row_op = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t j = 0; j < n; ++j) D.at(dst, j) -= f * D.at(src, j);
        for (std::size_t j = 0; j < m; ++j) U.at(dst, j) -= f * U.at(src, j);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const BigInt& f) {
        for (std::size_t i = 0; i < m; ++i) D.at(i, dst) -= f * D.at(i, src);
        for (std::size_t i = 0; i < n; ++i) V.at(i, dst) -= f * V.at(i, src);
    };
    auto row_swap = [&](std::size_t i1, std::size_t i2) {
        if (i1 == i2) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(D.at(i1, j), D.at(i2, j));
        for (std::size_t j = 0; j < m; ++j) std::swap(U.at(i1, j), U.at(i2, j));
    };
    auto col_swap = [&](std::size_t j1, std::size_t j2) {
        if (j1 == j2) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(D.at(i, j1), D.at(i, j2));
        for (std::size_t i = 0; i < n; ++i) std::swap(V.at(i, j1), V.at(i, j2));
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) D.at(i, j) = -D.at(i, j);
        for (std::size_t j = 0; j < m; ++j) U.at(i, j) = -U.at(i, j);
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // find smallest-abs nonzero pivot in the remaining block
        std::size_t pi = m, pj = n;
        BigInt best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (D.at(i, j) == 0) continue;
                BigInt v = abs(D.at(i, j));
                if (best == 0 || v < best) { best = v; pi = i; pj = j; }
            }
        if (pi == m) break;  // block is zero
        row_swap(t, pi);
        col_swap(t, pj);
        if (D.at(t, t) < 0) row_negate(t);
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
            if (D.at(i, t) == 0) continue;
            BigInt q = D.at(i, t) / D.at(t, t);  // truncated is fine, loop re-runs
            if (q != 0) row_op(i, t, q);
            if (D.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (D.at(t, j) == 0) continue;
            BigInt q = D.at(t, j) / D.at(t, t);
            if (q != 0) col_op(j, t, q);
            if (D.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // repeat with a smaller pivot now present
        // divisibility pass: pivot must divide the rest of the block
        bool divides_all = true;
        for (std::size_t i = t + 1; i < m && divides_all; ++i)
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D.at(i, j) % D.at(t, t) != 0) {
                    // fold row i into row t, creating a smaller pivot candidate
                    BigInt one = 1;
                    for (std::size_t jj = 0; jj < n; ++jj) D.at(t, jj) += D.at(i, jj);
                    for (std::size_t jj = 0; jj < m; ++jj) U.at(t, jj) += U.at(i, jj);
                    (void)one;
                    divides_all = false;
                    break;
                }
            }
        if (divides_all) ++t;
    }
    for (std::size_t k = 0; k < std::min(m, n); ++k)
        if (D.at(k, k) != 0) s.invariant_factors.push_back(D.at(k, k));
    return s;
}

}  // namespace coxalg
