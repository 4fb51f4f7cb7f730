#ifndef COXALG_MATRIX_HPP
#define COXALG_MATRIX_HPP

#include <vector>

#include "coxalg/cyclotomic.hpp"

namespace coxalg {

// Dense matrix over Q(zeta_N).
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(const CyclotomicField& f, std::size_t rows, std::size_t cols)
        : field_(&f), rows_(rows), cols_(cols), a_(rows * cols, CycNum(f)) {}
    static FieldMatrix identity(const CyclotomicField& f, std::size_t n);
    static FieldMatrix from_rows(const CyclotomicField& f,
                                 const std::vector<std::vector<CycNum>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const CyclotomicField& field() const { return *field_; }
    CycNum& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const CycNum& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix operator-() const;
    bool operator==(const FieldMatrix& o) const;
    bool operator!=(const FieldMatrix& o) const { return !(*this == o); }
    FieldMatrix transpose() const;
    FieldMatrix pow(long k) const;  // k >= 0

    CycNum det() const;
    // throws coxalg::error when singular
    FieldMatrix inverse() const;
    std::size_t rank() const;
    bool is_identity() const;

    // reduced row echelon form (in place copy); returns pivot columns
    FieldMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    // basis of the right kernel, each vector canonical (from RREF free columns)
    std::vector<std::vector<CycNum>> kernel_basis() const;

    // multiplicative order, or throws after `bound` iterations
    long multiplicative_order(long bound = 4096) const;

    void hash_into(Fnv1a& h) const;
    std::string str() const;

private:
    const CyclotomicField* field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<CycNum> a_;
};

// Solve M*x = rhs (unique solution required: M square invertible).
std::vector<CycNum> solve_linear(const FieldMatrix& M, const std::vector<CycNum>& rhs);

// Diagonalization of a finite-order operator: M = P * diag(zeta_r^{a_i}) * P^{-1}
// with 0 <= a_i < r; eigenvalue exponents sorted ascending, eigenvectors the
// RREF bases of the eigenspaces (canonical).
struct Diagonalization {
    FieldMatrix p;        // eigenvector columns
    FieldMatrix p_inv;
    std::vector<int> exponents;  // one per column, in [0, r)
    int order_r = 1;
};
// requires M^r = id and r | N (field order); throws otherwise
Diagonalization diagonalize_finite_order(const FieldMatrix& m, long r);

}  // namespace coxalg

#endif
