#ifndef COXALG_INTMATRIX_HPP
#define COXALG_INTMATRIX_HPP

#include <vector>

#include "coxalg/numeric.hpp"

namespace coxalg {

// Dense matrix over Z (arbitrary precision).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const;
    IntMatrix transpose() const;
    BigInt det() const;  // fraction-free (Bareiss)

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

// U*A*V = D with U, V unimodular and D diagonal, d1 | d2 | ... (nonnegative).
struct SmithForm {
    IntMatrix u, d, v;
    std::vector<BigInt> invariant_factors;  // the nonzero diagonal entries
};
SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace coxalg

#endif
