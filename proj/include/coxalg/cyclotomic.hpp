#ifndef COXALG_CYCLOTOMIC_HPP
#define COXALG_CYCLOTOMIC_HPP

#include <vector>

#include "coxalg/numeric.hpp"

namespace coxalg {

// The field Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1} modulo the
// N-th cyclotomic polynomial. Instances are interned per order and immutable.
class CyclotomicField {
public:
    static const CyclotomicField& get(int order);

    int order() const { return order_; }
    int degree() const { return degree_; }
    // monic Phi_N, coefficients c[0..degree], c[degree] = 1
    const std::vector<BigRat>& minpoly() const { return minpoly_; }
    // z^k reduced mod Phi_N, for k in [0, 2*degree-2]; used by multiplication
    const std::vector<std::vector<BigRat>>& power_table() const { return powers_; }

    CyclotomicField(const CyclotomicField&) = delete;
    CyclotomicField& operator=(const CyclotomicField&) = delete;

private:
    explicit CyclotomicField(int order);
    int order_;
    int degree_;
    std::vector<BigRat> minpoly_;
    std::vector<std::vector<BigRat>> powers_;
};

// An element of Q(zeta_N). A default-constructed value is the zero of an
// unspecified field and combines with any operand.
class CycNum {
public:
    CycNum() = default;
    explicit CycNum(const CyclotomicField& f) : field_(&f), c_(f.degree()) {}

    static CycNum rational(const CyclotomicField& f, const BigRat& q);
    static CycNum integer(const CyclotomicField& f, long v) { return rational(f, BigRat(v)); }
    // zeta_N^k (k may be any integer)
    static CycNum root_power(const CyclotomicField& f, long k);
    // reduce an arbitrary-length coefficient vector over powers of zeta_N
    static CycNum from_coeffs(const CyclotomicField& f, const std::vector<BigRat>& raw);

    const CyclotomicField* field() const { return field_; }
    bool is_zero() const;
    bool is_rational() const;
    bool is_one() const;
    // valid only when is_rational()
    BigRat rational_value() const;

    const std::vector<BigRat>& coeffs() const { return c_; }

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    // throws coxalg::error on division by zero
    CycNum inverse() const;
    friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    // canonical text form, e.g. "1/2", "z^2", "3*z - 1"; parseable back
    std::string str() const;
    void hash_into(Fnv1a& h) const;

private:
    const CyclotomicField* field_ = nullptr;  // nullptr means "zero, field unknown"
    std::vector<BigRat> c_;

    void adopt(const CycNum& o);
    void require_compatible(const CycNum& o) const;
};

// Euler phi and the cyclotomic polynomial are exposed for tests.
int euler_phi(int n);
std::vector<BigRat> cyclotomic_polynomial(int n);

}  // namespace coxalg

#endif
