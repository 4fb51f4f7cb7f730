#ifndef COXALG_VALUATION_HPP
#define COXALG_VALUATION_HPP

#include "coxalg/intmatrix.hpp"
#include "coxalg/invariants.hpp"
#include "coxalg/matgroup.hpp"

namespace coxalg {

// Monomial valuation attached to a finite-order operator: weights are the
// eigenvalue exponents read in canonical eigen-coordinates.
struct MonomialValuation {
    FieldMatrix source;
    long order_r = 1;
    FieldMatrix p;  // eigenvector columns, RREF-canonical per eigenspace
    FieldMatrix p_inv;
    std::vector<int> weights;  // one per eigen-coordinate, in [0, r)
};

MonomialValuation monomial_valuation(const FieldMatrix& t,
                                     ActionConvention conv = ActionConvention::Substitute);

// min over monomials of f (in eigen-coordinates) of the weighted degree;
// throws on the zero polynomial
long nu_eval(const MonomialValuation& nu, const Poly& f);

// Intersection data (E_i.C_j) with the reflection classes behind it.
struct CartanData {
    IntMatrix matrix;
    std::vector<long> class_orders;
    std::vector<FieldMatrix> class_reps;

    std::size_t size() const { return class_orders.size(); }
    // direct sum of A_n-type Cartan blocks, invertible
    bool is_sum_of_a_type_blocks() const;
    BigInt det() const { return matrix.det(); }
};

// Assemble CartanData from the reflection classes: classes whose fixed
// subspaces lie in one G-orbit share an A_k block (k = classes in the
// bundle), indexed by the powers of a cyclic generator.
CartanData cartan_from_reflections(const FiniteMatrixGroup& g);

// a_ij = dlog_{zeta_{r_i}} of the character of T_i on gen j, in [0, r_i)
std::vector<std::vector<long>> lifted_valuation(const std::vector<FieldMatrix>& class_reps,
                                                const std::vector<long>& class_orders,
                                                const std::vector<GradedGenerator>& gens,
                                                ActionConvention conv);

// (D.C_1, ..., D.C_m) = -(nu_1/r_1, ..., nu_m/r_m) * Cartan; every entry must
// come out integral, otherwise throws
std::vector<long> intersection_numbers(const std::vector<long>& nu_values,
                                       const CartanData& cartan);

// discrete log: lam = zeta_r^k with zeta_r = zeta_N^{N/r}; throws when lam is
// not an r-th root of unity
long root_dlog(const CycNum& lam, long r);

}  // namespace coxalg

#endif
