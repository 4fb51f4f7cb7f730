#ifndef COXALG_INVARIANTS_HPP
#define COXALG_INVARIANTS_HPP

#include "coxalg/matgroup.hpp"

namespace coxalg {

// An H-invariant generator carrying its Ab(G)-eigenvalues on the chosen class
// representatives.
struct GradedGenerator {
    std::string name;
    Poly poly;
    std::vector<CycNum> character;
    long degree = 0;
};

// (1/|H|) sum_h h.f ; idempotent, convention-independent
Poly reynolds(const Poly& f, const FiniteMatrixGroup& h);

// dim C[V]^H_d for d = 0..bound
std::vector<long> molien_series(const FiniteMatrixGroup& h, long degree_bound);

// minimal homogeneous generating set of C[V]^H up to the degree bound;
// greedy in degree, echelon-canonical inside each degree. The optional ring
// names the coordinates (default x1..xn).
std::vector<Poly> invariant_generators(const FiniteMatrixGroup& h, long degree_bound,
                                       RingPtr ring = nullptr);

// Rewrites the graded span of `gens` in a basis of simultaneous eigenvectors
// of the given commuting finite-order actions (coset representatives of an
// abelian quotient). Characters are recorded on `reps`.
std::vector<GradedGenerator> split_eigenvectors(const std::vector<Poly>& gens,
                                                const std::vector<FieldMatrix>& reps,
                                                ActionConvention conv);

struct TableCheck {
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<long> molien;          // coefficients 0..bound
    std::vector<long> subalgebra_dims; // degree-d dims of the span of table products
};

// (a) invariance + stated character of every entry, (b) every Reynolds image
// of a monomial of degree <= bound lies in the subalgebra generated by the
// table, with a witness monomial on failure, (c) per-degree dimensions match
// the Molien series.
TableCheck verify_generating_table(const std::vector<GradedGenerator>& table,
                                   const FiniteMatrixGroup& h,
                                   const std::vector<FieldMatrix>& reps, long bound,
                                   ActionConvention conv);

// degree-d monomials of the ring, descending canonical order
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, long d);

// exact incremental row space over Q(zeta), kept in reduced echelon form
class RowSpace {
public:
    explicit RowSpace(std::size_t width) : width_(width) {}
    bool add(std::vector<CycNum> v);           // true if v was independent
    bool contains(std::vector<CycNum> v) const;
    std::size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<CycNum>>& rows() const { return rows_; }

private:
    std::size_t width_;
    std::vector<std::vector<CycNum>> rows_;
    std::vector<std::size_t> pivots_;
    void reduce(std::vector<CycNum>& v) const;
};

// coordinates of a homogeneous polynomial in the monomial basis of its degree
std::vector<CycNum> poly_to_vector(const Poly& f, const std::vector<Monomial>& basis);
Poly vector_to_poly(const RingPtr& ring, const std::vector<CycNum>& v,
                    const std::vector<Monomial>& basis);

}  // namespace coxalg

#endif
