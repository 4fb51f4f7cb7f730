#ifndef COXALG_COXRING_HPP
#define COXALG_COXRING_HPP

#include "coxalg/cases.hpp"
#include "coxalg/ringmap.hpp"
#include "coxalg/valuation.hpp"

namespace coxalg {

// One generator of the synthesized Cox-ring generating set: a polynomial from
// the invariant table times a Picard-torus monomial, or a pure torus monomial
// (base 1, exponents from a Cartan row, possibly negative).
struct CoxGenerator {
    std::string name;
    Poly base;
    std::vector<long> t_exponents;
};

// A fully assembled case study.
struct CaseSpec {
    cases::StudyData data;
    FiniteMatrixGroup group;
    FiniteMatrixGroup commutator;
    std::vector<GradedGenerator> table;
    CartanData cartan;
    // per reflection class: fixed-subspace ideals of all class members,
    // pinned representative first
    std::vector<std::vector<Ideal>> fixed_ideals;
    ActionConvention convention = ActionConvention::Substitute;
    RingPtr w_ring;      // C[w..., u...]
    RingPtr kappa_ring;  // C[w...] only
};

CaseSpec build_case(const cases::StudyData& data,
                    ActionConvention conv = ActionConvention::Substitute);
CaseSpec build_case(const std::string& name);

// ideal of linear forms vanishing on ker(T - id); throws when T is not a
// symplectic reflection on the ring's coordinates
Ideal fixed_subspace_ideal(const FieldMatrix& t, const RingPtr& ring);

// Torus monomials (one per Cartan row) followed by the lifted table
// generators; throws when [G,G] contains a reflection or an exponent fails
// integrality/nonnegativity.
std::vector<CoxGenerator> synthesize_cox_generators(const CaseSpec& cs);

struct IndexCheck {
    std::size_t ab_order = 0;
    BigInt cartan_det;
    bool pass = false;
};
IndexCheck class_group_index_check(const CaseSpec& cs);

// The embedding of Spec R in affine space: source C[w...,u...], target
// C[x...][t^{+-1}] realized with shadow inverses.
RingMap embedding_map(const CaseSpec& cs);
Ideal embedding_ideal(const CaseSpec& cs, std::optional<GBLimits> limits = std::nullopt);

// kappa: C[w...] -> C[x...], w_j -> phi_j
RingMap kappa_map(const CaseSpec& cs);

struct LiftingItem {
    std::string id;
    std::string status;  // PASS / FAIL / UNASSERTED-PASS / UNASSERTED-FAIL / RESOURCE
    std::string detail;
};
struct LiftingReport {
    std::vector<LiftingItem> items;
    bool required_pass = true;  // no plain FAIL among asserted items
};

// The lemma chain behind the lifting condition, bounded at d_max:
// (1) per class, powers-vs-intersection equality up to d_max,
// (2) the intersection is generated by the printed elements of P (asserted
//     for s3/d8; reported without assertion for g4),
// (3) kappa^{-1}(∩K) = J_c + ker kappa,
// (4) bounded direct containment kappa^{-1}(∩K^d) ⊆ J_c^{(d)} + ker kappa,
//     plus the easy reverse inclusion as a separate item.
LiftingReport verify_lifting_condition(const CaseSpec& cs, long d_max,
                                       std::optional<GBLimits> limits = std::nullopt);

// Ab(G)-character of an H-invariant f homogeneous for the Cl(Y)-grading;
// nullopt when inhomogeneous; throws when f is not H-invariant
std::optional<std::vector<CycNum>> cl_y_homogeneity_check(const Poly& f, const CaseSpec& cs);

// generators of the weighted power ideal (monomials of weighted degree >= d
// in the variables with positive weight), minimal under divisibility
std::vector<Poly> weighted_power_generators(const RingPtr& ring, const std::vector<long>& weights,
                                            long d);

}  // namespace coxalg

#endif
