#ifndef COXALG_CASES_HPP
#define COXALG_CASES_HPP

#include "coxalg/matgroup.hpp"
#include "coxalg/groebner.hpp"

namespace coxalg::cases {

// One generator of the commutator-invariant ring, with its stated
// Ab(G)-character as exponents of the fixed primitive roots zeta_{r_i} on the
// pinned class representatives.
struct TableEntry {
    std::string wname;
    Poly poly;
    std::vector<int> char_exps;  // one per reflection class
};

// Everything a case study pins down before any computation: the matrix group,
// reflection-class representatives compatible with the printed fixed-space
// ideals, the generator table, Cartan matrix, and variable naming.
struct StudyData {
    std::string name;
    RingPtr ring;  // coordinate ring of V
    std::vector<FieldMatrix> group_generators;
    std::vector<FieldMatrix> class_reps;
    std::vector<long> class_orders;
    std::vector<std::vector<long>> cartan;
    std::vector<TableEntry> table;
    std::vector<std::string> u_names;  // one per exceptional divisor
    std::vector<std::string> t_names;

    RingPtr w_ring() const;  // C[w..., u...]
    std::vector<std::string> w_names() const;
};

StudyData s3();
StudyData d8();
StudyData g4();

const StudyData& study(const std::string& name);  // by case id

// D8 extras printed in the paper ------------------------------------------

// the 20 generators of ker Psi, in the paper's listing order
std::vector<Poly> d8_kernel_generators(const RingPtr& wring);

// claimed central-fiber components W_u, W_02, W_0, W_2 (in that order)
std::vector<Ideal> d8_central_components(const RingPtr& wring);

// Picard-torus weights on the w-ring variables and the linearization (2,1)
std::vector<std::vector<long>> d8_torus_weights();
std::vector<long> d8_chi();

// toric data for the W_02 component
std::vector<std::vector<long>> d8_sigma_rays();       // five rays in Z^4
std::vector<std::vector<long>> d8_quotient_projection();  // 2x4 lattice map
std::vector<std::vector<long>> d8_printed_fan_rays();  // as printed (known discrepancy)
// W_02 in the 7 coordinates (w02,w01,w03,w04,w12,w23,w24) after the
// substitution that makes it binomial; the six binomials
std::vector<Poly> d8_w02_binomials(const RingPtr& ring7);
std::vector<std::string> d8_w02_coordinates();
// complements of the stable locus inside W_02 (ideals in the 7 coordinates)
std::vector<Ideal> d8_w02_removed_orbits(const RingPtr& ring7);

// S3 extras ---------------------------------------------------------------

// printed generators of K ∩ K' ∩ K'' (elements of P)
std::vector<Poly> s3_intersection_generators(const RingPtr& xring);

// printed generators of K_i ∩ K_i' for D8, class index 0 or 1 (i.e. 0 or 2)
std::vector<Poly> d8_intersection_generators(const RingPtr& xring, int cls);

}  // namespace coxalg::cases

#endif
