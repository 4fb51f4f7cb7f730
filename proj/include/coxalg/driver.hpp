#ifndef COXALG_DRIVER_HPP
#define COXALG_DRIVER_HPP

#include "coxalg/gitfan.hpp"
#include "coxalg/report.hpp"

namespace coxalg {

// Applies limits/cache settings process-wide and returns the effective
// convention for the run.
ActionConvention apply_config(const CaseConfig& cfg);

// Full pipeline for one case study; never aborts mid-report (items carry
// RESOURCE statuses instead).
Report run_case(const std::string& name, const CaseConfig& cfg = {});

// generic synthesis for a group given only by generator matrices: closes the
// group, computes the commutator invariants, splits into eigenvectors and
// lifts by the auto-assembled Cartan data
std::vector<CoxGenerator> synthesize_from_group(const std::vector<FieldMatrix>& gens,
                                                long invariant_bound, const CaseConfig& cfg = {});

// the D8 weight system of section 5.4
WeightSystem d8_weight_system();

}  // namespace coxalg

#endif
