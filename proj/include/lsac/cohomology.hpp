#ifndef LSAC_COHOMOLOGY_HPP
#define LSAC_COHOMOLOGY_HPP

#include <vector>

#include "lsac/cochain.hpp"
#include "lsac/lingb.hpp"

namespace lsac {

/// The linear system cutting out the cocycles Z^k inside C^k: one equation
/// per canonical (k+1)-tuple and target, in the canonical phi variables.
/// Zero and duplicate equations are retained; reduce() deduplicates.
struct CocycleSystem {
  std::vector<CochainIndex> variables;  // canonical order; position i <-> variables[i]
  std::vector<LinearForm> equations;    // n*C(m,k+1) forms over those positions
};

/// The coboundary system before and after psi elimination. Equations live in
/// the combined order [psi block > phi block]: psi_j at position j, phi_i at
/// position |psi| + i. The eliminated basis is re-based to phi positions.
struct CoboundarySystem {
  std::vector<CochainIndex> phi_variables;
  std::vector<CochainIndex> psi_variables;
  std::vector<LinearForm> equations;
  ReducedLinearBasis eliminated;
};

struct CohomologyResult {
  int degree = 0;
  long long dim_c = 0;
  int dim_z = 0;
  int dim_b = 0;
  int dim_h = 0;
  std::vector<Cochain<Rational>> basis_z;
  std::vector<Cochain<Rational>> basis_b;
  std::vector<Cochain<Rational>> basis_h;  // representatives mod B^k
};

CocycleSystem build_cocycle_system(const Subalgebra& g, const GModuleAction& V, int k);
CoboundarySystem build_coboundary_system(const Subalgebra& g, const GModuleAction& V, int k);

/// The full pipeline at one degree: cocycle system -> reduced basis ->
/// solution-space basis; coboundary system -> psi elimination -> solution
/// basis; quotient of the two spans. Returns dims and explicit basis
/// cochains.
CohomologyResult compute_cohomology(const Subalgebra& g, const GModuleAction& V, int k);

/// One result per degree k = 1..m.
std::vector<CohomologyResult> full_complex(const Subalgebra& g, const GModuleAction& V);

/// Restricted variants running the identical pipeline on a sub-basis of C^k
/// (and of C^{k-1} for the coboundary side); the graded splitting is built on
/// these. The variable lists must be subsets of the canonical bases in
/// canonical order.
CocycleSystem build_cocycle_system_on(const Subalgebra& g, const GModuleAction& V, int k,
                                      std::vector<CochainIndex> variables);
CoboundarySystem build_coboundary_system_on(const Subalgebra& g, const GModuleAction& V, int k,
                                            std::vector<CochainIndex> phi_variables,
                                            std::vector<CochainIndex> psi_variables);
CohomologyResult compute_cohomology_on(const Subalgebra& g, const GModuleAction& V, int k,
                                       std::vector<CochainIndex> phi_variables,
                                       std::vector<CochainIndex> psi_variables);

}  // namespace lsac

#endif
