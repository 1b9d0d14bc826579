#ifndef LSAC_GRADED_HPP
#define LSAC_GRADED_HPP

#include <map>
#include <string>
#include <vector>

#include "lsac/cohomology.hpp"

namespace lsac {

/// Homogeneity of a basic cochain: weight of the target minus the total
/// weight of the arguments, so that the value of an h-homogeneous cochain on
/// arguments of total weight w lands in the (w + h)-component.
long cochain_homogeneity(const CochainIndex& idx, const Subalgebra& g, const GModuleAction& V);

/// One homogeneity block of the canonical basis of C^k.
struct HomogeneityBlock {
  long h = 0;
  std::vector<int> member_positions;      // positions into the full canonical basis
  std::vector<CochainIndex> members;      // same entries, canonical order
};

/// Partition of the canonical basis of C^k by homogeneity. NotGraded when
/// either g or V carries no grading.
std::map<long, HomogeneityBlock> split_basis(const Subalgebra& g, const GModuleAction& V, int k);

struct GradedCohomology {
  int degree = 0;
  std::map<long, CohomologyResult> blocks;  // ascending homogeneity
  CohomologyResult total;                   // summed dims, concatenated bases
};

/// Runs the identical pipeline once per homogeneity block and reassembles the
/// totals; the blocks are independent because the differential preserves
/// homogeneity.
GradedCohomology compute_graded_cohomology(const Subalgebra& g, const GModuleAction& V, int k);

/// Checks that the differential of every basic k-cochain stays inside its own
/// homogeneity block; each violation names the offending cochain. Empty
/// result means ok.
std::vector<std::string> check_differential_homogeneity(const Subalgebra& g,
                                                        const GModuleAction& V, int k);

}  // namespace lsac

#endif
