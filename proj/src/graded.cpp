#include "lsac/graded.hpp"

namespace lsac {

namespace {

void require_graded(const Subalgebra& g, const GModuleAction& V) {
  if (!g.graded() || !V.graded())
    throw NotGraded("homogeneity splitting needs a graded algebra and module");
}

}  // namespace

long cochain_homogeneity(const CochainIndex& idx, const Subalgebra& g, const GModuleAction& V) {
  long w = V.weight(idx.target);
  for (int e : idx.evens) w -= g.weight(e);
  for (int o : idx.odds) w -= g.weight(o);
  return w;
}

std::map<long, HomogeneityBlock> split_basis(const Subalgebra& g, const GModuleAction& V,
                                             int k) {
  require_graded(g, V);
  std::map<long, HomogeneityBlock> blocks;
  std::vector<CochainIndex> basis = enumerate_basis(g, V, k);
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
    long h = cochain_homogeneity(basis[i], g, V);
    HomogeneityBlock& block = blocks[h];
    block.h = h;
    block.member_positions.push_back(i);
    block.members.push_back(basis[i]);
  }
  return blocks;
}

GradedCohomology compute_graded_cohomology(const Subalgebra& g, const GModuleAction& V, int k) {
  require_graded(g, V);
  if (k < 1 || k > g.dim())
    throw std::invalid_argument("degree must lie in 1.." + std::to_string(g.dim()));

  GradedCohomology out;
  out.degree = k;
  out.total.degree = k;

  std::map<long, HomogeneityBlock> phi_blocks = split_basis(g, V, k);
  std::map<long, HomogeneityBlock> psi_blocks;
  if (k >= 2) psi_blocks = split_basis(g, V, k - 1);

  for (auto& [h, block] : phi_blocks) {
    std::vector<CochainIndex> psi_vars;
    if (auto it = psi_blocks.find(h); it != psi_blocks.end()) psi_vars = it->second.members;
    CohomologyResult r = compute_cohomology_on(g, V, k, block.members, std::move(psi_vars));
    out.total.dim_c += r.dim_c;
    out.total.dim_z += r.dim_z;
    out.total.dim_b += r.dim_b;
    out.total.dim_h += r.dim_h;
    for (auto& c : r.basis_z) out.total.basis_z.push_back(c);
    for (auto& c : r.basis_b) out.total.basis_b.push_back(c);
    for (auto& c : r.basis_h) out.total.basis_h.push_back(c);
    out.blocks.emplace(h, std::move(r));
  }
  return out;
}

std::vector<std::string> check_differential_homogeneity(const Subalgebra& g,
                                                        const GModuleAction& V, int k) {
  require_graded(g, V);
  std::vector<std::string> violations;
  std::vector<CochainIndex> basis = enumerate_basis(g, V, k);
  std::vector<ArgTuple> tuples = enumerate_arg_tuples(g, k + 1);
  for (const CochainIndex& idx : basis) {
    long h = cochain_homogeneity(idx, g, V);
    Cochain<Rational> lambda;
    lambda.degree = k;
    lambda.coeffs.emplace(idx, Rational(1));
    for (const ArgTuple& t : tuples) {
      VectorOverV<Rational> value = differential(g, V, lambda, t);
      for (const auto& [l, c] : value) {
        CochainIndex out_idx{t.evens, t.odds, l};
        long h_out = cochain_homogeneity(out_idx, g, V);
        if (h_out != h)
          violations.push_back("differential of " + render_index(idx, g, V) +
                               " (homogeneity " + std::to_string(h) + ") hits " +
                               render_index(out_idx, g, V) + " (homogeneity " +
                               std::to_string(h_out) + ")");
      }
    }
  }
  return violations;
}

}  // namespace lsac
