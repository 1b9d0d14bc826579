#include "lsac/cohomology.hpp"

#include <utility>

namespace lsac {

namespace {

// Groups canonical indices by their argument tuple; entries of one tuple are
// contiguous because the canonical order sorts by tuple before target.
struct TupleGroup {
  ArgTuple tuple;
  std::vector<std::pair<int, int>> targets;  // (target, variable position)
};

std::vector<TupleGroup> group_by_tuple(const std::vector<CochainIndex>& vars) {
  std::vector<TupleGroup> groups;
  for (int i = 0; i < static_cast<int>(vars.size()); ++i) {
    const CochainIndex& idx = vars[i];
    if (groups.empty() || groups.back().tuple.evens != idx.evens ||
        groups.back().tuple.odds != idx.odds) {
      groups.push_back(TupleGroup{ArgTuple{idx.evens, idx.odds}, {}});
    }
    groups.back().targets.emplace_back(idx.target, i);
  }
  return groups;
}

}  // namespace

CocycleSystem build_cocycle_system_on(const Subalgebra& g, const GModuleAction& V, int k,
                                      std::vector<CochainIndex> variables) {
  CocycleSystem sys;
  sys.variables = std::move(variables);
  Cochain<LinearForm> phi = symbolic_cochain(sys.variables, k);
  for (const ArgTuple& t : enumerate_arg_tuples(g, k + 1)) {
    VectorOverV<LinearForm> value = differential(g, V, phi, t);
    for (int l = 0; l < V.module_dim(); ++l) {
      auto it = value.find(l);
      sys.equations.push_back(it == value.end() ? LinearForm() : std::move(it->second));
    }
  }
  return sys;
}

CocycleSystem build_cocycle_system(const Subalgebra& g, const GModuleAction& V, int k) {
  return build_cocycle_system_on(g, V, k, enumerate_basis(g, V, k));
}

CoboundarySystem build_coboundary_system_on(const Subalgebra& g, const GModuleAction& V, int k,
                                            std::vector<CochainIndex> phi_variables,
                                            std::vector<CochainIndex> psi_variables) {
  if (k < 1) throw std::invalid_argument("coboundaries start at degree 1");
  CoboundarySystem sys;
  sys.phi_variables = std::move(phi_variables);
  sys.psi_variables = std::move(psi_variables);
  const int num_psi = static_cast<int>(sys.psi_variables.size());
  const int num_phi = static_cast<int>(sys.phi_variables.size());

  if (k == 1) {
    // The complex starts 0 -> C^1, so B^1 = {0}: the Cartesian system is
    // phi_i = 0 for every coefficient, with no psi variables at all.
    sys.psi_variables.clear();
    for (int i = 0; i < num_phi; ++i) sys.equations.push_back(LinearForm::unit(i));
    sys.eliminated = reduce(sys.equations);
    return sys;
  }

  Cochain<LinearForm> psi = symbolic_cochain(sys.psi_variables, k - 1);
  for (const TupleGroup& grp : group_by_tuple(sys.phi_variables)) {
    VectorOverV<LinearForm> value = differential(g, V, psi, grp.tuple);
    for (const auto& [target, pos] : grp.targets) {
      LinearForm eq = LinearForm::unit(num_psi + pos);
      auto it = value.find(target);
      if (it != value.end()) eq.axpy(Rational(-1), it->second);
      sys.equations.push_back(std::move(eq));
    }
  }

  ReducedLinearBasis full = reduce(sys.equations);
  std::vector<int> keep(num_phi);
  for (int i = 0; i < num_phi; ++i) keep[i] = num_psi + i;
  ReducedLinearBasis phi_only = eliminate(full, keep, num_psi + num_phi);
  std::vector<LinearForm> rebased;
  rebased.reserve(phi_only.size());
  for (const LinearForm& row : phi_only.rows()) rebased.push_back(row.shifted(-num_psi));
  sys.eliminated = reduce(rebased);
  return sys;
}

CoboundarySystem build_coboundary_system(const Subalgebra& g, const GModuleAction& V, int k) {
  return build_coboundary_system_on(g, V, k, enumerate_basis(g, V, k),
                                    k >= 2 ? enumerate_basis(g, V, k - 1)
                                           : std::vector<CochainIndex>{});
}

CohomologyResult compute_cohomology_on(const Subalgebra& g, const GModuleAction& V, int k,
                                       std::vector<CochainIndex> phi_variables,
                                       std::vector<CochainIndex> psi_variables) {
  const int dim_c = static_cast<int>(phi_variables.size());
  CohomologyResult result;
  result.degree = k;
  result.dim_c = dim_c;

  CocycleSystem zsys = build_cocycle_system_on(g, V, k, phi_variables);
  std::vector<std::vector<Rational>> z_vectors = cartesian_to_basis(zsys.equations, dim_c);
  std::vector<std::vector<Rational>> z_basis = span_to_basis(z_vectors, dim_c);

  CoboundarySystem bsys =
      build_coboundary_system_on(g, V, k, zsys.variables, std::move(psi_variables));
  std::vector<std::vector<Rational>> b_vectors =
      cartesian_to_basis(bsys.eliminated.rows(), dim_c);
  std::vector<std::vector<Rational>> b_basis = span_to_basis(b_vectors, dim_c);

  std::vector<std::vector<Rational>> h_basis = quotient_basis(z_basis, b_basis, dim_c);

  result.dim_z = static_cast<int>(z_basis.size());
  result.dim_b = static_cast<int>(b_basis.size());
  result.dim_h = static_cast<int>(h_basis.size());
  if (result.dim_h != result.dim_z - result.dim_b || result.dim_b > result.dim_z ||
      result.dim_z > dim_c)
    throw std::logic_error("dimension bookkeeping broken at degree " + std::to_string(k));

  for (const auto& v : z_basis)
    result.basis_z.push_back(cochain_from_vector(v, zsys.variables, k));
  for (const auto& v : b_basis)
    result.basis_b.push_back(cochain_from_vector(v, zsys.variables, k));
  for (const auto& v : h_basis)
    result.basis_h.push_back(cochain_from_vector(v, zsys.variables, k));
  return result;
}

CohomologyResult compute_cohomology(const Subalgebra& g, const GModuleAction& V, int k) {
  if (k < 1 || k > g.dim())
    throw std::invalid_argument("degree must lie in 1.." + std::to_string(g.dim()));
  return compute_cohomology_on(g, V, k, enumerate_basis(g, V, k),
                               k >= 2 ? enumerate_basis(g, V, k - 1)
                                      : std::vector<CochainIndex>{});
}

std::vector<CohomologyResult> full_complex(const Subalgebra& g, const GModuleAction& V) {
  std::vector<CohomologyResult> results;
  results.reserve(g.dim());
  for (int k = 1; k <= g.dim(); ++k) results.push_back(compute_cohomology(g, V, k));
  return results;
}

}  // namespace lsac
