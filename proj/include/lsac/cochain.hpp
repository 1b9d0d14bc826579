#ifndef LSAC_COCHAIN_HPP
#define LSAC_COCHAIN_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lsac/algebra.hpp"
#include "lsac/errors.hpp"
#include "lsac/lingb.hpp"

namespace lsac {

/// Index of a basic k-cochain: the map sending (e_{i1},...,e_{ir},
/// o_{j(r+1)},...,o_{jk}) to the module basis vector v_target, extended
/// super skew-symmetrically and vanishing on every other basis tuple.
/// Member positions are 0-based; evens and odds are strictly increasing.
struct CochainIndex {
  std::vector<int> evens;
  std::vector<int> odds;
  int target = 0;

  int degree() const { return static_cast<int>(evens.size() + odds.size()); }
};

/// Canonical total order: degree, then number of even slots descending, then
/// even part lex, odd part lex, target ascending. This is the order that
/// numbers the phi variables x1, x2, ... in every system and report.
inline bool operator<(const CochainIndex& a, const CochainIndex& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.evens.size() != b.evens.size()) return a.evens.size() > b.evens.size();
  if (a.evens != b.evens) return a.evens < b.evens;
  if (a.odds != b.odds) return a.odds < b.odds;
  return a.target < b.target;
}
inline bool operator==(const CochainIndex& a, const CochainIndex& b) {
  return a.evens == b.evens && a.odds == b.odds && a.target == b.target;
}

/// Canonical argument tuple (even members then odd members, each strictly
/// increasing); the basis of C^k is these tuples crossed with targets.
struct ArgTuple {
  std::vector<int> evens;
  std::vector<int> odds;
  int degree() const { return static_cast<int>(evens.size() + odds.size()); }
};

/// All canonical k-argument tuples over g, in canonical order.
std::vector<ArgTuple> enumerate_arg_tuples(const Subalgebra& g, int k);

/// The n * C(m, k) basis indices of C^k(g, V), in canonical order.
/// Empty for k > m; for k = 0 one index per target.
std::vector<CochainIndex> enumerate_basis(const Subalgebra& g, const GModuleAction& V, int k);

//---------------------------------------------------------------------------
// Coefficients: exact rationals for numeric cochains, linear forms in formal
// variables for the symbolic cochains that generate the cocycle and
// coboundary systems. The differential code below is generic over both.
//---------------------------------------------------------------------------

inline void coeff_add_scaled(Rational& dst, const Rational& a, const Rational& src) {
  dst += a * src;
}
inline void coeff_add_scaled(LinearForm& dst, const Rational& a, const LinearForm& src) {
  dst.axpy(a, src);
}
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const LinearForm& c) { return c.is_zero(); }

/// Sparse linear combination of basic cochains of one degree.
template <class C>
struct Cochain {
  int degree = 0;
  std::map<CochainIndex, C> coeffs;

  void set(const CochainIndex& idx, C c) {
    if (!coeff_is_zero(c)) coeffs[idx] = std::move(c);
  }
};

/// Element of V with coefficients in C, sparsely: module index -> coefficient.
template <class C>
using VectorOverV = std::map<int, C>;

template <class C>
void vov_add_scaled(VectorOverV<C>& dst, const Rational& a, const VectorOverV<C>& src) {
  if (a.is_zero()) return;
  for (const auto& [l, c] : src) coeff_add_scaled(dst[l], a, c);
}

template <class C>
void vov_prune(VectorOverV<C>& v) {
  for (auto it = v.begin(); it != v.end();)
    it = coeff_is_zero(it->second) ? v.erase(it) : std::next(it);
}

//---------------------------------------------------------------------------
// Evaluation
//---------------------------------------------------------------------------

/// Arguments sorted into canonical order (evens ascending, then odds
/// ascending) together with the super sign picked up along the way. Returns
/// nothing when a repeated even argument forces the value 0. Repeated odd
/// arguments survive sorting (odd transpositions are symmetric) and simply
/// miss every basis index.
struct SortedArgs {
  std::vector<int> evens;
  std::vector<int> odds;
  int sign = 1;
};
std::optional<SortedArgs> sort_super_args(const Subalgebra& g, std::span<const int> args);

/// Value of the cochain on a tuple of basis members (any order, any
/// parities): super-skew-sorts the tuple, applies the sign, reads the
/// matching coefficients.
template <class C>
VectorOverV<C> evaluate(const Subalgebra& g, const Cochain<C>& phi, std::span<const int> args) {
  if (static_cast<int>(args.size()) != phi.degree)
    throw std::invalid_argument("argument count does not match cochain degree");
  VectorOverV<C> out;
  auto sorted = sort_super_args(g, args);
  if (!sorted) return out;
  CochainIndex lo{sorted->evens, sorted->odds, 0};
  for (auto it = phi.coeffs.lower_bound(lo);
       it != phi.coeffs.end() && it->first.evens == sorted->evens &&
       it->first.odds == sorted->odds;
       ++it) {
    C c{};
    coeff_add_scaled(c, Rational(sorted->sign), it->second);
    if (!coeff_is_zero(c)) out.emplace(it->first.target, std::move(c));
  }
  return out;
}

//---------------------------------------------------------------------------
// Differentials
//---------------------------------------------------------------------------

/// Standard Lie algebra differential on k+1 arguments:
///   (dΦ)(z_0,...,z_k) = Σ_i (−1)^i z_i·Φ(...,ẑ_i,...)
///                     + Σ_{i<j} (−1)^{i+j} Φ([z_i,z_j],...,ẑ_i,...,ẑ_j,...).
/// Requires a purely even algebra (ParityMismatch otherwise). The super
/// differential restricted to even arguments equals the negative of this one;
/// kernels and images are unaffected by the global sign.
template <class C>
VectorOverV<C> differential_standard(const Subalgebra& g, const GModuleAction& V,
                                     const Cochain<C>& phi, std::span<const int> args) {
  if (!g.purely_even())
    throw ParityMismatch("standard differential requires a purely even algebra");
  const int count = static_cast<int>(args.size());
  if (count != phi.degree + 1)
    throw std::invalid_argument("differential needs degree+1 arguments");

  VectorOverV<C> out;
  std::vector<int> sub;
  sub.reserve(count);

  for (int i = 0; i < count; ++i) {
    sub.clear();
    for (int t = 0; t < count; ++t)
      if (t != i) sub.push_back(args[t]);
    VectorOverV<C> inner = evaluate(g, phi, sub);
    Rational sign((i % 2) ? -1 : 1);
    for (const auto& [l, c] : inner)
      for (const auto& [l2, a] : V.act(args[i], l)) coeff_add_scaled(out[l2], sign * a, c);
  }

  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      const SparseVec& br = g.bracket(args[i], args[j]);
      if (br.empty()) continue;
      Rational sign(((i + j) % 2) ? -1 : 1);
      for (const auto& [w, cb] : br) {
        sub.clear();
        sub.push_back(w);
        for (int t = 0; t < count; ++t)
          if (t != i && t != j) sub.push_back(args[t]);
        VectorOverV<C> inner = evaluate(g, phi, sub);
        vov_add_scaled(out, sign * cb, inner);
      }
    }
  }
  vov_prune(out);
  return out;
}

/// Super differential on p+1 even arguments followed by k-p odd ones:
///   (dΦ)(e_0,...,e_p,o_{p+1},...,o_k) =
///     Σ_i (−1)^{i+1} e_i·Φ(...ê_i...)
///   + Σ_{i<j≤p} (−1)^{i+j+1} Φ([e_i,e_j], ...ê_i...ê_j..., odds)
///   + Σ_{i≤p<j} (−1)^i Φ(...ê_i..., [e_i,o_j], ...ô_j...)
///   + Σ_{p<i<j} Φ([o_i,o_j], evens, ...ô_i...ô_j...)
///   + (−1)^p Σ_{j>p} o_j·Φ(evens, ...ô_j...),
/// with global argument positions in the exponents.
template <class C>
VectorOverV<C> differential_super(const Subalgebra& g, const GModuleAction& V,
                                  const Cochain<C>& phi, std::span<const int> evens,
                                  std::span<const int> odds) {
  const int ne = static_cast<int>(evens.size());
  const int no = static_cast<int>(odds.size());
  if (ne + no != phi.degree + 1)
    throw std::invalid_argument("differential needs degree+1 arguments");
  for (int e : evens)
    if (g.parity(e) != Parity::even)
      throw ParityMismatch("odd member passed in the even block");
  for (int o : odds)
    if (g.parity(o) != Parity::odd)
      throw ParityMismatch("even member passed in the odd block");

  VectorOverV<C> out;
  std::vector<int> sub;
  sub.reserve(ne + no);
  auto append_range = [&sub](std::span<const int> xs, int skip1 = -1, int skip2 = -1) {
    for (int t = 0; t < static_cast<int>(xs.size()); ++t)
      if (t != skip1 && t != skip2) sub.push_back(xs[t]);
  };

  // action of the removed even argument, sign (−1)^{i+1}
  for (int i = 0; i < ne; ++i) {
    sub.clear();
    append_range(evens, i);
    append_range(odds);
    VectorOverV<C> inner = evaluate(g, phi, sub);
    Rational sign((i % 2) ? 1 : -1);
    for (const auto& [l, c] : inner)
      for (const auto& [l2, a] : V.act(evens[i], l)) coeff_add_scaled(out[l2], sign * a, c);
  }

  // even-even bracket, placed in front of the even block, sign (−1)^{i+j+1}
  for (int i = 0; i < ne; ++i) {
    for (int j = i + 1; j < ne; ++j) {
      const SparseVec& br = g.bracket(evens[i], evens[j]);
      if (br.empty()) continue;
      Rational sign(((i + j) % 2) ? 1 : -1);
      for (const auto& [w, cb] : br) {
        sub.clear();
        sub.push_back(w);
        append_range(evens, i, j);
        append_range(odds);
        vov_add_scaled(out, sign * cb, evaluate(g, phi, sub));
      }
    }
  }

  // even-odd bracket (odd result), placed in front of the odd block, sign (−1)^i
  for (int i = 0; i < ne; ++i) {
    for (int j = 0; j < no; ++j) {
      const SparseVec& br = g.bracket(evens[i], odds[j]);
      if (br.empty()) continue;
      Rational sign((i % 2) ? -1 : 1);
      for (const auto& [w, cb] : br) {
        sub.clear();
        append_range(evens, i);
        sub.push_back(w);
        append_range(odds, j);
        vov_add_scaled(out, sign * cb, evaluate(g, phi, sub));
      }
    }
  }

  // odd-odd bracket (even result), placed first, sign +1
  for (int i = 0; i < no; ++i) {
    for (int j = i + 1; j < no; ++j) {
      const SparseVec& br = g.bracket(odds[i], odds[j]);
      if (br.empty()) continue;
      for (const auto& [w, cb] : br) {
        sub.clear();
        sub.push_back(w);
        append_range(evens);
        append_range(odds, i, j);
        vov_add_scaled(out, cb, evaluate(g, phi, sub));
      }
    }
  }

  // action of the removed odd argument, global sign (−1)^p with p = ne-1
  {
    Rational sign((ne % 2) ? 1 : -1);
    for (int j = 0; j < no; ++j) {
      sub.clear();
      append_range(evens);
      append_range(odds, j);
      VectorOverV<C> inner = evaluate(g, phi, sub);
      for (const auto& [l, c] : inner)
        for (const auto& [l2, a] : V.act(odds[j], l)) coeff_add_scaled(out[l2], sign * a, c);
    }
  }
  vov_prune(out);
  return out;
}

/// Differential on a canonical tuple, dispatching on the algebra's parity
/// content: purely even algebras use the standard formula (the one the
/// worked systems are written in), anything with odd members uses the super
/// formula.
template <class C>
VectorOverV<C> differential(const Subalgebra& g, const GModuleAction& V, const Cochain<C>& phi,
                            const ArgTuple& tuple) {
  if (g.purely_even()) {
    return differential_standard(g, V, phi, std::span<const int>(tuple.evens));
  }
  return differential_super(g, V, phi, std::span<const int>(tuple.evens),
                            std::span<const int>(tuple.odds));
}

//---------------------------------------------------------------------------
// The complex property, symbolically
//---------------------------------------------------------------------------

/// Residual of d∘d applied to a fully general k-cochain with one formal
/// variable per basis index: identically zero exactly on consistent input
/// (Jacobi + module axiom).
struct ComposeResidual {
  std::vector<std::pair<CochainIndex, LinearForm>> nonzero;
  bool ok() const { return nonzero.empty(); }
};
ComposeResidual compose_check(const Subalgebra& g, const GModuleAction& V, int k);

/// General cochain with coefficient phi_i = the formal variable at position
/// offset + i, i running over the canonical basis.
Cochain<LinearForm> symbolic_cochain(const std::vector<CochainIndex>& basis, int k,
                                     int position_offset = 0);

/// Cochain with the given coordinates over the canonical basis.
Cochain<Rational> cochain_from_vector(const std::vector<Rational>& coords,
                                      const std::vector<CochainIndex>& basis, int k);

//---------------------------------------------------------------------------
// Rendering (dual-basis notation, e.g. "l1*^t1*^t2*^t3*⊗r")
//---------------------------------------------------------------------------

std::string render_index(const CochainIndex& idx, const Subalgebra& g, const GModuleAction& V);
std::string render_cochain(const Cochain<Rational>& c, const Subalgebra& g,
                           const GModuleAction& V);

}  // namespace lsac

#endif
