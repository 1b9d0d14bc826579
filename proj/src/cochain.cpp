#include "lsac/cochain.hpp"

#include <algorithm>
#include <sstream>

namespace lsac {

namespace {

// Advances a strictly increasing combination below hi; returns false after
// the last one.
bool next_combination(std::vector<int>& c, int hi) {
  int r = static_cast<int>(c.size());
  for (int i = r - 1; i >= 0; --i) {
    if (c[i] < hi - (r - i)) {
      ++c[i];
      for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int r, int lo) {
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i) c[i] = lo + i;
  return c;
}

}  // namespace

std::vector<ArgTuple> enumerate_arg_tuples(const Subalgebra& g, int k) {
  std::vector<ArgTuple> out;
  const int m = g.dim();
  const int p = g.num_even();
  if (k < 0 || k > m) return out;
  if (k == 0) {
    out.push_back(ArgTuple{});
    return out;
  }
  int r_hi = std::min(k, p);
  int r_lo = std::max(0, k - (m - p));
  for (int r = r_hi; r >= r_lo; --r) {
    std::vector<int> evens = first_combination(r, 0);
    do {
      std::vector<int> odds = first_combination(k - r, p);
      do {
        out.push_back(ArgTuple{evens, odds});
      } while (next_combination(odds, m));
    } while (next_combination(evens, p));
  }
  return out;
}

std::vector<CochainIndex> enumerate_basis(const Subalgebra& g, const GModuleAction& V, int k) {
  std::vector<CochainIndex> out;
  for (const ArgTuple& t : enumerate_arg_tuples(g, k))
    for (int l = 0; l < V.module_dim(); ++l) out.push_back(CochainIndex{t.evens, t.odds, l});
  return out;
}

std::optional<SortedArgs> sort_super_args(const Subalgebra& g, std::span<const int> args) {
  struct Slot {
    int pos;
    bool odd;
  };
  std::vector<Slot> slots;
  slots.reserve(args.size());
  for (int a : args) {
    if (a < 0 || a >= g.dim()) throw IndexOutOfRange("argument member out of range");
    slots.push_back({a, g.parity(a) == Parity::odd});
  }
  int sign = 1;
  // Bubble sort so every adjacent transposition contributes its super sign.
  const int n = static_cast<int>(slots.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j + 1 < n - i; ++j) {
      const Slot& a = slots[j];
      const Slot& b = slots[j + 1];
      bool swap = a.odd != b.odd ? (a.odd && !b.odd) : a.pos > b.pos;
      if (!swap) continue;
      if (!(a.odd && b.odd)) sign = -sign;
      std::swap(slots[j], slots[j + 1]);
    }
  }
  SortedArgs sorted;
  sorted.sign = sign;
  for (const Slot& s : slots) {
    if (s.odd) {
      sorted.odds.push_back(s.pos);
    } else {
      if (!sorted.evens.empty() && sorted.evens.back() == s.pos) return std::nullopt;
      sorted.evens.push_back(s.pos);
    }
  }
  return sorted;
}

Cochain<LinearForm> symbolic_cochain(const std::vector<CochainIndex>& basis, int k,
                                     int position_offset) {
  Cochain<LinearForm> phi;
  phi.degree = k;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    phi.coeffs.emplace(basis[i], LinearForm::unit(position_offset + i));
  return phi;
}

Cochain<Rational> cochain_from_vector(const std::vector<Rational>& coords,
                                      const std::vector<CochainIndex>& basis, int k) {
  if (coords.size() != basis.size())
    throw std::invalid_argument("coordinate count does not match basis size");
  Cochain<Rational> c;
  c.degree = k;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) c.coeffs.emplace(basis[i], coords[i]);
  return c;
}

ComposeResidual compose_check(const Subalgebra& g, const GModuleAction& V, int k) {
  std::vector<CochainIndex> basis = enumerate_basis(g, V, k);
  Cochain<LinearForm> phi = symbolic_cochain(basis, k);

  Cochain<LinearForm> dphi;
  dphi.degree = k + 1;
  for (const ArgTuple& t : enumerate_arg_tuples(g, k + 1)) {
    VectorOverV<LinearForm> value = differential(g, V, phi, t);
    for (auto& [l, form] : value) dphi.set(CochainIndex{t.evens, t.odds, l}, std::move(form));
  }

  ComposeResidual residual;
  for (const ArgTuple& t : enumerate_arg_tuples(g, k + 2)) {
    VectorOverV<LinearForm> value = differential(g, V, dphi, t);
    for (auto& [l, form] : value)
      if (!form.is_zero())
        residual.nonzero.emplace_back(CochainIndex{t.evens, t.odds, l}, std::move(form));
  }
  return residual;
}

std::string render_index(const CochainIndex& idx, const Subalgebra& g, const GModuleAction& V) {
  std::ostringstream os;
  if (idx.degree() == 0) {
    os << "1";
  } else {
    bool first = true;
    for (int e : idx.evens) {
      if (!first) os << "^";
      os << g.name(e) << "*";
      first = false;
    }
    for (int o : idx.odds) {
      if (!first) os << "^";
      os << g.name(o) << "*";
      first = false;
    }
  }
  os << "⊗" << V.name(idx.target);
  return os.str();
}

std::string render_cochain(const Cochain<Rational>& c, const Subalgebra& g,
                           const GModuleAction& V) {
  if (c.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, coeff] : c.coeffs) {
    Rational a = coeff;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    if (!a.is_one()) os << a.str() << "*";
    os << render_index(idx, g, V);
  }
  return os.str();
}

}  // namespace lsac
