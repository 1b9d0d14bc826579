#include "oracle.hpp"

#include <algorithm>

namespace lsac::oracle {

namespace {

// All k-subsets of {lo, ..., hi-1} in lex order.
void subsets(int lo, int hi, int k, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= hi - k; ++v) {
    cur.push_back(v);
    subsets(v + 1, hi, k - 1, cur, out);
    cur.pop_back();
  }
}

struct Index {
  std::vector<int> evens;
  std::vector<int> odds;
  int target;
};

std::vector<std::pair<std::vector<int>, std::vector<int>>> tuples(const Subalgebra& g, int k) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  const int p = g.num_even();
  const int m = g.dim();
  if (k < 0 || k > m) return out;
  for (int r = std::min(k, p); r >= std::max(0, k - (m - p)); --r) {
    std::vector<std::vector<int>> ev, od;
    std::vector<int> cur;
    subsets(0, p, r, cur, ev);
    subsets(p, m, k - r, cur, od);
    for (const auto& e : ev)
      for (const auto& o : od) out.emplace_back(e, o);
  }
  return out;
}

std::vector<Index> basis(const Subalgebra& g, const GModuleAction& V, int k) {
  std::vector<Index> out;
  for (const auto& [e, o] : tuples(g, k))
    for (int l = 0; l < V.module_dim(); ++l) out.push_back({e, o, l});
  return out;
}

// Value of the basic map with slots (I_evens | I_odds) on an argument tuple:
// +1/-1 when the arguments are a super-permutation of the slots, 0 otherwise.
// The sign is (-1)^{even-even inversions + odd-before-even pairs}; odd-odd
// transpositions are symmetric and contribute nothing.
int eval_sign(const Subalgebra& g, const std::vector<int>& slot_evens,
              const std::vector<int>& slot_odds, const std::vector<int>& args) {
  std::vector<int> ev, od;
  long inversions = 0;
  for (int a : args) {
    if (g.parity(a) == Parity::odd) {
      od.push_back(a);
    } else {
      inversions += static_cast<long>(od.size());  // this even sits after those odds
      ev.push_back(a);
    }
  }
  for (std::size_t i = 0; i < ev.size(); ++i)
    for (std::size_t j = i + 1; j < ev.size(); ++j) {
      if (ev[i] == ev[j]) return 0;
      if (ev[i] > ev[j]) ++inversions;
    }
  std::sort(ev.begin(), ev.end());
  std::sort(od.begin(), od.end());
  if (ev != slot_evens || od != slot_odds) return 0;
  return (inversions % 2) ? -1 : 1;
}

// (dΛ)(T) for one basic cochain Λ = (slots, target l0), accumulated into a
// dense row of coefficients per module index.
void apply_differential(const Subalgebra& g, const GModuleAction& V, const Index& lambda,
                        const std::vector<int>& evens, const std::vector<int>& odds,
                        std::vector<Rational>& out) {
  const int ne = static_cast<int>(evens.size());
  const int no = static_cast<int>(odds.size());
  const bool super = !g.purely_even();
  std::vector<int> args;
  args.reserve(ne + no);

  auto lambda_sign = [&]() { return eval_sign(g, lambda.evens, lambda.odds, args); };

  // removal of an even argument, action term
  for (int i = 0; i < ne; ++i) {
    args.clear();
    for (int t = 0; t < ne; ++t)
      if (t != i) args.push_back(evens[t]);
    for (int t = 0; t < no; ++t) args.push_back(odds[t]);
    int s = lambda_sign();
    if (s == 0) continue;
    // standard formula: (-1)^i; super formula: (-1)^{i+1}
    Rational sign(((i % 2) ? -1 : 1) * (super ? -1 : 1) * s);
    for (const auto& [l2, a] : V.act(evens[i], lambda.target)) out[l2] += sign * a;
  }
  // even-even brackets
  for (int i = 0; i < ne; ++i) {
    for (int j = i + 1; j < ne; ++j) {
      for (const auto& [w, cb] : g.bracket(evens[i], evens[j])) {
        args.clear();
        args.push_back(w);
        for (int t = 0; t < ne; ++t)
          if (t != i && t != j) args.push_back(evens[t]);
        for (int t = 0; t < no; ++t) args.push_back(odds[t]);
        int s = lambda_sign();
        if (s == 0) continue;
        Rational sign((((i + j) % 2) ? -1 : 1) * (super ? -1 : 1) * s);
        out[lambda.target] += sign * cb;
      }
    }
  }
  if (!super) return;
  // even-odd brackets
  for (int i = 0; i < ne; ++i) {
    for (int j = 0; j < no; ++j) {
      for (const auto& [w, cb] : g.bracket(evens[i], odds[j])) {
        args.clear();
        for (int t = 0; t < ne; ++t)
          if (t != i) args.push_back(evens[t]);
        args.push_back(w);
        for (int t = 0; t < no; ++t)
          if (t != j) args.push_back(odds[t]);
        int s = lambda_sign();
        if (s == 0) continue;
        Rational sign(((i % 2) ? -1 : 1) * s);
        out[lambda.target] += sign * cb;
      }
    }
  }
  // odd-odd brackets
  for (int i = 0; i < no; ++i) {
    for (int j = i + 1; j < no; ++j) {
      for (const auto& [w, cb] : g.bracket(odds[i], odds[j])) {
        args.clear();
        args.push_back(w);
        for (int t = 0; t < ne; ++t) args.push_back(evens[t]);
        for (int t = 0; t < no; ++t)
          if (t != i && t != j) args.push_back(odds[t]);
        int s = lambda_sign();
        if (s == 0) continue;
        out[lambda.target] += Rational(s) * cb;
      }
    }
  }
  // removal of an odd argument, action term, global sign (-1)^{ne-1}
  {
    Rational gs((ne % 2) ? 1 : -1);
    for (int j = 0; j < no; ++j) {
      args.clear();
      for (int t = 0; t < ne; ++t) args.push_back(evens[t]);
      for (int t = 0; t < no; ++t)
        if (t != j) args.push_back(odds[t]);
      int s = lambda_sign();
      if (s == 0) continue;
      for (const auto& [l2, a] : V.act(odds[j], lambda.target)) out[l2] += gs * Rational(s) * a;
    }
  }
}

}  // namespace

DenseMatrix differential_matrix(const Subalgebra& g, const GModuleAction& V, int k) {
  std::vector<Index> cols = basis(g, V, k);
  auto row_tuples = tuples(g, k + 1);
  const int n = V.module_dim();
  DenseMatrix m(static_cast<int>(row_tuples.size()) * n, static_cast<int>(cols.size()));
  std::vector<Rational> value(n);
  for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
    for (int rt = 0; rt < static_cast<int>(row_tuples.size()); ++rt) {
      std::fill(value.begin(), value.end(), Rational(0));
      apply_differential(g, V, cols[c], row_tuples[rt].first, row_tuples[rt].second, value);
      for (int l = 0; l < n; ++l)
        if (!value[l].is_zero()) m.at(rt * n + l, c) = value[l];
    }
  }
  return m;
}

int rank(DenseMatrix m) {
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Rational inv = m.at(r, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> kernel_basis(DenseMatrix m) {
  const int n = m.cols();
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < n && r < m.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Rational inv = m.at(r, col).inverse();
    for (int j = col; j < n; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> kernel;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free] = Rational(1);
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      v[pivot_col[i]] = -m.at(i, free);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

Dims rank_nullity_dims(const Subalgebra& g, const GModuleAction& V, int k) {
  Dims d;
  DenseMatrix mk = differential_matrix(g, V, k);
  d.c = mk.cols();
  d.z = mk.cols() - rank(std::move(mk));
  d.b = k >= 2 ? rank(differential_matrix(g, V, k - 1)) : 0;
  d.h = d.z - d.b;
  return d;
}

int row_span_rank(const std::vector<std::vector<Rational>>& rows, int dim) {
  DenseMatrix m(static_cast<int>(rows.size()), dim);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = rows[i].at(j);
  return rank(std::move(m));
}

bool same_span(const std::vector<std::vector<Rational>>& a,
               const std::vector<std::vector<Rational>>& b, int dim) {
  std::vector<std::vector<Rational>> all = a;
  all.insert(all.end(), b.begin(), b.end());
  int ra = row_span_rank(a, dim);
  int rb = row_span_rank(b, dim);
  int rab = row_span_rank(all, dim);
  return ra == rb && rb == rab;
}

}  // namespace lsac::oracle
