#include "lsac/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lsac/errors.hpp"

namespace lsac {

void sparse_add(SparseVec& dst, const Rational& a, const SparseVec& src) {
  if (a.is_zero() || src.empty()) return;
  SparseVec merged;
  merged.reserve(dst.size() + src.size());
  auto it = dst.begin();
  auto jt = src.begin();
  while (it != dst.end() || jt != src.end()) {
    if (jt == src.end() || (it != dst.end() && it->first < jt->first)) {
      merged.push_back(*it++);
    } else if (it == dst.end() || jt->first < it->first) {
      merged.emplace_back(jt->first, a * jt->second);
      if (merged.back().second.is_zero()) merged.pop_back();
      ++jt;
    } else {
      Rational c = it->second + a * jt->second;
      if (!c.is_zero()) merged.emplace_back(it->first, std::move(c));
      ++it;
      ++jt;
    }
  }
  dst = std::move(merged);
}

std::string render_sparse(const SparseVec& v, const std::vector<std::string>& names) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : v) {
    Rational a = c;
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
    os << names.at(idx);
  }
  return os.str();
}

namespace {

SparseVec scaled(const SparseVec& v, const Rational& a) {
  SparseVec out;
  if (a.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& [idx, c] : v) out.emplace_back(idx, a * c);
  return out;
}

int parity_sign(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

}  // namespace

//---------------------------------------------------------------------------
// LieSuperAlgebra
//---------------------------------------------------------------------------

LieSuperAlgebra::LieSuperAlgebra(std::vector<std::string> basis_names,
                                 std::vector<Parity> parities,
                                 const std::vector<BracketEntry>& entries,
                                 std::optional<std::vector<long>> grading)
    : names_(std::move(basis_names)), parity_(std::move(parities)), grading_(std::move(grading)) {
  const int m = dim();
  if (m == 0) throw std::invalid_argument("algebra must have at least one basis vector");
  if (static_cast<int>(parity_.size()) != m)
    throw std::invalid_argument("parity list size does not match basis size");
  if (grading_ && static_cast<int>(grading_->size()) != m)
    throw std::invalid_argument("grading size does not match basis size");
  {
    std::set<std::string> seen(names_.begin(), names_.end());
    if (static_cast<int>(seen.size()) != m)
      throw std::invalid_argument("basis names must be distinct");
  }

  bracket_.assign(m, std::vector<SparseVec>(m));
  std::vector<std::vector<bool>> given(m, std::vector<bool>(m, false));
  for (const auto& e : entries) {
    if (e.left < 0 || e.left >= m || e.right < 0 || e.right >= m)
      throw IndexOutOfRange("bracket entry index out of range");
    if (given[e.left][e.right])
      throw std::invalid_argument("duplicate bracket entry [" + names_[e.left] + "," +
                                  names_[e.right] + "]");
    given[e.left][e.right] = true;
    SparseVec r = e.result;
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      if (r[i].first == r[i + 1].first)
        throw std::invalid_argument("duplicate component in bracket result");
    r.erase(std::remove_if(r.begin(), r.end(),
                           [](const auto& t) { return t.second.is_zero(); }),
            r.end());
    bracket_[e.left][e.right] = std::move(r);
  }
  // Fill missing mirrors from super skew-symmetry; explicitly given mirrors
  // are kept verbatim so validate() can flag inconsistent tables.
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j || given[j][i] || !given[i][j]) continue;
      Rational s(-parity_sign(parity_[i], parity_[j]));
      bracket_[j][i] = scaled(bracket_[i][j], s);
    }
  }
}

bool LieSuperAlgebra::purely_even() const {
  return std::all_of(parity_.begin(), parity_.end(),
                     [](Parity p) { return p == Parity::even; });
}

const SparseVec& LieSuperAlgebra::bracket(int x, int y) const {
  if (x < 0 || x >= dim() || y < 0 || y >= dim())
    throw IndexOutOfRange("bracket index out of range");
  return bracket_[x][y];
}

long LieSuperAlgebra::weight(int i) const {
  if (!grading_) throw NotGraded("algebra has no grading");
  return grading_->at(i);
}

std::vector<std::string> LieSuperAlgebra::validate() const {
  std::vector<std::string> violations;
  const int m = dim();

  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      if (i == j && parity_[i] == Parity::odd) continue;  // no constraint on odd diagonals
      // [x,y] + (-1)^{|x||y|}[y,x]; for an even diagonal this is 2[x,x].
      SparseVec residual = bracket_[i][j];
      sparse_add(residual, Rational(parity_sign(parity_[i], parity_[j])), bracket_[j][i]);
      if (!residual.empty())
        violations.push_back("skew-symmetry violated at (" + names_[i] + "," + names_[j] +
                             "): residual " + render_sparse(residual, names_));
    }
  }

  // [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]] = 0
  auto bracket_with = [&](int x, const SparseVec& v) {
    SparseVec out;
    for (const auto& [idx, c] : v) sparse_add(out, c, bracket_[x][idx]);
    return out;
  };
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        SparseVec residual = bracket_with(x, bracket_[y][z]);
        for (const auto& [idx, c] : bracket_[x][y])
          sparse_add(residual, -c, bracket_[idx][z]);
        SparseVec inner = bracket_with(y, bracket_[x][z]);
        sparse_add(residual, Rational(-parity_sign(parity_[x], parity_[y])), inner);
        if (!residual.empty())
          violations.push_back("Jacobi identity violated at (" + names_[x] + "," + names_[y] +
                               "," + names_[z] + "): residual " +
                               render_sparse(residual, names_));
      }
    }
  }

  if (grading_) {
    if (!purely_even())
      violations.push_back("grading given on an algebra with odd basis vectors");
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        for (const auto& [k, c] : bracket_[i][j]) {
          if ((*grading_)[k] != (*grading_)[i] + (*grading_)[j])
            violations.push_back("grading violated: [" + names_[i] + "," + names_[j] +
                                 "] has component " + names_[k] + " of weight " +
                                 std::to_string((*grading_)[k]) + ", expected " +
                                 std::to_string((*grading_)[i] + (*grading_)[j]));
        }
      }
    }
  }
  return violations;
}

bool operator==(const LieSuperAlgebra& a, const LieSuperAlgebra& b) {
  return a.names_ == b.names_ && a.parity_ == b.parity_ && a.bracket_ == b.bracket_ &&
         a.grading_ == b.grading_;
}

//---------------------------------------------------------------------------
// Subalgebra
//---------------------------------------------------------------------------

Subalgebra::Subalgebra(LieSuperAlgebra parent, std::vector<int> member_indices)
    : parent_(std::move(parent)) {
  const int pm = parent_.dim();
  if (member_indices.empty()) throw std::invalid_argument("subalgebra must be nonempty");
  {
    std::set<int> seen;
    for (int idx : member_indices) {
      if (idx < 0 || idx >= pm) throw IndexOutOfRange("subalgebra member index out of range");
      if (!seen.insert(idx).second)
        throw std::invalid_argument("duplicate subalgebra member " + parent_.name(idx));
    }
  }
  // Normalize to even-before-odd, keeping input order within each class.
  for (int idx : member_indices)
    if (parent_.is_even(idx)) members_.push_back(idx);
  num_even_ = static_cast<int>(members_.size());
  for (int idx : member_indices)
    if (!parent_.is_even(idx)) members_.push_back(idx);

  const int m = dim();
  std::vector<int> to_member(pm, -1);
  for (int i = 0; i < m; ++i) to_member[members_[i]] = i;

  member_bracket_.assign(m, std::vector<SparseVec>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const SparseVec& b = parent_.bracket(members_[i], members_[j]);
      SparseVec mb;
      for (const auto& [idx, c] : b) {
        if (to_member[idx] < 0)
          throw NotClosed("subalgebra not closed: [" + name(i) + "," + name(j) +
                          "] has component outside the span, " +
                          render_sparse(b, parent_.names()));
        mb.emplace_back(to_member[idx], c);
      }
      std::sort(mb.begin(), mb.end(),
                [](const auto& a, const auto& b2) { return a.first < b2.first; });
      member_bracket_[i][j] = std::move(mb);
    }
  }
}

const SparseVec& Subalgebra::bracket(int mi, int mj) const {
  if (mi < 0 || mi >= dim() || mj < 0 || mj >= dim())
    throw IndexOutOfRange("member index out of range");
  return member_bracket_[mi][mj];
}

//---------------------------------------------------------------------------
// GModuleAction
//---------------------------------------------------------------------------

GModuleAction::GModuleAction(std::vector<std::string> module_names,
                             std::vector<std::vector<SparseVec>> action,
                             std::optional<std::vector<long>> module_grading)
    : names_(std::move(module_names)), action_(std::move(action)),
      grading_(std::move(module_grading)) {
  if (names_.empty()) throw std::invalid_argument("module must have at least one basis vector");
  for (const auto& per_member : action_) {
    if (static_cast<int>(per_member.size()) != module_dim())
      throw std::invalid_argument("action table width does not match module dimension");
  }
  if (grading_ && static_cast<int>(grading_->size()) != module_dim())
    throw std::invalid_argument("module grading size does not match module dimension");
}

GModuleAction GModuleAction::adjoint(const Subalgebra& g) {
  const LieSuperAlgebra& h = g.parent();
  std::vector<std::vector<SparseVec>> action(g.dim(), std::vector<SparseVec>(h.dim()));
  for (int i = 0; i < g.dim(); ++i)
    for (int l = 0; l < h.dim(); ++l) action[i][l] = h.bracket(g.parent_index(i), l);
  return GModuleAction(h.names(), std::move(action), h.grading());
}

const SparseVec& GModuleAction::act(int member, int l) const {
  if (member < 0 || member >= static_cast<int>(action_.size()) || l < 0 || l >= module_dim())
    throw IndexOutOfRange("action index out of range");
  return action_[member][l];
}

long GModuleAction::weight(int l) const {
  if (!grading_) throw NotGraded("module has no grading");
  return grading_->at(l);
}

std::vector<std::string> GModuleAction::validate(const Subalgebra& g) const {
  std::vector<std::string> violations;
  if (static_cast<int>(action_.size()) != g.dim()) {
    violations.push_back("action table has " + std::to_string(action_.size()) +
                         " rows for a subalgebra of dimension " + std::to_string(g.dim()));
    return violations;
  }
  auto act_on = [&](int member, const SparseVec& v) {
    SparseVec out;
    for (const auto& [l, c] : v) sparse_add(out, c, action_[member][l]);
    return out;
  };
  for (int x = 0; x < g.dim(); ++x) {
    for (int y = 0; y < g.dim(); ++y) {
      for (int l = 0; l < module_dim(); ++l) {
        // [x,y]·v − x·(y·v) + (−1)^{|x||y|} y·(x·v)
        SparseVec residual;
        for (const auto& [w, c] : g.bracket(x, y)) sparse_add(residual, c, action_[w][l]);
        sparse_add(residual, Rational(-1), act_on(x, action_[y][l]));
        int s = (g.parity(x) == Parity::odd && g.parity(y) == Parity::odd) ? -1 : 1;
        sparse_add(residual, Rational(s), act_on(y, action_[x][l]));
        if (!residual.empty())
          violations.push_back("module axiom violated at (" + g.name(x) + "," + g.name(y) +
                               "; " + names_[l] + "): residual " +
                               render_sparse(residual, names_));
      }
    }
  }
  if (grading_) {
    if (!g.graded()) violations.push_back("module graded but subalgebra is not");
    for (int x = 0; x < g.dim() && g.graded(); ++x) {
      for (int l = 0; l < module_dim(); ++l) {
        for (const auto& [l2, c] : action_[x][l]) {
          if ((*grading_)[l2] != g.weight(x) + (*grading_)[l])
            violations.push_back("module grading violated: " + g.name(x) + "·" + names_[l] +
                                 " has component " + names_[l2] + " of weight " +
                                 std::to_string((*grading_)[l2]) + ", expected " +
                                 std::to_string(g.weight(x) + (*grading_)[l]));
        }
      }
    }
  }
  return violations;
}

}  // namespace lsac
