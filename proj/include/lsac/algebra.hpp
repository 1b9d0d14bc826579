#ifndef LSAC_ALGEBRA_HPP
#define LSAC_ALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsac/rational.hpp"

namespace lsac {

enum class Parity : unsigned char { even, odd };

/// Sparse vector over a basis: (index, coefficient) pairs sorted by index.
using SparseVec = std::vector<std::pair<int, Rational>>;

void sparse_add(SparseVec& dst, const Rational& a, const SparseVec& src);
std::string render_sparse(const SparseVec& v, const std::vector<std::string>& names);

/// Finite-dimensional Lie (super) algebra given by structure constants.
///
/// The bracket table is stored fully; missing mirror entries are filled from
/// super skew-symmetry at construction. Inconsistent tables are storable —
/// validate() reports their violations instead of construction failing.
class LieSuperAlgebra {
 public:
  struct BracketEntry {
    int left;
    int right;
    SparseVec result;
  };

  LieSuperAlgebra(std::vector<std::string> basis_names, std::vector<Parity> parities,
                  const std::vector<BracketEntry>& entries,
                  std::optional<std::vector<long>> grading = std::nullopt);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  Parity parity(int i) const { return parity_.at(i); }
  bool is_even(int i) const { return parity_.at(i) == Parity::even; }
  bool purely_even() const;

  /// [b_x, b_y] as a sparse vector over the basis.
  const SparseVec& bracket(int x, int y) const;

  bool graded() const { return grading_.has_value(); }
  long weight(int i) const;
  const std::optional<std::vector<long>>& grading() const { return grading_; }

  /// Empty iff super skew-symmetry, the super Jacobi identity and (when a
  /// grading is present) bracket weight additivity all hold. Each violation
  /// names the pair/triple and its nonzero residual.
  std::vector<std::string> validate() const;

  friend bool operator==(const LieSuperAlgebra& a, const LieSuperAlgebra& b);

 private:
  std::vector<std::string> names_;
  std::vector<Parity> parity_;
  std::vector<std::vector<SparseVec>> bracket_;
  std::optional<std::vector<long>> grading_;
};

/// Subalgebra of a parent algebra spanned by a subset of its basis vectors,
/// with members normalized to even-before-odd order (input order preserved
/// within each parity class). Construction checks bracket closure.
class Subalgebra {
 public:
  Subalgebra(LieSuperAlgebra parent, std::vector<int> member_indices);

  const LieSuperAlgebra& parent() const { return parent_; }
  int dim() const { return static_cast<int>(members_.size()); }
  /// Number of even members; they occupy member positions [0, num_even).
  int num_even() const { return num_even_; }
  bool purely_even() const { return num_even_ == dim(); }
  int parent_index(int member) const { return members_.at(member); }
  const std::vector<int>& members() const { return members_; }
  Parity parity(int member) const { return parent_.parity(members_.at(member)); }
  const std::string& name(int member) const { return parent_.name(members_.at(member)); }
  bool graded() const { return parent_.graded(); }
  long weight(int member) const { return parent_.weight(members_.at(member)); }

  /// Bracket of two members, expressed in member coordinates.
  const SparseVec& bracket(int mi, int mj) const;

  friend bool operator==(const Subalgebra& a, const Subalgebra& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  LieSuperAlgebra parent_;
  std::vector<int> members_;
  int num_even_ = 0;
  std::vector<std::vector<SparseVec>> member_bracket_;
};

/// Action of a subalgebra g on a module V, as a table member x V-index ->
/// sparse vector over the V basis.
class GModuleAction {
 public:
  GModuleAction(std::vector<std::string> module_names,
                std::vector<std::vector<SparseVec>> action,
                std::optional<std::vector<long>> module_grading = std::nullopt);

  /// V = parent algebra of g, acted on through the parent bracket.
  static GModuleAction adjoint(const Subalgebra& g);

  int module_dim() const { return static_cast<int>(names_.size()); }
  const std::string& name(int l) const { return names_.at(l); }
  const std::vector<std::string>& names() const { return names_; }

  /// member · v_l
  const SparseVec& act(int member, int l) const;

  bool graded() const { return grading_.has_value(); }
  long weight(int l) const;
  const std::optional<std::vector<long>>& grading() const { return grading_; }

  /// Checks [x,y]·v = x·(y·v) − (−1)^{|x||y|} y·(x·v) over all member pairs
  /// and module basis vectors, plus weight additivity when graded.
  std::vector<std::string> validate(const Subalgebra& g) const;

  friend bool operator==(const GModuleAction& a, const GModuleAction& b) {
    return a.names_ == b.names_ && a.action_ == b.action_ && a.grading_ == b.grading_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<SparseVec>> action_;  // [member][l]
  std::optional<std::vector<long>> grading_;
};

}  // namespace lsac

#endif
