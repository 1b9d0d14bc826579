#ifndef LSAC_LINGB_HPP
#define LSAC_LINGB_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lsac/rational.hpp"

namespace lsac {

/// Fixed lexicographic variable order: position 0 is the greatest variable,
/// higher positions are smaller. Used purely for naming and order bookkeeping;
/// forms themselves carry positions.
class VariableUniverse {
 public:
  explicit VariableUniverse(std::vector<std::string> names);

  /// Universe "<prefix><start>", "<prefix><start+1>", ... of the given size,
  /// greatest first (so numbered("x", 5) is x1 > x2 > ... > x5).
  static VariableUniverse numbered(const std::string& prefix, int count, int start = 1);

  /// High block followed by low block: every variable of `high` is greater
  /// than every variable of `low`.
  static VariableUniverse concat(const VariableUniverse& high, const VariableUniverse& low);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int pos) const;

 private:
  std::vector<std::string> names_;
};

/// Homogeneous degree-1 polynomial, stored sparsely with terms sorted by
/// position ascending (so the leading variable, the greatest one, comes
/// first). Zero coefficients are never stored; there is no constant term.
class LinearForm {
 public:
  using Term = std::pair<int, Rational>;

  LinearForm() = default;
  static LinearForm unit(int pos);

  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const;
  /// Coefficient at a position, zero when absent.
  Rational coeff(int pos) const;
  bool contains(int pos) const;

  /// Accumulates c onto the coefficient at pos, dropping it if it cancels.
  void add(int pos, const Rational& c);
  /// *this += a * f
  LinearForm& axpy(const Rational& a, const LinearForm& f);
  void scale(const Rational& a);
  void negate();
  /// Same form with every position shifted by offset.
  LinearForm shifted(int offset) const;

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LinearForm& a, const LinearForm& b) {
    return !(a == b);
  }

  /// "x2 + 3*x4 - 2*x5" under the universe's variable names.
  std::string render(const VariableUniverse& universe) const;

  std::vector<Rational> to_vector(int dim) const;
  static LinearForm from_vector(const std::vector<Rational>& v);

 private:
  std::vector<Term> terms_;
};

/// The unique reduced Gröbner basis of an ideal of homogeneous linear forms:
/// monic rows with pairwise distinct leading variables, no leading variable
/// occurring in any other row. Rows are kept sorted by leading position.
class ReducedLinearBasis {
 public:
  ReducedLinearBasis() = default;

  int size() const { return static_cast<int>(rows_.size()); }
  const std::vector<LinearForm>& rows() const { return rows_; }
  const LinearForm& row(int i) const { return rows_.at(i); }
  bool has_lead(int pos) const { return lead_to_row_.count(pos) != 0; }
  const LinearForm& row_for_lead(int pos) const { return rows_.at(lead_to_row_.at(pos)); }
  /// Leading positions, ascending.
  std::vector<int> leading_positions() const;

  std::string render(const VariableUniverse& universe) const;

 private:
  friend ReducedLinearBasis reduce(const std::vector<LinearForm>& forms);
  friend ReducedLinearBasis eliminate(const ReducedLinearBasis& basis,
                                      const std::vector<int>& keep, int universe_size);
  std::vector<LinearForm> rows_;
  std::map<int, int> lead_to_row_;
};

/// Reduced Gröbner basis of <forms> under the fixed lex order. For degree-1
/// homogeneous generators this is exact Gaussian elimination with columns in
/// precedence order, followed by back substitution and monic scaling; the
/// result is the unique reduced basis whatever the input order.
ReducedLinearBasis reduce(const std::vector<LinearForm>& forms);

/// Exact division remainder: every leading variable of the basis is replaced
/// by its graph (the negated tail). The result contains no leading variable
/// of the basis and is zero iff f lies in the ideal.
LinearForm normal_form(LinearForm f, const ReducedLinearBasis& basis);

/// Reduced basis of the elimination ideal <basis> ∩ K[kept variables]: the
/// rows supported entirely on kept variables. The kept set must be downward
/// closed in precedence, i.e. a suffix {s, ..., universe_size-1} of the
/// position range; otherwise OrderViolation.
ReducedLinearBasis eliminate(const ReducedLinearBasis& basis, const std::vector<int>& keep,
                             int universe_size);

/// Normal form of the bilinear form sum_i x_i y_i against a reduced basis in
/// the x variables, with y inert:
///   NF(sum x_i y_i) = sum over free positions j of x_j * h_j(y).
/// The h_j, read as coordinate vectors over y, are a basis of the solution
/// space of the x-equations.
struct BilinearNormalForm {
  std::vector<int> free_positions;          // ascending
  std::vector<LinearForm> coefficient_forms;  // h_j over the y universe
  std::string render(const VariableUniverse& x_universe,
                     const VariableUniverse& y_universe) const;
};
BilinearNormalForm bilinear_normal_form(const ReducedLinearBasis& basis, int ambient_dim);

/// Canonical basis of the span of the given vectors (vector -> form, reduce,
/// forms -> vectors). Output size equals the rank.
std::vector<std::vector<Rational>> span_to_basis(const std::vector<std::vector<Rational>>& vectors,
                                                 int ambient_dim);

/// Basis of the solution space {x : f(x) = 0 for all equations} extracted via
/// the bilinear normal form. Output size is ambient_dim - |reduce(equations)|
/// and every output vector satisfies all equations.
std::vector<std::vector<Rational>> cartesian_to_basis(const std::vector<LinearForm>& equations,
                                                      int ambient_dim);

/// Representatives of span(v_vectors) / span(w_vectors): reduce both spans,
/// take normal forms of the big basis against the small one, reduce again.
/// Requires span(W) ⊆ span(V) (NotContained otherwise); the output has
/// exactly dim V - dim W vectors, lying in span(V) and independent mod W.
std::vector<std::vector<Rational>> quotient_basis(
    const std::vector<std::vector<Rational>>& v_vectors,
    const std::vector<std::vector<Rational>>& w_vectors, int ambient_dim);

}  // namespace lsac

#endif
