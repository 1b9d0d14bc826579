#include "lsac/lingb.hpp"

#include <algorithm>
#include <sstream>

#include "lsac/errors.hpp"

namespace lsac {

//---------------------------------------------------------------------------
// VariableUniverse
//---------------------------------------------------------------------------

VariableUniverse::VariableUniverse(std::vector<std::string> names) : names_(std::move(names)) {}

VariableUniverse VariableUniverse::numbered(const std::string& prefix, int count, int start) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 0; i < count; ++i) names.push_back(prefix + std::to_string(start + i));
  return VariableUniverse(std::move(names));
}

VariableUniverse VariableUniverse::concat(const VariableUniverse& high,
                                          const VariableUniverse& low) {
  std::vector<std::string> names = high.names_;
  names.insert(names.end(), low.names_.begin(), low.names_.end());
  return VariableUniverse(std::move(names));
}

const std::string& VariableUniverse::name(int pos) const {
  if (pos < 0 || pos >= size()) throw IndexOutOfRange("variable position out of range");
  return names_[pos];
}

//---------------------------------------------------------------------------
// LinearForm
//---------------------------------------------------------------------------

LinearForm LinearForm::unit(int pos) {
  LinearForm f;
  f.terms_.emplace_back(pos, Rational(1));
  return f;
}

const LinearForm::Term& LinearForm::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero form");
  return terms_.front();
}

Rational LinearForm::coeff(int pos) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), pos,
                             [](const Term& t, int p) { return t.first < p; });
  if (it != terms_.end() && it->first == pos) return it->second;
  return Rational(0);
}

bool LinearForm::contains(int pos) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), pos,
                             [](const Term& t, int p) { return t.first < p; });
  return it != terms_.end() && it->first == pos;
}

void LinearForm::add(int pos, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), pos,
                             [](const Term& t, int p) { return t.first < p; });
  if (it != terms_.end() && it->first == pos) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {pos, c});
  }
}

LinearForm& LinearForm::axpy(const Rational& a, const LinearForm& f) {
  if (a.is_zero() || f.is_zero()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + f.terms_.size());
  auto it = terms_.begin();
  auto jt = f.terms_.begin();
  while (it != terms_.end() || jt != f.terms_.end()) {
    if (jt == f.terms_.end() || (it != terms_.end() && it->first < jt->first)) {
      merged.push_back(*it++);
    } else if (it == terms_.end() || jt->first < it->first) {
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
  terms_ = std::move(merged);
  return *this;
}

void LinearForm::scale(const Rational& a) {
  if (a.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& t : terms_) t.second *= a;
}

void LinearForm::negate() {
  for (auto& t : terms_) t.second = -t.second;
}

LinearForm LinearForm::shifted(int offset) const {
  LinearForm f;
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) f.terms_.emplace_back(t.first + offset, t.second);
  return f;
}

std::string LinearForm::render(const VariableUniverse& universe) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [pos, c] : terms_) {
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
    os << universe.name(pos);
  }
  return os.str();
}

std::vector<Rational> LinearForm::to_vector(int dim) const {
  std::vector<Rational> v(dim, Rational(0));
  for (const auto& [pos, c] : terms_) v.at(pos) = c;
  return v;
}

LinearForm LinearForm::from_vector(const std::vector<Rational>& v) {
  LinearForm f;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) f.terms_.emplace_back(i, v[i]);
  return f;
}

//---------------------------------------------------------------------------
// Reduction
//---------------------------------------------------------------------------

std::vector<int> ReducedLinearBasis::leading_positions() const {
  std::vector<int> leads;
  leads.reserve(rows_.size());
  for (const auto& r : rows_) leads.push_back(r.leading().first);
  return leads;
}

std::string ReducedLinearBasis::render(const VariableUniverse& universe) const {
  std::ostringstream os;
  os << "{";
  for (int i = 0; i < size(); ++i) {
    if (i) os << ", ";
    os << rows_[i].render(universe);
  }
  os << "}";
  return os.str();
}

namespace {

// Substitutes away every term sitting at a leading position of `rows`. Rows
// are monic with ascending tails, so one forward sweep suffices.
void reduce_against(LinearForm& f, const std::map<int, LinearForm>& rows) {
  std::size_t i = 0;
  while (i < f.terms().size()) {
    int pos = f.terms()[i].first;
    auto it = rows.find(pos);
    if (it == rows.end()) {
      ++i;
      continue;
    }
    Rational c = f.terms()[i].second;
    f.axpy(-c, it->second);  // removes the term at pos; new terms land after it
  }
}

}  // namespace

ReducedLinearBasis reduce(const std::vector<LinearForm>& forms) {
  std::map<int, LinearForm> rows;  // leading position -> monic fully reduced row
  for (const LinearForm& input : forms) {
    LinearForm f = input;
    reduce_against(f, rows);
    if (f.is_zero()) continue;
    const auto& [lead, lead_coeff] = f.leading();
    f.scale(lead_coeff.inverse());
    // Back substitution keeps every existing row free of the new lead.
    for (auto& [_, row] : rows) {
      Rational c = row.coeff(lead);
      if (!c.is_zero()) row.axpy(-c, f);
    }
    rows.emplace(lead, std::move(f));
  }
  ReducedLinearBasis basis;
  basis.rows_.reserve(rows.size());
  for (auto& [lead, row] : rows) {
    basis.lead_to_row_[lead] = static_cast<int>(basis.rows_.size());
    basis.rows_.push_back(std::move(row));
  }
  return basis;
}

LinearForm normal_form(LinearForm f, const ReducedLinearBasis& basis) {
  std::size_t i = 0;
  while (i < f.terms().size()) {
    int pos = f.terms()[i].first;
    if (!basis.has_lead(pos)) {
      ++i;
      continue;
    }
    Rational c = f.terms()[i].second;
    f.axpy(-c, basis.row_for_lead(pos));
  }
  return f;
}

ReducedLinearBasis eliminate(const ReducedLinearBasis& basis, const std::vector<int>& keep,
                             int universe_size) {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  int first_kept = universe_size - static_cast<int>(sorted.size());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    if (sorted[i] != first_kept + i)
      throw OrderViolation(
          "kept variables must all rank below the dropped ones (a suffix of the order)");
  }
  // A reduced row whose lead is a kept variable cannot touch dropped ones:
  // dropped variables are greater than the lead, and the lead comes first.
  ReducedLinearBasis kept;
  for (const LinearForm& row : basis.rows()) {
    if (row.leading().first < first_kept) continue;
    kept.lead_to_row_[row.leading().first] = static_cast<int>(kept.rows_.size());
    kept.rows_.push_back(row);
  }
  return kept;
}

//---------------------------------------------------------------------------
// Basis extraction (subspaces and quotients)
//---------------------------------------------------------------------------

BilinearNormalForm bilinear_normal_form(const ReducedLinearBasis& basis, int ambient_dim) {
  BilinearNormalForm nf;
  std::vector<bool> is_lead(ambient_dim, false);
  for (int pos : basis.leading_positions()) is_lead.at(pos) = true;
  for (int j = 0; j < ambient_dim; ++j) {
    if (is_lead[j]) continue;
    LinearForm h = LinearForm::unit(j);
    for (const LinearForm& row : basis.rows()) {
      Rational c = row.coeff(j);
      if (!c.is_zero()) h.add(row.leading().first, -c);
    }
    nf.free_positions.push_back(j);
    nf.coefficient_forms.push_back(std::move(h));
  }
  return nf;
}

std::string BilinearNormalForm::render(const VariableUniverse& x_universe,
                                       const VariableUniverse& y_universe) const {
  std::ostringstream os;
  for (std::size_t j = 0; j < free_positions.size(); ++j) {
    if (j) os << "\n";
    os << "[" << x_universe.name(free_positions[j])
       << "]: " << coefficient_forms[j].render(y_universe);
  }
  return os.str();
}

std::vector<std::vector<Rational>> span_to_basis(const std::vector<std::vector<Rational>>& vectors,
                                                 int ambient_dim) {
  std::vector<LinearForm> forms;
  forms.reserve(vectors.size());
  for (const auto& v : vectors) forms.push_back(LinearForm::from_vector(v));
  ReducedLinearBasis basis = reduce(forms);
  std::vector<std::vector<Rational>> out;
  out.reserve(basis.size());
  for (const LinearForm& row : basis.rows()) out.push_back(row.to_vector(ambient_dim));
  return out;
}

std::vector<std::vector<Rational>> cartesian_to_basis(const std::vector<LinearForm>& equations,
                                                      int ambient_dim) {
  ReducedLinearBasis g = reduce(equations);
  BilinearNormalForm nf = bilinear_normal_form(g, ambient_dim);
  std::vector<std::vector<Rational>> out;
  out.reserve(nf.coefficient_forms.size());
  for (const LinearForm& h : nf.coefficient_forms) out.push_back(h.to_vector(ambient_dim));
  return out;
}

std::vector<std::vector<Rational>> quotient_basis(
    const std::vector<std::vector<Rational>>& v_vectors,
    const std::vector<std::vector<Rational>>& w_vectors, int ambient_dim) {
  std::vector<LinearForm> v_forms, w_forms;
  v_forms.reserve(v_vectors.size());
  for (const auto& v : v_vectors) v_forms.push_back(LinearForm::from_vector(v));
  w_forms.reserve(w_vectors.size());
  for (const auto& w : w_vectors) w_forms.push_back(LinearForm::from_vector(w));

  ReducedLinearBasis basis_v = reduce(v_forms);
  ReducedLinearBasis basis_w = reduce(w_forms);
  for (const LinearForm& w : w_forms) {
    if (!normal_form(w, basis_v).is_zero())
      throw NotContained("W is not contained in V");
  }

  std::vector<LinearForm> nf_forms;
  nf_forms.reserve(basis_v.size());
  for (const LinearForm& f : basis_v.rows()) nf_forms.push_back(normal_form(f, basis_w));
  ReducedLinearBasis quotient = reduce(nf_forms);

  if (quotient.size() != basis_v.size() - basis_w.size())
    throw std::logic_error("quotient basis cardinality " + std::to_string(quotient.size()) +
                           " does not match dim V - dim W = " +
                           std::to_string(basis_v.size() - basis_w.size()));

  std::vector<std::vector<Rational>> out;
  out.reserve(quotient.size());
  for (const LinearForm& row : quotient.rows()) out.push_back(row.to_vector(ambient_dim));
  return out;
}

}  // namespace lsac
