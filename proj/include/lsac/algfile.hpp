#ifndef LSAC_ALGFILE_HPP
#define LSAC_ALGFILE_HPP

#include <string>

#include "lsac/algebra.hpp"

namespace lsac {

/// A parsed algebra definition: the ambient algebra h (as g.parent()), the
/// distinguished subalgebra g and the module V with its g-action.
struct AlgebraInput {
  std::string name;
  Subalgebra g;
  GModuleAction module;
  bool adjoint_module = true;  // true when the file declared "module adjoint"

  friend bool operator==(const AlgebraInput& a, const AlgebraInput& b) {
    return a.name == b.name && a.g == b.g && a.module == b.module &&
           a.adjoint_module == b.adjoint_module;
  }
};

/// Parses the line-oriented algebra definition format (see README for the
/// grammar). Throws ParseError with line/column on malformed input and
/// ValidationError carrying the violation list when the parsed table fails
/// the algebra, closure or module axioms (unless validate is false).
AlgebraInput parse_algebra_text(const std::string& text, bool validate = true);
AlgebraInput parse_algebra_file(const std::string& path, bool validate = true);

/// Canonical rendering; parse(render(x)) == x for every valid input.
std::string render_algebra_input(const AlgebraInput& input);

}  // namespace lsac

#endif
