#ifndef LSAC_ERRORS_HPP
#define LSAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lsac {

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct NotClosed : std::invalid_argument {
  explicit NotClosed(const std::string& what) : std::invalid_argument(what) {}
};

struct ParityMismatch : std::invalid_argument {
  explicit ParityMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct OrderViolation : std::invalid_argument {
  explicit OrderViolation(const std::string& what) : std::invalid_argument(what) {}
};

struct NotContained : std::invalid_argument {
  explicit NotContained(const std::string& what) : std::invalid_argument(what) {}
};

struct NotGraded : std::invalid_argument {
  explicit NotGraded(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", col " +
                           std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lsac

#endif
