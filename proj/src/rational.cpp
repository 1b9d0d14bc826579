#include "lsac/rational.hpp"

#include <cctype>
#include <ostream>

namespace lsac {

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto digits_ok = [](const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::size_t num_start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
  if (!digits_ok(num, num_start))
    throw std::invalid_argument("bad rational literal: " + text);
  mpq_class v;
  if (slash == std::string::npos) {
    v = mpq_class(num);
  } else {
    std::string den = text.substr(slash + 1);
    if (!digits_ok(den, 0)) throw std::invalid_argument("bad rational literal: " + text);
    v = mpq_class(num + "/" + den);
    if (v.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  }
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
  // FNV-1a over the canonical text; canonical storage makes this well defined.
  std::string s = str();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace lsac
