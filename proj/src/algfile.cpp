#include "lsac/algfile.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "lsac/errors.hpp"

namespace lsac {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::string cur;
  int start = 0;
  auto flush = [&](int end_col) {
    if (!cur.empty()) tokens.push_back({cur, start});
    cur.clear();
    start = end_col + 1;
  };
  for (int i = 0; i < static_cast<int>(line.size()); ++i) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == ',') {
      flush(i);
      continue;
    }
    if (c == '+' || c == '-') {
      // Signs split terms except inside a rational like "-3" or "3/-..";
      // a leading sign glues to the following numeral.
      bool glue = cur.empty() && i + 1 < static_cast<int>(line.size()) &&
                  std::isdigit(static_cast<unsigned char>(line[i + 1]));
      if (!glue) {
        flush(i);
        cur = std::string(1, c);
        start = i;
        flush(i);
        continue;
      }
    }
    if (cur.empty()) start = i;
    cur += c;
  }
  flush(static_cast<int>(line.size()));
  return tokens;
}

bool looks_numeric(const std::string& s) {
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  bool seen_slash = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/' && !seen_slash) {
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      std::vector<Token> tokens = tokenize(line);
      if (!tokens.empty()) lines_.push_back({number, std::move(tokens)});
    }
  }

  AlgebraInput run(bool validate);

 private:
  struct Line {
    int number;
    std::vector<Token> tokens;
  };

  [[noreturn]] void fail(const Line& line, int token, const std::string& what) const {
    int col = token < static_cast<int>(line.tokens.size()) ? line.tokens[token].column + 1 : 1;
    throw ParseError(what, line.number, col);
  }

  int basis_index(const Line& line, int token) const {
    auto it = index_of_.find(line.tokens[token].text);
    if (it == index_of_.end()) fail(line, token, "unknown basis id '" + line.tokens[token].text + "'");
    return it->second;
  }

  // combo := 0 | [sign] [coeff] id (('+'|'-') [coeff] id)*
  SparseVec parse_combo(const Line& line, int from,
                        const std::map<std::string, int>& ids) const {
    SparseVec out;
    const auto& toks = line.tokens;
    int i = from;
    if (i >= static_cast<int>(toks.size())) fail(line, i, "expected a combination");
    if (i + 1 == static_cast<int>(toks.size()) && toks[i].text == "0") return out;
    Rational sign(1);
    bool expect_term = true;
    while (i < static_cast<int>(toks.size())) {
      const std::string& t = toks[i].text;
      if (t == "+" || t == "-") {
        if (expect_term) {
          sign = sign * Rational(t == "-" ? -1 : 1);  // unary sign
        } else {
          sign = Rational(t == "-" ? -1 : 1);
          expect_term = true;
        }
        ++i;
        continue;
      }
      if (!expect_term) fail(line, i, "missing '+' or '-' between terms");
      Rational coeff = sign;
      if (looks_numeric(t)) {
        coeff = sign * Rational::parse(t);
        ++i;
        if (i >= static_cast<int>(toks.size())) fail(line, i, "coefficient without basis id");
      }
      auto it = ids.find(toks[i].text);
      if (it == ids.end()) fail(line, i, "unknown basis id '" + toks[i].text + "'");
      bool dup = false;
      for (auto& [idx, c] : out)
        if (idx == it->second) {
          c += coeff;
          dup = true;
        }
      if (!dup) out.emplace_back(it->second, coeff);
      sign = Rational(1);
      expect_term = false;
      ++i;
    }
    if (expect_term) fail(line, static_cast<int>(toks.size()), "dangling sign");
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& t2) { return t2.second.is_zero(); }),
              out.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  std::vector<Line> lines_;
  std::map<std::string, int> index_of_;
};

AlgebraInput Parser::run(bool validate) {
  std::string name;
  std::vector<std::string> basis_names;
  std::vector<Parity> parities;
  std::vector<std::optional<long>> weights;
  std::vector<LieSuperAlgebra::BracketEntry> entries;
  std::vector<int> sub_indices;
  bool have_sub = false;
  enum class ModuleKind { adjoint, explicit_table } module_kind = ModuleKind::adjoint;
  std::vector<std::string> vnames;
  std::map<std::string, int> vindex_of;
  std::vector<int> action_lines;

  enum class Section { start, basis, bracket, sub, module } section = Section::start;

  for (int li = 0; li < static_cast<int>(lines_.size()); ++li) {
    const Line& line = lines_[li];
    const std::string& head = line.tokens[0].text;

    if (head == "algebra") {
      if (section != Section::start || line.tokens.size() != 2)
        fail(line, 0, "expected a single 'algebra <name>' header first");
      name = line.tokens[1].text;
      section = Section::basis;
    } else if (head == "basis") {
      if (section != Section::basis) fail(line, 0, "'basis' lines must follow the header");
      if (line.tokens.size() < 2) fail(line, 1, "basis id missing");
      const std::string& id = line.tokens[1].text;
      if (index_of_.count(id)) fail(line, 1, "duplicate basis id '" + id + "'");
      Parity parity = Parity::even;
      std::optional<long> weight;
      for (std::size_t t = 2; t < line.tokens.size(); ++t) {
        const std::string& opt = line.tokens[t].text;
        if (opt == "odd") {
          parity = Parity::odd;
        } else if (opt == "even") {
          parity = Parity::even;
        } else if (opt == "weight") {
          if (t + 1 >= line.tokens.size() || !looks_numeric(line.tokens[t + 1].text))
            fail(line, static_cast<int>(t), "'weight' needs an integer");
          weight = std::stol(line.tokens[++t].text);
        } else {
          fail(line, static_cast<int>(t), "unknown basis option '" + opt + "'");
        }
      }
      index_of_[id] = static_cast<int>(basis_names.size());
      basis_names.push_back(id);
      parities.push_back(parity);
      weights.push_back(weight);
    } else if (head == "bracket") {
      if (section == Section::basis) section = Section::bracket;
      if (section != Section::bracket)
        fail(line, 0, "'bracket' lines must come right after the basis block");
      if (line.tokens.size() < 5 || line.tokens[3].text != "=")
        fail(line, 0, "expected 'bracket <x> <y> = <combination>'");
      int x = basis_index(line, 1);
      int y = basis_index(line, 2);
      entries.push_back({x, y, parse_combo(line, 4, index_of_)});
    } else if (head == "subalgebra") {
      if (section == Section::basis || section == Section::bracket) section = Section::sub;
      if (section != Section::sub || have_sub)
        fail(line, 0, "one 'subalgebra' line, after the brackets");
      if (line.tokens.size() < 2) fail(line, 1, "subalgebra members missing");
      for (std::size_t t = 1; t < line.tokens.size(); ++t)
        sub_indices.push_back(basis_index(line, static_cast<int>(t)));
      have_sub = true;
    } else if (head == "module") {
      if (section == Section::module) fail(line, 0, "duplicate 'module' block");
      section = Section::module;
      if (line.tokens.size() != 2 ||
          (line.tokens[1].text != "adjoint" && line.tokens[1].text != "explicit"))
        fail(line, 0, "expected 'module adjoint' or 'module explicit'");
      module_kind =
          line.tokens[1].text == "adjoint" ? ModuleKind::adjoint : ModuleKind::explicit_table;
    } else if (head == "vbasis") {
      if (section != Section::module || module_kind != ModuleKind::explicit_table)
        fail(line, 0, "'vbasis' lines belong to a 'module explicit' block");
      if (line.tokens.size() != 2) fail(line, 0, "expected 'vbasis <id>'");
      const std::string& id = line.tokens[1].text;
      if (vindex_of.count(id)) fail(line, 1, "duplicate module basis id '" + id + "'");
      vindex_of[id] = static_cast<int>(vnames.size());
      vnames.push_back(id);
    } else if (head == "action") {
      if (section != Section::module || module_kind != ModuleKind::explicit_table)
        fail(line, 0, "'action' lines belong to a 'module explicit' block");
      action_lines.push_back(li);
    } else {
      fail(line, 0, "unknown directive '" + head + "'");
    }
  }

  if (name.empty()) throw ParseError("missing 'algebra <name>' header", 1, 1);
  if (basis_names.empty()) throw ParseError("no basis declared", 1, 1);

  std::optional<std::vector<long>> grading;
  {
    int with_weight = 0;
    for (const auto& w : weights)
      if (w) ++with_weight;
    if (with_weight != 0 && with_weight != static_cast<int>(weights.size()))
      throw ParseError("either every basis vector carries a weight or none does", 1, 1);
    if (with_weight) {
      std::vector<long> g;
      for (const auto& w : weights) g.push_back(*w);
      grading = std::move(g);
    }
  }

  LieSuperAlgebra h(basis_names, parities, entries, grading);
  if (validate) {
    std::vector<std::string> violations = h.validate();
    if (!violations.empty()) {
      std::string msg = "algebra '" + name + "' fails validation:";
      for (const auto& v : violations) msg += "\n  " + v;
      throw ValidationError(msg);
    }
  }

  if (!have_sub)
    for (int i = 0; i < h.dim(); ++i) sub_indices.push_back(i);
  Subalgebra g(h, sub_indices);

  GModuleAction module = [&]() {
    if (module_kind == ModuleKind::adjoint) return GModuleAction::adjoint(g);
    if (vnames.empty()) throw ParseError("'module explicit' declares no vbasis", 1, 1);
    std::vector<std::vector<SparseVec>> action(g.dim(),
                                               std::vector<SparseVec>(vnames.size()));
    std::vector<std::vector<bool>> seen(g.dim(), std::vector<bool>(vnames.size(), false));
    std::map<std::string, int> member_of;
    for (int i = 0; i < g.dim(); ++i) member_of[g.name(i)] = i;
    for (int li : action_lines) {
      const Line& line = lines_[li];
      if (line.tokens.size() < 5 || line.tokens[3].text != "=")
        fail(line, 0, "expected 'action <g-id> <v-id> = <combination>'");
      auto git = member_of.find(line.tokens[1].text);
      if (git == member_of.end())
        fail(line, 1, "'" + line.tokens[1].text + "' is not a subalgebra member");
      auto vit = vindex_of.find(line.tokens[2].text);
      if (vit == vindex_of.end())
        fail(line, 2, "unknown module basis id '" + line.tokens[2].text + "'");
      if (seen[git->second][vit->second])
        fail(line, 0, "duplicate action entry");
      seen[git->second][vit->second] = true;
      action[git->second][vit->second] = parse_combo(line, 4, vindex_of);
    }
    return GModuleAction(vnames, std::move(action));
  }();

  if (validate) {
    std::vector<std::string> violations = module.validate(g);
    if (!violations.empty()) {
      std::string msg = "module of '" + name + "' fails validation:";
      for (const auto& v : violations) msg += "\n  " + v;
      throw ValidationError(msg);
    }
  }

  return AlgebraInput{name, std::move(g), std::move(module),
                      module_kind == ModuleKind::adjoint};
}

}  // namespace

AlgebraInput parse_algebra_text(const std::string& text, bool validate) {
  return Parser(text).run(validate);
}

AlgebraInput parse_algebra_file(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str(), validate);
}

std::string render_algebra_input(const AlgebraInput& input) {
  const Subalgebra& g = input.g;
  const LieSuperAlgebra& h = g.parent();
  std::ostringstream os;
  os << "algebra " << input.name << "\n\n";
  for (int i = 0; i < h.dim(); ++i) {
    os << "basis " << h.name(i);
    if (!h.is_even(i)) os << " odd";
    if (h.graded()) os << " weight " << h.weight(i);
    os << "\n";
  }
  os << "\n";
  for (int i = 0; i < h.dim(); ++i) {
    for (int j = i; j < h.dim(); ++j) {
      if (i == j && h.is_even(i)) continue;
      const SparseVec& b = h.bracket(i, j);
      if (b.empty()) continue;
      os << "bracket " << h.name(i) << " " << h.name(j) << " = "
         << render_sparse(b, h.names()) << "\n";
    }
  }
  os << "\nsubalgebra";
  for (int i = 0; i < g.dim(); ++i) os << " " << g.name(i);
  os << "\n";
  if (input.adjoint_module) {
    os << "module adjoint\n";
  } else {
    os << "module explicit\n";
    for (int l = 0; l < input.module.module_dim(); ++l)
      os << "vbasis " << input.module.name(l) << "\n";
    for (int i = 0; i < g.dim(); ++i) {
      for (int l = 0; l < input.module.module_dim(); ++l) {
        const SparseVec& a = input.module.act(i, l);
        if (a.empty()) continue;
        os << "action " << g.name(i) << " " << input.module.name(l) << " = "
           << render_sparse(a, input.module.names()) << "\n";
      }
    }
  }
  return os.str();
}

}  // namespace lsac
