#include "lsac/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace lsac {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string dims_line(const CohomologyResult& r) {
  std::ostringstream os;
  os << "k=" << r.degree << ": dim C=" << r.dim_c << " dim Z=" << r.dim_z
     << " dim B=" << r.dim_b << " dim H=" << r.dim_h;
  return os.str();
}

void print_basis(std::ostringstream& os, const std::string& label,
                 const std::vector<Cochain<Rational>>& basis, const AlgebraInput& in) {
  if (basis.empty()) return;
  os << "  " << label << ":\n";
  for (const auto& c : basis) os << "    " << render_cochain(c, in.g, in.module) << "\n";
}

void print_graded(std::ostringstream& os, const GradedCohomology& gc, const AlgebraInput& in) {
  os << "k=" << gc.degree << " (graded):\n";
  os << "  homogeneity |  dim C |  dim Z |  dim B |  dim H\n";
  for (const auto& [h, r] : gc.blocks) {
    os << "  " << std::setw(11) << h << " | " << std::setw(6) << r.dim_c << " | "
       << std::setw(6) << r.dim_z << " | " << std::setw(6) << r.dim_b << " | " << std::setw(6)
       << r.dim_h << "\n";
  }
  os << "  total: dim C=" << gc.total.dim_c << " dim Z=" << gc.total.dim_z
     << " dim B=" << gc.total.dim_b << " dim H=" << gc.total.dim_h << "\n";
  for (const auto& [h, r] : gc.blocks) {
    if (r.basis_h.empty()) continue;
    os << "  H^" << gc.degree << " basis at homogeneity " << h << ":\n";
    for (const auto& c : r.basis_h) os << "    " << render_cochain(c, in.g, in.module) << "\n";
  }
}

}  // namespace

std::string human_report(const RunReport& report) {
  const AlgebraInput& in = *report.input;
  std::ostringstream os;
  os << "algebra " << in.name << ": dim h=" << in.g.parent().dim() << " dim g=" << in.g.dim()
     << " module dim=" << in.module.module_dim()
     << (in.adjoint_module ? " (adjoint)" : " (explicit)") << "\n";
  if (report.graded) {
    for (const auto& gc : report.graded_results) print_graded(os, gc, in);
  } else {
    for (const auto& r : report.results) {
      os << dims_line(r) << "\n";
      print_basis(os, "H^" + std::to_string(r.degree) + " basis", r.basis_h, in);
    }
  }
  return os.str();
}

namespace {

using nlohmann::json;

json cochain_to_json(const Cochain<Rational>& c, const AlgebraInput& in) {
  json terms = json::array();
  for (const auto& [idx, coeff] : c.coeffs) {
    json term;
    json args = json::array();
    for (int e : idx.evens) args.push_back(in.g.name(e));
    for (int o : idx.odds) args.push_back(in.g.name(o));
    term["args"] = args;
    term["target"] = in.module.name(idx.target);
    term["coeff"] = coeff.str();
    terms.push_back(term);
  }
  return terms;
}

json basis_to_json(const std::vector<Cochain<Rational>>& basis, const AlgebraInput& in) {
  json out = json::array();
  for (const auto& c : basis) out.push_back(cochain_to_json(c, in));
  return out;
}

json result_to_json(const CohomologyResult& r, const AlgebraInput& in) {
  json out;
  out["degree"] = r.degree;
  out["dims"] = {{"C", r.dim_c}, {"Z", r.dim_z}, {"B", r.dim_b}, {"H", r.dim_h}};
  out["basis_Z"] = basis_to_json(r.basis_z, in);
  out["basis_B"] = basis_to_json(r.basis_b, in);
  out["basis_H"] = basis_to_json(r.basis_h, in);
  return out;
}

}  // namespace

std::string json_report(const RunReport& report) {
  const AlgebraInput& in = *report.input;
  json doc;
  doc["tool"] = {{"name", "lsac"}, {"version", kToolVersion}};
  {
    json input;
    input["path"] = report.input_path;
    input["hash"] = report.input_hash;
    input["name"] = in.name;
    json sub = json::array();
    for (int i = 0; i < in.g.dim(); ++i) sub.push_back(in.g.name(i));
    input["subalgebra"] = sub;
    input["dim_h"] = in.g.parent().dim();
    input["dim_g"] = in.g.dim();
    input["module_dim"] = in.module.module_dim();
    input["module"] = in.adjoint_module ? "adjoint" : "explicit";
    doc["input"] = input;
  }
  doc["flags"] = report.flags;
  if (report.graded) {
    json results = json::array();
    for (const auto& gc : report.graded_results) {
      json entry;
      entry["degree"] = gc.degree;
      json blocks = json::array();
      for (const auto& [h, r] : gc.blocks) {
        json block = result_to_json(r, in);
        block["homogeneity"] = h;
        blocks.push_back(block);
      }
      entry["blocks"] = blocks;
      entry["total"] = result_to_json(gc.total, in);
      results.push_back(entry);
    }
    doc["graded_results"] = results;
  } else {
    json results = json::array();
    for (const auto& r : report.results) results.push_back(result_to_json(r, in));
    doc["results"] = results;
  }
  return doc.dump(2) + "\n";
}

}  // namespace lsac
