#include "hdqva/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace hdqva {

namespace {

using nlohmann::json;

json coefficient_list(const TSeries& c) {
  json out = json::array();
  for (const auto& q : c.coeffs()) out.push_back(to_string(q));
  return out;
}

json terms_json(const std::map<Partition, TSeries>& terms) {
  json out = json::array();
  for (const auto& [mu, c] : terms) out.push_back({{"mu", mu}, {"coeff", coefficient_list(c)}});
  return out;
}

std::string terms_text(const std::string& prefix, const std::map<Partition, TSeries>& terms) {
  std::ostringstream os;
  for (const auto& [mu, c] : terms) os << "  " << prefix << to_string(mu) << "  " << c.to_string() << "\n";
  return os.str();
}

}  // namespace

std::string report_json(const CheckReport& r) {
  json mutations = json::array();
  if (r.params.mutations.flip_braiding_sign) mutations.push_back("flip_braiding_sign");
  if (r.params.mutations.drop_translation_map_in_jacobi) mutations.push_back("drop_translation_map_in_jacobi");
  if (r.params.mutations.perturb_D) mutations.push_back("perturb_D");
  json j{
      {"check_id", r.check_id},
      {"params",
       {{"t_order", r.params.t_order},
        {"gamma_order", r.params.gamma_order},
        {"degree_cap", r.params.degree_cap},
        {"window", r.params.window},
        {"charges", {r.params.charge_a, r.params.charge_b}},
        {"mutations", mutations}}},
      {"compared", r.compared},
      {"nonzero", r.nonzero},
      {"passed", r.passed},
      {"first_mismatch", nullptr},
      {"error", nullptr},
      {"elapsed_seconds", r.elapsed_seconds},
  };
  if (r.first_mismatch)
    j["first_mismatch"] = {{"where", r.first_mismatch->where}, {"lhs", r.first_mismatch->lhs}, {"rhs", r.first_mismatch->rhs}};
  if (r.error) j["error"] = *r.error;
  return j.dump();
}

std::string report_table(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(24) << "check" << std::setw(8) << "result" << std::right << std::setw(10) << "compared"
     << std::setw(10) << "nonzero" << std::setw(10) << "seconds" << "\n";
  for (const auto& r : reports) {
    os << std::left << std::setw(24) << r.check_id << std::setw(8) << (r.passed ? "PASS" : "FAIL") << std::right
       << std::setw(10) << r.compared << std::setw(10) << r.nonzero << std::setw(10) << std::fixed << std::setprecision(2)
       << r.elapsed_seconds << "\n";
    if (r.error) os << "  error: " << *r.error << "\n";
    if (r.first_mismatch)
      os << "  first mismatch " << r.first_mismatch->where << "\n    lhs: " << r.first_mismatch->lhs
         << "\n    rhs: " << r.first_mismatch->rhs << "\n";
  }
  return os.str();
}

std::string hl_json_power_sums(const Partition& lambda, const SymFuncP& q) {
  return json{{"lambda", lambda}, {"basis", "p"}, {"terms", terms_json(q.terms())}}.dump();
}

std::string hl_json_monomials(const Partition& lambda, int nvars, const std::map<Partition, TSeries>& coeffs) {
  return json{{"lambda", lambda}, {"basis", "m"}, {"nvars", nvars}, {"terms", terms_json(coeffs)}}.dump();
}

std::string hl_text_power_sums(const Partition& lambda, const SymFuncP& q) {
  return "Q" + to_string(lambda) + " in power sums:\n" + terms_text("p", q.terms());
}

std::string hl_text_monomials(const Partition& lambda, int nvars, const std::map<Partition, TSeries>& coeffs) {
  return "Q" + to_string(lambda) + " in monomial symmetric functions, " + std::to_string(nvars) + " variables:\n" +
         terms_text("m", coeffs);
}

}  // namespace hdqva
