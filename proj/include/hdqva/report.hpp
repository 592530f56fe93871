#pragma once

#include <map>
#include <string>
#include <vector>

#include "hdqva/symfunc.hpp"
#include "hdqva/verifier.hpp"

namespace hdqva {

/// One JSON object per line; rationals as "p/q" strings, keys sorted.
std::string report_json(const CheckReport& r);
/// Plain-text summary table.
std::string report_table(const std::vector<CheckReport>& reports);

/// {"lambda":[..],"basis":"p","terms":[{"mu":[..],"coeff":["c0","c1",..]}]}
std::string hl_json_power_sums(const Partition& lambda, const SymFuncP& q);
/// Same layout with "basis":"m" and "nvars"; mu indexes monomial symmetric functions.
std::string hl_json_monomials(const Partition& lambda, int nvars, const std::map<Partition, TSeries>& coeffs);
std::string hl_text_power_sums(const Partition& lambda, const SymFuncP& q);
std::string hl_text_monomials(const Partition& lambda, int nvars, const std::map<Partition, TSeries>& coeffs);

}  // namespace hdqva
