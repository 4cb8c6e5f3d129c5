#pragma once

// JSON and CSV encodings of the library's values and reports. Parsing errors
// surface as InvalidInput.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "torusjet/extend.hpp"
#include "torusjet/whitney.hpp"

namespace torusjet {

using nlohmann::json;

json to_json(const LatticeFunction& f);
LatticeFunction function_from_json(const json& j);
LatticeFunction read_function(const std::string& path);
void write_function(const LatticeFunction& f, const std::string& path);

/// "i1,i2,..." with 1-based axes; "" for degree 0.
std::string index_key(const MultiIndex& idx);
MultiIndex parse_index_key(const std::string& key);

json to_json(const SymTensor& t);
SymTensor tensor_from_json(const json& j, int dim);
json to_json(const Jet& jet);
Jet jet_from_json(const json& j);

json to_json(const LatticePoint& p);
json to_json(const MultiVector& u);
json to_json(const SeminormReport& r);
json to_json(const ThetaReport& r);
json to_json(const WhitneyWitness& w);
json to_json(const WhitneyReport& r);
json to_json(const TheoremAReport& r);
json to_json(const JetBuild& b);

void write_whitney_csv(std::ostream& out, const std::vector<WhitneyRow>& rows);
void write_fine_grid_csv(std::ostream& out, const std::vector<FineGridRow>& rows);

}  // namespace torusjet
