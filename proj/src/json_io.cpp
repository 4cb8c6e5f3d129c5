#include "torusjet/json_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "torusjet/error.hpp"

namespace torusjet {

namespace {

std::string join(const std::vector<long>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string axes_string(const MultiIndex& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(idx[i] + 1);
  }
  return s;
}

std::string multivector_string(const MultiVector& u) {
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) s += ' ';
    s += join(u[i].j, ';');
  }
  return s;
}

std::string number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

json to_json(const LatticeFunction& f) {
  return json{{"m", f.spec().m()}, {"values", f.values()}};
}

LatticeFunction function_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("values"))
    throw InvalidInput("lattice function JSON needs \"m\" and \"values\"");
  std::vector<int> m;
  std::vector<double> values;
  try {
    for (const auto& v : j.at("m")) {
      if (!v.is_number_integer()) throw InvalidInput("m entries must be integers");
      m.push_back(v.get<int>());
    }
    for (const auto& v : j.at("values")) {
      if (!v.is_number()) throw InvalidInput("values must be numbers");
      values.push_back(v.get<double>());
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed lattice function: ") + e.what());
  }
  return LatticeFunction(LatticeSpec(std::move(m)), std::move(values));
}

LatticeFunction read_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return function_from_json(j);
}

void write_function(const LatticeFunction& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(f).dump() << '\n';
}

std::string index_key(const MultiIndex& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(idx[i] + 1);
  }
  return s;
}

MultiIndex parse_index_key(const std::string& key) {
  MultiIndex idx;
  if (key.empty()) return idx;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      idx.push_back(std::stoi(part) - 1);
    } catch (const std::exception&) {
      throw InvalidInput("bad multi-index key \"" + key + "\"");
    }
  }
  return idx;
}

json to_json(const SymTensor& t) {
  json coeffs = json::object();
  for (const auto& idx : t.sorted_indices()) coeffs[index_key(idx)] = t.coeff(idx);
  return json{{"k", t.degree()}, {"coeffs", coeffs}};
}

SymTensor tensor_from_json(const json& j, int dim) {
  try {
    SymTensor t(j.at("k").get<int>(), dim);
    for (const auto& [key, value] : j.at("coeffs").items()) {
      const auto idx = parse_index_key(key);
      if (static_cast<int>(idx.size()) != t.degree()) throw InvalidInput("key length must equal k");
      for (int a : idx)
        if (a < 0 || a >= dim) throw InvalidInput("axis out of range in key \"" + key + "\"");
      t.set(idx, value.get<double>());
    }
    return t;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed tensor: ") + e.what());
  }
}

json to_json(const Jet& jet) {
  json parts = json::array();
  for (const auto& p : jet.parts) parts.push_back(to_json(p));
  return json{{"base", jet.base}, {"parts", parts}};
}

Jet jet_from_json(const json& j) {
  try {
    Jet jet;
    jet.base = j.at("base").get<RealVector>();
    for (const auto& p : j.at("parts")) jet.parts.push_back(tensor_from_json(p, jet.dim()));
    for (std::size_t s = 0; s < jet.parts.size(); ++s)
      if (jet.parts[s].degree() != static_cast<int>(s)) throw InvalidInput("parts must be ordered by degree");
    return jet;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed jet: ") + e.what());
  }
}

json to_json(const LatticePoint& p) { return p.j; }

json to_json(const MultiVector& u) {
  json a = json::array();
  for (const auto& v : u) a.push_back(v.j);
  return a;
}

json to_json(const SeminormReport& r) {
  return json{{"k", r.k},
              {"value", r.value},
              {"witness_u", to_json(r.witness_u)},
              {"witness_x", r.witness_x ? to_json(*r.witness_x) : json(nullptr)}};
}

json to_json(const ThetaReport& r) {
  json iota = json::array();
  for (int a : r.witness_iota) iota.push_back(a + 1);
  return json{{"k", r.k},
              {"value", r.value},
              {"witness_iota", iota},
              {"witness_x", r.witness_x ? to_json(*r.witness_x) : json(nullptr)}};
}

json to_json(const WhitneyWitness& w) {
  json dir = json::array();
  for (int a : w.direction) dir.push_back(a + 1);
  return json{{"x", to_json(w.x)}, {"y", to_json(w.y)}, {"m", w.m}, {"direction", dir},
              {"quotient", w.quotient}};
}

json to_json(const WhitneyReport& r) {
  auto opt = [](const std::optional<WhitneyWitness>& w) { return w ? to_json(*w) : json(nullptr); };
  json worst = nullptr;
  if (r.worst_condition == 1) worst = opt(r.witness1);
  if (r.worst_condition == 2) worst = opt(r.witness2);
  if (r.worst_condition == 3) worst = opt(r.witness3);
  return json{{"r", r.r},
              {"condition1_exact", r.condition1_exact},
              {"M1", r.m1},
              {"M2", r.m2},
              {"M3", r.m3},
              {"M_emp", r.m_emp},
              {"seminorm", r.seminorm},
              {"ratio", r.ratio ? json(*r.ratio) : json(nullptr)},
              {"worst_condition", r.worst_condition},
              {"witness", worst},
              {"witnesses", {{"condition1", opt(r.witness1)},
                             {"condition2", opt(r.witness2)},
                             {"condition3", opt(r.witness3)}}}};
}

json to_json(const TheoremAReport& r) {
  return json{{"seminorm", r.seminorm}, {"lip", r.lip}, {"ratio", r.ratio}, {"N", r.N}, {"s", r.s}};
}

json to_json(const JetBuild& b) {
  const auto& d = b.diagnostics;
  json bounds = json::array();
  for (const auto& rb : d.radius_bounds)
    bounds.push_back({{"radius", rb.radius}, {"order", rb.order}, {"ratio", rb.ratio}});
  return json{{"jet", to_json(b.jet)},
              {"diagnostics", {{"max_theta_residual", d.max_theta_residual},
                               {"top_seminorm_f", d.top_seminorm_f},
                               {"top_seminorm_g", d.top_seminorm_g},
                               {"radius_bounds", bounds},
                               {"max_radius_ratio", d.max_radius_ratio}}}};
}

void write_whitney_csv(std::ostream& out, const std::vector<WhitneyRow>& rows) {
  out << "condition,x,y,m,direction,quotient\n";
  for (const auto& r : rows)
    out << r.condition << ',' << join(r.x.j, ';') << ',' << join(r.y.j, ';') << ',' << r.m << ','
        << axes_string(r.direction) << ',' << number(r.quotient) << '\n';
}

void write_fine_grid_csv(std::ostream& out, const std::vector<FineGridRow>& rows) {
  out << "u,x,quotient\n";
  for (const auto& r : rows)
    out << multivector_string(r.u) << ',' << join(r.x.j, ';') << ',' << number(r.quotient) << '\n';
}

}  // namespace torusjet
