#include "torusjet/verify.hpp"

#include <algorithm>
#include <cmath>

#include "verify_detail.hpp"

namespace torusjet {

namespace suite {

bool Context::wants(int group) const {
  const auto& c = options_.criteria;
  return c.empty() || std::find(c.begin(), c.end(), group) != c.end();
}

void Context::check(const std::string& name, int group, double tolerance,
                    const std::function<void(Rng&, Recorder&)>& body) {
  if (!wants(group)) return;
  const auto& only = options_.only;
  if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) return;

  CheckResult r;
  r.name = name;
  r.group = group;
  r.tolerance = tolerance;
  r.seed = derive_seed(options_.seed, name);
  std::ostringstream repro;
  repro << "torusjet verify --seed " << options_.seed << " --trials " << options_.trials
        << " --max-d " << options_.max_d << " --max-k " << options_.max_k << " --only " << name;
  r.repro = repro.str();

  const auto start = std::chrono::steady_clock::now();
  Rng rng(r.seed);
  Recorder rec(r);
  try {
    body(rng, rec);
  } catch (const std::exception& e) {
    r.pass = false;
    if (r.failure.empty()) r.failure = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report_.checks.push_back(std::move(r));
}

void Context::measure(const std::string& name, int group, double value) {
  if (!wants(group)) return;
  if (!options_.only.empty()) return;
  report_.measurements.push_back({name, group, value});
}

LatticeSpec random_spec(Rng& rng, int max_d, int min_m, int max_m) {
  const int d = static_cast<int>(rng.integer(1, std::max(1, max_d)));
  std::vector<int> m(static_cast<std::size_t>(d));
  for (auto& mi : m) mi = static_cast<int>(rng.integer(min_m, max_m));
  return LatticeSpec(std::move(m));
}

LatticeVector random_vector(Rng& rng, const LatticeSpec& spec, long range, bool nonzero) {
  for (;;) {
    LatticeVector v = spec.zero_vector();
    for (auto& c : v.j) c = rng.integer(-range, range);
    if (!nonzero || !v.is_zero()) return v;
  }
}

MultiVector random_multivector(Rng& rng, const LatticeSpec& spec, int k, long range, bool nonzero) {
  MultiVector u;
  for (int i = 0; i < k; ++i) u.push_back(random_vector(rng, spec, range, nonzero));
  return u;
}

LatticePoint random_point(Rng& rng, const LatticeSpec& spec, long periods) {
  LatticePoint p = spec.origin();
  for (std::size_t i = 0; i < spec.dim(); ++i)
    p.j[i] = rng.integer(-periods * spec.resolution(i), periods * spec.resolution(i));
  return p;
}

LatticeVector random_basic(Rng& rng, const LatticeSpec& spec) {
  const auto basic = basic_vectors(spec);
  return basic[static_cast<std::size_t>(rng.integer(0, static_cast<long>(basic.size()) - 1))];
}

SiteSet random_sites(Rng& rng, const LatticeSpec& spec, const LatticePoint& x0, int extra) {
  SiteSet s{x0};
  for (int i = 0; i < extra; ++i) {
    LatticePoint p = x0;
    for (std::size_t a = 0; a < spec.dim(); ++a) p.j[a] += rng.integer(-spec.resolution(a), spec.resolution(a));
    s.insert(p);
  }
  return s;
}

RealVector random_real(Rng& rng, int dim, double lo, double hi) {
  RealVector v(static_cast<std::size_t>(dim));
  for (auto& c : v) c = rng.uniform(lo, hi);
  return v;
}

SymTensor random_tensor(Rng& rng, int degree, int dim) {
  SymTensor t(degree, dim);
  for (const auto& idx : t.sorted_indices()) t.set(idx, rng.uniform(-1.0, 1.0));
  return t;
}

Jet random_jet(Rng& rng, int dim, int top_degree) {
  Jet p = Jet::zero(random_real(rng, dim), top_degree);
  for (int s = 0; s <= top_degree; ++s) p.parts[static_cast<std::size_t>(s)] = random_tensor(rng, s, dim);
  return p;
}

namespace {

template <class Seq>
std::string list(const Seq& v) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& c : v) {
    if (!first) os << ',';
    os << c;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace

std::string describe(const LatticeSpec& spec) { return "m=" + list(spec.m()); }
std::string describe(const LatticePoint& p) { return "x=" + list(p.j); }
std::string describe(const RealVector& v) { return list(v); }

std::string describe(const MultiVector& u) {
  std::string s = "u=[";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + list(u[i].j);
  return s + "]";
}

double relative_error(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace suite

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

SuiteReport run_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.options = options;
  suite::Context ctx(options, report);
  suite::calculus_groups(ctx);
  suite::jet_groups(ctx);
  return report;
}

nlohmann::json to_json(const SuiteReport& report, bool timing) {
  using nlohmann::json;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json j{{"name", c.name},       {"group", c.group},         {"pass", c.pass},
           {"instances", c.instances}, {"worst", c.worst},     {"tolerance", c.tolerance},
           {"seed", c.seed}};
    if (!c.pass) j["failure"] = {{"detail", c.failure}, {"repro", c.repro}};
    if (timing) j["seconds"] = c.seconds;
    checks.push_back(std::move(j));
  }
  json measurements = json::object();
  for (const auto& m : report.measurements) measurements[m.name] = m.value;
  const auto& o = report.options;
  long failed = std::count_if(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return !c.pass; });
  return json{{"seed", o.seed},
              {"trials", o.trials},
              {"max_d", o.max_d},
              {"max_k", o.max_k},
              {"pass", report.all_pass()},
              {"checks_run", report.checks.size()},
              {"checks_failed", failed},
              {"checks", checks},
              {"measurements", measurements}};
}

}  // namespace torusjet
