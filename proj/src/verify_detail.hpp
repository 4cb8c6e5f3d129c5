#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>

#include "torusjet/lattice.hpp"
#include "torusjet/polyalg.hpp"
#include "torusjet/random.hpp"
#include "torusjet/verify.hpp"

namespace torusjet::suite {

// Collects errors for one check. An instance fails when its error exceeds the
// tolerance (or is NaN); the first failure is described for reproduction.
class Recorder {
 public:
  explicit Recorder(CheckResult& r) : r_(r) {}

  void observe(double error, const std::function<std::string()>& describe) {
    ++r_.instances;
    const bool bad = !(error <= r_.tolerance);
    if (!std::isnan(error)) r_.worst = std::max(r_.worst, error);
    if (bad && r_.pass) {
      r_.pass = false;
      std::ostringstream os;
      os << "instance " << r_.instances - 1 << ": " << describe() << " (error " << error << ")";
      r_.failure = os.str();
    }
  }

 private:
  CheckResult& r_;
};

class Context {
 public:
  explicit Context(const SuiteOptions& options, SuiteReport& report)
      : options_(options), report_(report) {}

  const SuiteOptions& options() const { return options_; }
  int trials() const { return options_.trials; }
  int max_d() const { return options_.max_d; }
  int max_k() const { return options_.max_k; }

  bool wants(int group) const;

  /// Runs body under a seed derived from the suite seed and the check name.
  void check(const std::string& name, int group, double tolerance,
             const std::function<void(Rng&, Recorder&)>& body);

  void measure(const std::string& name, int group, double value);

 private:
  const SuiteOptions& options_;
  SuiteReport& report_;
};

// Random instances.
LatticeSpec random_spec(Rng& rng, int max_d, int min_m, int max_m);
LatticeVector random_vector(Rng& rng, const LatticeSpec& spec, long range, bool nonzero = false);
MultiVector random_multivector(Rng& rng, const LatticeSpec& spec, int k, long range,
                               bool nonzero = false);
LatticePoint random_point(Rng& rng, const LatticeSpec& spec, long periods = 1);
LatticeVector random_basic(Rng& rng, const LatticeSpec& spec);
SiteSet random_sites(Rng& rng, const LatticeSpec& spec, const LatticePoint& x0, int extra);
RealVector random_real(Rng& rng, int dim, double lo = -1.0, double hi = 1.0);
SymTensor random_tensor(Rng& rng, int degree, int dim);
Jet random_jet(Rng& rng, int dim, int top_degree);

std::string describe(const LatticeSpec& spec);
std::string describe(const LatticePoint& p);
std::string describe(const MultiVector& u);
std::string describe(const RealVector& v);

double relative_error(double a, double b);

void calculus_groups(Context& ctx);
void jet_groups(Context& ctx);

}  // namespace torusjet::suite
