#pragma once

// Jets P_x attached to lattice sites by regressive induction: starting from
// g = f, for s = K, K-1, ..., 0 subtract the homogeneous part
// (1/s!) diag(Θ^s g(x))(· - x). The resulting family {P_x} is checked against
// the C^k-Whitney conditions
//   1. P_x(x) = f(x)
//   2. |D^m_{ε_I} P_x(x)| <= M
//   3. |D^m_{ε_I} (P_x - P_y)(x)| <= M ‖x - y‖^{k-m}
// and the smallest admissible constants are reported.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torusjet/diffcalc.hpp"
#include "torusjet/polyalg.hpp"
#include "torusjet/theta.hpp"

namespace torusjet {

/// g = f - h on Γ, with h a polynomial jet. Not periodic.
class ResidualField {
 public:
  ResidualField(LatticeFunction f, Jet subtracted);

  double operator()(const LatticePoint& p) const;

  const LatticeFunction& function() const { return f_; }
  const Jet& subtracted() const { return h_; }
  const LatticeSpec& spec() const { return f_.spec(); }

 private:
  LatticeFunction f_;
  Jet h_;
};

struct JetStep {
  SymTensor part;  // (1/s!) Θ^s g(x0), standard basis
  ResidualField residual;
};

/// One induction step of degree s at x0. The residual's subtracted jet must be
/// based at x0 and have top degree >= s.
JetStep subtract_jet_step(const ResidualField& g, const LatticePoint& x0, int s);

struct RadiusBound {
  double radius = 0.0;
  int order = 0;
  double ratio = 0.0;  // ‖Δ^i g‖_Σ / (r^{K-i+1} ‖Δ^{K+1} f‖_Γ)
};

struct JetDiagnostics {
  double max_theta_residual = 0.0;  // max_i max |Θ^i g(x)| coefficient
  double top_seminorm_f = 0.0;      // ‖Δ^{K+1} f‖_Γ
  double top_seminorm_g = 0.0;      // ‖Δ^{K+1} g‖ over the fundamental cell
  std::vector<RadiusBound> radius_bounds;
  double max_radius_ratio = 0.0;
};

struct JetBuild {
  Jet jet;
  ResidualField residual;
  JetDiagnostics diagnostics;
};

/// Regressive-induction jet of top degree K at x. For each supplied Σ the
/// scaled seminorms ‖Δ^i g‖_Σ are recorded in the diagnostics.
JetBuild build_jet(const LatticeFunction& f, const LatticePoint& x, int top_degree,
                   std::span<const SiteSet> sigmas = {});

/// Σ_{m=0}^K (1/m!) diag(Θ^m f(x))(y - x).
Jet closed_form_jet(const LatticeFunction& f, const LatticePoint& x, int top_degree);

/// Balls of radius ‖Γ‖, 2‖Γ‖, 4‖Γ‖ around x.
std::vector<SiteSet> default_balls(const LatticePoint& x, const LatticeSpec& spec);

enum class JetBuilder { recursive, closed_form };

/// Jets for every canonical site, in linear-index order.
std::vector<Jet> build_all_jets(const LatticeFunction& f, int top_degree,
                                JetBuilder builder = JetBuilder::recursive);

/// Representative of y nearest to x in the sum-norm; per-axis ties go to the
/// smaller coordinate.
LatticePoint nearest_image(const LatticePoint& y, const LatticePoint& x, const LatticeSpec& spec);

/// Jet of a canonical site, re-based at the representative rep.
Jet rebase(const Jet& jet, const LatticePoint& canonical, const LatticePoint& rep,
           const LatticeSpec& spec);

struct WhitneyWitness {
  LatticePoint x;
  LatticePoint y;
  int m = 0;
  MultiIndex direction;
  double quotient = 0.0;
};

struct WhitneyRow {
  int condition = 0;
  LatticePoint x;
  LatticePoint y;
  int m = 0;
  MultiIndex direction;
  double quotient = 0.0;
};

struct WhitneyReport {
  int r = 0;
  bool condition1_exact = true;
  double m1 = 0.0;  // max |P_x(x) - f(x)|
  double m2 = 0.0;
  double m3 = 0.0;
  double m_emp = 0.0;
  double seminorm = 0.0;  // ‖Δ^r f‖_Γ
  std::optional<double> ratio;
  std::optional<WhitneyWitness> witness1, witness2, witness3;
  int worst_condition = 0;
};

/// Checks conditions 1-3 for jets of degree r-1 at every site, for m = 0..r-1
/// and every sorted standard-basis direction tuple. Rows, if requested, get
/// one entry per (condition, x, y, m, direction).
WhitneyReport whitney_check(const LatticeFunction& f, int r,
                            JetBuilder builder = JetBuilder::recursive,
                            std::vector<WhitneyRow>* rows = nullptr);

/// M_emp / ‖Δ^r f‖_Γ. Throws DegenerateInput when the seminorm vanishes.
double constant_report(const LatticeFunction& f, int r);

}  // namespace torusjet
