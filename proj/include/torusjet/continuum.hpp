#pragma once

// Smooth test functions on R^d with exact directional derivatives, and the
// open-domain checks built on them: mean-value quadrature for Δ_u^k, the
// net-limit derivative n̄ Δ_{u/n}^k, the averaging gap bounds, and sampled
// k-th difference seminorms against known Lipschitz constants.

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "torusjet/polyalg.hpp"

namespace torusjet {

/// A sin(ω·x + φ).
struct Sinusoid {
  double amplitude = 1.0;
  RealVector omega;
  double phase = 0.0;
};

class SmoothTestFunction {
 public:
  static SmoothTestFunction polynomial(Jet p);
  static SmoothTestFunction sinusoid(double amplitude, RealVector omega, double phase = 0.0);

  int dim() const;
  bool is_polynomial() const { return std::holds_alternative<Jet>(kind_); }
  /// Top degree for polynomials.
  std::optional<int> degree() const;

  double value(std::span<const double> x) const;
  /// D_u^k f(x), k = u.size().
  double derivative(std::span<const RealVector> u, std::span<const double> x) const;

  /// Lip(D^{k-1} f) in the sum-norm, when available in closed form:
  /// |A| ‖ω‖_∞^k for sinusoids, k!·‖ξ_k‖ for polynomials of degree <= k.
  std::optional<double> known_lip(int k) const;

 private:
  explicit SmoothTestFunction(std::variant<Jet, Sinusoid> kind) : kind_(std::move(kind)) {}
  std::variant<Jet, Sinusoid> kind_;
};

/// Nodes and weights of n-point Gauss-Legendre quadrature on [0, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre01(int n);

/// Node count per axis: ceil((degree+1)/2) for polynomials (at least 1), 16 for sinusoids.
int quadrature_nodes(const SmoothTestFunction& f);

/// (Δ_u^k f(x), ∫_{[0,1]^k} D_u^k f(x + t·u) dt).
std::pair<double, double> quadrature_mvt(const SmoothTestFunction& f, std::span<const RealVector> u,
                                         std::span<const double> x);

/// Δ_u^k f(x) over real shifts.
double real_difference(const SmoothTestFunction& f, std::span<const RealVector> u,
                       std::span<const double> x);

/// u_i / n_i.
std::vector<RealVector> divide_multivector(std::span<const RealVector> u, std::span<const long> n);

/// n̄ Δ_{u/n}^k f(x).
double net_derivative(const SmoothTestFunction& f, std::span<const double> x,
                      std::span<const RealVector> u, std::span<const long> n);

struct GapBound {
  double gap = 0.0;
  double bound = 0.0;
};

/// gap = |Δ_u^k f(x) - n̄ Δ_{u/n}^k f(x)|,
/// bound = (k/2) S max_i ‖u_i‖ Π_i ‖u_i‖ with S >= ‖Δ^{k+1} f‖.
GapBound lemma4_gap(const SmoothTestFunction& f, std::span<const double> x,
                    std::span<const RealVector> u, std::span<const long> n, double seminorm_kplus1);

/// gap = |p̄ Δ_{u/p}^k f(x) - p̄ n̄ Δ_{u/(n∗p)}^k f(x)|; bound is p̄ times the
/// previous bound with u/p in place of u.
GapBound lemma5_gap(const SmoothTestFunction& f, std::span<const double> x,
                    std::span<const RealVector> u, std::span<const long> n,
                    std::span<const long> p, double seminorm_kplus1);

/// Σ_{j ∈ [n]} Σ_i j_i/n_i in closed form: (n̄/2)(k - Σ_i 1/n_i).
double lemma3_sum(int k, std::span<const long> n);

struct Window {
  RealVector lo;
  RealVector hi;
};

struct Theorem1Gap {
  double sampled = 0.0;
  double known_lip = 0.0;
};

/// Sampled sup of |Δ_u^k f(x)| / Π‖u_i‖ over the grid h = (hi - lo)/samples:
/// x = lo + j∘h with 0 <= j_i <= samples - k, u_i ∈ {h_a ε_a}. Doubling
/// samples nests the grids, so the estimate is nondecreasing. Throws
/// InvalidInput if no closed-form Lipschitz constant is available.
Theorem1Gap theorem1_gap(const SmoothTestFunction& f, int k, const Window& window, int samples);

}  // namespace torusjet
