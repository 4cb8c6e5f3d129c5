#pragma once

// Difference operators Δ_u, Δ_u^k on lattice fields and the seminorms
// ‖Δ_u^k f‖_Σ, ‖Δ^k f‖_Σ.
//
// A "field" is anything callable on a LatticePoint: a periodic
// LatticeFunction, a GridPatchFunction (throws off-patch), or a residual
// f - P that is no longer periodic.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "torusjet/lattice.hpp"

namespace torusjet {

template <class F>
concept LatticeField = requires(const F& f, const LatticePoint& p) {
  { f(p) } -> std::convertible_to<double>;
};

/// Δ_v f(x) = f(x + v) - f(x).
template <LatticeField F>
double delta(const F& f, const LatticeVector& v, const LatticePoint& x) {
  return f(x + v) - f(x);
}

/// Δ_u^k f(x) = (Δ_{u_1} ∘ ... ∘ Δ_{u_k}) f(x); the identity for k = 0.
template <LatticeField F>
double delta_k(const F& f, std::span<const LatticeVector> u, const LatticePoint& x) {
  if (u.empty()) return f(x);
  const auto rest = u.subspan(1);
  return delta_k(f, rest, x + u[0]) - delta_k(f, rest, x);
}

/// Σ_{α ∈ {0,1}^k} (-1)^{k-|α|} f(x + α·u), α in lexicographic order.
template <LatticeField F>
double delta_k_expansion(const F& f, std::span<const LatticeVector> u, const LatticePoint& x) {
  const std::size_t k = u.size();
  double sum = 0.0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    LatticePoint p = x;
    int ones = 0;
    for (std::size_t i = 0; i < k; ++i) {
      // α_1 is the most significant digit.
      if (mask & (std::size_t{1} << (k - 1 - i))) {
        p = p + u[i];
        ++ones;
      }
    }
    const double term = f(p);
    sum += ((k - ones) % 2 == 0) ? term : -term;
  }
  return sum;
}

/// (n ∗ u)_i = n_i u_i.
MultiVector scale_multivector(std::span<const LatticeVector> u, std::span<const long> n);

/// Σ_{j ∈ [n]} Δ_u^k f(x + j·u), j in lexicographic order.
template <LatticeField F>
double refinement_sum(const F& f, std::span<const LatticeVector> u, std::span<const long> n,
                      const LatticePoint& x) {
  const std::size_t k = u.size();
  std::vector<long> j(k, 0);
  double sum = 0.0;
  for (;;) {
    LatticePoint p = x;
    for (std::size_t i = 0; i < k; ++i) p = p + j[i] * u[i];
    sum += delta_k(f, u, p);
    std::size_t axis = k;
    while (axis > 0 && j[axis - 1] + 1 == n[axis - 1]) j[--axis] = 0;
    if (axis == 0) break;
    ++j[axis - 1];
  }
  return sum;
}

/// max_{x ∈ S} |Δ_u^k f(x)|; 0 for empty S.
template <LatticeField F, class Sites>
double seminorm_at(const F& f, std::span<const LatticeVector> u, const Sites& s) {
  double best = 0.0;
  for (const auto& x : s) best = std::max(best, std::abs(delta_k(f, u, x)));
  return best;
}

struct SeminormReport {
  int k = 0;
  double value = 0.0;
  MultiVector witness_u;
  std::optional<LatticePoint> witness_x;
};

/// ‖Δ^k f‖_S as the max over basic multivectors u ∈ B^k of ‖Δ_u^k f‖_S / ‖u‖^k.
/// For k = 0 this is sup_S |f|. The first maximiser in (B^k, S) order is the witness.
template <LatticeField F, class Sites>
SeminormReport seminorm(const F& f, const LatticeSpec& spec, int k, const Sites& s) {
  SeminormReport report;
  report.k = k;
  for (const auto& u : basic_multivectors(spec, k)) {
    const double scale = multi_norm(u, spec);
    for (const auto& x : s) {
      const double q = std::abs(delta_k(f, std::span<const LatticeVector>(u), x)) / scale;
      if (!report.witness_x || q > report.value) {
        report.value = q;
        report.witness_u = u;
        report.witness_x = x;
      }
    }
  }
  return report;
}

/// ‖Δ^k f‖_Γ for a periodic function (S = all canonical sites).
SeminormReport seminorm(const LatticeFunction& f, int k);
SeminormReport seminorm(const LatticeFunction& f, int k, const SiteSet& s);
double seminorm_at(const LatticeFunction& f, const MultiVector& u, const SiteSet& s);
double delta(const LatticeFunction& f, const LatticeVector& v, const LatticePoint& x);
double delta_k(const LatticeFunction& f, const MultiVector& u, const LatticePoint& x);
double delta_k_expansion(const LatticeFunction& f, const MultiVector& u, const LatticePoint& x);

/// Γ^u for a patch: points x with x + α·u inside the patch for every α ∈ {0,1}^k.
std::vector<LatticePoint> restricted_domain(const GridPatchFunction& g, const MultiVector& u);

/// ‖Δ^k g‖ over the patch, each u restricted to its own domain Γ^u.
SeminormReport patch_seminorm(const GridPatchFunction& g, int k);

}  // namespace torusjet
