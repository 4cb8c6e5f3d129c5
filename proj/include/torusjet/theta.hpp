#pragma once

// The averaged lattice derivative Θ^k f(x), an average of order-k differences
// along signed basis vectors. Its value on a lattice-basis tuple e_ι is
//
//     2^{-k} Σ_{α ∈ {0,1}^k} Δ^k_{e_ι} f(x - α·e_ι)
//   = 2^{-k} Δ^k_{(2e_{i_1}, ..., 2e_{i_k})} f(x - e_{i_1} - ... - e_{i_k}).
//
// theta() uses the first (2^k-term) form; theta_centered() the second;
// theta_alpha() exposes a single frame. The 2^d frame average matches the
// grouped forms only when the axes of ι are pairwise distinct.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "torusjet/diffcalc.hpp"
#include "torusjet/error.hpp"
#include "torusjet/polyalg.hpp"

namespace torusjet {

namespace detail {

inline void check_axes(std::span<const int> iota, const LatticeSpec& spec) {
  for (int i : iota)
    if (i < 0 || static_cast<std::size_t>(i) >= spec.dim()) throw InvalidInput("bad axis index");
}

inline MultiVector axis_multivector(std::span<const int> iota, const LatticeSpec& spec,
                                    long scale = 1) {
  MultiVector u;
  u.reserve(iota.size());
  for (int i : iota) u.push_back(spec.basis_vector(static_cast<std::size_t>(i), scale));
  return u;
}

}  // namespace detail

/// Frame-α value on the positive basis: (-1)^{Σ_j α_{i_j}} Δ^k_{((-1)^{α_{i_1}} e_{i_1}, ...)} f(x).
/// alpha holds d binary digits; iota holds k 0-based axes.
template <LatticeField F>
double theta_alpha(const F& f, const LatticeSpec& spec, const LatticePoint& x,
                   std::span<const int> alpha, std::span<const int> iota) {
  detail::check_axes(iota, spec);
  if (alpha.size() != spec.dim()) throw InvalidInput("frame must have d digits");
  MultiVector u;
  int flips = 0;
  for (int i : iota) {
    const int a = alpha[static_cast<std::size_t>(i)];
    flips += a;
    u.push_back(spec.basis_vector(static_cast<std::size_t>(i), a ? -1 : 1));
  }
  const double v = delta_k(f, std::span<const LatticeVector>(u), x);
  return flips % 2 == 0 ? v : -v;
}

/// Θ^k f(x)(e_{i_1}, ..., e_{i_k}) on the lattice basis, 2^k-term form.
template <LatticeField F>
double theta_lattice_value(const F& f, const LatticeSpec& spec, const LatticePoint& x,
                           std::span<const int> iota) {
  detail::check_axes(iota, spec);
  const std::size_t k = iota.size();
  const MultiVector u = detail::axis_multivector(iota, spec);
  double sum = 0.0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    LatticePoint p = x;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << (k - 1 - i))) p = p - u[i];
    sum += delta_k(f, std::span<const LatticeVector>(u), p);
  }
  return std::ldexp(sum, -static_cast<int>(k));
}

/// 2^{-k} Δ^k_{(2e_{i_1}, ..., 2e_{i_k})} f(x - e_{i_1} - ... - e_{i_k}).
template <LatticeField F>
double theta_centered(const F& f, const LatticeSpec& spec, const LatticePoint& x,
                      std::span<const int> iota) {
  detail::check_axes(iota, spec);
  const MultiVector u2 = detail::axis_multivector(iota, spec, 2);
  LatticePoint start = x;
  for (int i : iota) start = start - spec.basis_vector(static_cast<std::size_t>(i));
  return std::ldexp(delta_k(f, std::span<const LatticeVector>(u2), start),
                    -static_cast<int>(iota.size()));
}

/// Θ^k f(x) as a symmetric tensor on the standard basis of R^d.
template <LatticeField F>
SymTensor theta(const F& f, const LatticeSpec& spec, const LatticePoint& x, int k) {
  if (k < 0) throw InvalidInput("order must be nonnegative");
  const int d = static_cast<int>(spec.dim());
  if (k == 0) return SymTensor::constant(f(x), d);
  SymTensor out(k, d);
  for (const auto& idx : out.sorted_indices()) {
    double scale = 1.0;
    for (int i : idx) scale *= spec.resolution(static_cast<std::size_t>(i));
    out.set(idx, theta_lattice_value(f, spec, x, idx) * scale);
  }
  return out;
}

SymTensor theta(const LatticeFunction& f, const LatticePoint& x, int k);

struct ThetaReport {
  int k = 0;
  double value = 0.0;
  MultiIndex witness_iota;
  std::optional<LatticePoint> witness_x;
};

/// ‖Θ^k f‖_S: max over x ∈ S and axis tuples ι of |Θ^k f(x)(e_ι)| / ‖e_ι‖^k.
/// Sign flips of basic vectors only flip the sign, so B^k reduces to axis tuples.
template <LatticeField F, class Sites>
ThetaReport theta_norm(const F& f, const LatticeSpec& spec, int k, const Sites& s) {
  ThetaReport report;
  report.k = k;
  const SymTensor shape(k, static_cast<int>(spec.dim()));
  for (const auto& x : s) {
    for (const auto& idx : shape.sorted_indices()) {
      double scale = 1.0;
      for (int i : idx) scale *= spec.basis_norm(static_cast<std::size_t>(i));
      const double q =
          (k == 0 ? std::abs(f(x)) : std::abs(theta_lattice_value(f, spec, x, idx))) / scale;
      if (!report.witness_x || q > report.value) {
        report.value = q;
        report.witness_iota = idx;
        report.witness_x = x;
      }
    }
  }
  return report;
}

ThetaReport theta_norm(const LatticeFunction& f, int k, const SiteSet& s);

/// c^{m,k}_r = (-1)^{m-k+r_0} if r_1, ..., r_k are all odd, else 0.
/// r has k+1 entries summing to m.
int correction_coefficient(int m, int k, std::span<const int> r);

/// Admissible correction indices: r ∈ N^{k+1}, Σ r = total, r_1..r_k odd, some r_i > 1.
std::vector<std::vector<int>> correction_indices(int total, int k);

/// Θ_u^k of diag(ξ) at x (ξ of degree m >= k): the derivative term
/// m!/(m-k)! ξ(x^{(m-k)}, u) plus the odd-index corrections.
double theta_of_homogeneous(const SymTensor& xi, int k, std::span<const double> x,
                            std::span<const RealVector> u);

/// Θ_u^k p(x) for real u: 2^{-k} Σ_α (-1)^{k-|α|} p(x + 2α·u - Σ_i u_i).
double centered_difference(const RealOracle& p, std::span<const double> x,
                           std::span<const RealVector> u);

/// (Θ_u^m - D_u^m)(Pa - Pb)(x), m = |u|, expanded around base point y: sum
/// over r ∈ N^{m+1} with r_1..r_m odd, some r_i > 1 and m+2 <= Σr <= K of
/// (-1)^{Σr-m+r_0} / (r_0!···r_m!) · D^{Σr}_{((x-y)^{(r_0)}, u_1^{(r_1)}, ...)}(Pa - Pb)(y).
double remainder_term(const Jet& pa, const Jet& pb, std::span<const double> x,
                      std::span<const double> y, std::span<const RealVector> u);

}  // namespace torusjet
