#include "torusjet/diffcalc.hpp"

#include "torusjet/error.hpp"

namespace torusjet {

MultiVector scale_multivector(std::span<const LatticeVector> u, std::span<const long> n) {
  if (u.size() != n.size()) throw InvalidInput("multiplier length must equal order");
  MultiVector out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back(n[i] * u[i]);
  return out;
}

SeminormReport seminorm(const LatticeFunction& f, int k) {
  return seminorm(f, f.spec(), k, site_list(f.spec()));
}

SeminormReport seminorm(const LatticeFunction& f, int k, const SiteSet& s) {
  return seminorm(f, f.spec(), k, s);
}

double seminorm_at(const LatticeFunction& f, const MultiVector& u, const SiteSet& s) {
  return seminorm_at(f, std::span<const LatticeVector>(u), s);
}

double delta(const LatticeFunction& f, const LatticeVector& v, const LatticePoint& x) {
  return delta<LatticeFunction>(f, v, x);
}

double delta_k(const LatticeFunction& f, const MultiVector& u, const LatticePoint& x) {
  return delta_k(f, std::span<const LatticeVector>(u), x);
}

double delta_k_expansion(const LatticeFunction& f, const MultiVector& u, const LatticePoint& x) {
  return delta_k_expansion(f, std::span<const LatticeVector>(u), x);
}

std::vector<LatticePoint> restricted_domain(const GridPatchFunction& g, const MultiVector& u) {
  std::vector<LatticePoint> out;
  const std::size_t k = u.size();
  for (const auto& x : g.points()) {
    bool inside = true;
    for (std::size_t mask = 0; inside && mask < (std::size_t{1} << k); ++mask) {
      LatticePoint p = x;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) p = p + u[i];
      inside = g.contains(p);
    }
    if (inside) out.push_back(x);
  }
  return out;
}

SeminormReport patch_seminorm(const GridPatchFunction& g, int k) {
  SeminormReport report;
  report.k = k;
  for (const auto& u : basic_multivectors(g.spec(), k)) {
    const double scale = multi_norm(u, g.spec());
    for (const auto& x : restricted_domain(g, u)) {
      const double q = std::abs(delta_k(g, std::span<const LatticeVector>(u), x)) / scale;
      if (!report.witness_x || q > report.value) {
        report.value = q;
        report.witness_u = u;
        report.witness_x = x;
      }
    }
  }
  return report;
}

}  // namespace torusjet
