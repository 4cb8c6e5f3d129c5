#include "torusjet/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "torusjet/error.hpp"
#include "torusjet/parallel.hpp"

namespace torusjet {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_dims(std::span<const RealVector> u, std::size_t d) {
  for (const auto& v : u)
    if (v.size() != d) throw InvalidInput("dimension mismatch");
}

}  // namespace

SmoothTestFunction SmoothTestFunction::polynomial(Jet p) {
  if (p.parts.empty()) throw InvalidInput("polynomial needs at least a constant part");
  return SmoothTestFunction(std::move(p));
}

SmoothTestFunction SmoothTestFunction::sinusoid(double amplitude, RealVector omega, double phase) {
  if (omega.empty()) throw InvalidInput("frequency vector must be nonempty");
  return SmoothTestFunction(Sinusoid{amplitude, std::move(omega), phase});
}

int SmoothTestFunction::dim() const {
  if (const auto* p = std::get_if<Jet>(&kind_)) return p->dim();
  return static_cast<int>(std::get<Sinusoid>(kind_).omega.size());
}

std::optional<int> SmoothTestFunction::degree() const {
  if (const auto* p = std::get_if<Jet>(&kind_)) return p->top_degree();
  return std::nullopt;
}

double SmoothTestFunction::value(std::span<const double> x) const {
  if (x.size() != static_cast<std::size_t>(dim())) throw InvalidInput("dimension mismatch");
  if (const auto* p = std::get_if<Jet>(&kind_)) return poly_eval(*p, x);
  const auto& s = std::get<Sinusoid>(kind_);
  return s.amplitude * std::sin(dot(s.omega, x) + s.phase);
}

double SmoothTestFunction::derivative(std::span<const RealVector> u,
                                      std::span<const double> x) const {
  check_dims(u, x.size());
  if (const auto* p = std::get_if<Jet>(&kind_))
    return poly_directional_derivative(*p, static_cast<int>(u.size()), u, x);
  const auto& s = std::get<Sinusoid>(kind_);
  double factor = s.amplitude;
  for (const auto& v : u) factor *= dot(s.omega, v);
  const double shift = static_cast<double>(u.size()) * std::numbers::pi / 2;
  return factor * std::sin(dot(s.omega, x) + s.phase + shift);
}

std::optional<double> SmoothTestFunction::known_lip(int k) const {
  if (k < 1) throw InvalidInput("order k must be at least 1");
  if (const auto* p = std::get_if<Jet>(&kind_)) {
    if (p->top_degree() > k) return std::nullopt;
    if (p->top_degree() < k) return 0.0;
    return factorial(k) * tensor_norm(p->parts.back());
  }
  const auto& s = std::get<Sinusoid>(kind_);
  double w = 0.0;
  for (double o : s.omega) w = std::max(w, std::abs(o));
  return std::abs(s.amplitude) * std::pow(w, k);
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre01(int n) {
  if (n < 1) throw InvalidInput("node count must be positive");
  std::vector<double> nodes(static_cast<std::size_t>(n)), weights(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // map [-1, 1] to [0, 1]
    nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - x);
    weights[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return {nodes, weights};
}

int quadrature_nodes(const SmoothTestFunction& f) {
  if (const auto deg = f.degree()) return std::max(1, (*deg + 2) / 2);
  return 16;
}

double real_difference(const SmoothTestFunction& f, std::span<const RealVector> u,
                       std::span<const double> x) {
  check_dims(u, x.size());
  return real_delta_k([&](std::span<const double> y) { return f.value(y); }, x, u);
}

std::pair<double, double> quadrature_mvt(const SmoothTestFunction& f, std::span<const RealVector> u,
                                         std::span<const double> x) {
  const double lhs = real_difference(f, u, x);
  const auto [nodes, weights] = gauss_legendre01(quadrature_nodes(f));
  const std::size_t k = u.size();
  const std::size_t n = nodes.size();
  std::vector<std::size_t> idx(k, 0);
  double rhs = 0.0;
  RealVector y(x.size());
  for (;;) {
    double w = 1.0;
    std::copy(x.begin(), x.end(), y.begin());
    for (std::size_t i = 0; i < k; ++i) {
      w *= weights[idx[i]];
      for (std::size_t c = 0; c < y.size(); ++c) y[c] += nodes[idx[i]] * u[i][c];
    }
    rhs += w * f.derivative(u, y);
    std::size_t a = 0;
    while (a < k && ++idx[a] == n) idx[a++] = 0;
    if (a == k) break;
  }
  return {lhs, rhs};
}

std::vector<RealVector> divide_multivector(std::span<const RealVector> u, std::span<const long> n) {
  if (u.size() != n.size()) throw InvalidInput("n must have one entry per direction");
  std::vector<RealVector> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (n[i] < 1) throw InvalidInput("n_i >= 1 required");
    RealVector v = u[i];
    for (auto& c : v) c /= static_cast<double>(n[i]);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

double product(std::span<const long> n) {
  double p = 1.0;
  for (long v : n) p *= static_cast<double>(v);
  return p;
}

double averaging_bound(std::span<const RealVector> u, double seminorm_kplus1) {
  double widest = 0.0, prod = 1.0;
  for (const auto& v : u) {
    const double nv = sum_norm(v);
    widest = std::max(widest, nv);
    prod *= nv;
  }
  return 0.5 * static_cast<double>(u.size()) * seminorm_kplus1 * widest * prod;
}

}  // namespace

double net_derivative(const SmoothTestFunction& f, std::span<const double> x,
                      std::span<const RealVector> u, std::span<const long> n) {
  const auto v = divide_multivector(u, n);
  return product(n) * real_difference(f, v, x);
}

GapBound lemma4_gap(const SmoothTestFunction& f, std::span<const double> x,
                    std::span<const RealVector> u, std::span<const long> n, double seminorm_kplus1) {
  const double direct = real_difference(f, u, x);
  const double net = net_derivative(f, x, u, n);
  return {std::abs(direct - net), averaging_bound(u, seminorm_kplus1)};
}

GapBound lemma5_gap(const SmoothTestFunction& f, std::span<const double> x,
                    std::span<const RealVector> u, std::span<const long> n,
                    std::span<const long> p, double seminorm_kplus1) {
  if (n.size() != p.size()) throw InvalidInput("n and p must have equal length");
  const auto up = divide_multivector(u, p);
  const auto inner = lemma4_gap(f, x, up, n, seminorm_kplus1);
  const double pbar = product(p);
  return {pbar * inner.gap, pbar * inner.bound};
}

double lemma3_sum(int k, std::span<const long> n) {
  if (k < 0 || static_cast<std::size_t>(k) != n.size()) throw InvalidInput("n must have k entries");
  double inv = 0.0;
  for (long v : n) {
    if (v < 1) throw InvalidInput("n_i >= 1 required");
    inv += 1.0 / static_cast<double>(v);
  }
  return product(n) / 2.0 * (k - inv);
}

Theorem1Gap theorem1_gap(const SmoothTestFunction& f, int k, const Window& window, int samples) {
  const auto d = static_cast<std::size_t>(f.dim());
  if (window.lo.size() != d || window.hi.size() != d) throw InvalidInput("window dimension mismatch");
  if (samples < k || samples < 1) throw InvalidInput("samples must be at least k");
  const auto lip = f.known_lip(k);
  if (!lip) throw InvalidInput("no closed-form Lipschitz constant for this function");

  RealVector h(d);
  for (std::size_t i = 0; i < d; ++i) {
    h[i] = (window.hi[i] - window.lo[i]) / samples;
    if (!(h[i] > 0.0)) throw InvalidInput("window must have positive extent");
  }

  // direction tuples: every axis sequence of length k
  std::vector<std::vector<RealVector>> tuples;
  std::vector<double> norms;
  std::vector<std::size_t> axes(static_cast<std::size_t>(k), 0);
  for (;;) {
    std::vector<RealVector> u;
    double norm = 1.0;
    for (auto a : axes) {
      RealVector v(d, 0.0);
      v[a] = h[a];
      norm *= h[a];
      u.push_back(std::move(v));
    }
    tuples.push_back(std::move(u));
    norms.push_back(norm);
    std::size_t pos = 0;
    while (pos < axes.size() && ++axes[pos] == d) axes[pos++] = 0;
    if (pos == axes.size()) break;
  }

  const auto per_axis = static_cast<std::size_t>(samples - k + 1);
  std::size_t count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= per_axis;
  std::vector<double> best(count, 0.0);
  parallel_for(count, [&](std::size_t idx) {
    RealVector x(d);
    std::size_t rest = idx;
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = window.lo[i] + static_cast<double>(rest % per_axis) * h[i];
      rest /= per_axis;
    }
    for (std::size_t t = 0; t < tuples.size(); ++t)
      best[idx] = std::max(best[idx], std::abs(real_difference(f, tuples[t], x)) / norms[t]);
  });
  Theorem1Gap out;
  out.known_lip = *lip;
  for (double b : best) out.sampled = std::max(out.sampled, b);
  return out;
}

}  // namespace torusjet
