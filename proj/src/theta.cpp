#include "torusjet/theta.hpp"

#include <cmath>
#include <numeric>

namespace torusjet {

namespace {

constexpr int kMaxCorrectionDegree = 8;

void odd_parts(int remaining, int slots, std::vector<int>& prefix,
               std::vector<std::vector<int>>& out) {
  if (slots == 0) {
    std::vector<int> r{remaining};
    r.insert(r.end(), prefix.begin(), prefix.end());
    out.push_back(std::move(r));
    return;
  }
  for (int v = 1; v <= remaining; v += 2) {
    prefix.push_back(v);
    odd_parts(remaining - v, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

double multinomial(std::span<const int> r) {
  const int total = std::accumulate(r.begin(), r.end(), 0);
  double v = factorial(total);
  for (int ri : r) v /= factorial(ri);
  return v;
}

}  // namespace

SymTensor theta(const LatticeFunction& f, const LatticePoint& x, int k) {
  return theta(f, f.spec(), x, k);
}

ThetaReport theta_norm(const LatticeFunction& f, int k, const SiteSet& s) {
  return theta_norm(f, f.spec(), k, s);
}

int correction_coefficient(int m, int k, std::span<const int> r) {
  if (k < 0 || static_cast<int>(r.size()) != k + 1) throw InvalidInput("index must have k+1 entries");
  for (int ri : r)
    if (ri < 0) throw InvalidInput("index entries must be nonnegative");
  if (std::accumulate(r.begin(), r.end(), 0) != m) throw InvalidInput("degree mismatch");
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] % 2 == 0) return 0;
  return (m - k + r[0]) % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<int>> correction_indices(int total, int k) {
  if (total > kMaxCorrectionDegree) throw InvalidInput("correction enumeration capped at degree 8");
  std::vector<std::vector<int>> all;
  std::vector<int> prefix;
  odd_parts(total, k, prefix, all);
  std::vector<std::vector<int>> out;
  for (auto& r : all) {
    bool some_big = false;
    for (std::size_t i = 1; i < r.size(); ++i) some_big = some_big || r[i] > 1;
    if (some_big) out.push_back(std::move(r));
  }
  return out;
}

double theta_of_homogeneous(const SymTensor& xi, int k, std::span<const double> x,
                            std::span<const RealVector> u) {
  const int m = xi.degree();
  if (k > m) throw InvalidInput("order exceeds polynomial degree");
  if (static_cast<int>(u.size()) != k) throw InvalidInput("direction count must equal order");
  std::vector<RealVector> vectors{RealVector(x.begin(), x.end())};
  vectors.insert(vectors.end(), u.begin(), u.end());

  std::vector<int> lead(static_cast<std::size_t>(k) + 1, 1);
  lead[0] = m - k;
  double value = factorial(m) / factorial(m - k) * tensor_eval_repeated(xi, vectors, lead);

  for (const auto& r : correction_indices(m, k)) {
    const double c = correction_coefficient(m, k, r);
    value += c * multinomial(r) * tensor_eval_repeated(xi, vectors, r);
  }
  return value;
}

double centered_difference(const RealOracle& p, std::span<const double> x,
                           std::span<const RealVector> u) {
  const std::size_t k = u.size();
  RealVector start(x.begin(), x.end());
  for (const auto& v : u)
    for (std::size_t c = 0; c < start.size(); ++c) start[c] -= v[c];
  std::vector<RealVector> doubled;
  for (const auto& v : u) {
    RealVector w = v;
    for (auto& c : w) c *= 2.0;
    doubled.push_back(std::move(w));
  }
  return std::ldexp(real_delta_k(p, start, doubled), -static_cast<int>(k));
}

double remainder_term(const Jet& pa, const Jet& pb, std::span<const double> x,
                      std::span<const double> y, std::span<const RealVector> u) {
  if (pa.top_degree() != pb.top_degree()) throw InvalidInput("jets must share top degree");
  const int top = pa.top_degree();
  const int m = static_cast<int>(u.size());
  if (m > top) throw InvalidInput("order exceeds jet degree");

  RealVector offset(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) offset[i] = x[i] - y[i];

  double value = 0.0;
  for (int total = m + 2; total <= top; ++total) {
    for (const auto& r : correction_indices(total, m)) {
      std::vector<RealVector> dirs(static_cast<std::size_t>(r[0]), offset);
      for (int i = 0; i < m; ++i)
        for (int rep = 0; rep < r[static_cast<std::size_t>(i) + 1]; ++rep)
          dirs.push_back(u[static_cast<std::size_t>(i)]);
      const double diff = poly_directional_derivative(pa, total, dirs, y) -
                          poly_directional_derivative(pb, total, dirs, y);
      const int sign = (total - m + r[0]) % 2 == 0 ? 1 : -1;
      value += sign * multinomial(r) / factorial(total) * diff;
    }
  }
  return value;
}

}  // namespace torusjet
