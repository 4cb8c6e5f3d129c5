#include "torusjet/polyalg.hpp"

#include <algorithm>
#include <cmath>

#include "torusjet/diffcalc.hpp"
#include "torusjet/error.hpp"

namespace torusjet {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::size_t flat_index(std::span<const int> index, int dim) {
  std::size_t flat = 0;
  std::size_t stride = 1;
  for (int i : index) {
    flat += static_cast<std::size_t>(i) * stride;
    stride *= static_cast<std::size_t>(dim);
  }
  return flat;
}

void check_index(std::span<const int> index, int degree, int dim) {
  if (static_cast<int>(index.size()) != degree) throw InvalidInput("multi-index length mismatch");
  for (int i : index)
    if (i < 0 || i >= dim) throw InvalidInput("bad axis index");
}

// Contracts the trailing slot of a d^k array with a, returning a d^{k-1} array.
std::vector<double> contract_last(const std::vector<double>& t, std::span<const double> a,
                                  int dim) {
  const std::size_t rest = t.size() / static_cast<std::size_t>(dim);
  std::vector<double> out(rest, 0.0);
  for (int c = 0; c < dim; ++c) {
    const double w = a[static_cast<std::size_t>(c)];
    if (w == 0.0) continue;
    const std::size_t off = static_cast<std::size_t>(c) * rest;
    for (std::size_t r = 0; r < rest; ++r) out[r] += t[off + r] * w;
  }
  return out;
}

}  // namespace

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

SymTensor::SymTensor(int degree, int dim)
    : degree_(degree), dim_(dim), full_(ipow(static_cast<std::size_t>(dim), degree), 0.0) {
  if (degree < 0) throw InvalidInput("tensor degree must be nonnegative");
  if (dim < 1) throw InvalidInput("tensor dimension must be positive");
}

SymTensor SymTensor::constant(double value, int dim) {
  SymTensor t(0, dim);
  t.full_[0] = value;
  return t;
}

double SymTensor::coeff(std::span<const int> index) const {
  check_index(index, degree_, dim_);
  return full_[flat_index(index, dim_)];
}

void SymTensor::set(std::span<const int> index, double value) {
  check_index(index, degree_, dim_);
  MultiIndex perm(index.begin(), index.end());
  std::sort(perm.begin(), perm.end());
  do {
    full_[flat_index(perm, dim_)] = value;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<MultiIndex> SymTensor::sorted_indices() const {
  std::vector<MultiIndex> out;
  MultiIndex idx(static_cast<std::size_t>(degree_), 0);
  for (;;) {
    out.push_back(idx);
    int pos = degree_ - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == dim_ - 1) --pos;
    if (pos < 0) break;
    const int v = idx[static_cast<std::size_t>(pos)] + 1;
    for (int q = pos; q < degree_; ++q) idx[static_cast<std::size_t>(q)] = v;
  }
  return out;
}

SymTensor& SymTensor::operator+=(const SymTensor& other) {
  if (other.degree_ != degree_ || other.dim_ != dim_) throw InvalidInput("tensor shape mismatch");
  for (std::size_t i = 0; i < full_.size(); ++i) full_[i] += other.full_[i];
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& other) {
  if (other.degree_ != degree_ || other.dim_ != dim_) throw InvalidInput("tensor shape mismatch");
  for (std::size_t i = 0; i < full_.size(); ++i) full_[i] -= other.full_[i];
  return *this;
}

SymTensor& SymTensor::operator*=(double factor) {
  for (auto& v : full_) v *= factor;
  return *this;
}

SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
SymTensor operator*(double factor, SymTensor a) { return a *= factor; }

double tensor_eval(const SymTensor& xi, std::span<const RealVector> args) {
  if (static_cast<int>(args.size()) != xi.degree()) throw InvalidInput("argument count mismatch");
  for (const auto& a : args)
    if (static_cast<int>(a.size()) != xi.dim()) throw InvalidInput("dimension mismatch");
  if (xi.degree() == 0) return xi.full()[0];
  std::vector<double> t = xi.full();
  for (std::size_t j = args.size(); j-- > 0;) t = contract_last(t, args[j], xi.dim());
  return t[0];
}

double diag_eval(const SymTensor& xi, std::span<const double> x) {
  if (static_cast<int>(x.size()) != xi.dim()) throw InvalidInput("dimension mismatch");
  if (xi.degree() == 0) return xi.full()[0];
  std::vector<double> t = xi.full();
  for (int j = 0; j < xi.degree(); ++j) t = contract_last(t, x, xi.dim());
  return t[0];
}

double tensor_eval_repeated(const SymTensor& xi, std::span<const RealVector> vectors,
                            std::span<const int> repeats) {
  if (vectors.size() != repeats.size()) throw InvalidInput("repeat count mismatch");
  std::vector<RealVector> args;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (int r = 0; r < repeats[i]; ++r) args.push_back(vectors[i]);
  return tensor_eval(xi, args);
}

double tensor_norm(const SymTensor& xi) {
  double best = 0.0;
  for (double v : xi.full()) best = std::max(best, std::abs(v));
  return best;
}

double max_abs_difference(const SymTensor& a, const SymTensor& b) {
  if (a.degree() != b.degree() || a.dim() != b.dim()) throw InvalidInput("tensor shape mismatch");
  double best = 0.0;
  for (std::size_t i = 0; i < a.full().size(); ++i)
    best = std::max(best, std::abs(a.full()[i] - b.full()[i]));
  return best;
}

double real_delta_k(const RealOracle& p, std::span<const double> x, std::span<const RealVector> u) {
  const std::size_t k = u.size();
  double sum = 0.0;
  RealVector y(x.begin(), x.end());
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::copy(x.begin(), x.end(), y.begin());
    int ones = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << (k - 1 - i))) {
        for (std::size_t c = 0; c < y.size(); ++c) y[c] += u[i][c];
        ++ones;
      }
    }
    const double term = p(y);
    sum += ((k - static_cast<std::size_t>(ones)) % 2 == 0) ? term : -term;
  }
  return sum;
}

SymTensor diag_inverse(const RealOracle& p, int degree, int dim) {
  SymTensor xi(degree, dim);
  const RealVector origin(static_cast<std::size_t>(dim), 0.0);
  const double scale = 1.0 / factorial(degree);
  for (const auto& idx : xi.sorted_indices()) {
    std::vector<RealVector> u;
    for (int axis : idx) {
      RealVector v(static_cast<std::size_t>(dim), 0.0);
      v[static_cast<std::size_t>(axis)] = 1.0;
      u.push_back(std::move(v));
    }
    xi.set(idx, scale * real_delta_k(p, origin, u));
  }
  return xi;
}

Jet Jet::zero(RealVector base, int top_degree) {
  Jet j;
  const int d = static_cast<int>(base.size());
  j.base = std::move(base);
  for (int s = 0; s <= top_degree; ++s) j.parts.emplace_back(s, d);
  return j;
}

double poly_eval(const Jet& p, std::span<const double> y) {
  if (y.size() != p.base.size()) throw InvalidInput("dimension mismatch");
  RealVector z(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) z[i] = y[i] - p.base[i];
  double sum = 0.0;
  for (const auto& part : p.parts) sum += diag_eval(part, z);
  return sum;
}

double poly_directional_derivative(const Jet& p, int order, std::span<const RealVector> u,
                                   std::span<const double> y) {
  if (order < 0 || static_cast<int>(u.size()) != order)
    throw InvalidInput("direction count must equal derivative order");
  if (y.size() != p.base.size()) throw InvalidInput("dimension mismatch");
  RealVector z(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) z[i] = y[i] - p.base[i];
  double sum = 0.0;
  for (const auto& part : p.parts) {
    const int s = part.degree();
    if (s < order) continue;
    std::vector<RealVector> args(static_cast<std::size_t>(s - order), z);
    args.insert(args.end(), u.begin(), u.end());
    sum += factorial(s) / factorial(s - order) * tensor_eval(part, args);
  }
  return sum;
}

bool degree_check(const GridPatchFunction& g, int k) {
  if (k < 0) throw InvalidInput("degree must be nonnegative");
  for (long e : g.extents())
    if (e < k + 2) throw InvalidInput("insufficient extent");
  double scale = 0.0;
  for (double v : g.values()) scale = std::max(scale, std::abs(v));
  const double tol = 1e-10 * (1.0 + scale);
  for (const auto& u : basic_multivectors(g.spec(), k + 1))
    for (const auto& x : restricted_domain(g, u))
      if (std::abs(delta_k(g, std::span<const LatticeVector>(u), x)) > tol) return false;
  return true;
}

}  // namespace torusjet
