#include "torusjet/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "torusjet/error.hpp"
#include "torusjet/random.hpp"

namespace torusjet {

namespace {

long floor_mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

void require_dim(std::size_t got, std::size_t want) {
  if (got != want) throw InvalidInput("dimension mismatch");
}

template <class A, class B, class Op>
std::vector<long> zip(const A& a, const B& b, Op op) {
  require_dim(a.size(), b.size());
  std::vector<long> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

}  // namespace

bool LatticeVector::is_zero() const {
  return std::all_of(j.begin(), j.end(), [](long c) { return c == 0; });
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  return {zip(a.j, b.j, std::plus<>{})};
}
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  return {zip(a.j, b.j, std::minus<>{})};
}
LatticeVector operator-(const LatticeVector& a) {
  LatticeVector out = a;
  for (auto& c : out.j) c = -c;
  return out;
}
LatticeVector operator*(long c, const LatticeVector& a) {
  LatticeVector out = a;
  for (auto& x : out.j) x *= c;
  return out;
}
LatticePoint operator+(const LatticePoint& p, const LatticeVector& v) {
  return {zip(p.j, v.j, std::plus<>{})};
}
LatticePoint operator-(const LatticePoint& p, const LatticeVector& v) {
  return {zip(p.j, v.j, std::minus<>{})};
}
LatticeVector operator-(const LatticePoint& a, const LatticePoint& b) {
  return {zip(a.j, b.j, std::minus<>{})};
}

LatticeSpec::LatticeSpec(std::vector<int> m) : m_(std::move(m)), site_count_(1) {
  if (m_.empty()) throw InvalidInput("lattice dimension must be at least 1");
  for (int mi : m_) {
    if (mi < 1) throw InvalidInput("m_i ≥ 1 required");
    site_count_ *= static_cast<std::size_t>(mi);
  }
}

LatticeVector LatticeSpec::basis_vector(std::size_t axis, long sign) const {
  if (axis >= dim()) throw InvalidInput("bad axis index");
  LatticeVector v = zero_vector();
  v.j[axis] = sign;
  return v;
}

std::vector<double> LatticeSpec::real_coords(const LatticePoint& p) const {
  require_dim(p.dim(), dim());
  std::vector<double> x(dim());
  for (std::size_t i = 0; i < dim(); ++i) x[i] = static_cast<double>(p.j[i]) / m_[i];
  return x;
}

std::vector<double> LatticeSpec::real_coords(const LatticeVector& v) const {
  return real_coords(LatticePoint{v.j});
}

std::size_t LatticeSpec::canonical_index(const LatticePoint& p) const {
  require_dim(p.dim(), dim());
  std::size_t index = 0;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    index += static_cast<std::size_t>(floor_mod(p.j[i], m_[i])) * stride;
    stride *= static_cast<std::size_t>(m_[i]);
  }
  return index;
}

LatticePoint LatticeSpec::site(std::size_t index) const {
  LatticePoint p{std::vector<long>(dim())};
  for (std::size_t i = 0; i < dim(); ++i) {
    p.j[i] = static_cast<long>(index % m_[i]);
    index /= m_[i];
  }
  return p;
}

LatticePoint canonicalize(const LatticePoint& p, const LatticeSpec& spec) {
  require_dim(p.dim(), spec.dim());
  LatticePoint out = p;
  for (std::size_t i = 0; i < spec.dim(); ++i) out.j[i] = floor_mod(p.j[i], spec.resolution(i));
  return out;
}

double sum_norm(const LatticeVector& v, const LatticeSpec& spec) {
  require_dim(v.dim(), spec.dim());
  double s = 0.0;
  for (std::size_t i = 0; i < spec.dim(); ++i)
    s += static_cast<double>(std::labs(v.j[i])) / spec.resolution(i);
  return s;
}

double sum_norm(std::span<const double> x) {
  double s = 0.0;
  for (double c : x) s += std::abs(c);
  return s;
}

double multi_norm(const MultiVector& u, const LatticeSpec& spec) {
  double p = 1.0;
  for (const auto& v : u) p *= sum_norm(v, spec);
  return p;
}

double width(const LatticeSpec& spec) {
  return 1.0 / *std::min_element(spec.m().begin(), spec.m().end());
}

double aspect(const LatticeSpec& spec) {
  const auto [lo, hi] = std::minmax_element(spec.m().begin(), spec.m().end());
  return static_cast<double>(*hi) / *lo;
}

std::vector<LatticeVector> basic_vectors(const LatticeSpec& spec) {
  std::vector<LatticeVector> b;
  b.reserve(2 * spec.dim());
  for (std::size_t i = 0; i < spec.dim(); ++i) b.push_back(spec.basis_vector(i, 1));
  for (std::size_t i = 0; i < spec.dim(); ++i) b.push_back(spec.basis_vector(i, -1));
  return b;
}

std::vector<MultiVector> basic_multivectors(const LatticeSpec& spec, int k) {
  const auto b = basic_vectors(spec);
  std::vector<MultiVector> out{MultiVector{}};
  for (int level = 0; level < k; ++level) {
    std::vector<MultiVector> next;
    next.reserve(out.size() * b.size());
    for (const auto& prefix : out)
      for (const auto& v : b) {
        next.push_back(prefix);
        next.back().push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

SiteSet all_sites(const LatticeSpec& spec) {
  SiteSet s;
  for (std::size_t i = 0; i < spec.site_count(); ++i) s.insert(spec.site(i));
  return s;
}

std::vector<LatticePoint> site_list(const LatticeSpec& spec) {
  std::vector<LatticePoint> out;
  out.reserve(spec.site_count());
  for (std::size_t i = 0; i < spec.site_count(); ++i) out.push_back(spec.site(i));
  return out;
}

// A sum of k signed basis vectors has integer coefficients c with Σ|c_i| <= k
// and Σ|c_i| ≡ k (mod 2); every such c is attained (pad with e_1 - e_1 pairs).
SiteSet neighborhood(const SiteSet& s, int k, const LatticeSpec& spec) {
  if (k < 0) throw InvalidInput("neighborhood order must be nonnegative");
  if (k == 0) return s;
  const std::size_t d = spec.dim();
  std::vector<LatticeVector> offsets;
  std::vector<long> c(d, -k);
  for (;;) {
    long l1 = 0;
    for (long ci : c) l1 += std::labs(ci);
    if (l1 <= k && (k - l1) % 2 == 0) offsets.push_back(LatticeVector{c});
    std::size_t axis = 0;
    while (axis < d && c[axis] == k) c[axis++] = -k;
    if (axis == d) break;
    ++c[axis];
  }
  SiteSet out;
  for (const auto& x : s)
    for (const auto& off : offsets) out.insert(x + off);
  return out;
}

double radius(const SiteSet& s, const LatticePoint& x0, const LatticeSpec& spec) {
  if (s.empty()) throw InvalidInput("empty site set");
  double r = 0.0;
  for (const auto& x : s) r = std::max(r, sum_norm(x - x0, spec));
  return r;
}

SiteSet ball(const LatticePoint& center, double rho, const LatticeSpec& spec) {
  const std::size_t d = spec.dim();
  std::vector<long> bound(d);
  for (std::size_t i = 0; i < d; ++i)
    bound[i] = static_cast<long>(std::floor(rho * spec.resolution(i) + 1e-9));
  SiteSet out;
  std::vector<long> c(d);
  for (std::size_t i = 0; i < d; ++i) c[i] = -bound[i];
  for (;;) {
    LatticeVector off{c};
    if (sum_norm(off, spec) <= rho + 1e-12) out.insert(center + off);
    std::size_t axis = 0;
    while (axis < d && c[axis] == bound[axis]) {
      c[axis] = -bound[axis];
      ++axis;
    }
    if (axis == d) break;
    ++c[axis];
  }
  return out;
}

LatticeFunction::LatticeFunction(LatticeSpec spec, std::vector<double> values)
    : spec_(std::move(spec)), values_(std::move(values)) {
  if (values_.size() != spec_.site_count()) throw InvalidInput("size mismatch");
  for (double v : values_)
    if (!std::isfinite(v)) throw InvalidInput("non-finite value");
}

LatticeFunction make_function(const LatticeSpec& spec, std::vector<double> values) {
  return LatticeFunction(spec, std::move(values));
}

double average(const LatticeFunction& f) {
  const auto& v = f.values();
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

bool has_zero_average(const LatticeFunction& f, double tol) {
  double scale = 0.0;
  for (double v : f.values()) scale = std::max(scale, std::abs(v));
  return std::abs(average(f)) <= tol * (1.0 + scale);
}

LatticeFunction random_function(const LatticeSpec& spec, std::uint64_t seed, double amplitude) {
  if (!(amplitude > 0.0)) throw InvalidInput("amplitude must be positive");
  Rng rng(seed);
  std::vector<double> v(spec.site_count());
  for (auto& x : v) x = rng.uniform(-amplitude, amplitude);
  return LatticeFunction(spec, std::move(v));
}

LatticeFunction sample_function(const LatticeSpec& spec,
                                const std::function<double(std::span<const double>)>& g) {
  std::vector<double> v(spec.site_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g(spec.real_coords(spec.site(i)));
  return LatticeFunction(spec, std::move(v));
}

LatticeFunction scaled(const LatticeFunction& f, double factor) {
  auto v = f.values();
  for (auto& x : v) x *= factor;
  return LatticeFunction(f.spec(), std::move(v));
}

LatticeFunction shifted(const LatticeFunction& f, double offset) {
  auto v = f.values();
  for (auto& x : v) x += offset;
  return LatticeFunction(f.spec(), std::move(v));
}

GridPatchFunction::GridPatchFunction(LatticeSpec spec, LatticePoint origin,
                                     std::vector<long> extents, std::vector<double> values)
    : spec_(std::move(spec)),
      origin_(std::move(origin)),
      extents_(std::move(extents)),
      values_(std::move(values)) {
  require_dim(origin_.dim(), spec_.dim());
  require_dim(extents_.size(), spec_.dim());
  std::size_t n = 1;
  for (long e : extents_) {
    if (e < 1) throw InvalidInput("patch extents must be positive");
    n *= static_cast<std::size_t>(e);
  }
  if (values_.size() != n) throw InvalidInput("size mismatch");
}

bool GridPatchFunction::contains(const LatticePoint& p) const {
  if (p.dim() != origin_.dim()) return false;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const long rel = p.j[i] - origin_.j[i];
    if (rel < 0 || rel >= extents_[i]) return false;
  }
  return true;
}

std::size_t GridPatchFunction::offset_of(const LatticePoint& p) const {
  std::size_t index = 0;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    index += static_cast<std::size_t>(p.j[i] - origin_.j[i]) * stride;
    stride *= static_cast<std::size_t>(extents_[i]);
  }
  return index;
}

double GridPatchFunction::evaluate(const LatticePoint& p) const {
  if (!contains(p)) throw InvalidInput("point outside patch");
  return values_[offset_of(p)];
}

std::vector<LatticePoint> GridPatchFunction::points() const {
  std::vector<LatticePoint> out;
  out.reserve(values_.size());
  for (std::size_t n = 0; n < values_.size(); ++n) {
    LatticePoint p = origin_;
    std::size_t rest = n;
    for (std::size_t i = 0; i < p.dim(); ++i) {
      p.j[i] += static_cast<long>(rest % extents_[i]);
      rest /= extents_[i];
    }
    out.push_back(std::move(p));
  }
  return out;
}

GridPatchFunction sample_patch(const LatticeSpec& spec, const LatticePoint& origin,
                               const std::vector<long>& extents,
                               const std::function<double(std::span<const double>)>& g) {
  std::size_t n = 1;
  for (long e : extents) n *= static_cast<std::size_t>(std::max(e, 0L));
  GridPatchFunction shape(spec, origin, extents, std::vector<double>(n, 0.0));
  std::vector<double> values;
  values.reserve(n);
  for (const auto& p : shape.points()) values.push_back(g(spec.real_coords(p)));
  return GridPatchFunction(spec, origin, extents, std::move(values));
}

}  // namespace torusjet
