#pragma once

// The lattice Γ_m = m_1^{-1}Z × ... × m_d^{-1}Z, its points and displacement
// vectors (integer coordinates in units of the basis e_i), the sum-norm, and
// Z^d-periodic real functions on it.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <vector>

namespace torusjet {

/// Displacement Σ j_i e_i, stored as the integer coefficients j.
struct LatticeVector {
  std::vector<long> j;

  std::size_t dim() const { return j.size(); }
  bool is_zero() const;
  auto operator<=>(const LatticeVector&) const = default;
};

/// A site of Γ carried with an explicit R^d representative (not reduced mod m).
struct LatticePoint {
  std::vector<long> j;

  std::size_t dim() const { return j.size(); }
  auto operator<=>(const LatticePoint&) const = default;
};

using MultiVector = std::vector<LatticeVector>;

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a);
LatticeVector operator*(long c, const LatticeVector& a);
LatticePoint operator+(const LatticePoint& p, const LatticeVector& v);
LatticePoint operator-(const LatticePoint& p, const LatticeVector& v);
LatticeVector operator-(const LatticePoint& a, const LatticePoint& b);

/// Per-axis resolutions m = (m_1, ..., m_d), every m_i >= 1.
class LatticeSpec {
 public:
  explicit LatticeSpec(std::vector<int> m);

  std::size_t dim() const { return m_.size(); }
  const std::vector<int>& m() const { return m_; }
  int resolution(std::size_t axis) const { return m_[axis]; }
  std::size_t site_count() const { return site_count_; }

  /// ‖e_i‖ = 1/m_i.
  double basis_norm(std::size_t axis) const { return 1.0 / m_[axis]; }
  LatticeVector basis_vector(std::size_t axis, long sign = 1) const;
  LatticeVector zero_vector() const { return LatticeVector{std::vector<long>(dim(), 0)}; }
  LatticePoint origin() const { return LatticePoint{std::vector<long>(dim(), 0)}; }

  /// Real coordinates j_i / m_i of a point or vector.
  std::vector<double> real_coords(const LatticePoint& p) const;
  std::vector<double> real_coords(const LatticeVector& v) const;

  /// Linear index of the canonical class of p, first axis fastest.
  std::size_t canonical_index(const LatticePoint& p) const;
  /// Canonical point with the given linear index.
  LatticePoint site(std::size_t index) const;

  bool operator==(const LatticeSpec&) const = default;

 private:
  std::vector<int> m_;
  std::size_t site_count_;
};

LatticePoint canonicalize(const LatticePoint& p, const LatticeSpec& spec);

/// Σ_i |j_i| / m_i.
double sum_norm(const LatticeVector& v, const LatticeSpec& spec);
/// ℓ1 norm of a real vector.
double sum_norm(std::span<const double> x);
/// Π_i ‖u_i‖; 1 for the empty multivector.
double multi_norm(const MultiVector& u, const LatticeSpec& spec);

/// ‖Γ‖ = (min_i m_i)^{-1}.
double width(const LatticeSpec& spec);
/// ℓ(Γ) = max_{i,j} m_j / m_i.
double aspect(const LatticeSpec& spec);

/// The basic vectors e_1, ..., e_d, -e_1, ..., -e_d in that order.
std::vector<LatticeVector> basic_vectors(const LatticeSpec& spec);
/// All of B^k, lexicographic in the basic-vector order above.
std::vector<MultiVector> basic_multivectors(const LatticeSpec& spec, int k);

/// Finite set of lattice points; members keep their representatives.
class SiteSet {
 public:
  SiteSet() = default;
  SiteSet(std::initializer_list<LatticePoint> pts) : members_(pts) {}

  void insert(const LatticePoint& p) { members_.insert(p); }
  bool contains(const LatticePoint& p) const { return members_.count(p) != 0; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const SiteSet&) const = default;

 private:
  std::set<LatticePoint> members_;
};

/// Every canonical site, in linear-index order.
SiteSet all_sites(const LatticeSpec& spec);
/// Canonical sites as an ordered vector (linear-index order).
std::vector<LatticePoint> site_list(const LatticeSpec& spec);

/// N_k(S) = { x + u_1 + ... + u_k : x ∈ S, u ∈ B^k }; N_0(S) = S.
SiteSet neighborhood(const SiteSet& s, int k, const LatticeSpec& spec);

/// max { ‖x - x0‖ : x ∈ S } over representatives. Throws on empty S.
double radius(const SiteSet& s, const LatticePoint& x0, const LatticeSpec& spec);

/// Representatives y with ‖y - center‖ <= rho.
SiteSet ball(const LatticePoint& center, double rho, const LatticeSpec& spec);

/// Z^d-periodic real function on Γ, stored over canonical sites.
class LatticeFunction {
 public:
  LatticeFunction(LatticeSpec spec, std::vector<double> values);

  const LatticeSpec& spec() const { return spec_; }
  const std::vector<double>& values() const { return values_; }

  double evaluate(const LatticePoint& p) const { return values_[spec_.canonical_index(p)]; }
  double operator()(const LatticePoint& p) const { return evaluate(p); }

 private:
  LatticeSpec spec_;
  std::vector<double> values_;
};

LatticeFunction make_function(const LatticeSpec& spec, std::vector<double> values);
double average(const LatticeFunction& f);
bool has_zero_average(const LatticeFunction& f, double tol = 1e-12);
/// Values uniform in [-amplitude, amplitude], deterministic in seed.
LatticeFunction random_function(const LatticeSpec& spec, std::uint64_t seed, double amplitude = 1.0);
/// f(x) = g(real coordinates of x) on canonical sites.
LatticeFunction sample_function(const LatticeSpec& spec,
                                const std::function<double(std::span<const double>)>& g);
LatticeFunction scaled(const LatticeFunction& f, double factor);
LatticeFunction shifted(const LatticeFunction& f, double offset);

/// Non-periodic values on a rectangular block of sites.
class GridPatchFunction {
 public:
  GridPatchFunction(LatticeSpec spec, LatticePoint origin, std::vector<long> extents,
                    std::vector<double> values);

  const LatticeSpec& spec() const { return spec_; }
  const LatticePoint& origin() const { return origin_; }
  const std::vector<long>& extents() const { return extents_; }
  const std::vector<double>& values() const { return values_; }

  bool contains(const LatticePoint& p) const;
  /// Throws InvalidInput outside the patch.
  double evaluate(const LatticePoint& p) const;
  double operator()(const LatticePoint& p) const { return evaluate(p); }

  /// Patch points in storage order.
  std::vector<LatticePoint> points() const;

 private:
  std::size_t offset_of(const LatticePoint& p) const;

  LatticeSpec spec_;
  LatticePoint origin_;
  std::vector<long> extents_;
  std::vector<double> values_;
};

GridPatchFunction sample_patch(const LatticeSpec& spec, const LatticePoint& origin,
                               const std::vector<long>& extents,
                               const std::function<double(std::span<const double>)>& g);

}  // namespace torusjet
