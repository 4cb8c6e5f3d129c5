#pragma once

// Symmetric multilinear forms on R^d, homogeneous polynomials diag(ξ), and
// polynomial jets Σ_s diag(ξ_s)(y - base).
//
// Coefficients live on the standard basis ε_i of R^d (not the lattice basis
// e_i = ε_i / m_i). A lattice-basis value ξ(e_{i_1}, ..., e_{i_k}) converts
// by dividing by m_{i_1}···m_{i_k}.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "torusjet/lattice.hpp"

namespace torusjet {

using MultiIndex = std::vector<int>;  // 0-based axis indices
using RealVector = std::vector<double>;
using RealOracle = std::function<double(std::span<const double>)>;

class SymTensor {
 public:
  SymTensor(int degree, int dim);

  static SymTensor constant(double value, int dim);

  int degree() const { return degree_; }
  int dim() const { return dim_; }

  /// ξ(ε_{i_1}, ..., ε_{i_k}); index order is irrelevant.
  double coeff(std::span<const int> index) const;
  /// Sets the entry for index and every permutation of it.
  void set(std::span<const int> index, double value);

  /// Nondecreasing multi-indices of length degree, lexicographic.
  std::vector<MultiIndex> sorted_indices() const;

  /// Dense d^k array, flat index Σ_j i_j d^j.
  const std::vector<double>& full() const { return full_; }

  SymTensor& operator+=(const SymTensor& other);
  SymTensor& operator-=(const SymTensor& other);
  SymTensor& operator*=(double factor);

 private:
  int degree_;
  int dim_;
  std::vector<double> full_;
};

SymTensor operator+(SymTensor a, const SymTensor& b);
SymTensor operator-(SymTensor a, const SymTensor& b);
SymTensor operator*(double factor, SymTensor a);

/// ξ(a_1, ..., a_k) by full multilinear contraction.
double tensor_eval(const SymTensor& xi, std::span<const RealVector> args);
/// ξ(x, ..., x).
double diag_eval(const SymTensor& xi, std::span<const double> x);
/// ξ(v_0^{(r_0)}, v_1^{(r_1)}, ...) with Σ r_i = degree.
double tensor_eval_repeated(const SymTensor& xi, std::span<const RealVector> vectors,
                            std::span<const int> repeats);
/// sup over nonzero arguments of |ξ(u)| / Π‖u_i‖ (sum-norm), attained on ±ε_i.
double tensor_norm(const SymTensor& xi);
double max_abs_difference(const SymTensor& a, const SymTensor& b);

/// Σ_{α ∈ {0,1}^k} (-1)^{k-|α|} p(x + α·u) over real shifts.
double real_delta_k(const RealOracle& p, std::span<const double> x, std::span<const RealVector> u);

/// ξ(u) = (1/k!) Δ_u^k p(0), read off on the standard basis.
SymTensor diag_inverse(const RealOracle& p, int degree, int dim);

/// Σ_{s=0}^K diag(parts[s])(y - base); parts[s] has degree s.
struct Jet {
  RealVector base;
  std::vector<SymTensor> parts;

  static Jet zero(RealVector base, int top_degree);

  int top_degree() const { return static_cast<int>(parts.size()) - 1; }
  int dim() const { return static_cast<int>(base.size()); }
};

double poly_eval(const Jet& p, std::span<const double> y);
/// D_u^m P(y) = Σ_{s >= m} s!/(s-m)! ξ_s((y - base)^{(s-m)}, u_1, ..., u_m).
double poly_directional_derivative(const Jet& p, int order, std::span<const RealVector> u,
                                   std::span<const double> y);

/// Necessary half of the polynomial-degree test on a finite patch: every
/// order-(k+1) basic-multivector difference defined inside the patch vanishes
/// to 1e-10·(1 + max|g|). Throws if some extent is below k + 2.
bool degree_check(const GridPatchFunction& g, int k);

double factorial(int n);

}  // namespace torusjet
