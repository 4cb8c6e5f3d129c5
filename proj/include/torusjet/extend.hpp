#pragma once

// Periodic extension of a lattice function to R^d: the jets P_x are glued with
// a partition of unity built from tensor-product bumps, one cell wide per axis.
// The top derivative's Lipschitz constant of the result is estimated with k-th
// differences on a refined lattice.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "torusjet/whitney.hpp"

namespace torusjet {

struct ExtensionConfig {
  int s = 0;  // bump smoothness; 0 selects K + 1
  int N = 4;  // fine-grid samples per lattice cell per axis
};

/// (1 - t^2)^{s+1} on |t| < 1, zero outside.
double bump_eval(double t, int s);

struct PartitionWeight {
  LatticePoint site;  // representative (cell corner), not reduced
  double weight = 0.0;
};

/// Normalized weights of the cell corners around y with positive raw weight,
/// corners enumerated first axis fastest.
std::vector<PartitionWeight> partition_weights(const LatticeSpec& spec, std::span<const double> y,
                                               int s);

/// F(y) = Σ_x φ_x(y) P_x(y), with P_x the jet of canonical site x re-based at
/// the corner representative.
double extend_eval(const LatticeFunction& f, std::span<const Jet> jets, std::span<const double> y,
                   int s);

class Extension {
 public:
  /// Builds jets of degree K at every site. cfg.s = 0 selects K + 1.
  Extension(LatticeFunction f, int top_degree, ExtensionConfig cfg = {});

  double operator()(std::span<const double> y) const;

  const LatticeFunction& function() const { return f_; }
  const std::vector<Jet>& jets() const { return jets_; }
  int smoothness() const { return s_; }

 private:
  LatticeFunction f_;
  std::vector<Jet> jets_;
  int s_;
};

struct FineGridRow {
  MultiVector u;  // fine-grid basic multivector
  LatticePoint x;  // fine-grid site
  double quotient = 0.0;
};

using FieldOracle = std::function<double(std::span<const double>)>;

/// max over fine sites x and fine basic multivectors u of |Δ_u^k F(x)| / ‖u‖^k
/// on the lattice with resolutions N·m. With periodic = true F is tabulated
/// once on the fine torus; otherwise F is evaluated at each shifted point
/// directly (no wrap-around).
double fine_grid_lipschitz(const FieldOracle& F, int k, const LatticeSpec& spec, int N,
                           bool periodic = true, std::vector<FineGridRow>* rows = nullptr);

struct TheoremAReport {
  double seminorm = 0.0;  // ‖Δ^k f‖_Γ
  double lip = 0.0;
  double ratio = 0.0;
  int N = 0;
  int s = 0;
};

/// Extends with jets of degree k-1 and compares the fine-grid estimate with
/// ‖Δ^k f‖_Γ. Throws DegenerateInput when the seminorm vanishes.
TheoremAReport theorem_a_report(const LatticeFunction& f, int k, ExtensionConfig cfg = {},
                                std::vector<FineGridRow>* rows = nullptr);

}  // namespace torusjet
