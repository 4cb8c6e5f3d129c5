#pragma once

#include <vector>

#include "torusjet/lattice.hpp"
#include "torusjet/polyalg.hpp"

namespace torusjet::testing {

inline LatticePoint pt(std::vector<long> j) { return LatticePoint{std::move(j)}; }
inline LatticeVector vec(std::vector<long> j) { return LatticeVector{std::move(j)}; }

inline LatticeFunction alternating() { return LatticeFunction(LatticeSpec({4}), {0, 1, 0, 1}); }
inline LatticeFunction tent() { return LatticeFunction(LatticeSpec({4}), {0, 1, 2, 1}); }

// x^deg on the real line as a jet based at 0
inline Jet monomial(int deg) {
  Jet p = Jet::zero({0.0}, deg);
  p.parts[static_cast<std::size_t>(deg)].set(MultiIndex(static_cast<std::size_t>(deg), 0), 1.0);
  return p;
}

}  // namespace torusjet::testing
