#pragma once

#include <stdexcept>
#include <string>

#include "dynkin.hpp"

namespace meshalg {

struct InvalidType : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Weakly admissible group ⟨φ⟩ with φ = τ^m (t=1) or ρτ^m (t=2,3); doubles as the extended type.
struct GroupSpec {
  DynkinSpec spec;
  int m;
  int t;

  AutoElem phi() const { return t == 1 ? AutoElem{0, m} : normalize(spec, AutoElem{1, m}); }
  /// φ lowers h by this amount.
  long h_period() const { return (t == 2 && spec.is_A_even()) ? 2L * m - 1 : 2L * m; }
  bool is_L() const { return t == 2 && spec.is_A_even(); }

  std::string name() const {
    return "(" + spec.name() + "," + std::to_string(m) + "," + std::to_string(t) + ")";
  }
};

inline GroupSpec make_group(const DynkinSpec& s, int m, int t) {
  if (m < 1) throw InvalidType("m must be positive");
  if (t == 1) return {s, m, t};
  if (t == 2) {
    if (!s.has_rho() || s.rho_order == 3)
      throw InvalidType("t=2 needs A_r (r>=2), D_{n+1} (n+1>4) or E6; got " + s.name());
    return {s, m, t};
  }
  if (t == 3) {
    if (!s.is_D4()) throw InvalidType("t=3 only for D4");
    return {s, m, t};
  }
  throw InvalidType("t must be 1, 2 or 3");
}

inline AutoElem phi_power(const GroupSpec& g, long j) { return power(g.spec, g.phi(), j); }

/// The orbit representative: the unique orbit element with h in [0, P).
inline ZVertex to_rep(const GroupSpec& g, const ZVertex& v, long* steps = nullptr) {
  long j = floor_div(height(g.spec, v), g.h_period());
  if (steps) *steps = j;
  return apply(g.spec, phi_power(g, j), v);
}

inline bool same_orbit(const GroupSpec& g, const ZVertex& u, const ZVertex& v) { return to_rep(g, u) == to_rep(g, v); }

/// Representatives of all vertex orbits, sorted.
inline std::vector<ZVertex> orbit_reps(const GroupSpec& g) {
  std::vector<ZVertex> reps;
  long P = g.h_period();
  for (int i : g.spec.labels) {
    long p = g.spec.level(i);
    for (long k = floor_div(-p, 2) - 1; 2 * k + p < P + 2; ++k) {
      long h = 2 * k + p;
      if (h >= 0 && h < P) reps.push_back({k, i});
    }
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

}  // namespace meshalg
