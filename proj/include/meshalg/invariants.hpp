#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "dynkin.hpp"
#include "group.hpp"

namespace meshalg {

struct UnsupportedType : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class HGroup { Z, TwoZ };

inline std::string to_string(HGroup h) { return h == HGroup::Z ? "Z" : "2Z"; }

/// Case of the classification tables.
enum class InvCase { c1a, c1b, c2a, c2b, c2c, c3 };

inline std::string to_string(InvCase c) {
  switch (c) {
    case InvCase::c1a: return "1a";
    case InvCase::c1b: return "1b";
    case InvCase::c2a: return "2a";
    case InvCase::c2b: return "2b";
    case InvCase::c2c: return "2c";
    case InvCase::c3: return "3";
  }
  return "?";
}

inline bool is_D_even(const DynkinSpec& s) { return s.family == Family::D && s.rank % 2 == 0; }

inline InvCase inv_case(const GroupSpec& g) {
  const auto& s = g.spec;
  if (g.t == 3) return InvCase::c3;
  if (g.t == 1) {
    bool b = is_D_even(s) || (s.family == Family::E && s.rank >= 7);
    return b ? InvCase::c1b : InvCase::c1a;
  }
  if (s.is_A_even()) return InvCase::c2c;
  if (is_D_even(s)) return InvCase::c2b;
  return InvCase::c2a;
}

inline void require_supported(const GroupSpec& g) {
  if (g.spec.family == Family::A && g.spec.rank == 1) throw UnsupportedType("A1 is semisimple and excluded");
}

inline bool loewy_two(const GroupSpec& g) { return g.spec.family == Family::A && g.spec.rank == 2; }

/// |Q0| of the quiver of Λ.
inline long num_vertex_orbits(const GroupSpec& g) {
  return g.is_L() ? (2L * g.m - 1) * g.spec.n : static_cast<long>(g.m) * g.spec.rank;
}

inline long two_adic(long k) {
  long v = 0;
  while (k % 2 == 0) {
    k /= 2;
    ++v;
  }
  return v;
}

/// Smallest x in [lo, lo+mod) with a·x ≡ -1 (mod mod), if any.
inline std::optional<long> solve_congruence(long a, long mod, long lo = 0) {
  for (long x = lo; x < lo + mod; ++x)
    if (euclid_mod(a * x + 1, mod) == 0) return x;
  return std::nullopt;
}

/// u = order of ν̄τ̄⁻¹ on vertices.
inline long u_formula(const GroupSpec& g) {
  require_supported(g);
  const long m = g.m, c = g.spec.coxeter, n = g.spec.n;
  switch (inv_case(g)) {
    case InvCase::c1a: return 2 * m / std::gcd(m, c);
    case InvCase::c1b: return m / std::gcd(m, c / 2);
    case InvCase::c2a: return 2 * m / std::gcd(2 * m, m + c / 2);
    case InvCase::c2b: return 2 * m / std::gcd(2 * m, c / 2);
    case InvCase::c2c: return (2 * m - 1) / std::gcd(2 * m - 1, 2 * n + 1);
    case InvCase::c3: return m;
  }
  return 0;
}

inline HGroup H_subgroup(const GroupSpec& g, int characteristic) {
  require_supported(g);
  if (characteristic == 2 || g.spec.family == Family::A) return HGroup::Z;
  return (g.m + g.t) % 2 == 1 ? HGroup::Z : HGroup::TwoZ;
}

struct SymmetryClass {
  bool weakly_symmetric = false;
  bool symmetric = false;
};

inline SymmetryClass symmetry_class(const GroupSpec& g, int characteristic) {
  require_supported(g);
  const auto& s = g.spec;
  const long m = g.m, c = s.coxeter;
  bool ch2 = characteristic == 2;
  SymmetryClass r;
  switch (g.t) {
    case 1: {
      bool fam = is_D_even(s) || (s.family == Family::E && s.rank >= 7);
      r.weakly_symmetric = fam && (c / 2 - 1) % m == 0;
      r.symmetric = r.weakly_symmetric && (ch2 || m % 2 == 0);
      break;
    }
    case 2:
      if (s.is_A_even()) {
        r.weakly_symmetric = (2 * s.n - 1) % (2 * m - 1) == 0;
        r.symmetric = r.weakly_symmetric;
      } else {
        long num = c / 2 - 1;
        bool div = num % m == 0;
        long q = div ? num / m : 0;
        bool parity = is_D_even(s) ? q % 2 == 0 : q % 2 == 1;
        r.weakly_symmetric = div && parity;
        r.symmetric = r.weakly_symmetric && (ch2 || s.family == Family::A || m % 2 == 1);
      }
      break;
    default: break;
  }
  return r;
}

/// Ω-period of Λ as a bimodule.
inline long period_formula(const GroupSpec& g, int characteristic) {
  require_supported(g);
  if (loewy_two(g)) {
    long q0 = num_vertex_orbits(g);
    return (characteristic == 2 || q0 % 2 == 0) ? q0 : 2 * q0;
  }
  if (characteristic == 2) return 3 * u_formula(g);
  const long m = g.m, c = g.spec.coxeter, n = g.spec.n;
  switch (inv_case(g)) {
    case InvCase::c1a: return 6 * m / std::gcd(m, c);
    case InvCase::c1b: return (m % 2 == 0 ? 3 : 6) * m / std::gcd(m, c / 2);
    case InvCase::c2a: {
      long d = std::gcd(2 * m, m + c / 2);
      return (two_adic(m) != two_adic(c / 2) ? 6 : 12) * m / d;
    }
    case InvCase::c2b: return 6 * m / std::gcd(2 * m, c / 2);
    case InvCase::c2c: return 6 * (2 * m - 1) / std::gcd(2 * m - 1, 2 * n + 1);
    case InvCase::c3: return (m % 2 == 0 ? 3 : 6) * m;
  }
  return 0;
}

/// min ℕ_CY(Λ), when nonempty (Loewy length ≥ 3).
inline std::optional<long> n_cy_min(const GroupSpec& g) {
  require_supported(g);
  if (loewy_two(g)) throw UnsupportedType("the Calabi-Yau set is defined for Loewy length >= 3");
  const long m = g.m, c = g.spec.coxeter, n = g.spec.n;
  auto shifted = [](std::optional<long> x) -> std::optional<long> {
    if (!x) return std::nullopt;
    return *x + 1;
  };
  switch (inv_case(g)) {
    case InvCase::c1a: {
      if (std::gcd(m, c) != 1) return std::nullopt;
      auto sp = solve_congruence(c, m);
      if (!sp) return std::nullopt;
      return 2 * *sp + 1;
    }
    case InvCase::c1b:
      if (std::gcd(m, c / 2) != 1) return std::nullopt;
      return shifted(solve_congruence(c / 2, m));
    case InvCase::c2a:
      if (std::gcd(2 * m, m + c / 2) != 1) return std::nullopt;
      return shifted(solve_congruence(m + c / 2, 2 * m));
    case InvCase::c2b:
      if (std::gcd(m, c / 2) != 1) return std::nullopt;
      return shifted(solve_congruence(c / 2, 2 * m));
    case InvCase::c2c:
      if (std::gcd(2 * m - 1, 2 * n + 1) != 1) return std::nullopt;
      return shifted(solve_congruence(m + n, 2 * m - 1));
    case InvCase::c3: return std::nullopt;
  }
  return std::nullopt;
}

struct CYResult {
  bool stably_cy = false;
  std::optional<long> cy;
  std::optional<long> cyf;
};

inline CYResult cy_dimensions(const GroupSpec& g, int characteristic) {
  require_supported(g);
  CYResult r;
  const long m = g.m, c = g.spec.coxeter, n = g.spec.n;
  if (loewy_two(g)) {
    r.stably_cy = true;
    r.cy = 0;
    r.cyf = (characteristic == 2 || g.t == 1) ? 0 : 2 * m - 1;
    return r;
  }
  if (characteristic == 2) {
    auto s = n_cy_min(g);
    if (!s) return r;
    r.stably_cy = true;
    r.cy = r.cyf = 3 * *s - 1;
    return r;
  }
  std::optional<long> d;
  switch (inv_case(g)) {
    case InvCase::c1a:
      if (std::gcd(m, c) == 1)
        if (auto v = solve_congruence(c, m)) d = 6 * *v + 2;
      break;
    case InvCase::c1b:
      if (std::gcd(m, c / 2) == 1) {
        if (m % 2 == 0) {
          if (auto v = solve_congruence(c / 2, m)) d = 3 * *v + 2;
        } else if (auto v = solve_congruence(c, m)) {
          d = 6 * *v + 2;
        }
      }
      break;
    case InvCase::c2a:
      if (std::gcd(2 * m, m + c / 2) == 1)
        if (auto v = solve_congruence(m + c / 2, 2 * m)) d = 3 * *v + 2;
      break;
    case InvCase::c2b:
      if (std::gcd(m, c / 2) == 1 && m % 2 == 1)
        if (auto v = solve_congruence(c / 2, 2 * m)) d = 3 * *v + 2;
      break;
    case InvCase::c2c:
      if (std::gcd(2 * m - 1, 2 * n + 1) == 1) {
        for (long u = 1; u <= 2 * m; ++u)
          if (euclid_mod((m + n) * (2 * u - 1) + 1, 2 * m - 1) == 0) {
            d = 6 * u - 1;
            break;
          }
      }
      break;
    case InvCase::c3: break;
  }
  if (d) {
    r.stably_cy = true;
    r.cy = r.cyf = d;
  }
  return r;
}

struct InvariantReport {
  GroupSpec group;
  int characteristic;
  int coxeter;
  InvCase inv_case;
  HGroup H;
  SymmetryClass sym;
  long u;
  long period;
  CYResult cy;
  std::optional<long> n_cy_min;
  long num_vertices;
};

inline InvariantReport classify(const GroupSpec& g, int characteristic) {
  require_supported(g);
  InvariantReport r{g,
                    characteristic,
                    g.spec.coxeter,
                    inv_case(g),
                    H_subgroup(g, characteristic),
                    symmetry_class(g, characteristic),
                    u_formula(g),
                    period_formula(g, characteristic),
                    cy_dimensions(g, characteristic),
                    std::nullopt,
                    num_vertex_orbits(g)};
  if (!loewy_two(g)) r.n_cy_min = n_cy_min(g);
  return r;
}

}  // namespace meshalg
