#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace meshalg {

enum class Family { A, D, E };

struct InvalidRank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NoRho : std::logic_error {
  using std::logic_error::logic_error;
};

struct Edge {
  int src, tgt;
};

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline long euclid_mod(long a, long b) {
  long r = a % b;
  return r < 0 ? r + (b < 0 ? -b : b) : r;
}

/// Dynkin quiver with the fixed orientation and labelling.
struct DynkinSpec {
  Family family;
  int rank;
  std::vector<int> labels;
  std::vector<Edge> edges;
  int coxeter;
  // ρ data: order 2, 3, or 0 for the infinite-order ρ of A_{2n}; -1 when absent
  int rho_order;
  // half parameter n: A_{2n} / A_{2n-1} / D_{n+1}
  int n;

  int max_label() const { return labels.back(); }
  bool valid_label(int i) const {
    for (int l : labels)
      if (l == i) return true;
    return false;
  }
  bool has_rho() const { return rho_order != -1; }
  bool is_A_even() const { return family == Family::A && rank % 2 == 0; }
  bool is_A_odd() const { return family == Family::A && rank % 2 == 1; }
  bool is_D4() const { return family == Family::D && rank == 4; }

  /// p(i): every arrow raises h(k,i) = 2k + p(i) by one.
  int level(int i) const {
    switch (family) {
      case Family::A: return i - 1;
      case Family::D: return i == 2 ? 0 : (i <= 1 ? 1 : i - 2);
      case Family::E: return i == 0 ? 3 : i - 1;
    }
    return 0;
  }

  std::optional<int> edge_index(int s, int t) const {
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].src == s && edges[e].tgt == t) return static_cast<int>(e);
    return std::nullopt;
  }

  std::string name() const {
    const char* f = family == Family::A ? "A" : family == Family::D ? "D" : "E";
    return f + std::to_string(rank);
  }
};

inline DynkinSpec make_dynkin(Family family, int rank) {
  DynkinSpec s{family, rank, {}, {}, 0, -1, 0};
  switch (family) {
    case Family::A:
      if (rank < 1) throw InvalidRank("A_r needs r >= 1");
      for (int i = 1; i <= rank; ++i) s.labels.push_back(i);
      for (int i = 1; i < rank; ++i) s.edges.push_back({i, i + 1});
      s.coxeter = rank + 1;
      s.n = (rank + 1) / 2;
      if (rank >= 2) s.rho_order = rank % 2 == 0 ? 0 : 2;
      break;
    case Family::D:
      if (rank < 4) throw InvalidRank("D_{n+1} needs n+1 >= 4");
      s.n = rank - 1;
      for (int i = 0; i <= s.n; ++i) s.labels.push_back(i);
      s.edges.push_back({2, 0});
      s.edges.push_back({2, 1});
      for (int i = 2; i < s.n; ++i) s.edges.push_back({i, i + 1});
      s.coxeter = 2 * s.n;
      s.rho_order = rank == 4 ? 3 : 2;
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw InvalidRank("E_n needs n in {6,7,8}");
      for (int i = 0; i < rank; ++i) s.labels.push_back(i);
      for (int i = 1; i + 1 < rank; ++i) s.edges.push_back({i, i + 1});
      s.edges.push_back({3, 0});
      s.coxeter = rank == 6 ? 12 : rank == 7 ? 18 : 30;
      s.rho_order = rank == 6 ? 2 : -1;
      break;
  }
  return s;
}

struct ZVertex {
  long k;
  int i;
  auto operator<=>(const ZVertex&) const = default;
};

/// Arrow (k,e) : (k,src) -> (k,tgt) when !shift, (k,e)' : (k,tgt) -> (k+1,src) when shift.
struct ZArrow {
  long k;
  int e;
  bool shift;
  auto operator<=>(const ZArrow&) const = default;
};

inline long height(const DynkinSpec& s, const ZVertex& v) { return 2 * v.k + s.level(v.i); }

inline ZVertex source(const DynkinSpec& s, const ZArrow& a) {
  const Edge& ed = s.edges[a.e];
  return a.shift ? ZVertex{a.k, ed.tgt} : ZVertex{a.k, ed.src};
}
inline ZVertex target(const DynkinSpec& s, const ZArrow& a) {
  const Edge& ed = s.edges[a.e];
  return a.shift ? ZVertex{a.k + 1, ed.src} : ZVertex{a.k, ed.tgt};
}

/// τ^d on vertices: (k,i) -> (k-d,i).
inline ZVertex translate(const ZVertex& v, long d) { return {v.k - d, v.i}; }

inline ZArrow sigma(const ZArrow& a) { return a.shift ? ZArrow{a.k, a.e, false} : ZArrow{a.k - 1, a.e, true}; }
inline ZArrow sigma_inv(const ZArrow& a) { return a.shift ? ZArrow{a.k + 1, a.e, false} : ZArrow{a.k, a.e, true}; }
inline ZArrow tau_arrow(const ZArrow& a) { return {a.k - 1, a.e, a.shift}; }
inline ZArrow translate(const ZArrow& a, long d) { return {a.k - d, a.e, a.shift}; }

inline std::vector<ZArrow> out_arrows(const DynkinSpec& s, const ZVertex& v) {
  std::vector<ZArrow> out;
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    if (s.edges[e].src == v.i) out.push_back({v.k, static_cast<int>(e), false});
    if (s.edges[e].tgt == v.i) out.push_back({v.k, static_cast<int>(e), true});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ZArrow> in_arrows(const DynkinSpec& s, const ZVertex& v) {
  std::vector<ZArrow> in;
  for (std::size_t e = 0; e < s.edges.size(); ++e) {
    if (s.edges[e].tgt == v.i) in.push_back({v.k, static_cast<int>(e), false});
    if (s.edges[e].src == v.i) in.push_back({v.k - 1, static_cast<int>(e), true});
  }
  std::sort(in.begin(), in.end());
  return in;
}

inline std::optional<ZArrow> arrow_between(const DynkinSpec& s, const ZVertex& u, const ZVertex& v) {
  if (v.k == u.k) {
    if (auto e = s.edge_index(u.i, v.i)) return ZArrow{u.k, *e, false};
  } else if (v.k == u.k + 1) {
    if (auto e = s.edge_index(v.i, u.i)) return ZArrow{u.k, *e, true};
  }
  return std::nullopt;
}

/// The out-arrow of v ending at a vertex with label j.
inline std::optional<ZArrow> step_arrow(const DynkinSpec& s, const ZVertex& v, int j) {
  if (auto e = s.edge_index(v.i, j)) return ZArrow{v.k, *e, false};
  if (auto e = s.edge_index(j, v.i)) return ZArrow{v.k, *e, true};
  return std::nullopt;
}

inline ZVertex rho(const DynkinSpec& s, const ZVertex& v) {
  if (!s.has_rho()) throw NoRho("rho does not exist for " + s.name());
  switch (s.family) {
    case Family::A:
      if (s.is_A_even()) return {v.k + v.i - s.n, 2 * s.n + 1 - v.i};
      return {v.k + v.i - s.n, 2 * s.n - v.i};
    case Family::D:
      if (s.rank == 4) {
        int m[4] = {1, 3, 2, 0};
        return {v.k, m[v.i]};
      }
      if (v.i == 0) return {v.k, 1};
      if (v.i == 1) return {v.k, 0};
      return v;
    case Family::E:
      if (v.i == 0) return v;
      return {v.k + v.i - 3, 6 - v.i};
  }
  return v;
}

inline ZVertex rho_inv(const DynkinSpec& s, const ZVertex& v) {
  if (!s.has_rho()) throw NoRho("rho does not exist for " + s.name());
  switch (s.family) {
    case Family::A:
      if (s.is_A_even()) {
        int i = 2 * s.n + 1 - v.i;
        return {v.k - i + s.n, i};
      } else {
        int i = 2 * s.n - v.i;
        return {v.k - i + s.n, i};
      }
    case Family::D:
      if (s.rank == 4) {
        int m[4] = {3, 0, 2, 1};
        return {v.k, m[v.i]};
      }
      return rho(s, v);
    case Family::E:
      return rho(s, v);
  }
  return v;
}

/// ρ^a τ^b, with a normalised by the order of ρ (ρ² = τ⁻¹ on A_{2n}).
struct AutoElem {
  int a = 0;
  long b = 0;
  auto operator<=>(const AutoElem&) const = default;
};

inline AutoElem normalize(const DynkinSpec& s, AutoElem g) {
  if (!s.has_rho()) {
    if (g.a != 0) throw NoRho("rho does not exist for " + s.name());
    return g;
  }
  if (s.rho_order == 0) {
    long q = floor_div(g.a, 2);
    return {static_cast<int>(g.a - 2 * q), g.b - q};
  }
  return {static_cast<int>(euclid_mod(g.a, s.rho_order)), g.b};
}

inline AutoElem compose(const DynkinSpec& s, AutoElem f, AutoElem g) { return normalize(s, {f.a + g.a, f.b + g.b}); }
inline AutoElem inverse(const DynkinSpec& s, AutoElem f) { return normalize(s, {-f.a, -f.b}); }
inline AutoElem power(const DynkinSpec& s, AutoElem f, long e) {
  return normalize(s, {static_cast<int>(f.a * e), f.b * e});
}

inline ZVertex apply(const DynkinSpec& s, const AutoElem& g, ZVertex v) {
  v = translate(v, g.b);
  int a = g.a;
  for (; a > 0; --a) v = rho(s, v);
  for (; a < 0; ++a) v = rho_inv(s, v);
  return v;
}

inline ZArrow apply(const DynkinSpec& s, const AutoElem& g, const ZArrow& x) {
  auto r = arrow_between(s, apply(s, g, source(s, x)), apply(s, g, target(s, x)));
  if (!r) throw std::logic_error("automorphism does not map an arrow to an arrow");
  return *r;
}

inline ZArrow rho(const DynkinSpec& s, const ZArrow& x) { return apply(s, AutoElem{1, 0}, x); }

/// ν as an element ρ^a τ^b.
inline AutoElem nakayama_elem(const DynkinSpec& s) {
  switch (s.family) {
    case Family::A:
      if (s.rank == 1) return {0, 0};
      return normalize(s, {1, 1 - s.n});
    case Family::D:
      if ((s.n + 1) % 2 == 0) return {0, 1 - s.n};
      return {1, 1 - s.n};
    case Family::E:
      if (s.rank == 6) return {1, -5};
      if (s.rank == 7) return {0, -8};
      return {0, -14};
  }
  return {};
}

/// ν(k,i) by the closed formulas.
inline ZVertex nakayama_perm_formula(const DynkinSpec& s, const ZVertex& v) {
  switch (s.family) {
    case Family::A: return {v.k + v.i - 1, s.rank + 1 - v.i};
    case Family::D:
      if ((s.n + 1) % 2 == 0) return {v.k + s.n - 1, v.i};
      return rho(s, ZVertex{v.k + s.n - 1, v.i});
    case Family::E:
      if (s.rank == 6) return rho(s, ZVertex{v.k + 5, v.i});
      if (s.rank == 7) return {v.k + 8, v.i};
      return {v.k + 14, v.i};
  }
  return v;
}

/// Vertices with column in [k0, k1].
inline std::vector<ZVertex> window_vertices(const DynkinSpec& s, long k0, long k1) {
  std::vector<ZVertex> out;
  for (long k = k0; k <= k1; ++k)
    for (int i : s.labels) out.push_back({k, i});
  return out;
}

inline std::vector<ZArrow> window_arrows(const DynkinSpec& s, long k0, long k1) {
  std::vector<ZArrow> out;
  for (long k = k0; k <= k1; ++k)
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
      out.push_back({k, static_cast<int>(e), false});
      out.push_back({k, static_cast<int>(e), true});
    }
  return out;
}

}  // namespace meshalg
