#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "baut.hpp"
#include "dynkin.hpp"
#include "field.hpp"
#include "group.hpp"
#include "linalg.hpp"

namespace meshalg {

struct DerivationFailure : std::logic_error {
  using std::logic_error::logic_error;
};

enum class PresKind { original, signed_ };

/// Signature set X of the relation presentation (empty for the original one).
struct Presentation {
  GroupSpec group;
  PresKind kind;
  long x_period = 1;

  const DynkinSpec& spec() const { return group.spec; }
  int s(const ZArrow& a) const;
  /// coefficient of σ(a)a in the mesh relation at t(a)
  int mesh_sign(const ZArrow& a) const { return ((s(sigma(a)) + s(a)) & 1) ? -1 : 1; }
};

inline int signed_signature(const GroupSpec& g, const ZArrow& a) {
  const DynkinSpec& s = g.spec;
  const Edge& ed = s.edges[a.e];
  switch (s.family) {
    case Family::A: {
      int i = ed.src;
      int n = s.n;
      if (s.rank % 2 == 0) {
        auto inS = [&](int j) { return j >= 1 && j <= n - 1 && (j - n) % 2 != 0; };
        return a.shift ? inS(2 * n - i) : inS(i);
      }
      if (g.t == 1) return !a.shift && i % 2 == 1 && i <= 2 * n - 3;
      if (g.m % 2 == 1) {
        if (!a.shift) return i <= n - 1 && euclid_mod(a.k, 2) == 0;
        return i >= n && i <= 2 * n - 2 && euclid_mod(a.k - (n - i), 2) == 0;
      }
      long M = 2L * g.m;
      auto mid = [&](long x) {
        long r = euclid_mod(x, M);
        return r % 2 == 0 && r < g.m;
      };
      if (!a.shift) {
        if (i <= n - 2) return euclid_mod(a.k, 2) == 0;
        if (i == n - 1 || i == n) return mid(a.k);
        return false;
      }
      if (i == n) return mid(a.k + g.m + 1);
      if (i == n - 1) return mid(a.k + g.m);
      if (i >= n + 1 && i <= 2 * n - 2) return euclid_mod(a.k - (n - 1 - i), 2) == 0;
      return false;
    }
    case Family::D:
      if (s.rank == 4) {
        if (g.t == 3) return false;
        return !a.shift && ed.src == 2 && ed.tgt == 3;
      }
      return !a.shift && ed.src >= 2 && ed.tgt == ed.src + 1 && ed.src % 2 == 0 && ed.src <= s.n - 1;
    case Family::E:
      if (!a.shift && ed.src == 2 && ed.tgt == 3) return true;
      if (a.shift && ed.src == 3 && ed.tgt == 4) return true;
      if (s.rank >= 7 && a.shift && ed.src == 5 && ed.tgt == 6) return true;
      return false;
  }
  return false;
}

inline int Presentation::s(const ZArrow& a) const {
  if (kind == PresKind::original) return 0;
  return signed_signature(group, a) ? 1 : 0;
}

/// The presentation used for the group: signed, except the original one for (D4, ρτ^m).
inline Presentation build_presentation(const GroupSpec& g) {
  if (g.spec.is_D4() && g.t == 3) return {g, PresKind::original, 1};
  long T = 1;
  if (g.spec.is_A_odd() && g.t == 2) T = g.m % 2 == 1 ? 2 : 2L * g.m;
  return {g, PresKind::signed_, T};
}

inline Presentation original_presentation(const GroupSpec& g) { return {g, PresKind::original, 1}; }

/// Terms (coefficient, σ(a)a) of the mesh relation at v.
inline std::vector<std::pair<int, Path>> mesh_relation(const Presentation& pres, const ZVertex& v) {
  std::vector<std::pair<int, Path>> out;
  for (const auto& a : in_arrows(pres.spec(), v)) {
    ZVertex mid = source(pres.spec(), a);
    out.push_back({pres.mesh_sign(a), Path{translate(v, 1), {mid.i, v.i}}});
  }
  return out;
}

template <class Fd>
struct ProjNode {
  ZVertex rel;
  int deg = 0;
  int dim = 0;
  std::vector<std::vector<int>> paths;
  // right multiplication by the arrow from node `first` to this node
  std::vector<std::pair<int, Matrix<Fd>>> in;

  const Matrix<Fd>* from(int src) const {
    for (const auto& [s, m] : in)
      if (s == src) return &m;
    return nullptr;
  }
};

/// The graded right projective e_x B, knitted vertex by vertex.
template <class Fd>
struct Projective {
  ZVertex origin;
  std::vector<ProjNode<Fd>> nodes;
  std::map<ZVertex, int> index;
  int total_dim = 0;
  int socle_node = -1;

  int find(const ZVertex& rel) const {
    auto it = index.find(rel);
    return it == index.end() ? -1 : it->second;
  }
};

/// Element of e_x B e_y in the normal-form basis of the knitted projective.
template <class Fd>
struct Local {
  ZVertex src, tgt;
  Vec<Fd> c;  // empty when e_x B e_y = 0
};

template <class Fd>
class Knitter {
 public:
  Knitter(const Fd& fd, const Presentation& pres) : fd_(fd), pres_(pres) {}

  const Fd& field() const { return fd_; }
  const Presentation& pres() const { return pres_; }
  const DynkinSpec& spec() const { return pres_.spec(); }

  const Projective<Fd>& proj(const ZVertex& x) const {
    long kr = euclid_mod(x.k, pres_.x_period);
    auto key = std::make_pair(kr, x.i);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    auto p = build(ZVertex{kr, x.i});
    return *cache_.emplace(key, p).first->second;
  }

  static ZVertex rel(const ZVertex& x, const ZVertex& z) { return {z.k - x.k, z.i}; }

  const ProjNode<Fd>* node(const ZVertex& x, const ZVertex& z) const {
    const auto& P = proj(x);
    int n = P.find(rel(x, z));
    return n < 0 ? nullptr : &P.nodes[n];
  }

  int dim(const ZVertex& x, const ZVertex& z) const {
    auto nd = node(x, z);
    return nd ? nd->dim : 0;
  }

  /// Brute-force Nakayama vertex: the target of the one-dimensional top-degree piece.
  ZVertex nu(const ZVertex& x) const {
    const auto& P = proj(x);
    ZVertex r = P.nodes[P.socle_node].rel;
    return {x.k + r.k, r.i};
  }

  Local<Fd> idempotent(const ZVertex& x) const { return {x, x, Vec<Fd>{fd_.one()}}; }

  Local<Fd> basis_elem(const ZVertex& x, const ZVertex& z, int j) const {
    int d = dim(x, z);
    Vec<Fd> c(d, fd_.zero());
    c.at(j) = fd_.one();
    return {x, z, c};
  }

  Path basis_path(const ZVertex& x, const ZVertex& z, int j) const { return Path{x, node(x, z)->paths.at(j)}; }

  bool is_zero(const Local<Fd>& v) const {
    for (const auto& x : v.c)
      if (!fd_.is_zero(x)) return false;
    return true;
  }

  /// Right multiplication by the arrow from v.tgt to the vertex labelled j.
  Local<Fd> walk(const Local<Fd>& v, int j) const {
    auto a = step_arrow(spec(), v.tgt, j);
    if (!a) throw std::invalid_argument("walk: no arrow");
    ZVertex z2 = target(spec(), *a);
    const auto& P = proj(v.src);
    int n2 = P.find(rel(v.src, z2));
    int n1 = P.find(rel(v.src, v.tgt));
    if (n2 < 0 || n1 < 0 || v.c.empty()) return {v.src, z2, {}};
    const Matrix<Fd>* M = P.nodes[n2].from(n1);
    if (!M) return {v.src, z2, {}};
    return {v.src, z2, M->apply(fd_, v.c)};
  }

  Local<Fd> walk(Local<Fd> v, const std::vector<int>& labels) const {
    for (std::size_t q = 0; q < labels.size(); ++q) {
      v = walk(v, labels[q]);
      if (v.c.empty()) {
        // still track the endpoint
        ZVertex z = v.tgt;
        for (std::size_t r = q + 1; r < labels.size(); ++r) z = target(spec(), *step_arrow(spec(), z, labels[r]));
        return {v.src, z, {}};
      }
    }
    return v;
  }

  Local<Fd> eval(const Path& p) const { return walk(idempotent(p.start), p.labels); }

  /// a · b for a ∈ e_x B e_z, b ∈ e_z B e_w.
  Local<Fd> multiply(const Local<Fd>& a, const Local<Fd>& b) const {
    if (a.tgt != b.src) throw std::invalid_argument("multiply: non-composable");
    Local<Fd> out{a.src, b.tgt, {}};
    int d = dim(a.src, b.tgt);
    if (d == 0 || a.c.empty() || b.c.empty()) return out;
    out.c.assign(d, fd_.zero());
    const auto* nb = node(b.src, b.tgt);
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (fd_.is_zero(b.c[j])) continue;
      auto w = walk(a, nb->paths[j]);
      if (w.c.empty()) continue;
      for (int r = 0; r < d; ++r) out.c[r] += b.c[j] * w.c[r];
    }
    return out;
  }

  /// Normal form of a combination of paths x -> y.
  Local<Fd> normal_form(const ZVertex& x, const ZVertex& y,
                        const std::vector<std::pair<scalar_t<Fd>, Path>>& terms) const {
    Local<Fd> out{x, y, {}};
    int d = dim(x, y);
    if (d == 0) return out;
    out.c.assign(d, fd_.zero());
    for (const auto& [coef, p] : terms) {
      if (p.start != x) throw std::invalid_argument("normal_form: wrong source");
      auto v = eval(p);
      if (v.tgt != y) throw std::invalid_argument("normal_form: wrong target");
      if (v.c.empty()) continue;
      for (int r = 0; r < d; ++r) out.c[r] += coef * v.c[r];
    }
    return out;
  }

  /// All vertices z with e_x B e_z ≠ 0, in knitting order.
  std::vector<ZVertex> support(const ZVertex& x) const {
    std::vector<ZVertex> out;
    for (const auto& nd : proj(x).nodes) out.push_back({x.k + nd.rel.k, nd.rel.i});
    return out;
  }

 private:
  std::shared_ptr<Projective<Fd>> build(const ZVertex& x) const;

  Fd fd_;
  Presentation pres_;
  mutable std::map<std::pair<long, int>, std::shared_ptr<Projective<Fd>>> cache_;
};

template <class Fd>
std::shared_ptr<Projective<Fd>> Knitter<Fd>::build(const ZVertex& x) const {
  const DynkinSpec& s = spec();
  auto P = std::make_shared<Projective<Fd>>();
  P->origin = x;
  const int c = s.coxeter;
  const long h0 = height(s, x);

  struct Part {
    ZArrow a;
    int node;
    int off;
    int dim;
  };

  for (int d = 0; d <= c - 1; ++d) {
    for (int i : s.labels) {
      long num = h0 + d - s.level(i) - 2 * x.k;
      if (num % 2 != 0) continue;
      long dk = num / 2;
      if (dk < 0 || dk > d) continue;
      ZVertex z{x.k + dk, i};
      ZVertex rz{dk, i};
      if (d == 0) {
        if (z != x) continue;
        ProjNode<Fd> nd;
        nd.rel = rz;
        nd.deg = 0;
        nd.dim = 1;
        nd.paths.push_back({});
        P->index[rz] = static_cast<int>(P->nodes.size());
        P->nodes.push_back(std::move(nd));
        continue;
      }
      std::vector<Part> parts;
      int off = 0;
      for (const auto& a : in_arrows(s, z)) {
        int n = P->find(rel(x, source(s, a)));
        if (n < 0) continue;
        parts.push_back({a, n, off, P->nodes[n].dim});
        off += P->nodes[n].dim;
      }
      if (off == 0) continue;
      Echelon<Fd> ech(fd_, off);
      int tn = P->find(rel(x, translate(z, 1)));
      if (tn >= 0) {
        for (int j = 0; j < P->nodes[tn].dim; ++j) {
          Vec<Fd> row(off, fd_.zero());
          for (const auto& part : parts) {
            const Matrix<Fd>* M = P->nodes[part.node].from(tn);
            if (!M) continue;
            auto sg = fd_.from_int(pres_.mesh_sign(part.a));
            for (int r = 0; r < part.dim; ++r) row[part.off + r] += sg * (*M)(r, j);
          }
          ech.insert(std::move(row));
        }
      }
      auto fr = ech.free_columns();
      if (fr.empty()) continue;
      if (d == c - 1) throw std::logic_error("knitting: nonzero path of length c-1");
      ProjNode<Fd> nd;
      nd.rel = rz;
      nd.deg = d;
      nd.dim = static_cast<int>(fr.size());
      for (int f : fr) {
        for (const auto& part : parts)
          if (f >= part.off && f < part.off + part.dim) {
            auto p = P->nodes[part.node].paths[f - part.off];
            p.push_back(i);
            nd.paths.push_back(std::move(p));
          }
      }
      for (const auto& part : parts) {
        Matrix<Fd> M(fd_, nd.dim, part.dim);
        for (int j = 0; j < part.dim; ++j) {
          Vec<Fd> u(off, fd_.zero());
          u[part.off + j] = fd_.one();
          ech.reduce(u);
          for (int r = 0; r < nd.dim; ++r) M(r, j) = u[fr[r]];
        }
        nd.in.push_back({part.node, std::move(M)});
      }
      P->index[rz] = static_cast<int>(P->nodes.size());
      P->nodes.push_back(std::move(nd));
    }
  }
  int top = -1;
  for (std::size_t n = 0; n < P->nodes.size(); ++n) {
    P->total_dim += P->nodes[n].dim;
    if (P->nodes[n].deg == c - 2) {
      if (top >= 0 || P->nodes[n].dim != 1) throw std::logic_error("knitting: socle is not simple");
      top = static_cast<int>(n);
    }
  }
  if (top < 0) throw std::logic_error("knitting: empty socle");
  P->socle_node = top;
  return P;
}

// ---------------------------------------------------------------------------
// socle basis

inline std::vector<int> alternate(const std::vector<int>& first, const std::vector<int>& second, int letters) {
  std::vector<int> out;
  for (int r = 0; r < letters; ++r) {
    const auto& w = r % 2 == 0 ? first : second;
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

inline std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

/// Monomial in the letters u, v, w of the branch vertex, e.g. "vwvwv".
inline std::vector<int> branch_word(const std::string& letters, const std::vector<int>& u, const std::vector<int>& v,
                                    const std::vector<int>& w) {
  std::vector<int> out;
  for (char ch : letters) {
    const auto& x = ch == 'u' ? u : ch == 'v' ? v : w;
    out.insert(out.end(), x.begin(), x.end());
  }
  return out;
}

/// Fixed socle path shape from a vertex with label i (types D, E).
inline std::vector<int> appendix_shape(const GroupSpec& g, int i) {
  const DynkinSpec& s = g.spec;
  if (s.family == Family::D) {
    if (s.rank == 4 && g.t == 3) {
      // w_(k,i) = ε'_i ε_ρ(i) ε'_ρ(i) ε_i and w_(k,2) = ε_0 ε'_0 ε_1 ε'_1
      switch (i) {
        case 0: return {2, 1, 2, 0};
        case 1: return {2, 3, 2, 1};
        case 3: return {2, 0, 2, 3};
        default: return {0, 2, 1, 2};
      }
    }
    const int n = s.n;
    const std::vector<int> u{0, 2}, v{1, 2};
    auto nu_label = [&](int j) { return (n + 1) % 2 == 0 ? j : 1 - j; };
    if (i >= 2) {
      std::vector<int> gamma, delta;
      for (int r = i - 1; r >= 2; --r) gamma.push_back(r);
      for (int r = 3; r <= i; ++r) delta.push_back(r);
      return concat({gamma, alternate(u, v, n - i + 1), delta});
    }
    if (i == 0) return concat({{2}, alternate(v, u, n - 2), {nu_label(0)}});
    return concat({{2}, alternate(u, v, n - 2), {nu_label(1)}});
  }
  if (s.family == Family::E) {
    const std::vector<int> u{0, 3}, v{4, 3}, w{2, 3};
    auto W = [&](const std::string& x) { return branch_word(x, u, v, w); };
    if (s.rank == 6) {
      switch (i) {
        case 0: return concat({{3}, W("vwvw"), {0}});
        case 1: return concat({{2, 3}, W("vvw"), {4, 5}});
        case 2: return concat({{3}, W("vwvw"), {4}});
        case 3: return W("vwvwv");
        case 4: return concat({{3}, W("wvwv"), {2}});
        default: return concat({{4, 3}, W("wwv"), {2, 1}});
      }
    }
    if (s.rank == 7) {
      switch (i) {
        case 0: return concat({{3}, W("vwvwvwv"), {0}});
        case 1: return concat({{2, 3}, W("vvwvwv"), {2, 1}});
        case 2: return concat({{3}, W("vwvwvwv"), {2}});
        case 3: return W("vwvwvwvw");
        case 4: return concat({{3}, W("wvwvwvw"), {4}});
        case 5: return concat({{4, 3}, W("wwvwvw"), {4, 5}});
        default: return concat({{5, 4, 3}, W("wwvww"), {4, 5, 6}});
      }
    }
    switch (i) {
      case 0: return concat({{3}, W("vwvwvwvwvwvwv"), {0}});
      case 1: return concat({{2, 3}, W("vvwvwvwvwvwv"), {2, 1}});
      case 2: return concat({{3}, W("vwvwvwvwvwvwv"), {2}});
      case 3: return W("vwvwvwvwvwvwvw");
      case 4: return concat({{3}, W("wvwvwvwvwvwvw"), {4}});
      case 5: return concat({{4, 3}, W("wwvwvwvwvwvw"), {4, 5}});
      case 6: return concat({{5, 4, 3}, W("wwvwvwvwvww"), {4, 5, 6}});
      default: return concat({{6, 5, 4, 3}, W("wvvvvwvvww"), {4, 5, 6, 7}});
    }
  }
  throw std::invalid_argument("appendix_shape: type A has no fixed shape");
}

/// Whether v lies in the chosen set I' of orbit representatives for the socle basis.
inline bool in_socle_slice(const GroupSpec& g, const ZVertex& v) {
  if (g.t == 1) return true;
  if (g.spec.family == Family::D) return v.k >= 0 && v.k < g.m;
  if (g.spec.family == Family::E) {
    static const int kT[6] = {0, 2, 1, 0, 0, 0};
    long d = v.k - kT[v.i];
    return d >= 0 && d < g.m;
  }
  return true;
}

/// G-invariant socle element w_v as a path from v.
template <class Fd>
Path socle_word(const GroupSpec& g, const Knitter<Fd>& kn, const ZVertex& v) {
  if (g.spec.family == Family::A) {
    const auto& P = kn.proj(v);
    return Path{v, P.nodes[P.socle_node].paths[0]};
  }
  if (in_socle_slice(g, v)) return Path{v, appendix_shape(g, v.i)};
  long j0 = floor_div(height(g.spec, v), g.h_period());
  for (long dj = -4; dj <= 4; ++dj) {
    long j = j0 + dj;
    ZVertex v0 = apply(g.spec, phi_power(g, j), v);
    if (!in_socle_slice(g, v0)) continue;
    return map_path(g.spec, phi_power(g, -j), Path{v0, appendix_shape(g, v0.i)});
  }
  throw std::logic_error("socle_word: no representative found");
}

/// Socle basis data and the graded Nakayama form it defines.
template <class Fd>
class SocleBasis {
 public:
  SocleBasis(std::shared_ptr<const Knitter<Fd>> kn, const GroupSpec& g) : kn_(std::move(kn)), g_(g) {}

  const Knitter<Fd>& knitter() const { return *kn_; }
  const GroupSpec& group() const { return g_; }

  Path word(const ZVertex& v) const { return socle_word(g_, *kn_, v); }

  /// Coordinate of w_v in the one-dimensional space e_v B_{c-2} e_{ν(v)}.
  scalar_t<Fd> coeff(const ZVertex& v) const {
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    auto e = kn_->eval(word(v));
    if (e.c.empty() || kn_->field().is_zero(e.c[0])) throw DerivationFailure("socle word vanishes in B");
    memo_.emplace(v, e.c[0]);
    return e.c[0];
  }

  /// (a,b) = coefficient of w_{i(a)} in ab.
  scalar_t<Fd> form(const Local<Fd>& a, const Local<Fd>& b) const {
    const auto& fd = kn_->field();
    if (a.tgt != b.src) return fd.zero();
    if (b.tgt != kn_->nu(a.src)) return fd.zero();
    auto ab = kn_->multiply(a, b);
    if (ab.c.empty()) return fd.zero();
    return ab.c[0] / coeff(a.src);
  }

 private:
  std::shared_ptr<const Knitter<Fd>> kn_;
  GroupSpec g_;
  mutable std::map<ZVertex, scalar_t<Fd>> memo_;
};

/// η derived from the socle basis: η(a) = (λ1/λ2) ν(a) with aq = λ1 w_{i(a)}, qν(a) = λ2 w_{t(a)}.
template <class Fd>
BAut nakayama_aut_derived(std::shared_ptr<const SocleBasis<Fd>> sb) {
  const DynkinSpec s = sb->group().spec;
  auto memo = std::make_shared<std::map<ZArrow, int>>();
  auto f = [s, sb, memo](const ZArrow& a) -> int {
    auto it = memo->find(a);
    if (it != memo->end()) return it->second;
    const auto& kn = sb->knitter();
    const auto& fd = kn.field();
    ZVertex x = source(s, a), y = target(s, a);
    ZVertex nx = kn.nu(x), ny = kn.nu(y);
    auto na = arrow_between(s, nx, ny);
    if (!na) throw DerivationFailure("nu does not map the arrow to an arrow");
    int dq = kn.dim(y, nx);
    for (int j = 0; j < dq; ++j) {
      Path q = kn.basis_path(y, nx, j);
      std::vector<int> aq_labels{y.i};
      aq_labels.insert(aq_labels.end(), q.labels.begin(), q.labels.end());
      auto aq = kn.walk(kn.idempotent(x), aq_labels);
      if (aq.c.empty() || fd.is_zero(aq.c[0])) continue;
      auto qn = kn.walk(kn.basis_elem(y, nx, j), ny.i);
      if (qn.c.empty() || fd.is_zero(qn.c[0])) throw DerivationFailure("q nu(a) vanishes");
      scalar_t<Fd> l1 = aq.c[0] / sb->coeff(x);
      scalar_t<Fd> l2 = qn.c[0] / sb->coeff(y);
      int sg = fd.sign_of(l1 / l2);
      if (sg == 0) throw DerivationFailure("derived scalar is not a sign");
      memo->emplace(a, sg);
      return sg;
    }
    throw DerivationFailure("no extension q with aq nonzero");
  };
  return {nakayama_elem(s), f, "eta"};
}

inline int parity_sign(long e) { return euclid_mod(e, 2) == 0 ? 1 : -1; }

/// η from the explicit case list.
inline BAut nakayama_aut_table(const GroupSpec& g) {
  const DynkinSpec s = g.spec;
  const int m = g.m;
  const int t = g.t;
  auto f = [s, m, t](const ZArrow& a) -> int {
    const Edge& ed = s.edges[a.e];
    long q = floor_div(a.k, m);
    long r = euclid_mod(a.k, m);
    switch (s.family) {
      case Family::A: return 1;
      case Family::D: {
        bool eps = ed.src == 2 && ed.tgt <= 1;
        int i = ed.tgt;
        if (s.rank == 4 && t == 3) return a.shift ? -1 : 1;
        if (t == 1) {
          if (eps) return a.shift ? parity_sign(i + 1) : parity_sign(i);
          return a.shift ? 1 : -1;
        }
        if (eps) {
          if (!a.shift) return parity_sign(q + i);
          return r != m - 1 ? parity_sign(q + i + 1) : parity_sign(q + i);
        }
        if (!a.shift) return -1;
        return r == m - 1 ? -1 : 1;
      }
      case Family::E: {
        char greek = ed.tgt == 0 ? 'e' : "?abgdzt"[ed.src];
        if (t == 1) {
          switch (greek) {
            case 'd':
            case 'e': return a.shift ? 1 : -1;
            default: return a.shift ? -1 : 1;
          }
        }
        switch (greek) {
          case 'a': return a.shift ? -1 : 1;
          case 'b': return a.shift ? parity_sign(q + 1) : parity_sign(q);
          case 'g':
            if (!a.shift) return parity_sign(q);
            return ((q % 2 != 0 && r != m - 1) || (q % 2 == 0 && r == m - 1)) ? 1 : -1;
          case 'd': return a.shift ? 1 : -1;
          case 'e':
            if (!a.shift) return -1;
            return r == m - 1 ? -1 : 1;
        }
        return 1;
      }
    }
    return 1;
  };
  return {nakayama_elem(s), f, "eta_table"};
}

}  // namespace meshalg
