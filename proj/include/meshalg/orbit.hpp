#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "baut.hpp"
#include "group.hpp"
#include "meshcore.hpp"

namespace meshalg {

struct NotEquivariant : std::logic_error {
  using std::logic_error::logic_error;
};

template <class Fd>
using SparseVec = std::vector<std::pair<int, scalar_t<Fd>>>;

/// Λ = B/G with basis the orbit classes of the knitted normal-form basis.
template <class Fd>
class OrbitAlgebra {
 public:
  struct Basis {
    int src, tgt;  // vertex orbits
    ZVertex lift;  // target of the lift starting at the representative of src
    int idx;
    int deg;
  };
  struct QArrow {
    int src, tgt;
    ZArrow lift;  // starts at the representative of src
    int basis;
  };

  OrbitAlgebra(std::shared_ptr<const Knitter<Fd>> kn, const GroupSpec& g) : kn_(std::move(kn)), g_(g) {
    reps_ = orbit_reps(g_);
    for (std::size_t o = 0; o < reps_.size(); ++o) rep_index_[reps_[o]] = static_cast<int>(o);
    for (std::size_t o = 0; o < reps_.size(); ++o) {
      const auto& P = kn_->proj(reps_[o]);
      for (const auto& nd : P.nodes) {
        ZVertex z{reps_[o].k + nd.rel.k, nd.rel.i};
        for (int j = 0; j < nd.dim; ++j) basis_.push_back({static_cast<int>(o), orbit_of(z), z, j, nd.deg});
      }
    }
    std::sort(basis_.begin(), basis_.end(), [](const Basis& a, const Basis& b) {
      return std::tie(a.src, a.tgt, a.deg, a.lift, a.idx) < std::tie(b.src, b.tgt, b.deg, b.lift, b.idx);
    });
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const auto& e = basis_[b];
      index_[{e.src, e.lift, e.idx}] = static_cast<int>(b);
      blocks_[{e.src, e.tgt}].push_back(static_cast<int>(b));
      if (e.deg > max_deg_) max_deg_ = e.deg;
    }
    for (std::size_t o = 0; o < reps_.size(); ++o)
      for (const auto& a : meshalg::out_arrows(spec(), reps_[o])) {
        ZVertex z = target(spec(), a);
        QArrow q{static_cast<int>(o), orbit_of(z), a, basis_index(static_cast<int>(o), z, 0)};
        qindex_[{q.src, a}] = static_cast<int>(arrows_.size());
        arrows_.push_back(q);
      }
  }

  const Fd& field() const { return kn_->field(); }
  const GroupSpec& group() const { return g_; }
  const DynkinSpec& spec() const { return g_.spec; }
  const Knitter<Fd>& knitter() const { return *kn_; }
  std::shared_ptr<const Knitter<Fd>> knitter_ptr() const { return kn_; }

  int num_vertices() const { return static_cast<int>(reps_.size()); }
  const std::vector<ZVertex>& reps() const { return reps_; }
  int orbit_of(const ZVertex& v) const { return rep_index_.at(to_rep(g_, v)); }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Basis>& basis() const { return basis_; }
  const std::vector<QArrow>& arrows() const { return arrows_; }
  int loewy_length() const { return max_deg_ + 1; }
  bool is_loewy_two() const { return loewy_length() == 2; }

  int basis_index(int src, const ZVertex& lift, int idx) const {
    auto it = index_.find({src, lift, idx});
    return it == index_.end() ? -1 : it->second;
  }
  int idempotent(int v) const { return basis_index(v, reps_[v], 0); }

  const std::vector<int>& block(int src, int tgt) const {
    static const std::vector<int> empty;
    auto it = blocks_.find({src, tgt});
    return it == blocks_.end() ? empty : it->second;
  }
  /// dim e_src Λ e_tgt
  int block_dim(int src, int tgt) const { return static_cast<int>(block(src, tgt).size()); }
  int dim_right_projective(int v) const {
    int d = 0;
    for (int t = 0; t < num_vertices(); ++t) d += block_dim(v, t);
    return d;
  }
  int dim_left_projective(int v) const {
    int d = 0;
    for (int s = 0; s < num_vertices(); ++s) d += block_dim(s, v);
    return d;
  }

  Path basis_path(int b) const {
    const auto& e = basis_[b];
    return kn_->basis_path(reps_[e.src], e.lift, e.idx);
  }

  int arrow_index(int src_orbit, const ZArrow& lift) const {
    auto it = qindex_.find({src_orbit, lift});
    return it == qindex_.end() ? -1 : it->second;
  }
  /// Q-arrow of the class of a B-arrow.
  int arrow_class(const ZArrow& a) const {
    long s = 0;
    ZVertex v = source(spec(), a);
    ZVertex r = to_rep(g_, v, &s);
    return arrow_index(rep_index_.at(r), apply(spec(), phi_power(g_, s), a));
  }
  /// Q-arrow whose class is the given degree-one basis element, or -1.
  int arrow_of_basis(int b) const {
    for (std::size_t q = 0; q < arrows_.size(); ++q)
      if (arrows_[q].basis == b) return static_cast<int>(q);
    return -1;
  }

  Vec<Fd> zero() const { return Vec<Fd>(dim(), field().zero()); }
  Vec<Fd> unit(int b) const {
    auto v = zero();
    v[b] = field().one();
    return v;
  }

  /// Class of an element of e_r B with r a representative.
  Vec<Fd> local_to_vec(const Local<Fd>& l) const {
    auto v = zero();
    if (l.c.empty()) return v;
    int o = rep_index_.at(l.src);
    for (std::size_t r = 0; r < l.c.size(); ++r) {
      if (field().is_zero(l.c[r])) continue;
      v[basis_index(o, l.tgt, static_cast<int>(r))] += l.c[r];
    }
    return v;
  }

  /// Class of a path of B.
  Vec<Fd> class_of(const Path& p) const {
    long s = 0;
    to_rep(g_, p.start, &s);
    Path q = s == 0 ? p : map_path(spec(), phi_power(g_, s), p);
    return local_to_vec(kn_->eval(q));
  }

  /// Product of two basis elements as a sparse vector.
  const SparseVec<Fd>& mul_basis(int i, int j) const {
    auto key = std::make_pair(i, j);
    auto it = mul_cache_.find(key);
    if (it != mul_cache_.end()) return it->second;
    SparseVec<Fd> out;
    const auto& a = basis_[i];
    const auto& b = basis_[j];
    if (orbit_of(a.lift) == b.src && a.deg + b.deg <= max_deg_) {
      long s = 0;
      to_rep(g_, a.lift, &s);
      Path p2 = map_path(spec(), phi_power(g_, -s), basis_path(j));
      auto loc = kn_->walk(kn_->basis_elem(reps_[a.src], a.lift, a.idx), p2.labels);
      for (std::size_t r = 0; r < loc.c.size(); ++r)
        if (!field().is_zero(loc.c[r])) out.push_back({basis_index(a.src, loc.tgt, static_cast<int>(r)), loc.c[r]});
    }
    return mul_cache_.emplace(key, std::move(out)).first->second;
  }

  Vec<Fd> mul(const Vec<Fd>& x, const Vec<Fd>& y) const {
    auto out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (field().is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (field().is_zero(y[j])) continue;
        scalar_t<Fd> c = x[i] * y[j];
        for (const auto& [k, s] : mul_basis(static_cast<int>(i), static_cast<int>(j))) out[k] += c * s;
      }
    }
    return out;
  }

  /// Q-arrows traversed by a path of B.
  std::vector<int> q_arrows_of(const Path& p) const {
    std::vector<int> out;
    for (const auto& a : path_arrows(spec(), p)) out.push_back(arrow_class(a));
    return out;
  }

  /// Class of the path of Q starting at the given vertex orbit.
  Vec<Fd> eval_qpath(int start, const std::vector<int>& qarrows) const {
    ZVertex v = reps_[start];
    Path p{v, {}};
    for (int q : qarrows) {
      const auto& qa = arrows_[q];
      long s = 0;
      ZVertex r = to_rep(g_, v, &s);
      if (rep_index_.at(r) != qa.src) throw std::invalid_argument("eval_qpath: arrows do not compose");
      ZArrow lifted = apply(spec(), phi_power(g_, -s), qa.lift);
      v = target(spec(), lifted);
      p.labels.push_back(v.i);
    }
    return class_of(p);
  }

 private:
  std::shared_ptr<const Knitter<Fd>> kn_;
  GroupSpec g_;
  std::vector<ZVertex> reps_;
  std::map<ZVertex, int> rep_index_;
  std::vector<Basis> basis_;
  std::map<std::tuple<int, ZVertex, int>, int> index_;
  std::map<std::pair<int, int>, std::vector<int>> blocks_;
  std::vector<QArrow> arrows_;
  std::map<std::pair<int, ZArrow>, int> qindex_;
  int max_deg_ = 0;
  mutable std::map<std::pair<int, int>, SparseVec<Fd>> mul_cache_;
};

/// Graded automorphism of Λ: permutations of Q0, Q1 and a ±1 scalar per arrow.
struct LAut {
  std::vector<int> vperm;
  std::vector<int> aperm;
  std::vector<int> sign;
  std::string name;
};

/// Checks f∘φ = φ∘f on arrows of a window around column 0.
inline void check_equivariant(const GroupSpec& g, const BAut& f, long width) {
  const DynkinSpec& s = g.spec;
  AutoElem phi = g.phi();
  if (compose(s, f.vert, phi) != compose(s, phi, f.vert)) throw NotEquivariant(f.name + ": vertex map does not commute with the group");
  for (const auto& a : window_arrows(s, -width, width))
    if (f.sign(apply(s, phi, a)) != f.sign(a)) throw NotEquivariant(f.name + ": arrow scalars are not G-invariant");
}

/// f̄([a]) = [f(a)].
template <class Fd>
LAut push(const OrbitAlgebra<Fd>& L, const BAut& f) {
  const auto& s = L.spec();
  check_equivariant(L.group(), f, 2L * L.group().m + s.coxeter);
  LAut out;
  out.name = f.name;
  for (int o = 0; o < L.num_vertices(); ++o) out.vperm.push_back(L.orbit_of(apply(s, f.vert, L.reps()[o])));
  for (const auto& q : L.arrows()) {
    auto [sg, b] = apply(s, f, q.lift);
    out.aperm.push_back(L.arrow_class(b));
    out.sign.push_back(sg);
  }
  return out;
}

/// Image of a basis element under f̄.
template <class Fd>
Vec<Fd> apply(const OrbitAlgebra<Fd>& L, const LAut& f, int b) {
  const auto& e = L.basis()[b];
  auto qs = L.q_arrows_of(L.basis_path(b));
  int sg = 1;
  for (auto& q : qs) {
    sg *= f.sign[q];
    q = f.aperm[q];
  }
  auto v = L.eval_qpath(f.vperm[e.src], qs);
  if (sg < 0)
    for (auto& x : v) x = -x;
  return v;
}

template <class Fd>
Vec<Fd> apply(const OrbitAlgebra<Fd>& L, const LAut& f, const Vec<Fd>& x) {
  auto out = L.zero();
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (L.field().is_zero(x[b])) continue;
    auto y = apply(L, f, static_cast<int>(b));
    for (std::size_t r = 0; r < y.size(); ++r) out[r] += x[b] * y[r];
  }
  return out;
}

/// Validity: f̄ sends every mesh relation of Λ to zero.
template <class Fd>
bool validity_check(const OrbitAlgebra<Fd>& L, const Presentation& pres, const LAut& f) {
  const auto& s = L.spec();
  for (int o = 0; o < L.num_vertices(); ++o) {
    auto acc = L.zero();
    for (const auto& [sg, p] : mesh_relation(pres, L.reps()[o])) {
      auto qs = L.q_arrows_of(p);
      int c = sg;
      ZVertex st = p.start;
      for (auto& q : qs) {
        c *= f.sign[q];
        q = f.aperm[q];
      }
      auto v = L.eval_qpath(f.vperm[L.orbit_of(st)], qs);
      for (std::size_t r = 0; r < v.size(); ++r) acc[r] += L.field().from_int(c) * v[r];
    }
    for (const auto& x : acc)
      if (!L.field().is_zero(x)) return false;
    (void)s;
  }
  return true;
}

/// The graded Nakayama form of Λ induced by a G-invariant socle basis.
template <class Fd>
class OrbitForm {
 public:
  OrbitForm(const OrbitAlgebra<Fd>& L, std::shared_ptr<const SocleBasis<Fd>> sb) : L_(L), sb_(std::move(sb)) {}

  /// ⟨a,b⟩ for basis elements.
  scalar_t<Fd> operator()(int a, int b) const {
    const auto& fd = L_.field();
    const auto& ea = L_.basis()[a];
    const auto& eb = L_.basis()[b];
    int top = L_.loewy_length() - 1;
    if (ea.deg + eb.deg != top) return fd.zero();
    ZVertex r = L_.reps()[ea.src];
    int w = L_.basis_index(ea.src, L_.knitter().nu(r), 0);
    for (const auto& [k, c] : L_.mul_basis(a, b))
      if (k == w) return c / sb_->coeff(r);
    return fd.zero();
  }

  scalar_t<Fd> operator()(const Vec<Fd>& x, const Vec<Fd>& y) const {
    const auto& fd = L_.field();
    auto acc = fd.zero();
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (fd.is_zero(x[a])) continue;
      for (std::size_t b = 0; b < y.size(); ++b) {
        if (fd.is_zero(y[b])) continue;
        acc += x[a] * y[b] * (*this)(static_cast<int>(a), static_cast<int>(b));
      }
    }
    return acc;
  }

  const SocleBasis<Fd>& socle() const { return *sb_; }

 private:
  const OrbitAlgebra<Fd>& L_;
  std::shared_ptr<const SocleBasis<Fd>> sb_;
};

/// ⟨a,b⟩ = ⟨b, η̄(a)⟩ on all homogeneous basis pairs.
template <class Fd>
bool nakayama_dual_check(const OrbitAlgebra<Fd>& L, const OrbitForm<Fd>& form, const LAut& eta) {
  const auto& fd = L.field();
  int top = L.loewy_length() - 1;
  std::vector<Vec<Fd>> images;
  for (std::size_t a = 0; a < L.dim(); ++a) images.push_back(apply(L, eta, static_cast<int>(a)));
  for (std::size_t a = 0; a < L.dim(); ++a) {
    const auto& ea = L.basis()[a];
    for (int t = 0; t < L.num_vertices(); ++t)
      for (int b : L.block(ea.tgt, t)) {
        if (ea.deg + L.basis()[b].deg != top) continue;
        auto lhs = form(static_cast<int>(a), b);
        auto rhs = fd.zero();
        for (std::size_t r = 0; r < images[a].size(); ++r)
          if (!fd.is_zero(images[a][r])) rhs += images[a][r] * form(b, static_cast<int>(r));
        if (!fd.is_zero(lhs - rhs)) return false;
      }
  }
  return true;
}

}  // namespace meshalg
