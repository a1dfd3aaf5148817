#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dynkin.hpp"

namespace meshalg {

/// A path of ℤΔ: a start vertex and the labels it visits.
struct Path {
  ZVertex start;
  std::vector<int> labels;

  auto operator<=>(const Path&) const = default;
  std::size_t length() const { return labels.size(); }
};

inline std::vector<ZVertex> path_vertices(const DynkinSpec& s, const Path& p) {
  std::vector<ZVertex> vs{p.start};
  for (int j : p.labels) {
    auto a = step_arrow(s, vs.back(), j);
    if (!a) throw std::invalid_argument("path: no arrow to label " + std::to_string(j));
    vs.push_back(target(s, *a));
  }
  return vs;
}

inline std::vector<ZArrow> path_arrows(const DynkinSpec& s, const Path& p) {
  auto vs = path_vertices(s, p);
  std::vector<ZArrow> out;
  for (std::size_t r = 0; r + 1 < vs.size(); ++r) out.push_back(*arrow_between(s, vs[r], vs[r + 1]));
  return out;
}

inline ZVertex path_end(const DynkinSpec& s, const Path& p) { return path_vertices(s, p).back(); }

inline Path path_from_vertices(const std::vector<ZVertex>& vs) {
  Path p{vs.front(), {}};
  for (std::size_t r = 1; r < vs.size(); ++r) p.labels.push_back(vs[r].i);
  return p;
}

inline Path map_path(const DynkinSpec& s, const AutoElem& g, const Path& p) {
  auto vs = path_vertices(s, p);
  for (auto& v : vs) v = apply(s, g, v);
  return path_from_vertices(vs);
}

/// Degree-0 automorphism of B: a vertex map ρ^a τ^b and a ±1 scalar per arrow.
struct BAut {
  AutoElem vert;
  std::function<int(const ZArrow&)> sign;
  std::string name;
};

inline BAut identity_baut() {
  return {AutoElem{}, [](const ZArrow&) { return 1; }, "id"};
}

/// f ∘ g
inline BAut compose(const DynkinSpec& s, const BAut& f, const BAut& g) {
  auto fs = f.sign;
  auto gs = g.sign;
  auto gv = g.vert;
  return {compose(s, f.vert, g.vert),
          [s, fs, gs, gv](const ZArrow& a) { return gs(a) * fs(apply(s, gv, a)); },
          f.name + "*" + g.name};
}

inline BAut inverse(const DynkinSpec& s, const BAut& f) {
  auto inv = inverse(s, f.vert);
  auto fs = f.sign;
  return {inv, [s, fs, inv](const ZArrow& b) { return fs(apply(s, inv, b)); }, f.name + "^-1"};
}

inline BAut power(const DynkinSpec& s, const BAut& f, long e) {
  BAut base = e < 0 ? inverse(s, f) : f;
  long n = e < 0 ? -e : e;
  // table of signs along the orbit keeps nesting shallow
  AutoElem v = power(s, base.vert, n);
  auto bs = base.sign;
  auto bv = base.vert;
  return {v,
          [s, bs, bv, n](const ZArrow& a) {
            int sg = 1;
            ZArrow x = a;
            for (long r = 0; r < n; ++r) {
              sg *= bs(x);
              x = apply(s, bv, x);
            }
            return sg;
          },
          f.name + "^" + std::to_string(e)};
}

inline ZVertex apply(const DynkinSpec& s, const BAut& f, const ZVertex& v) { return apply(s, f.vert, v); }

/// Image of an arrow: (scalar, arrow).
inline std::pair<int, ZArrow> apply(const DynkinSpec& s, const BAut& f, const ZArrow& a) {
  return {f.sign(a), apply(s, f.vert, a)};
}

/// Image of a path: (scalar, path).
inline std::pair<int, Path> apply(const DynkinSpec& s, const BAut& f, const Path& p) {
  int sg = 1;
  for (const auto& a : path_arrows(s, p)) sg *= f.sign(a);
  return {sg, map_path(s, f.vert, p)};
}

}  // namespace meshalg
