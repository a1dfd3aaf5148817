#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "meshalg/field.hpp"
#include "meshalg/linalg.hpp"

using namespace meshalg;

TEST_CASE("QQ arithmetic is exact") {
  QQ fd;
  mpq_class a = fd.from_int(3) / fd.from_int(7);
  mpq_class b = a * 7;
  CHECK(b == 3);
  CHECK(fd.str(fd.from_int(-3) / fd.from_int(6)) == "-1/2");
  CHECK(fd.sign_of(fd.from_int(-1)) == -1);
  CHECK(fd.sign_of(fd.from_int(2)) == 0);
  CHECK_THROWS_AS(fd.inv(fd.zero()), std::domain_error);
}

TEST_CASE("GF(p) residues") {
  GFp f5(5);
  CHECK(f5.is_zero(f5.from_int(10)));
  CHECK(f5.from_int(-1) == f5.from_int(4));
  for (long x = 1; x < 5; ++x) CHECK(f5.from_int(x) * f5.inv(f5.from_int(x)) == f5.one());
  GFp f2(2);
  CHECK(f2.sign_of(f2.one()) == 1);
  CHECK(f2.from_int(-1) == f2.one());
  CHECK_THROWS(GFp(4));
  CHECK_THROWS(GFp(1));
  // a default Zp behaves as zero and adopts the other modulus
  Zp z;
  Zp s = z + f5.from_int(3);
  CHECK(s.p == 5);
  CHECK(s.v == 3);
}

namespace {

// brute-force rank over GF(2): log2 of the size of the row span
std::size_t span_rank_gf2(const std::vector<std::vector<int>>& rows) {
  std::set<std::vector<int>> span;
  std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (unsigned long mask = 0; mask < (1UL << rows.size()); ++mask) {
    std::vector<int> v(n, 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if ((mask >> r) & 1)
        for (std::size_t j = 0; j < n; ++j) v[j] ^= rows[r][j];
    span.insert(v);
  }
  std::size_t k = 0;
  while ((1UL << k) < span.size()) ++k;
  return k;
}

}  // namespace

TEST_CASE("rank over GF(2) agrees with span enumeration") {
  std::mt19937 rng(7);
  GFp f2(2);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
    std::vector<std::vector<int>> rows(r, std::vector<int>(c));
    Matrix<GFp> M(f2, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        rows[i][j] = rng() % 2;
        M(i, j) = f2.from_int(rows[i][j]);
      }
    auto rk = rank_of(f2, M);
    CHECK(rk == span_rank_gf2(rows));
    auto K = kernel_of(f2, M);
    CHECK(rk + K.size() == c);
    for (const auto& x : K)
      for (const auto& y : M.apply(f2, x)) CHECK(f2.is_zero(y));
  }
}

TEST_CASE("kernel, solve and inverse over QQ") {
  QQ fd;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 5;
    Matrix<QQ> M(fd, n, n);
    for (auto& x : M.a) x = fd.from_int(static_cast<long>(rng() % 7) - 3);
    auto rk = rank_of(fd, M);
    auto K = kernel_of(fd, M);
    CHECK(rk + K.size() == n);
    for (const auto& x : K)
      for (const auto& y : M.apply(fd, x)) CHECK(fd.is_zero(y));
    Vec<QQ> x0(n);
    for (auto& v : x0) v = fd.from_int(static_cast<long>(rng() % 5) - 2);
    auto b = M.apply(fd, x0);
    auto sol = solve(fd, M, b);
    REQUIRE(sol.has_value());
    CHECK(M.apply(fd, *sol) == b);
    if (rk == n) {
      auto inv = inverse_of(fd, M);
      for (std::size_t j = 0; j < n; ++j) {
        Vec<QQ> e(n, fd.zero());
        e[j] = fd.one();
        auto col = M.apply(fd, inv.apply(fd, e));
        CHECK(col == e);
      }
    } else {
      CHECK_THROWS_AS(inverse_of(fd, M), std::domain_error);
    }
  }
  Matrix<QQ> A(fd, 2, 2);
  A(0, 0) = 1;
  A(1, 0) = 1;
  Vec<QQ> b{fd.from_int(1), fd.from_int(2)};
  CHECK_FALSE(solve(fd, A, b).has_value());
}
