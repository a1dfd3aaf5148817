#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace meshalg {

// Residue modulo a prime p; the modulus travels with the value.
struct Zp {
  std::uint32_t v = 0;
  std::uint32_t p = 0;

  Zp() = default;
  Zp(std::uint32_t value, std::uint32_t mod) : v(value % mod), p(mod) {}

  // a default-constructed Zp is a zero without modulus; it adopts the other operand's
  static std::uint32_t mod(Zp a, Zp b) { return a.p ? a.p : b.p; }
  friend Zp operator+(Zp a, Zp b) {
    auto q = mod(a, b);
    return q ? Zp(static_cast<std::uint32_t>((std::uint64_t(a.v) + b.v) % q), q) : Zp();
  }
  friend Zp operator-(Zp a, Zp b) {
    auto q = mod(a, b);
    return q ? Zp(static_cast<std::uint32_t>((std::uint64_t(a.v) + q - b.v) % q), q) : Zp();
  }
  friend Zp operator*(Zp a, Zp b) {
    auto q = mod(a, b);
    return q ? Zp(static_cast<std::uint32_t>((std::uint64_t(a.v) * b.v) % q), q) : Zp();
  }
  Zp operator-() const { return p ? Zp(static_cast<std::uint32_t>((p - v) % p), p) : Zp(); }
  Zp inv() const {
    if (v == 0) throw std::domain_error("Zp: inverse of zero");
    std::uint64_t r = 1, b = v, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return Zp(static_cast<std::uint32_t>(r), p);
  }
  friend Zp operator/(Zp a, Zp b) { return a * b.inv(); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  friend bool operator==(Zp a, Zp b) { return a.v == b.v; }
};

/// Field descriptor for the rationals.
struct QQ {
  using value_type = mpq_class;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long n) const { return value_type(n); }
  bool is_zero(const value_type& x) const { return sgn(x) == 0; }
  value_type inv(const value_type& x) const {
    if (is_zero(x)) throw std::domain_error("QQ: inverse of zero");
    return 1 / x;
  }
  int characteristic() const { return 0; }
  std::string str(const value_type& x) const { return x.get_str(); }
  std::string name() const { return "QQ"; }
  // +1 / -1 detection; 0 otherwise
  int sign_of(const value_type& x) const {
    if (x == 1) return 1;
    if (x == -1) return -1;
    return 0;
  }
};

/// Field descriptor for GF(p).
struct GFp {
  using value_type = Zp;
  std::uint32_t p;
  explicit GFp(std::uint32_t prime) : p(prime) {
    if (prime < 2) throw std::invalid_argument("GFp: modulus must be prime");
    for (std::uint32_t d = 2; d * d <= prime; ++d)
      if (prime % d == 0) throw std::invalid_argument("GFp: modulus must be prime");
  }
  value_type zero() const { return Zp(0, p); }
  value_type one() const { return Zp(1 % p, p); }
  value_type from_int(long n) const {
    long r = n % static_cast<long>(p);
    if (r < 0) r += p;
    return Zp(static_cast<std::uint32_t>(r), p);
  }
  bool is_zero(const value_type& x) const { return x.v == 0; }
  value_type inv(const value_type& x) const { return x.inv(); }
  int characteristic() const { return static_cast<int>(p); }
  std::string str(const value_type& x) const { return std::to_string(x.v); }
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }
  int sign_of(const value_type& x) const {
    if (x == one()) return 1;
    if (x == -one()) return -1;
    return 0;
  }
};

template <class Fd>
using scalar_t = typename Fd::value_type;

}  // namespace meshalg
