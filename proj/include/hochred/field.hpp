#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "hochred/errors.hpp"

namespace hochred {

/// Element of Z/p for a prime p < 2^31. The modulus travels with the value
/// so that arithmetic needs no ambient context.
class Zp {
 public:
  Zp(std::uint64_t value, std::uint32_t p) : v_(static_cast<std::uint32_t>(value % p)), p_(p) {}

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t modulus() const noexcept { return p_; }

  friend Zp operator+(Zp a, Zp b) noexcept {
    std::uint32_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(s, a.p_);
  }
  friend Zp operator-(Zp a, Zp b) noexcept {
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Zp operator-(Zp a) noexcept { return raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  friend Zp operator*(Zp a, Zp b) noexcept {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % a.p_), a.p_);
  }
  friend Zp operator/(Zp a, Zp b) { return a * inverse(b); }
  Zp& operator+=(Zp b) noexcept { return *this = *this + b; }
  Zp& operator-=(Zp b) noexcept { return *this = *this - b; }
  Zp& operator*=(Zp b) noexcept { return *this = *this * b; }
  friend bool operator==(Zp a, Zp b) noexcept { return a.v_ == b.v_; }

  friend bool is_zero(Zp a) noexcept { return a.v_ == 0; }
  friend bool is_one(Zp a) noexcept { return a.v_ == 1; }

  friend Zp inverse(Zp a) {
    if (a.v_ == 0) throw InvalidArgument("division by zero in F_p");
    std::int64_t t = 0, new_t = 1, r = a.p_, new_r = a.v_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = t - q * new_t;
      std::swap(t, new_t);
      r = r - q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += a.p_;
    return raw(static_cast<std::uint32_t>(t), a.p_);
  }

 private:
  static Zp raw(std::uint32_t v, std::uint32_t p) noexcept {
    Zp z(0, p);
    z.v_ = v;
    return z;
  }

  std::uint32_t v_;
  std::uint32_t p_;
};

inline bool is_zero(const mpq_class& a) { return sgn(a) == 0; }
inline bool is_one(const mpq_class& a) { return a == 1; }
inline mpq_class inverse(const mpq_class& a) {
  if (sgn(a) == 0) throw InvalidArgument("division by zero in QQ");
  mpq_class r = 1;
  r /= a;
  return r;
}

/// The rational numbers, with GMP rationals kept in lowest terms.
class RationalField {
 public:
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long v) const { return value_type(v); }
  value_type from_fraction(const std::string& num, const std::string& den) const {
    mpz_class n(num), d(den);
    if (d == 0) throw InvalidArgument("zero denominator");
    value_type q(n, d);
    q.canonicalize();
    return q;
  }
  unsigned long characteristic() const noexcept { return 0; }
  std::string name() const { return "QQ"; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  /// Numerator and denominator as decimal strings (denominator positive).
  bool is_integer(const value_type& a) const { return a.get_den() == 1; }
  bool is_negative(const value_type& a) const { return sgn(a) < 0; }
  bool operator==(const RationalField&) const = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The prime field F_p, p < 2^31.
class PrimeField {
 public:
  using value_type = Zp;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) throw InvalidArgument("F_p requires a prime p < 2^31");
  }

  value_type zero() const { return Zp(0, p_); }
  value_type one() const { return Zp(1, p_); }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return Zp(static_cast<std::uint64_t>(r), p_);
  }
  value_type from_fraction(const std::string& num, const std::string& den) const {
    mpz_class n(num), d(den);
    mpz_class nr = n % p_, dr = d % p_;
    if (nr < 0) nr += p_;
    if (dr < 0) dr += p_;
    if (dr == 0) throw InvalidArgument("denominator vanishes modulo " + std::to_string(p_));
    return Zp(nr.get_ui(), p_) / Zp(dr.get_ui(), p_);
  }
  unsigned long characteristic() const noexcept { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  std::string to_string(const value_type& a) const { return std::to_string(a.value()); }
  bool is_integer(const value_type&) const { return true; }
  bool is_negative(const value_type&) const { return false; }
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a, const typename F::value_type& b) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(1L) } -> std::same_as<typename F::value_type>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { inverse(a) } -> std::convertible_to<typename F::value_type>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
  { f.characteristic() } -> std::convertible_to<unsigned long>;
};

}  // namespace hochred
