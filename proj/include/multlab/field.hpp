#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace multlab {

/// Integers modulo a prime p < 2^31. Values are kept in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;
  static constexpr std::uint32_t kDefaultModulus = 32003;

  explicit PrimeField(std::uint32_t modulus = kDefaultModulus);

  std::uint32_t modulus() const noexcept { return p_; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  value_type from_int(long long n) const noexcept {
    long long r = n % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  value_type from_integer(const mpz_class& n) const;

  value_type add(value_type a, value_type b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool is_one(value_type a) const noexcept { return a == 1; }
  bool equal(value_type a, value_type b) const noexcept { return a == b; }

  /// Symmetric representative in (-p/2, p/2].
  long long to_signed(value_type a) const noexcept {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
  }
  std::string format(value_type a) const { return std::to_string(to_signed(a)); }
  std::string name() const { return "fp:" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Arbitrary-precision rationals backed by GMP.
class RationalField {
 public:
  using value_type = mpq_class;

  value_type zero() const { return mpq_class(0); }
  value_type one() const { return mpq_class(1); }
  value_type from_int(long long n) const { return mpq_class(static_cast<long>(n)); }
  value_type from_integer(const mpz_class& n) const { return mpq_class(n); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;
  value_type div(const value_type& a, const value_type& b) const { return a * inv(b); }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  std::string format(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "rational"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept ExactField = requires(const F f, const typename F::value_type a, long long n) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.from_int(n) } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.format(a) } -> std::convertible_to<std::string>;
  { f.name() } -> std::convertible_to<std::string>;
};

static_assert(ExactField<PrimeField>);
static_assert(ExactField<RationalField>);

/// Run-time choice of coefficient field.
using AnyField = std::variant<PrimeField, RationalField>;

/// Accepts "fp:<prime>" or "rational".
AnyField parse_field(std::string_view text);
std::string field_name(const AnyField& field);

bool is_prime(std::uint64_t n);

}  // namespace multlab
