#include "multlab/field.hpp"

#include <charconv>

#include "multlab/errors.hpp"

namespace multlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
  if (modulus >= (1u << 31) || !is_prime(modulus)) {
    throw InputError("prime field modulus must be a prime below 2^31, got " +
                     std::to_string(modulus));
  }
}

PrimeField::value_type PrimeField::from_integer(const mpz_class& n) const {
  return static_cast<value_type>(mpz_fdiv_ui(n.get_mpz_t(), p_));
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw InputError("division by zero in " + name());
  // Extended Euclid on (a, p).
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p_;
  return static_cast<value_type>(t);
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw InputError("division by zero in rational field");
  return 1 / a;
}

AnyField parse_field(std::string_view text) {
  if (text == "rational" || text == "q" || text == "Q") return RationalField{};
  if (text.starts_with("fp:")) {
    std::string_view digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || p >= (1ull << 31)) {
      throw InputError("malformed field specification '" + std::string(text) + "'");
    }
    return PrimeField(static_cast<std::uint32_t>(p));
  }
  throw InputError("unknown field '" + std::string(text) +
                   "' (expected \"fp:<prime>\" or \"rational\")");
}

std::string field_name(const AnyField& field) {
  return std::visit([](const auto& f) { return f.name(); }, field);
}

}  // namespace multlab
