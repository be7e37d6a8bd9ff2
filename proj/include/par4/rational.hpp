#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace par4 {

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in 63 bits are stored inline and
// handled with 128-bit intermediates; everything else lives in a shared,
// immutable GMP rational. The representation is canonical: a value is stored
// inline whenever it fits, so equality never has to look at both forms.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& value);

  // Accepts "p", "p/q" and "-p/q"; throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] bool is_small() const { return big_ == nullptr; }

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] mpz_class numerator() const;
  [[nodiscard]] mpz_class denominator() const;

  // "p" when the denominator is one, "p/q" otherwise.
  [[nodiscard]] std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void assign_big(mpq_class value);
  void assign_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

Rational abs(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace par4
