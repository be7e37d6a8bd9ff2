#include "par4/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace par4 {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_small(i128 v) { return v >= -static_cast<i128>(kSmallMax) && v <= static_cast<i128>(kSmallMax); }

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 mag = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

bool mpz_small(const mpz_class& z, std::int64_t& out) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) return false;
  long v = z.get_si();
  if (v == std::numeric_limits<long>::min()) return false;
  out = v;
  return true;
}

}  // namespace

Rational::Rational(long long value) {
  if (value == std::numeric_limits<long long>::min()) {
    assign_big(mpq_class(mpz_class(std::to_string(value))));
  } else {
    num_ = value;
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  assign_wide(num, den);
}

Rational::Rational(const mpq_class& value) { assign_big(value); }

void Rational::assign_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(uabs(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (fits_small(num) && fits_small(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  assign_big(std::move(q));
}

void Rational::assign_big(mpq_class value) {
  value.canonicalize();
  std::int64_t n = 0;
  std::int64_t d = 0;
  if (mpz_small(value.get_num(), n) && mpz_small(value.get_den(), d)) {
    num_ = n;
    den_ = d;
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(std::move(value));
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
  q.canonicalize();
  return Rational(q);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_)); }

std::string Rational::str() const {
  if (big_) return big_->get_den() == 1 ? big_->get_num().get_str() : big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational out;
  if (big_) {
    out.assign_big(-*big_);
  } else {
    out.num_ = -num_;
    out.den_ = den_;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      i128 s = static_cast<i128>(num_) + rhs.num_;
      if (fits_small(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
      assign_wide(s, 1);
      return *this;
    }
    assign_wide(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                static_cast<i128>(den_) * rhs.den_);
    return *this;
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && rhs.den_ == 1) {
      i128 p = static_cast<i128>(num_) * rhs.num_;
      if (fits_small(p)) {
        num_ = static_cast<std::int64_t>(p);
        return *this;
      }
      assign_wide(p, 1);
      return *this;
    }
    assign_wide(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
    return *this;
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!big_ && !rhs.big_) {
    assign_wide(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
    return *this;
  }
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical storage: a small value is never stored big
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace par4
