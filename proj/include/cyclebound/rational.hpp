#ifndef CYCLEBOUND_RATIONAL_HPP
#define CYCLEBOUND_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclebound {

__extension__ typedef __int128 wide_int;

/// Exact fraction with a 64-bit numerator and a positive 64-bit denominator.
///
/// Values are always kept in lowest terms with the sign on the numerator, so
/// two equal rationals compare equal member-wise. Arithmetic goes through
/// 128-bit intermediates and throws std::overflow_error when the reduced
/// result does not fit back into 64 bits. Ordering is by cross-multiplication;
/// nothing here ever converts to floating point except to_double().
class Rational {
 public:
  using int_type = std::int64_t;
  using wide_type = wide_int;

  constexpr Rational() = default;
  constexpr Rational(int_type value) : num_(value), den_(1) {}  // NOLINT: implicit by intent
  Rational(int_type num, int_type den) { assign(num, den); }

  static Rational from_wide(wide_type num, wide_type den) {
    Rational r;
    r.assign_wide(num, den);
    return r;
  }

  [[nodiscard]] constexpr int_type num() const { return num_; }
  [[nodiscard]] constexpr int_type den() const { return den_; }

  [[nodiscard]] constexpr int sign() const { return (num_ > 0) - (num_ < 0); }
  [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }

  [[nodiscard]] double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// Largest integer not above the value.
  [[nodiscard]] int_type floor() const {
    int_type q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  /// Smallest integer not below the value.
  [[nodiscard]] int_type ceil() const {
    int_type q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  [[nodiscard]] Rational abs() const {
    Rational r = *this;
    if (r.num_ < 0) {
      if (r.num_ == std::numeric_limits<int_type>::min()) {
        throw std::overflow_error("rational overflow");
      }
      r.num_ = -r.num_;
    }
    return r;
  }

  Rational operator-() const { return from_wide(-static_cast<wide_type>(num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) {
      return from_wide(static_cast<wide_type>(a.num_) + b.num_, a.den_);
    }
    return from_wide(static_cast<wide_type>(a.num_) * b.den_ + static_cast<wide_type>(b.num_) * a.den_,
                     static_cast<wide_type>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) {
      return from_wide(static_cast<wide_type>(a.num_) - b.num_, a.den_);
    }
    return from_wide(static_cast<wide_type>(a.num_) * b.den_ - static_cast<wide_type>(b.num_) * a.den_,
                     static_cast<wide_type>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(static_cast<wide_type>(a.num_) * b.num_, static_cast<wide_type>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from_wide(static_cast<wide_type>(a.num_) * b.den_, static_cast<wide_type>(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const wide_type lhs = static_cast<wide_type>(a.num_) * b.den_;
    const wide_type rhs = static_cast<wide_type>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Inverse of to_string(); also accepts unreduced input such as "4/-6".
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

 private:
  static int_type parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational component");
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(std::string(s), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rational: " + std::string(s));
    }
    if (pos != s.size()) throw std::invalid_argument("malformed rational: " + std::string(s));
    return v;
  }

  static wide_type gcd_wide(wide_type a, wide_type b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      wide_type t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void assign(int_type num, int_type den) { assign_wide(num, den); }

  void assign_wide(wide_type num, wide_type den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const wide_type g = gcd_wide(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr wide_type lo = std::numeric_limits<int_type>::min();
    constexpr wide_type hi = std::numeric_limits<int_type>::max();
    if (num < lo || num > hi || den > hi) throw std::overflow_error("rational overflow");
    num_ = static_cast<int_type>(num);
    den_ = static_cast<int_type>(den);
  }

  int_type num_ = 0;
  int_type den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace cyclebound

#endif  // CYCLEBOUND_RATIONAL_HPP
