#pragma once

// Exact rational arithmetic. Every value in the library (numeral values,
// expansion remainders, digit sums) is an ExactRational; nothing is ever
// rounded.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace threehalves {

using BigInt = boost::multiprecision::cpp_int;

class ExactRational {
public:
  ExactRational() = default;

  template <typename I, std::enable_if_t<std::is_integral_v<I>> * = nullptr>
  ExactRational(I n) : num_(n) {}

  ExactRational(BigInt n) : num_(std::move(n)) {}

  /// Reduces p/q to lowest terms with a positive denominator.
  /// Throws std::domain_error when q is zero.
  ExactRational(BigInt p, BigInt q) : num_(std::move(p)), den_(std::move(q)) {
    if (den_ == 0)
      throw std::domain_error("ExactRational: zero denominator");
    normalize();
  }

  const BigInt &numerator() const { return num_; }
  const BigInt &denominator() const { return den_; }

  bool isInteger() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  ExactRational operator-() const {
    ExactRational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  ExactRational &operator+=(const ExactRational &o) {
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ *= o.den_;
    }
    normalize();
    return *this;
  }

  ExactRational &operator-=(const ExactRational &o) { return *this += -o; }

  ExactRational &operator*=(const ExactRational &o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }

  ExactRational &operator/=(const ExactRational &o) {
    if (o.num_ == 0)
      throw std::domain_error("ExactRational: division by zero");
    BigInt n = num_ * o.den_;
    BigInt d = den_ * o.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
  }

  friend ExactRational operator+(ExactRational a, const ExactRational &b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational &b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational &b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational &b) { return a /= b; }

  friend bool operator==(const ExactRational &a, const ExactRational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const ExactRational &a, const ExactRational &b) {
    if (a.den_ == b.den_)
      return cmp(a.num_, b.num_);
    return cmp(a.num_ * b.den_, b.num_ * a.den_);
  }

  /// "p/q", or just "p" for integers.
  std::string str() const {
    if (den_ == 1)
      return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Decimal rendering truncated toward zero after `digits` fractional
  /// digits. The flag is true when the rendering is the exact value.
  std::pair<std::string, bool> toDecimal(unsigned digits) const {
    BigInt a = abs(num_);
    BigInt whole = a / den_;
    BigInt rem = a % den_;
    std::string out = (num_ < 0 ? "-" : "") + whole.str();
    if (rem == 0)
      return {out, true};
    out += '.';
    for (unsigned i = 0; i < digits && rem != 0; ++i) {
      rem *= 10;
      out += static_cast<char>('0' + static_cast<int>(rem / den_));
      rem %= den_;
    }
    return {out, rem == 0};
  }

  /// Parses "p", "p/q" or a terminating decimal "i.f" (optionally signed).
  static ExactRational parse(std::string_view text) {
    auto fail = [&] {
      throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    };
    auto parseInt = [&](std::string_view s, bool allowSign) {
      if (s.empty())
        fail();
      std::size_t start = 0;
      if (allowSign && (s[0] == '-' || s[0] == '+'))
        start = 1;
      if (start == s.size())
        fail();
      for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
          fail();
      BigInt v(std::string(s.substr(start)));
      return s[0] == '-' ? BigInt(-v) : v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      BigInt q = parseInt(text.substr(slash + 1), false);
      if (q == 0)
        fail();
      return ExactRational(parseInt(text.substr(0, slash), true), q);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view frac = text.substr(dot + 1);
      std::string_view whole = text.substr(0, dot);
      bool negative = !whole.empty() && whole[0] == '-';
      if (whole.empty() || whole == "-" || whole == "+")
        whole = negative ? "-0" : "0";
      BigInt f = frac.empty() ? BigInt(0) : parseInt(frac, false);
      BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
      BigInt w = abs(parseInt(whole, true));
      BigInt n = w * scale + f;
      return ExactRational(negative ? BigInt(-n) : n, scale);
    }
    return ExactRational(parseInt(text, true));
  }

private:
  static std::strong_ordering cmp(const BigInt &a, const BigInt &b) {
    int c = a.compare(b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = gcd(abs(num_), den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_{0};
  BigInt den_{1};
};

inline ExactRational ratNormalize(BigInt p, BigInt q) { return ExactRational(std::move(p), std::move(q)); }

inline std::strong_ordering ratCompare(const ExactRational &a, const ExactRational &b) { return a <=> b; }

/// base^k for any integer k. Requires base > 0.
inline ExactRational powBase(const ExactRational &base, long k) {
  if (base.sign() <= 0)
    throw std::domain_error("powBase: base must be positive");
  unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
  BigInt n = boost::multiprecision::pow(base.numerator(), e);
  BigInt d = boost::multiprecision::pow(base.denominator(), e);
  return k < 0 ? ExactRational(std::move(d), std::move(n)) : ExactRational(std::move(n), std::move(d));
}

/// Converts an integer-valued rational to uint64_t; throws otherwise.
inline std::uint64_t toUint64(const ExactRational &x) {
  if (!x.isInteger() || x.sign() < 0 || x.numerator() > std::numeric_limits<std::uint64_t>::max())
    throw std::out_of_range("value is not a non-negative 64-bit integer: " + x.str());
  return x.numerator().convert_to<std::uint64_t>();
}

inline const ExactRational &threeHalves() {
  static const ExactRational value(3, 2);
  return value;
}

} // namespace threehalves
