#pragma once

#include <compare>
#include <iosfwd>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lgp {

/// Raised when a checked count operation leaves the signed 128-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Exact homomorphism count. Every arithmetic operator is checked; an
/// overflow throws OverflowError instead of wrapping.
class Count {
 public:
  using Raw = __int128;

  constexpr Count() = default;
  constexpr Count(std::int64_t v) : v_(v) {}  // NOLINT: implicit by intent
  static constexpr Count from_raw(Raw v) {
    Count c;
    c.v_ = v;
    return c;
  }

  [[nodiscard]] constexpr Raw raw() const { return v_; }
  [[nodiscard]] constexpr bool is_zero() const { return v_ == 0; }

  friend Count operator+(Count a, Count b) {
    Raw r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("count addition overflow");
    return from_raw(r);
  }
  friend Count operator-(Count a, Count b) {
    Raw r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("count subtraction overflow");
    return from_raw(r);
  }
  friend Count operator*(Count a, Count b) {
    Raw r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("count multiplication overflow");
    return from_raw(r);
  }
  Count& operator+=(Count o) { return *this = *this + o; }
  Count& operator-=(Count o) { return *this = *this - o; }
  Count& operator*=(Count o) { return *this = *this * o; }

  friend constexpr bool operator==(Count, Count) = default;
  friend constexpr auto operator<=>(Count a, Count b) { return a.v_ <=> b.v_; }

  /// Exact division; throws std::logic_error when `d` does not divide.
  [[nodiscard]] Count exact_div(Count d) const;

  [[nodiscard]] double to_double() const { return static_cast<double>(v_); }
  [[nodiscard]] std::string str() const;

  static Count parse(const std::string& s);
  static constexpr Count max() {
    return from_raw(static_cast<Raw>(~static_cast<unsigned __int128>(0) >> 1));
  }

 private:
  Raw v_ = 0;
};

Count pow(Count base, std::uint64_t exp);

inline std::string to_string(Count c) { return c.str(); }
std::ostream& operator<<(std::ostream& os, Count c);

}  // namespace lgp
