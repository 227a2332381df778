#ifndef QSO5_HALF_INTEGER_HPP
#define QSO5_HALF_INTEGER_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace qso5 {

/// An integer or half-odd-integer, stored exactly as twice its value.
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int whole) : twice_(2 * whole) {}

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  /// Accepts "3/2", "1.5", "-1/2", "2".
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  template <class T = double>
  T value() const {
    return T(twice_) / T(2);
  }

  /// Canonical text form: "2", "-3/2".
  std::string str() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(int s, HalfInt a) { return from_twice(s * a.twice_); }
  friend constexpr HalfInt operator+(HalfInt a, int b) { return a + HalfInt(b); }
  friend constexpr HalfInt operator-(HalfInt a, int b) { return a - HalfInt(b); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  friend constexpr bool operator==(HalfInt, HalfInt) = default;

private:
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

/// Values lo, lo+step, ..., up to and including hi (empty when lo > hi).
template <class Fn>
void for_each_in_range(HalfInt lo, HalfInt hi, HalfInt step, Fn&& fn) {
  for (HalfInt x = lo; x <= hi; x += step) fn(x);
}

}  // namespace qso5

#endif  // QSO5_HALF_INTEGER_HPP
