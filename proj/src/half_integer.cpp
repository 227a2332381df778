#include "qso5/half_integer.hpp"

#include <charconv>
#include <stdexcept>

namespace qso5 {

namespace {

long parse_long(std::string_view s, std::string_view whole) {
  long v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not a half-integer: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto bad = [&] { return std::invalid_argument("not a half-integer: '" + std::string(whole) + "'"); };
  if (text.empty()) throw bad();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const long num = parse_long(text.substr(0, slash), whole);
    const long den = parse_long(text.substr(slash + 1), whole);
    if (den == 1) return HalfInt(static_cast<int>(num));
    if (den != 2 || num % 2 == 0) throw bad();
    return from_twice(static_cast<int>(num));
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    bool negative = !ip.empty() && ip.front() == '-';
    const long w = (ip.empty() || ip == "-" || ip == "+") ? 0 : parse_long(ip, whole);
    while (!fp.empty() && fp.back() == '0') fp.remove_suffix(1);
    int half = 0;
    if (fp == "5")
      half = 1;
    else if (!fp.empty())
      throw bad();
    const long twice = 2 * w + (negative ? -half : half);
    return from_twice(static_cast<int>(twice));
  }

  return HalfInt(static_cast<int>(parse_long(text, whole)));
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace qso5
