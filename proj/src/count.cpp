#include "lgp/count.hpp"

#include <algorithm>
#include <ostream>

namespace lgp {

Count Count::exact_div(Count d) const {
  if (d.v_ == 0 || v_ % d.v_ != 0)
    throw std::logic_error("non-exact count division: " + str() + " / " + d.str());
  return from_raw(v_ / d.v_);
}

std::string Count::str() const {
  if (v_ == 0) return "0";
  unsigned __int128 mag = v_ < 0 ? static_cast<unsigned __int128>(-(v_ + 1)) + 1 : static_cast<unsigned __int128>(v_);
  std::string out;
  while (mag != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (v_ < 0) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Count Count::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty count");
  bool neg = s[0] == '-';
  Count r;
  for (std::size_t i = neg ? 1 : 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad count: " + s);
    r = r * Count(10) + Count(s[i] - '0');
  }
  return neg ? Count(0) - r : r;
}

Count pow(Count base, std::uint64_t exp) {
  Count r(1);
  while (exp != 0) {
    if (exp & 1U) r *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, Count c) { return os << c.str(); }

}  // namespace lgp
