#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <sstream>
#include <vector>

namespace laya {

// Error thrown for user-facing failures: bad shapes, bad configs, broken
// files, non-finite values. Message always names the offending thing.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {
inline void format_into(std::ostringstream&) {}
template <typename A, typename... Rest>
void format_into(std::ostringstream& os, A&& a, Rest&&... rest) {
  os << std::forward<A>(a);
  format_into(os, std::forward<Rest>(rest)...);
}
}  // namespace detail

template <typename... Args>
[[noreturn]] void fail(Args&&... args) {
  std::ostringstream os;
  detail::format_into(os, std::forward<Args>(args)...);
  throw Error(os.str());
}

template <typename... Args>
void check(bool cond, Args&&... args) {
  if (!cond) fail(std::forward<Args>(args)...);
}

using Shape = std::vector<int64_t>;

inline int64_t numel(const Shape& s) {
  int64_t n = 1;
  for (int64_t d : s) n *= d;
  return n;
}

inline std::string shape_str(const Shape& s) {
  std::string out = "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

}  // namespace laya
