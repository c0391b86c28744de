#include "weyl27/arrangement.hpp"

namespace weyl27 {

Arrangement Arrangement::from_indices(const std::vector<int>& one_based) {
  Arrangement s;
  for (int i : one_based) {
    if (i < 1 || i > static_cast<int>(kNumLines)) throw std::invalid_argument("line index must lie in 1..27");
    const std::uint32_t bit = 1u << (i - 1);
    if (s.mask & bit) throw std::invalid_argument("repeated line index");
    s.mask |= bit;
  }
  return s;
}

std::vector<int> Arrangement::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

}  // namespace weyl27
