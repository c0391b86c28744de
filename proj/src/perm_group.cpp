#include "weyl27/perm_group.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace weyl27 {

namespace {

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    // FNV-1a over the image bytes.
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t b : p.images()) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Permutation::Permutation() {
  for (std::size_t i = 0; i < kNumLines; ++i) images_[i] = static_cast<std::uint8_t>(i);
}

Permutation::Permutation(const std::array<std::uint8_t, kNumLines>& images) : images_(images) {
  std::array<bool, kNumLines> seen{};
  for (std::uint8_t x : images_) {
    if (x >= kNumLines || seen[x]) throw std::invalid_argument("not a permutation of 27 points");
    seen[x] = true;
  }
}

bool Permutation::is_identity() const { return *this == Permutation(); }

Permutation Permutation::inverse() const {
  std::array<std::uint8_t, kNumLines> inv{};
  for (std::size_t i = 0; i < kNumLines; ++i) inv[images_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(inv);
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::array<bool, kNumLines> done{};
  for (std::size_t start = 0; start < kNumLines; ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    do {
      if (!first) out += ',';
      first = false;
      out += std::to_string(x + 1);
      done[x] = true;
      x = images_[x];
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::from_cycles(std::string_view text) {
  std::array<std::uint8_t, kNumLines> img{};
  for (std::size_t i = 0; i < kNumLines; ++i) img[i] = static_cast<std::uint8_t>(i);
  std::array<bool, kNumLines> used{};

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t value = 0;
      std::size_t digits = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
        ++digits;
      }
      if (digits == 0 || value < 1 || value > kNumLines)
        throw std::invalid_argument("cycle notation: point out of range");
      if (used[value - 1]) throw std::invalid_argument("cycle notation: repeated point");
      used[value - 1] = true;
      cycle.push_back(value - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
    skip_ws();
  }
  return Permutation(img);
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::array<std::uint8_t, kNumLines> img{};
  for (std::size_t i = 0; i < kNumLines; ++i) img[i] = b(a(i));
  return Permutation(img);
}

std::vector<std::size_t> PermutationGroup::orbit_of(std::size_t point) const {
  std::vector<bool> hit(kNumLines, false);
  for (const auto& g : elements_) hit[g(point)] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kNumLines; ++i)
    if (hit[i]) out.push_back(i);
  return out;
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::find(elements_.begin(), elements_.end(), p) != elements_.end();
}

PermutationGroup generate_group(const std::vector<Permutation>& gens) {
  PermutationGroup g;
  g.generators_ = gens;
  std::unordered_set<Permutation, PermHash> seen;
  g.elements_.push_back(Permutation());
  seen.insert(Permutation());
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : gens) {
      Permutation next = g.elements_[head] * s;
      if (seen.insert(next).second) g.elements_.push_back(next);
    }
  }
  g.table_.reserve(g.elements_.size() * kNumLines);
  for (const auto& e : g.elements_) g.table_.insert(g.table_.end(), e.images().begin(), e.images().end());
  return g;
}

}  // namespace weyl27
