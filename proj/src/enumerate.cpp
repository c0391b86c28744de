#include "weyl27/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace weyl27 {

bool is_minimal(Arrangement s, const PermutationGroup& group) {
  const auto table = group.table();
  for (std::size_t g = 0; g < group.order(); ++g)
    if (lex_less_unchecked(apply_images(s.mask, &table[g * kNumLines]), s.mask)) return false;
  return true;
}

std::uint64_t orbit_size(Arrangement s, const PermutationGroup& group) {
  std::unordered_set<std::uint32_t> images;
  const auto table = group.table();
  for (std::size_t g = 0; g < group.order(); ++g) images.insert(apply_images(s.mask, &table[g * kNumLines]));
  return images.size();
}

namespace kernels {

ScanResult scan_candidate(std::uint32_t mask, std::span<const std::uint8_t> table) {
  ScanResult r{true, 0};
  const std::uint8_t* row = table.data();
  const std::uint8_t* end = row + table.size();
  for (; row != end; row += kNumLines) {
    const std::uint32_t img = apply_images(mask, row);
    if (img == mask) {
      ++r.stabilizer;
    } else if (lex_less_unchecked(img, mask)) {
      return ScanResult{false, 0};
    }
  }
  return r;
}

std::vector<ScanResult> scan_serial(std::span<const std::uint32_t> candidates, std::span<const std::uint8_t> table) {
  std::vector<ScanResult> out(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) out[i] = scan_candidate(candidates[i], table);
  return out;
}

std::vector<ScanResult> scan_parallel(std::span<const std::uint32_t> candidates, std::span<const std::uint8_t> table,
                                      int workers) {
  if (workers < 1) throw std::invalid_argument("scan_parallel: workers must be >= 1");
  std::vector<ScanResult> out(candidates.size());
  const auto count = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = scan_candidate(candidates[static_cast<std::size_t>(i)], table);
  return out;
}

std::vector<std::uint32_t> stabilizer_parallel(std::span<const std::uint32_t> masks,
                                               std::span<const std::uint8_t> table, int workers) {
  if (workers < 1) throw std::invalid_argument("stabilizer_parallel: workers must be >= 1");
  std::vector<std::uint32_t> out(masks.size(), 0);
  const auto count = static_cast<std::ptrdiff_t>(masks.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const std::uint32_t mask = masks[static_cast<std::size_t>(i)];
    std::uint32_t fixed = 0;
    for (std::size_t off = 0; off < table.size(); off += kNumLines)
      if (apply_images(mask, &table[off]) == mask) ++fixed;
    out[static_cast<std::size_t>(i)] = fixed;
  }
  return out;
}

}  // namespace kernels

void sort_lex(std::vector<Arrangement>& v) {
  std::sort(v.begin(), v.end(), [](Arrangement a, Arrangement b) { return lex_less_unchecked(a.mask, b.mask); });
}

std::vector<std::uint32_t> extension_candidates(const std::vector<Arrangement>& reps) {
  std::vector<std::uint32_t> out;
  for (Arrangement s : reps)
    for (int j = s.last() + 1; j < static_cast<int>(kNumLines); ++j) out.push_back(s.mask | (1u << j));
  return out;
}

namespace {

struct Level {
  std::vector<Arrangement> reps;
  std::vector<std::uint32_t> stabilizers;
};

Level extend_level(const std::vector<Arrangement>& reps, const PermutationGroup& group, int workers) {
  const std::vector<std::uint32_t> cand = extension_candidates(reps);
  const std::vector<kernels::ScanResult> res =
      workers == 0 ? kernels::scan_serial(cand, group.table()) : kernels::scan_parallel(cand, group.table(), workers);
  std::vector<std::pair<Arrangement, std::uint32_t>> hits;
  for (std::size_t i = 0; i < cand.size(); ++i)
    if (res[i].minimal) hits.emplace_back(Arrangement{cand[i]}, res[i].stabilizer);
  std::stable_sort(hits.begin(), hits.end(),
                   [](const auto& a, const auto& b) { return lex_less_unchecked(a.first.mask, b.first.mask); });
  Level out;
  for (const auto& [s, stab] : hits) {
    out.reps.push_back(s);
    out.stabilizers.push_back(stab);
  }
  return out;
}

}  // namespace

std::vector<Arrangement> extend_minimal(const std::vector<Arrangement>& reps, const PermutationGroup& group,
                                        int workers) {
  return extend_level(reps, group, workers).reps;
}

std::vector<OrbitRecord> enumerate_up_to(const PermutationGroup& group, int max_n, int workers) {
  if (max_n < 0 || max_n > static_cast<int>(kNumLines)) throw std::invalid_argument("cardinality must lie in 0..27");
  std::vector<OrbitRecord> records;
  records.push_back(OrbitRecord{Arrangement{}, 0, 1});
  std::vector<Arrangement> level{Arrangement{}};
  for (int n = 1; n <= max_n; ++n) {
    Level next = extend_level(level, group, workers);
    for (std::size_t i = 0; i < next.reps.size(); ++i)
      records.push_back(OrbitRecord{next.reps[i], n, group.order() / next.stabilizers[i]});
    level = std::move(next.reps);
  }
  return records;
}

std::vector<OrbitRecord> enumerate_all(const PermutationGroup& group, int workers) {
  return enumerate_up_to(group, static_cast<int>(kNumLines), workers);
}

}  // namespace weyl27
