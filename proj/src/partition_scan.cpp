#include <algorithm>

#include "graphsep/factorize.hpp"

namespace graphsep {

namespace {

// Fixed so the number of evaluated cuts does not depend on the thread count.
constexpr std::size_t kScanBlock = 16;

}  // namespace

ScanResult scan_serial(const WeightedGraph& g, std::span<const Partition> candidates,
                       const Tolerances& tol) {
  ScanResult out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    ++out.evaluations;
    if (degree_criterion(g, candidates[i], tol)) {
      out.first = i;
      break;
    }
  }
  return out;
}

ScanResult scan_parallel(const WeightedGraph& g, std::span<const Partition> candidates,
                         const Tolerances& tol) {
  ScanResult out;
  std::vector<char> hit(kScanBlock);
  for (std::size_t begin = 0; begin < candidates.size(); begin += kScanBlock) {
    const std::size_t count = std::min(kScanBlock, candidates.size() - begin);
    const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i)
      hit[static_cast<std::size_t>(i)] = degree_criterion(g, candidates[begin + i], tol) ? 1 : 0;
    out.evaluations += count;
    auto first = std::find(hit.begin(), hit.begin() + n, 1);
    if (first != hit.begin() + n) {
      out.first = begin + static_cast<std::size_t>(first - hit.begin());
      break;
    }
  }
  return out;
}

std::vector<char> criterion_at_all(const WeightedGraph& g, std::span<const Partition> cuts,
                                   const Tolerances& tol) {
  std::vector<char> out(cuts.size(), 0);
  const auto n = static_cast<long>(cuts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = degree_criterion(g, cuts[i], tol) ? 1 : 0;
  return out;
}

}  // namespace graphsep
