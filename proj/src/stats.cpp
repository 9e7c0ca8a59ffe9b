#include "hyperop/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "hyperop/clique.hpp"
#include "hyperop/rng.hpp"

namespace hyperop {

double Schedule::p1(int n) const {
  return std::clamp(c * std::pow(static_cast<double>(n), -2.0 / (r + alpha)), 0.0, 1.0);
}

bool Schedule::clamps(int n) const {
  return c * std::pow(static_cast<double>(n), -2.0 / (r + alpha)) > 1.0;
}

std::vector<DimensionRow> dimensionStats(const Schedule& schedule, std::span<const int> nList,
                                         std::uint64_t samplesPerN, std::uint64_t seed) {
  if (schedule.r < 1) throw std::invalid_argument("schedule r must be >= 1");
  if (!std::is_sorted(nList.begin(), nList.end()))
    throw std::invalid_argument("n list must be ascending");
  std::vector<DimensionRow> rows;
  const int r = schedule.r;
  for (int n : nList) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    DimensionRow row;
    row.n = n;
    row.p1 = schedule.p1(n);
    row.clamped = schedule.clamps(n);
    row.samples = samplesPerN;

    std::vector<int> dims(samplesPerN);
    std::vector<std::uint64_t> faces(samplesPerN);
    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t i = lo; i < hi; ++i) {
        CounterRng rng(seed, static_cast<std::uint64_t>(n) * samplesPerN + i);
        const Graph g = sampleGnp(static_cast<std::size_t>(n), row.p1, rng);
        const CliqueSummary s = cliqueSummary(g, r + 1);
        dims[i] = s.dimension;
        faces[i] = s.counts[static_cast<std::size_t>(r)];
      }
    };
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads == 1 || samplesPerN < 64) {
      work(0, samplesPerN);
    } else {
      std::vector<std::thread> pool;
      const std::uint64_t chunk = (samplesPerN + threads - 1) / threads;
      for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back(work, std::min(samplesPerN, w * chunk),
                          std::min(samplesPerN, (w + 1) * chunk));
      for (auto& t : pool) t.join();
    }
    std::uint64_t le = 0, eq = 0, total = 0;
    for (std::uint64_t i = 0; i < samplesPerN; ++i) {
      le += dims[i] <= r;
      eq += dims[i] == r;
      total += faces[i];
    }
    if (samplesPerN) {
      const auto N = static_cast<double>(samplesPerN);
      row.probDimLeR = static_cast<double>(le) / N;
      row.probDimEqR = static_cast<double>(eq) / N;
      row.meanRFaces = static_cast<double>(total) / N;
    }
    rows.push_back(row);
  }
  return rows;
}

void writeStatsCsv(std::ostream& out, std::span<const DimensionRow> rows) {
  out << "n,p1,samples,prob_dim_le_r,prob_dim_eq_r,mean_r_faces\n";
  char buf[256];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.10g,%llu,%.6f,%.6f,%.6f\n", row.n, row.p1,
                  static_cast<unsigned long long>(row.samples), row.probDimLeR, row.probDimEqR,
                  row.meanRFaces);
    out << buf;
  }
}

bool nonDecreasing(std::span<const double> values) {
  return std::is_sorted(values.begin(), values.end());
}

}  // namespace hyperop
