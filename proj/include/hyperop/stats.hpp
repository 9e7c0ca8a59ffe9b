#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace hyperop {

/// p1(n) = c n^{-2/(r + alpha)}, clamped to [0, 1].
struct Schedule {
  double c = 1.0;
  double alpha = 1.0;
  int r = 2;

  double p1(int n) const;
  bool clamps(int n) const;
};

struct DimensionRow {
  int n = 0;
  double p1 = 0.0;
  std::uint64_t samples = 0;
  double probDimLeR = 0.0;  // Prob[dim X_{G(n,p1)} <= r]
  double probDimEqR = 0.0;
  double meanRFaces = 0.0;  // mean number of r-faces of X_{G(n,p1)}
  bool clamped = false;
};

/// Monte Carlo over G(n, p1(n)) for each n. Sample i of size n uses stream
/// n * samplesPerN + i of `seed`, so rows are independent of thread count.
std::vector<DimensionRow> dimensionStats(const Schedule& schedule, std::span<const int> nList,
                                         std::uint64_t samplesPerN, std::uint64_t seed);

/// Header "n,p1,samples,prob_dim_le_r,prob_dim_eq_r,mean_r_faces" and one
/// line per row, fixed formatting.
void writeStatsCsv(std::ostream& out, std::span<const DimensionRow> rows);

/// values[i] <= values[i+1] for all i.
bool nonDecreasing(std::span<const double> values);

}  // namespace hyperop
