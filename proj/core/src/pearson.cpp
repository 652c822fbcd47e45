#include <algorithm>
#include <cmath>

#include "eventlens/correlation.hpp"

namespace eventlens {

namespace {

bool constant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

long double mean(std::span<const double> v) {
  long double sum = 0;
  for (double x : v) sum += x;
  return sum / static_cast<long double>(v.size());
}

}  // namespace

double pearson_unclamped(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw CorrelationError(CorrelationError::Kind::LengthMismatch,
                           "pearson: length mismatch (" + std::to_string(xs.size()) + " vs " +
                               std::to_string(ys.size()) + ")");
  }
  if (xs.size() < 2) {
    throw CorrelationError(CorrelationError::Kind::TooFewPoints,
                           "pearson: need at least 2 points, got " + std::to_string(xs.size()));
  }
  if (constant(xs) || constant(ys)) {
    throw CorrelationError(CorrelationError::Kind::ZeroVariance, "pearson: constant input");
  }

  const long double mx = mean(xs);
  const long double my = mean(ys);
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const long double dx = xs[i] - mx;
    const long double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) {
    throw CorrelationError(CorrelationError::Kind::ZeroVariance, "pearson: zero variance");
  }
  // sxx * syy commutes, so swapping the arguments gives the same bits.
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  return std::clamp(pearson_unclamped(xs, ys), -1.0, 1.0);
}

Coefficient pearson_or_na(std::span<const double> xs, std::span<const double> ys) {
  try {
    return pearson(xs, ys);
  } catch (const CorrelationError& e) {
    if (e.kind() == CorrelationError::Kind::LengthMismatch) throw;
    return std::nullopt;
  }
}

}  // namespace eventlens
