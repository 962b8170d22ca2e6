#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mcm {

// Dense row-major matrix of doubles. Everything in this project is small
// enough (M <= ~800 samples, LP tableaus <= a few thousand columns) that a
// flat dense buffer is the right representation.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c), fill) {}

  double& operator()(int i, int j) {
    return data[static_cast<size_t>(i) * cols + j];
  }
  double operator()(int i, int j) const {
    return data[static_cast<size_t>(i) * cols + j];
  }

  std::span<double> row(int i) {
    return {data.data() + static_cast<size_t>(i) * cols, static_cast<size_t>(cols)};
  }
  std::span<const double> row(int i) const {
    return {data.data() + static_cast<size_t>(i) * cols, static_cast<size_t>(cols)};
  }

  bool empty() const { return rows == 0 || cols == 0; }
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace mcm
