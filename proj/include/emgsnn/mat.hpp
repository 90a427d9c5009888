#pragma once

#include <cstddef>
#include <vector>

namespace emgsnn {

// Dense row-major matrix of doubles. At 150 hidden neurons everything in
// this project fits comfortably in a flat vector; keeping the type minimal
// also keeps summation order explicit, which the reproducibility contracts
// depend on.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> d;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), d(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return d[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return d[r * cols + c]; }
  double* row(std::size_t r) { return d.data() + r * cols; }
  const double* row(std::size_t r) const { return d.data() + r * cols; }
  std::size_t size() const { return d.size(); }
  void fill(double v) { d.assign(d.size(), v); }

  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

inline void axpy(Mat& y, double a, const Mat& x) {
  for (std::size_t i = 0; i < y.d.size(); ++i) y.d[i] += a * x.d[i];
}

}  // namespace emgsnn
