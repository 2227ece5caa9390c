/* Copyright 2026 the kge-gcp authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kge/mem.hpp"
#include "kge/rng.hpp"

namespace kge {

/// Dense row-major matrix backed by a single flat buffer. The factor
/// matrices, moment buffers and all per-batch row slices use this type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix random_normal(std::size_t rows, std::size_t cols, double stddev,
                              Rng& rng) {
    Matrix m(rows, cols);
    for (auto& v : m.data_) v = static_cast<T>(stddev * rng.normal());
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  std::vector<T>& storage() { return data_; }
  const std::vector<T>& storage() const { return data_; }

  void fill(T v) { std::fill(data_.begin(), data_.end(), v); }

  /// Reshape as a scratch buffer, reporting the requested bytes.
  void acquire(std::size_t rows, std::size_t cols,
               mem::TransientCounter* counter) {
    rows_ = rows;
    cols_ = cols;
    mem::acquire(data_, rows * cols, counter);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace kge
