#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/functional/hash.hpp>

namespace liepic {

using Coords = boost::container::small_vector<int, 8>;

namespace detail {

template <class Derived>
struct IntVector {
  Coords coords;

  IntVector() = default;
  explicit IntVector(std::size_t rank) : coords(rank, 0) {}
  IntVector(std::initializer_list<int> init) : coords(init) {}
  explicit IntVector(Coords c) : coords(std::move(c)) {}

  std::size_t size() const noexcept { return coords.size(); }
  int& operator[](std::size_t i) { return coords[i]; }
  int operator[](std::size_t i) const { return coords[i]; }

  Derived& operator+=(const Derived& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return static_cast<Derived&>(*this);
  }
  Derived& operator-=(const Derived& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return static_cast<Derived&>(*this);
  }
  friend Derived operator+(Derived a, const Derived& b) { return a += b; }
  friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
  friend Derived operator*(int s, Derived a) {
    for (auto& x : a.coords) x *= s;
    return a;
  }
  friend Derived operator-(Derived a) { return -1 * std::move(a); }

  friend bool operator==(const IntVector& a, const IntVector& b) { return a.coords == b.coords; }
  friend std::strong_ordering operator<=>(const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare_three_way(a.coords.begin(), a.coords.end(),
                                                  b.coords.begin(), b.coords.end());
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords[i]);
    }
    return s + ")";
  }
};

}  // namespace detail

/// Integral weight in the fundamental-weight basis {omega_i}.
struct WeightVec : detail::IntVector<WeightVec> {
  using IntVector::IntVector;

  static WeightVec fundamental(std::size_t rank, std::size_t i) {
    WeightVec w(rank);
    w[i] = 1;
    return w;
  }
  bool is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](int x) { return x >= 0; });
  }
};

/// Element of the root lattice in the simple-root basis {alpha_i}.
struct RootVec : detail::IntVector<RootVec> {
  using IntVector::IntVector;

  int height() const {
    int h = 0;
    for (int x : coords) h += x;
    return h;
  }
};

struct CoordsHash {
  template <class V>
  std::size_t operator()(const V& v) const noexcept {
    return boost::hash_range(v.coords.begin(), v.coords.end());
  }
};

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace liepic
