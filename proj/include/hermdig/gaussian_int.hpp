#pragma once

#include <cstdint>
#include <ostream>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace hermdig {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Element re + im*i of Z[i].
template <class Int>
struct GaussianInt {
  Int re{0};
  Int im{0};

  GaussianInt() = default;
  GaussianInt(int r) : re(r), im(0) {}  // NOLINT: literal 0/1 in Eigen code
  GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

  template <class Other>
  explicit GaussianInt(const GaussianInt<Other>& g) : re(Int(g.re)), im(Int(g.im)) {}

  GaussianInt& operator+=(const GaussianInt& o) { re += o.re; im += o.im; return *this; }
  GaussianInt& operator-=(const GaussianInt& o) { re -= o.re; im -= o.im; return *this; }
  GaussianInt& operator*=(const GaussianInt& o) { return *this = *this * o; }

  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator-(const GaussianInt& a) { return {Int(-a.re), Int(-a.im)}; }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {Int(a.re * b.re - a.im * b.im), Int(a.re * b.im + a.im * b.re)};
  }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }

  friend GaussianInt conj(const GaussianInt& a) { return {a.re, Int(-a.im)}; }
  friend Int real(const GaussianInt& a) { return a.re; }
  friend Int imag(const GaussianInt& a) { return a.im; }
  bool is_zero() const { return re == 0 && im == 0; }

  friend std::ostream& operator<<(std::ostream& os, const GaussianInt& a) {
    if (a.im == 0) return os << a.re;
    if (a.re == 0) return os << a.im << 'i';
    return os << a.re << (a.im < 0 ? "-" : "+") << (a.im < 0 ? Int(-a.im) : a.im) << 'i';
  }
};

using Gaussian = GaussianInt<std::int64_t>;
using BigGaussian = GaussianInt<BigInt>;

template <class Int>
using GaussianMatrix = Eigen::Matrix<GaussianInt<Int>, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace hermdig

namespace Eigen {

template <class Int>
struct NumTraits<hermdig::GaussianInt<Int>> : GenericNumTraits<hermdig::GaussianInt<Int>> {
  using Real = Int;
  using NonInteger = hermdig::GaussianInt<Int>;
  using Literal = hermdig::GaussianInt<Int>;
  using Nested = hermdig::GaussianInt<Int>;
  enum {
    IsComplex = 1,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 2,
    MulCost = 8,
  };
};

}  // namespace Eigen
