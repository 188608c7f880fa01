// Copyright 2026 The alphagrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ALPHAGRAD_DUAL_H_
#define ALPHAGRAD_DUAL_H_

// Forward-mode dual numbers with a vector tangent.
//
// A Dual<N> carries a value and its sensitivity with respect to N seeded
// directions. Arithmetic applies the chain rule exactly, so any function
// written generically over the scalar type yields its Jacobian by evaluating
// it once on seeded duals. N may be Eigen::Dynamic; a dynamic dual with an
// empty tangent behaves as a constant.

#include <cmath>
#include <ostream>

#include <Eigen/Core>

namespace alphagrad {

template <int N>
class Dual {
 public:
  using Tangent = Eigen::Matrix<double, N, 1>;

  Dual() : value_(0.0), tangent_(ZeroTangent(0)) {}
  Dual(double value) : value_(value), tangent_(ZeroTangent(0)) {}  // NOLINT
  Dual(double value, Tangent tangent)
      : value_(value), tangent_(std::move(tangent)) {}

  // variable seeded along direction `index` of a `size`-dimensional tangent
  static Dual Variable(double value, int index, int size = N) {
    Tangent t = Tangent::Zero(size);
    t[index] = 1.0;
    return Dual(value, std::move(t));
  }

  double value() const { return value_; }
  const Tangent& tangent() const { return tangent_; }
  Tangent& tangent() { return tangent_; }

  Dual& operator+=(const Dual& o) {
    value_ += o.value_;
    Accumulate(1.0, o.tangent_);
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value_ -= o.value_;
    Accumulate(-1.0, o.tangent_);
    return *this;
  }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  Dual& operator/=(const Dual& o) { return *this = *this / o; }

  Dual operator-() const { return Dual(-value_, -tangent_); }

  friend Dual operator+(const Dual& a, const Dual& b) {
    return Dual(a.value_ + b.value_, Combine(1.0, a.tangent_, 1.0, b.tangent_));
  }
  friend Dual operator-(const Dual& a, const Dual& b) {
    return Dual(a.value_ - b.value_,
                Combine(1.0, a.tangent_, -1.0, b.tangent_));
  }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return Dual(a.value_ * b.value_,
                Combine(b.value_, a.tangent_, a.value_, b.tangent_));
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    const double inv = 1.0 / b.value_;
    return Dual(a.value_ * inv,
                Combine(inv, a.tangent_, -a.value_ * inv * inv, b.tangent_));
  }

  friend Dual operator+(const Dual& a, double b) {
    return Dual(a.value_ + b, a.tangent_);
  }
  friend Dual operator+(double a, const Dual& b) { return b + a; }
  friend Dual operator-(const Dual& a, double b) {
    return Dual(a.value_ - b, a.tangent_);
  }
  friend Dual operator-(double a, const Dual& b) {
    return Dual(a - b.value_, -b.tangent_);
  }
  friend Dual operator*(const Dual& a, double b) {
    return Dual(a.value_ * b, a.tangent_ * b);
  }
  friend Dual operator*(double a, const Dual& b) { return b * a; }
  friend Dual operator/(const Dual& a, double b) {
    return Dual(a.value_ / b, a.tangent_ / b);
  }
  friend Dual operator/(double a, const Dual& b) {
    const double inv = 1.0 / b.value_;
    return Dual(a * inv, b.tangent_ * (-a * inv * inv));
  }

  // comparisons look at the value only; branches follow the primal path
  friend bool operator<(const Dual& a, const Dual& b) {
    return a.value_ < b.value_;
  }
  friend bool operator>(const Dual& a, const Dual& b) {
    return a.value_ > b.value_;
  }
  friend bool operator<=(const Dual& a, const Dual& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>=(const Dual& a, const Dual& b) {
    return a.value_ >= b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Dual& d) {
    return os << d.value_ << " + " << d.tangent_.transpose() << " eps";
  }

 private:
  static Tangent ZeroTangent(int size) {
    if constexpr (N == Eigen::Dynamic) {
      return Tangent::Zero(size);
    } else {
      return Tangent::Zero();
    }
  }

  // a*x + b*y, treating an empty dynamic tangent as zero
  static Tangent Combine(double a, const Tangent& x, double b,
                         const Tangent& y) {
    if constexpr (N == Eigen::Dynamic) {
      if (x.size() == 0) return b * y;
      if (y.size() == 0) return a * x;
    }
    return a * x + b * y;
  }

  void Accumulate(double scale, const Tangent& o) {
    if constexpr (N == Eigen::Dynamic) {
      if (o.size() == 0) return;
      if (tangent_.size() == 0) {
        tangent_ = scale * o;
        return;
      }
    }
    tangent_ += scale * o;
  }

  // f(a) with f'(a) = slope
  friend Dual Apply(const Dual& a, double fa, double slope) {
    return Dual(fa, a.tangent_ * slope);
  }

  double value_;
  Tangent tangent_;
};

inline double Value(double x) { return x; }
template <int N>
double Value(const Dual<N>& x) {
  return x.value();
}

template <int N>
Dual<N> sin(const Dual<N>& a) {
  return Apply(a, std::sin(a.value()), std::cos(a.value()));
}
template <int N>
Dual<N> cos(const Dual<N>& a) {
  return Apply(a, std::cos(a.value()), -std::sin(a.value()));
}
template <int N>
Dual<N> tan(const Dual<N>& a) {
  const double t = std::tan(a.value());
  return Apply(a, t, 1.0 + t * t);
}
template <int N>
Dual<N> exp(const Dual<N>& a) {
  const double e = std::exp(a.value());
  return Apply(a, e, e);
}
template <int N>
Dual<N> log(const Dual<N>& a) {
  return Apply(a, std::log(a.value()), 1.0 / a.value());
}
template <int N>
Dual<N> sqrt(const Dual<N>& a) {
  const double s = std::sqrt(a.value());
  return Apply(a, s, 0.5 / s);
}
template <int N>
Dual<N> pow(const Dual<N>& a, double p) {
  return Apply(a, std::pow(a.value(), p),
               p * std::pow(a.value(), p - 1.0));
}
// derivative at zero taken from the positive branch
template <int N>
Dual<N> abs(const Dual<N>& a) {
  return a.value() < 0 ? -a : a;
}

}  // namespace alphagrad

#endif  // ALPHAGRAD_DUAL_H_
