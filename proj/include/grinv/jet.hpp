#pragma once

#include <iosfwd>
#include <ostream>

#include "grinv/rat.hpp"

namespace grinv {

/// First-order jet value + deriv*eps with eps^2 = 0. Running a rational
/// pipeline over jets yields its exact directional derivative.
struct Jet {
  Rat value;
  Rat deriv;

  Jet() = default;
  Jet(long v) : value(v) {}  // NOLINT(google-explicit-constructor)
  Jet(Rat v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Jet(Rat v, Rat d) : value(std::move(v)), deriv(std::move(d)) {}

  Jet operator-() const { return {-value, -deriv}; }
  Jet& operator+=(const Jet& o) {
    value += o.value;
    deriv += o.deriv;
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    value -= o.value;
    deriv -= o.deriv;
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    deriv = value * o.deriv + deriv * o.value;
    value *= o.value;
    return *this;
  }

  /// Throws Singular when value is zero.
  Jet inverse() const {
    Rat inv = value.inverse();
    return {inv, -(deriv * inv * inv)};
  }
  Jet& operator/=(const Jet& o) { return *this *= o.inverse(); }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend bool operator==(const Jet& a, const Jet& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Jet& j) {
    return os << j.value << "+" << j.deriv << "e";
  }
};

/// Pivot and rank decisions look only at the value part, so a jet pipeline
/// takes exactly the branch the rational pipeline takes at the same point.
inline bool is_zero(const Jet& x) { return x.value.is_zero(); }
inline Jet inverse(const Jet& x) { return x.inverse(); }
inline bool is_exact_zero(const Jet& x) { return x.value.is_zero() && x.deriv.is_zero(); }

}  // namespace grinv
