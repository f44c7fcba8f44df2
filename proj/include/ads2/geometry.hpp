#pragma once

#include <cmath>

#include "ads2/specfun.hpp"

namespace ads2 {

enum class Endpoint { Plus, Minus };

/// A spatial point rho in (-pi/2, pi/2) carrying the trigonometric data the
/// evaluators need, all built from the distance `eps` to the nearest
/// endpoint so that nothing cancels as eps -> 0.
struct Point {
  double rho;
  double eps;    // distance to the nearest endpoint
  bool upper;    // nearest endpoint is +pi/2
  double s;      // sin rho
  double c;      // cos rho
  double zm;     // (1 - sin rho)/2
  double zp;     // (1 + sin rho)/2
  double sigma;  // sqrt((1 - sin rho)/(1 + sin rho))
  double sh, ch;  // sin(eps/2), cos(eps/2)

  static Point near(Endpoint e, double eps) {
    Point p{};
    double h = 0.5 * eps;
    double sh = std::sin(h), ch = std::cos(h);
    p.eps = eps;
    p.sh = sh;
    p.ch = ch;
    p.c = std::sin(eps);
    if (e == Endpoint::Plus) {
      p.upper = true;
      p.rho = 0.5 * pi - eps;
      p.s = std::cos(eps);
      p.zm = sh * sh;
      p.zp = ch * ch;
      p.sigma = std::tan(h);
    } else {
      p.upper = false;
      p.rho = eps - 0.5 * pi;
      p.s = -std::cos(eps);
      p.zm = ch * ch;
      p.zp = sh * sh;
      p.sigma = 1.0 / std::tan(h);
    }
    return p;
  }

  static Point at(double rho) {
    if (rho >= 0.0) return near(Endpoint::Plus, 0.5 * pi - rho);
    return near(Endpoint::Minus, rho + 0.5 * pi);
  }

  // (1 - sin)^{1/2} and (1 + sin)^{1/2}, without underflow at the endpoints
  double sqrt_1ms() const { return std::sqrt(2.0) * (upper ? sh : ch); }
  double sqrt_1ps() const { return std::sqrt(2.0) * (upper ? ch : sh); }
};

}  // namespace ads2
