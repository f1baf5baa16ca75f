#include "graphdiff/scalar_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace graphdiff {

namespace {

constexpr double kInvPhi = 0.6180339887498949;   // 1/phi
constexpr double kInvPhi2 = 0.3819660112501051;  // 1/phi^2

}  // namespace

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double a, double b,
                                      double tol, int max_iter) {
  if (!(a <= b)) throw std::invalid_argument("golden_section_minimize: a > b");
  ScalarMinimum out;
  double h = b - a;
  double c = a + kInvPhi2 * h;
  double d = a + kInvPhi * h;
  double fc = f(c);
  double fd = f(d);
  out.evaluations = 2;
  for (int it = 0; it < max_iter && h > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      h = b - a;
      c = a + kInvPhi2 * h;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      h = b - a;
      d = a + kInvPhi * h;
      fd = f(d);
    }
    ++out.evaluations;
  }
  if (fc <= fd) {
    out.x = c;
    out.value = fc;
  } else {
    out.x = d;
    out.value = fd;
  }
  return out;
}

ScalarMinimum golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                                      double tol, int max_iter) {
  auto r = golden_section_minimize([&](double x) { return -f(x); }, a, b, tol, max_iter);
  r.value = -r.value;
  return r;
}

ScalarMinimum brent_minimize(const std::function<double(double)>& f, double a, double b,
                             double xatol, int max_iter) {
  if (!(a <= b)) throw std::invalid_argument("brent_minimize: a > b");
  const double sqrt_eps = std::sqrt(2.2e-16);
  double xf = a + kInvPhi2 * (b - a);
  double nfc = xf, fulc = xf;
  double rat = 0.0, e = 0.0;
  double fx = f(xf);
  double fnfc = fx, ffulc = fx;
  int evals = 1;
  double xm = 0.5 * (a + b);
  double tol1 = sqrt_eps * std::abs(xf) + xatol / 3.0;
  double tol2 = 2.0 * tol1;

  for (int it = 0; it < max_iter && std::abs(xf - xm) > (tol2 - 0.5 * (b - a)); ++it) {
    bool golden = true;
    if (std::abs(e) > tol1) {
      // Parabola through (fulc, nfc, xf).
      double r = (xf - nfc) * (fx - ffulc);
      double q = (xf - fulc) * (fx - fnfc);
      double p = (xf - fulc) * q - (xf - nfc) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      r = e;
      e = rat;
      if (std::abs(p) < std::abs(0.5 * q * r) && p > q * (a - xf) && p < q * (b - xf)) {
        rat = p / q;
        const double x = xf + rat;
        if ((x - a) < tol2 || (b - x) < tol2) rat = (xm >= xf) ? tol1 : -tol1;
        golden = false;
      }
    }
    if (golden) {
      e = (xf >= xm) ? a - xf : b - xf;
      rat = kInvPhi2 * e;
    }
    const double step = (rat >= 0 ? 1.0 : -1.0) * std::max(std::abs(rat), tol1);
    const double x = xf + step;
    const double fu = f(x);
    ++evals;
    if (fu <= fx) {
      if (x >= xf) a = xf; else b = xf;
      fulc = nfc; ffulc = fnfc;
      nfc = xf; fnfc = fx;
      xf = x; fx = fu;
    } else {
      if (x < xf) a = x; else b = x;
      if (fu <= fnfc || nfc == xf) {
        fulc = nfc; ffulc = fnfc;
        nfc = x; fnfc = fu;
      } else if (fu <= ffulc || fulc == xf || fulc == nfc) {
        fulc = x; ffulc = fu;
      }
    }
    xm = 0.5 * (a + b);
    tol1 = sqrt_eps * std::abs(xf) + xatol / 3.0;
    tol2 = 2.0 * tol1;
  }
  return {xf, fx, evals};
}

std::optional<double> bisect_root(const std::function<double(double)>& f, double a, double b,
                                  double tol, int max_iter) {
  double fa = f(a);
  if (fa == 0.0) return a;
  double fb = f(b);
  if (fb == 0.0) return b;
  if ((fa < 0) == (fb < 0)) return std::nullopt;
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace graphdiff
