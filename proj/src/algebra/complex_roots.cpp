#include "numsys/algebra/complex_roots.hpp"

#include <cmath>

namespace numsys::algebra {

namespace {

void eval(const std::vector<long double>& a, Complex z, Complex& v, Complex& d) {
  v = 0;
  d = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    d = d * z + v;
    v = v * z + a[i];
  }
}

}  // namespace

std::vector<Complex> approximate_roots(const IntPolynomial& p) {
  std::vector<Complex> roots;
  int n = p.degree();
  if (n <= 0) return roots;
  std::size_t zeros = p.valuation();
  for (std::size_t i = 0; i < zeros; ++i) roots.emplace_back(0);
  n -= static_cast<int>(zeros);
  if (n == 0) return roots;

  std::vector<long double> a(n + 1);
  long double lc = p.leading().get_d();
  for (int i = 0; i <= n; ++i) a[i] = static_cast<long double>(p.coeff(i + zeros).get_d()) / lc;

  long double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::fabs(a[i]), 1.0L / (n - i)));
  radius = std::max(radius, 1.0L);

  std::vector<Complex> z(n);
  const long double two_pi = 6.283185307179586476925286766559L;
  for (int k = 0; k < n; ++k) z[k] = std::polar(radius, two_pi * k / n + 0.4L);

  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (int k = 0; k < n; ++k) {
      Complex v, d;
      eval(a, z[k], v, d);
      if (std::abs(v) == 0) continue;
      Complex ratio = v / d;
      Complex sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      Complex step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (worst < 1e-19L) break;
  }
  for (auto& r : z) {
    for (int s = 0; s < 3; ++s) {
      Complex v, d;
      eval(a, r, v, d);
      if (std::abs(d) == 0) break;
      r -= v / d;
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace numsys::algebra
