#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cnniep/errors.hpp"
#include "cnniep/spectral.hpp"

namespace cnniep {

namespace {

constexpr int kMaxIterationsPerEigenvalue = 100;

std::vector<Complex> eigenvalues_2x2(double a, double b, double c, double d) {
  // [[a, b], [c, d]]
  const double half_tr = 0.5 * (a + d);
  const double half_diff = 0.5 * (a - d);
  const double disc = half_diff * half_diff + b * c;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    // Larger-magnitude root first, the other from the determinant.
    const double big = half_tr >= 0.0 ? half_tr + root : half_tr - root;
    const double det = a * d - b * c;
    const double small = big != 0.0 ? det / big : half_tr - root;
    return {Complex(big, 0.0), Complex(small, 0.0)};
  }
  const double im = std::sqrt(-disc);
  return {Complex(half_tr, im), Complex(half_tr, -im)};
}

// Householder reduction to upper Hessenberg form (in place).
void reduce_to_hessenberg(DenseMatrix& h) {
  const std::size_t n = h.order();
  if (n < 3) return;
  Vector ort(n, 0.0);
  for (std::size_t m = 1; m + 1 < n; ++m) {
    double scale = 0.0;
    for (std::size_t i = m; i < n; ++i) scale += std::abs(h(i, m - 1));
    if (scale == 0.0) continue;

    double hh = 0.0;
    for (std::size_t i = n; i-- > m;) {
      ort[i] = h(i, m - 1) / scale;
      hh += ort[i] * ort[i];
    }
    double g = std::sqrt(hh);
    if (ort[m] > 0) g = -g;
    hh -= ort[m] * g;
    ort[m] -= g;

    for (std::size_t j = m; j < n; ++j) {
      double f = 0.0;
      for (std::size_t i = n; i-- > m;) f += ort[i] * h(i, j);
      f /= hh;
      for (std::size_t i = m; i < n; ++i) h(i, j) -= f * ort[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      double f = 0.0;
      for (std::size_t j = n; j-- > m;) f += ort[j] * h(i, j);
      f /= hh;
      for (std::size_t j = m; j < n; ++j) h(i, j) -= f * ort[j];
    }
    ort[m] *= scale;
    h(m, m - 1) = scale * g;
  }
  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t j = 0; j + 1 < i; ++j) h(i, j) = 0.0;
}

// Francis double-shift QR on an upper Hessenberg matrix; eigenvalues only.
std::vector<Complex> hessenberg_qr(DenseMatrix& h) {
  const int nn = static_cast<int>(h.order());
  std::vector<double> wr(nn, 0.0);
  std::vector<double> wi(nn, 0.0);
  const double eps = std::numeric_limits<double>::epsilon();
  int n = nn - 1;
  const int low = 0;
  double exshift = 0.0;
  double p = 0, q = 0, r = 0, s = 0, z = 0, w = 0, x = 0, y = 0;

  double norm = 0.0;
  for (int i = 0; i < nn; ++i)
    for (int j = std::max(i - 1, 0); j < nn; ++j) norm += std::abs(h(i, j));

  int iter = 0;
  while (n >= low) {
    int l = n;
    while (l > low) {
      s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
      if (s == 0.0) s = norm;
      if (std::abs(h(l, l - 1)) < eps * s) break;
      --l;
    }

    if (l == n) {
      wr[n] = h(n, n) + exshift;
      wi[n] = 0.0;
      --n;
      iter = 0;
    } else if (l == n - 1) {
      w = h(n, n - 1) * h(n - 1, n);
      p = (h(n - 1, n - 1) - h(n, n)) / 2.0;
      q = p * p + w;
      z = std::sqrt(std::abs(q));
      x = h(n, n) + exshift;
      if (q >= 0) {
        z = p >= 0 ? p + z : p - z;
        wr[n - 1] = x + z;
        wr[n] = z != 0.0 ? x - w / z : wr[n - 1];
        wi[n - 1] = 0.0;
        wi[n] = 0.0;
      } else {
        wr[n - 1] = x + p;
        wr[n] = x + p;
        wi[n - 1] = z;
        wi[n] = -z;
      }
      n -= 2;
      iter = 0;
    } else {
      x = h(n, n);
      y = 0.0;
      w = 0.0;
      if (l < n) {
        y = h(n - 1, n - 1);
        w = h(n, n - 1) * h(n - 1, n);
      }
      // Exceptional shifts break cycles on pathological inputs.
      if (iter == 10) {
        exshift += x;
        for (int i = low; i <= n; ++i) h(i, i) -= x;
        s = std::abs(h(n, n - 1)) + std::abs(h(n - 1, n - 2));
        x = y = 0.75 * s;
        w = -0.4375 * s * s;
      }
      if (iter == 30) {
        s = (y - x) / 2.0;
        s = s * s + w;
        if (s > 0) {
          s = std::sqrt(s);
          if (y < x) s = -s;
          s = x - w / ((y - x) / 2.0 + s);
          for (int i = low; i <= n; ++i) h(i, i) -= s;
          exshift += s;
          x = y = w = 0.964;
        }
      }
      if (++iter > kMaxIterationsPerEigenvalue) {
        throw NonConvergence("QR iteration did not converge for eigenvalue index " +
                             std::to_string(n));
      }

      int m = n - 2;
      while (m >= l) {
        z = h(m, m);
        r = x - z;
        s = y - z;
        p = (r * s - w) / h(m + 1, m) + h(m, m + 1);
        q = h(m + 1, m + 1) - z - r - s;
        r = h(m + 2, m + 1);
        s = std::abs(p) + std::abs(q) + std::abs(r);
        p /= s;
        q /= s;
        r /= s;
        if (m == l) break;
        if (std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r)) <
            eps * (std::abs(p) *
                   (std::abs(h(m - 1, m - 1)) + std::abs(z) + std::abs(h(m + 1, m + 1))))) {
          break;
        }
        --m;
      }
      for (int i = m + 2; i <= n; ++i) {
        h(i, i - 2) = 0.0;
        if (i > m + 2) h(i, i - 3) = 0.0;
      }

      for (int k = m; k <= n - 1; ++k) {
        const bool notlast = k != n - 1;
        if (k != m) {
          p = h(k, k - 1);
          q = h(k + 1, k - 1);
          r = notlast ? h(k + 2, k - 1) : 0.0;
          x = std::abs(p) + std::abs(q) + std::abs(r);
          if (x == 0.0) continue;
          p /= x;
          q /= x;
          r /= x;
        }
        s = std::sqrt(p * p + q * q + r * r);
        if (p < 0) s = -s;
        if (s == 0.0) continue;
        if (k != m) {
          h(k, k - 1) = -s * x;
        } else if (l != m) {
          h(k, k - 1) = -h(k, k - 1);
        }
        p += s;
        x = p / s;
        y = q / s;
        z = r / s;
        q /= p;
        r /= p;
        for (int j = k; j < nn; ++j) {
          p = h(k, j) + q * h(k + 1, j);
          if (notlast) {
            p += r * h(k + 2, j);
            h(k + 2, j) -= p * z;
          }
          h(k, j) -= p * x;
          h(k + 1, j) -= p * y;
        }
        for (int i = 0; i <= std::min(n, k + 3); ++i) {
          p = x * h(i, k) + y * h(i, k + 1);
          if (notlast) {
            p += z * h(i, k + 2);
            h(i, k + 2) -= p * r;
          }
          h(i, k) -= p;
          h(i, k + 1) -= p * q;
        }
      }
    }
  }

  std::vector<Complex> out(nn);
  for (int i = 0; i < nn; ++i) out[i] = Complex(wr[i], wi[i]);
  return out;
}

}  // namespace

std::vector<Complex> eigenvalues(const DenseMatrix& m) {
  const std::size_t n = m.order();
  if (n > kMaxEigenOrder) {
    throw InvalidArgument("eigenvalues: order " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxEigenOrder));
  }
  if (!m.all_finite()) throw InvalidArgument("eigenvalues: non-finite entry");
  if (n == 0) return {};
  if (n == 1) return {Complex(m(0, 0), 0.0)};
  if (n == 2) return eigenvalues_2x2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
  DenseMatrix h = m;
  reduce_to_hessenberg(h);
  return hessenberg_qr(h);
}

}  // namespace cnniep
