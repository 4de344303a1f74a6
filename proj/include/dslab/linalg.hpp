#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace dslab {

using Vec4 = std::array<double, 4>;
using Vec5 = std::array<double, 5>;
using Mat4 = std::array<std::array<double, 4>, 4>;

template <int N>
using MatN = std::array<std::array<double, N>, N>;

inline Vec4 operator+(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline Vec4 operator-(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline Vec4 operator*(double s, const Vec4& a) {
  return {s * a[0], s * a[1], s * a[2], s * a[3]};
}
inline double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline Mat4 mat4_zero() { return Mat4{}; }

inline Mat4 mat4_identity() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

inline Vec4 mat4_apply(const Mat4& m, const Vec4& v) {
  Vec4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Mat4 mat4_transpose(const Mat4& a) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = a[j][i];
  return out;
}

template <int N>
double matn_det(const MatN<N>& in) {
  MatN<N> a = in;
  double det = 1.0;
  for (int c = 0; c < N; ++c) {
    int piv = c;
    for (int r = c + 1; r < N; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (a[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < N; ++r) {
      double f = a[r][c] / a[c][c];
      for (int j = c; j < N; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

inline double mat4_det(const Mat4& m) { return matn_det<4>(m); }

// Solve a x = b by partial-pivot LU. Throws on a numerically singular matrix.
template <int N>
std::array<double, N> matn_solve(MatN<N> a, std::array<double, N> b) {
  for (int c = 0; c < N; ++c) {
    int piv = c;
    for (int r = c + 1; r < N; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
    if (std::fabs(a[piv][c]) < 1e-300)
      throw std::runtime_error("linear solve: singular matrix");
    if (piv != c) {
      std::swap(a[piv], a[c]);
      std::swap(b[piv], b[c]);
    }
    for (int r = c + 1; r < N; ++r) {
      double f = a[r][c] / a[c][c];
      b[r] -= f * b[c];
      for (int j = c; j < N; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::array<double, N> x{};
  for (int r = N - 1; r >= 0; --r) {
    double s = b[r];
    for (int j = r + 1; j < N; ++j) s -= a[r][j] * x[j];
    x[r] = s / a[r][r];
  }
  return x;
}

inline Vec4 mat4_solve(const Mat4& a, const Vec4& b) { return matn_solve<4>(a, b); }

template <int N>
MatN<N> matn_inverse(const MatN<N>& a) {
  MatN<N> out{};
  for (int c = 0; c < N; ++c) {
    std::array<double, N> e{};
    e[c] = 1.0;
    auto col = matn_solve<N>(a, e);
    for (int r = 0; r < N; ++r) out[r][c] = col[r];
  }
  return out;
}

inline Mat4 mat4_inverse(const Mat4& a) { return matn_inverse<4>(a); }

// Cyclic Jacobi eigensolver for a symmetric matrix. Returns eigenvalues in
// `eval` and eigenvectors as columns of `evec`.
template <int N>
void symmetric_eigen(const MatN<N>& in, std::array<double, N>& eval, MatN<N>& evec) {
  MatN<N> a = in;
  evec = MatN<N>{};
  for (int i = 0; i < N; ++i) evec[i][i] = 1.0;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < N; ++p)
      for (int q = p + 1; q < N; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < N; ++p) {
      for (int q = p + 1; q < N; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < N; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < N; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < N; ++k) {
          double vkp = evec[k][p], vkq = evec[k][q];
          evec[k][p] = c * vkp - s * vkq;
          evec[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  for (int i = 0; i < N; ++i) eval[i] = a[i][i];
}

}  // namespace dslab
