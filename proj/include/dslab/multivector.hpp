#pragma once

// Clifford algebra kernel over a 4- or 5-dimensional real quadratic space.
// Blades are indexed by bitmasks over the generators; a dense coefficient
// array carries the full 2^dim-dimensional algebra. Non-orthonormal metrics
// are handled by a one-time diagonalization into an internal orthonormal
// frame; products transform in, multiply with diagonal signs, transform back.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dslab/linalg.hpp"

namespace dslab {

struct KernelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int blade_grade(std::uint32_t mask) { return std::popcount(mask); }

// Parity sign of merging blade `a` into blade `b` (counts generator swaps).
inline double reorder_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  a >>= 1;
  while (a) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1.0 : 1.0;
}

class Signature;
using SigPtr = std::shared_ptr<const Signature>;

class Signature {
 public:
  static constexpr int kMaxDim = 5;
  static constexpr int kMaxBlades = 1 << kMaxDim;

  static SigPtr create(int dim, const std::array<std::array<double, 5>, 5>& metric,
                       int orientation = +1) {
    return SigPtr(new Signature(dim, metric, orientation));
  }

  static SigPtr minkowski(int dim = 4, int orientation = +1) {
    std::array<std::array<double, 5>, 5> m{};
    m[0][0] = 1.0;
    for (int i = 1; i < dim; ++i) m[i][i] = -1.0;
    return create(dim, m, orientation);
  }

  static SigPtr from_mat4(const Mat4& g, int orientation = +1) {
    std::array<std::array<double, 5>, 5> m{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m[i][j] = g[i][j];
    return create(4, m, orientation);
  }

  int dim() const { return dim_; }
  int n_blades() const { return 1 << dim_; }
  int orientation() const { return orientation_; }
  double metric(int i, int j) const { return metric_[i][j]; }
  double metric_det() const { return metric_det_; }
  // Coefficient of the canonical volume element on the top blade. For a
  // cotangent metric g^{mu nu} this equals sqrt(|det g_{mu nu}|).
  double volume_coeff() const { return volume_coeff_; }
  bool orthonormal_fast_path() const { return fast_path_; }
  double internal_sign(int i) const { return signs_[i]; }

  bool same_as(const Signature& o) const {
    if (this == &o) return true;
    if (dim_ != o.dim_ || orientation_ != o.orientation_) return false;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (metric_[i][j] != o.metric_[i][j]) return false;
    return true;
  }

  // Blade-coefficient change of frame, user -> internal orthonormal.
  void to_internal(const double* in, double* out) const { apply(to_int_, in, out); }
  void to_user(const double* in, double* out) const { apply(to_usr_, in, out); }

 private:
  Signature(int dim, const std::array<std::array<double, 5>, 5>& metric, int orientation)
      : dim_(dim), orientation_(orientation) {
    if (dim != 4 && dim != 5) throw KernelError("Signature: dim must be 4 or 5");
    if (orientation != 1 && orientation != -1)
      throw KernelError("Signature: orientation must be +1 or -1");
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        metric_[i][j] = metric[i][j];
        if (metric[i][j] != metric[j][i])
          throw KernelError("Signature: metric must be symmetric");
      }
    if (dim == 4) {
      MatN<4> m{};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = metric_[i][j];
      metric_det_ = matn_det<4>(m);
    } else {
      MatN<5> m{};
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m[i][j] = metric_[i][j];
      metric_det_ = matn_det<5>(m);
    }
    if (std::fabs(metric_det_) <= 1e-12)
      throw KernelError("Signature: degenerate metric (|det| <= 1e-12)");
    volume_coeff_ = orientation_ / std::sqrt(std::fabs(metric_det_));

    fast_path_ = true;
    for (int i = 0; i < dim && fast_path_; ++i)
      for (int j = 0; j < dim; ++j) {
        if (i == j && metric_[i][j] != 1.0 && metric_[i][j] != -1.0) fast_path_ = false;
        if (i != j && metric_[i][j] != 0.0) fast_path_ = false;
      }
    if (fast_path_) {
      for (int i = 0; i < dim; ++i) signs_[i] = metric_[i][i];
      return;
    }
    if (dim == 4)
      build_frames<4>();
    else
      build_frames<5>();
  }

  template <int N>
  void build_frames() {
    MatN<N> m{};
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) m[i][j] = metric_[i][j];
    std::array<double, N> eval{};
    MatN<N> evec{};
    symmetric_eigen<N>(m, eval, evec);
    std::array<int, N> order{};
    for (int i = 0; i < N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return eval[a] > eval[b]; });
    MatN<N> C{};  // columns: internal generators expressed in the user frame
    for (int c = 0; c < N; ++c) {
      int src = order[c];
      double s = 1.0 / std::sqrt(std::fabs(eval[src]));
      for (int r = 0; r < N; ++r) C[r][c] = evec[r][src] * s;
      signs_[c] = eval[src] > 0 ? 1.0 : -1.0;
    }
    if (matn_det<N>(C) < 0)
      for (int r = 0; r < N; ++r) C[r][N - 1] = -C[r][N - 1];
    MatN<N> Ci = matn_inverse<N>(C);
    build_outermorphism<N>(Ci, to_int_);
    build_outermorphism<N>(C, to_usr_);
  }

  // Blade transform of the linear map e_i -> sum_j M[j][i] e_j.
  template <int N>
  void build_outermorphism(const MatN<N>& M,
                           std::array<std::array<double, kMaxBlades>, kMaxBlades>& T) {
    int nb = 1 << N;
    for (auto& row : T) row.fill(0.0);
    T[0][0] = 1.0;
    for (std::uint32_t src = 1; src < static_cast<std::uint32_t>(nb); ++src) {
      std::array<int, 5> idx{};
      int k = 0;
      for (int i = 0; i < N; ++i)
        if (src >> i & 1) idx[k++] = i;
      for (std::uint32_t dst = 1; dst < static_cast<std::uint32_t>(nb); ++dst) {
        if (std::popcount(dst) != k) continue;
        std::array<int, 5> jdx{};
        int l = 0;
        for (int i = 0; i < N; ++i)
          if (dst >> i & 1) jdx[l++] = i;
        // det of the k x k minor M[jdx, idx]
        double d = 0.0;
        if (k == 1) {
          d = M[jdx[0]][idx[0]];
        } else if (k == 2) {
          d = M[jdx[0]][idx[0]] * M[jdx[1]][idx[1]] - M[jdx[0]][idx[1]] * M[jdx[1]][idx[0]];
        } else {
          // generic Laplace expansion, k <= 5
          d = minor_det<N>(M, jdx.data(), idx.data(), k);
        }
        T[dst][src] = d;
      }
    }
  }

  template <int N>
  static double minor_det(const MatN<N>& M, const int* rows, const int* cols, int k) {
    if (k == 1) return M[rows[0]][cols[0]];
    double acc = 0.0;
    std::array<int, 5> sub{};
    for (int c = 0; c < k; ++c) {
      int t = 0;
      for (int cc = 0; cc < k; ++cc)
        if (cc != c) sub[t++] = cols[cc];
      double s = (c & 1) ? -1.0 : 1.0;
      acc += s * M[rows[0]][cols[c]] * minor_det<N>(M, rows + 1, sub.data(), k - 1);
    }
    return acc;
  }

  void apply(const std::array<std::array<double, kMaxBlades>, kMaxBlades>& T,
             const double* in, double* out) const {
    int nb = n_blades();
    for (int r = 0; r < nb; ++r) {
      double s = 0.0;
      for (int c = 0; c < nb; ++c) s += T[r][c] * in[c];
      out[r] = s;
    }
  }

  int dim_;
  int orientation_;
  std::array<std::array<double, 5>, 5> metric_{};
  std::array<double, 5> signs_{};
  double metric_det_ = 0.0;
  double volume_coeff_ = 0.0;
  bool fast_path_ = false;
  std::array<std::array<double, kMaxBlades>, kMaxBlades> to_int_{};
  std::array<std::array<double, kMaxBlades>, kMaxBlades> to_usr_{};
};

class Multivector {
 public:
  Multivector() = default;
  explicit Multivector(SigPtr sig) : sig_(std::move(sig)) { c_.fill(0.0); }

  static Multivector scalar(SigPtr sig, double v) {
    Multivector m(std::move(sig));
    m.c_[0] = v;
    return m;
  }
  static Multivector blade(SigPtr sig, std::uint32_t mask, double v) {
    Multivector m(std::move(sig));
    if (mask >= static_cast<std::uint32_t>(m.sig_->n_blades()))
      throw KernelError("Multivector: blade index out of range");
    m.c_[mask] = v;
    return m;
  }
  static Multivector basis_vector(SigPtr sig, int i) {
    return blade(std::move(sig), 1u << i, 1.0);
  }
  static Multivector volume_element(SigPtr sig) {
    double v = sig->volume_coeff();
    return blade(std::move(sig), (1u << sig->dim()) - 1u, v);
  }
  static Multivector covector(SigPtr sig, const Vec4& comps) {
    Multivector m(std::move(sig));
    for (int i = 0; i < 4; ++i) m.c_[1u << i] = comps[i];
    return m;
  }

  const SigPtr& sig() const { return sig_; }
  double coeff(std::uint32_t mask) const { return c_[mask]; }
  double& coeff_ref(std::uint32_t mask) { return c_[mask]; }
  int n_blades() const { return sig_->n_blades(); }

  Multivector grade(int k) const {
    Multivector out(sig_);
    for (int m = 0; m < n_blades(); ++m)
      if (blade_grade(m) == k) out.c_[m] = c_[m];
    return out;
  }

  int max_grade() const {
    int g = 0;
    for (int m = 0; m < n_blades(); ++m)
      if (c_[m] != 0.0) g = std::max(g, blade_grade(m));
    return g;
  }

  bool is_homogeneous(int k, double tol = 0.0) const {
    for (int m = 0; m < n_blades(); ++m)
      if (blade_grade(m) != k && std::fabs(c_[m]) > tol) return false;
    return true;
  }

  Multivector reversion() const {
    Multivector out(sig_);
    for (int m = 0; m < n_blades(); ++m) {
      int k = blade_grade(m);
      out.c_[m] = ((k * (k - 1) / 2) & 1) ? -c_[m] : c_[m];
    }
    return out;
  }

  Multivector grade_involution() const {
    Multivector out(sig_);
    for (int m = 0; m < n_blades(); ++m)
      out.c_[m] = (blade_grade(m) & 1) ? -c_[m] : c_[m];
    return out;
  }

  Multivector operator+(const Multivector& o) const {
    check_sig(o);
    Multivector out(sig_);
    for (int m = 0; m < n_blades(); ++m) out.c_[m] = c_[m] + o.c_[m];
    return out;
  }
  Multivector operator-(const Multivector& o) const {
    check_sig(o);
    Multivector out(sig_);
    for (int m = 0; m < n_blades(); ++m) out.c_[m] = c_[m] - o.c_[m];
    return out;
  }
  Multivector operator-() const {
    Multivector out(sig_);
    for (int m = 0; m < n_blades(); ++m) out.c_[m] = -c_[m];
    return out;
  }
  Multivector scaled(double s) const {
    Multivector out(sig_);
    for (int m = 0; m < n_blades(); ++m) out.c_[m] = s * c_[m];
    return out;
  }
  friend Multivector operator*(double s, const Multivector& m) { return m.scaled(s); }

  double max_abs_coeff() const {
    double w = 0.0;
    for (int m = 0; m < n_blades(); ++m) w = std::max(w, std::fabs(c_[m]));
    return w;
  }

  bool approx_equal(const Multivector& o, double tol = 1e-12) const {
    check_sig(o);
    for (int m = 0; m < n_blades(); ++m)
      if (std::fabs(c_[m] - o.c_[m]) > tol) return false;
    return true;
  }

  // Blade names g0..g4, "^" separator, terms sorted by blade bitmask.
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int m = 0; m < n_blades(); ++m) {
      if (c_[m] == 0.0) continue;
      if (!first) os << " + ";
      first = false;
      os << c_[m];
      if (m != 0) {
        os << ' ';
        bool fg = true;
        for (int i = 0; i < sig_->dim(); ++i)
          if (m >> i & 1) {
            if (!fg) os << '^';
            fg = false;
            os << 'g' << i;
          }
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  void check_sig(const Multivector& o) const {
    if (sig_.get() == o.sig_.get()) return;
    if (!sig_ || !o.sig_ || !sig_->same_as(*o.sig_))
      throw KernelError("operands use different Signatures");
  }

  friend Multivector geometric_product(const Multivector&, const Multivector&);
  friend Multivector outer_product(const Multivector&, const Multivector&);
  friend Multivector left_contraction(const Multivector&, const Multivector&);
  friend Multivector right_contraction(const Multivector&, const Multivector&);
  friend double scalar_product(const Multivector&, const Multivector&);
  friend Multivector interior_vector(const double*, const Multivector&);

  SigPtr sig_;
  std::array<double, Signature::kMaxBlades> c_{};
};

namespace detail {

enum class ProductKind { Geometric, LeftContraction, RightContraction };

inline void core_product(const Signature& sig, ProductKind kind, const double* a,
                         const double* b, double* out) {
  int nb = sig.n_blades();
  for (int m = 0; m < nb; ++m) out[m] = 0.0;
  for (int i = 0; i < nb; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < nb; ++j) {
      if (b[j] == 0.0) continue;
      std::uint32_t ui = static_cast<std::uint32_t>(i);
      std::uint32_t uj = static_cast<std::uint32_t>(j);
      if (kind == ProductKind::LeftContraction && (ui & ~uj)) continue;
      if (kind == ProductKind::RightContraction && (uj & ~ui)) continue;
      double s = reorder_sign(ui, uj);
      std::uint32_t common = ui & uj;
      while (common) {
        int k = std::countr_zero(common);
        s *= sig.internal_sign(k);
        common &= common - 1;
      }
      out[ui ^ uj] += s * a[i] * b[j];
    }
  }
}

inline Multivector framed_product(const Multivector& a, const Multivector& b,
                                  ProductKind kind) {
  const Signature& sig = *a.sig();
  Multivector out(a.sig());
  std::array<double, Signature::kMaxBlades> ai{}, bi{}, ri{}, ru{};
  if (sig.orthonormal_fast_path()) {
    for (int m = 0; m < sig.n_blades(); ++m) {
      ai[m] = a.coeff(m);
      bi[m] = b.coeff(m);
    }
    core_product(sig, kind, ai.data(), bi.data(), ri.data());
    for (int m = 0; m < sig.n_blades(); ++m) out.coeff_ref(m) = ri[m];
    return out;
  }
  std::array<double, Signature::kMaxBlades> au{}, bu{};
  for (int m = 0; m < sig.n_blades(); ++m) {
    au[m] = a.coeff(m);
    bu[m] = b.coeff(m);
  }
  sig.to_internal(au.data(), ai.data());
  sig.to_internal(bu.data(), bi.data());
  core_product(sig, kind, ai.data(), bi.data(), ri.data());
  sig.to_user(ri.data(), ru.data());
  for (int m = 0; m < sig.n_blades(); ++m) out.coeff_ref(m) = ru[m];
  return out;
}

}  // namespace detail

inline Multivector geometric_product(const Multivector& a, const Multivector& b) {
  a.check_sig(b);
  return detail::framed_product(a, b, detail::ProductKind::Geometric);
}

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

// Exterior product: pure blade combinatorics, metric-free.
inline Multivector outer_product(const Multivector& a, const Multivector& b) {
  a.check_sig(b);
  Multivector out(a.sig());
  int nb = a.n_blades();
  for (int i = 0; i < nb; ++i) {
    if (a.c_[i] == 0.0) continue;
    for (int j = 0; j < nb; ++j) {
      if (b.c_[j] == 0.0) continue;
      if (i & j) continue;
      std::uint32_t ui = static_cast<std::uint32_t>(i);
      std::uint32_t uj = static_cast<std::uint32_t>(j);
      out.c_[ui | uj] += reorder_sign(ui, uj) * a.c_[i] * b.c_[j];
    }
  }
  return out;
}

inline Multivector operator^(const Multivector& a, const Multivector& b) {
  return outer_product(a, b);
}

inline Multivector left_contraction(const Multivector& a, const Multivector& b) {
  a.check_sig(b);
  return detail::framed_product(a, b, detail::ProductKind::LeftContraction);
}

inline Multivector right_contraction(const Multivector& a, const Multivector& b) {
  a.check_sig(b);
  return detail::framed_product(a, b, detail::ProductKind::RightContraction);
}

// Scalar product per the Gram-determinant definition, evaluated directly in
// the user frame; independent of the geometric-product code path.
inline double scalar_product(const Multivector& a, const Multivector& b) {
  a.check_sig(b);
  const Signature& sig = *a.sig();
  int nb = a.n_blades();
  double acc = a.c_[0] * b.c_[0];
  for (int i = 1; i < nb; ++i) {
    if (a.c_[i] == 0.0) continue;
    int gi = blade_grade(static_cast<std::uint32_t>(i));
    std::array<int, 5> I{};
    int k = 0;
    for (int t = 0; t < sig.dim(); ++t)
      if (i >> t & 1) I[k++] = t;
    for (int j = 1; j < nb; ++j) {
      if (b.c_[j] == 0.0) continue;
      if (blade_grade(static_cast<std::uint32_t>(j)) != gi) continue;
      std::array<int, 5> J{};
      int l = 0;
      for (int t = 0; t < sig.dim(); ++t)
        if (j >> t & 1) J[l++] = t;
      // det of Gram matrix metric(I_a, J_b)
      double d = 0.0;
      switch (gi) {
        case 1:
          d = sig.metric(I[0], J[0]);
          break;
        case 2:
          d = sig.metric(I[0], J[0]) * sig.metric(I[1], J[1]) -
              sig.metric(I[0], J[1]) * sig.metric(I[1], J[0]);
          break;
        default: {
          MatN<5> G{};
          for (int r = 0; r < gi; ++r)
            for (int c = 0; c < gi; ++c) G[r][c] = sig.metric(I[r], J[c]);
          for (int r = gi; r < 5; ++r) G[r][r] = 1.0;
          d = matn_det<5>(G);
          break;
        }
      }
      acc += a.c_[i] * b.c_[j] * d;
    }
  }
  return acc;
}

// Interior product with a vector given by components on the reciprocal frame
// (i.e. plain iota_v); metric-free.
inline Multivector interior_vector(const double* v, const Multivector& b) {
  Multivector out(b.sig());
  int nb = b.n_blades();
  for (int j = 0; j < nb; ++j) {
    if (b.c_[j] == 0.0) continue;
    for (int i = 0; i < b.sig()->dim(); ++i) {
      if (!(j >> i & 1)) continue;
      if (v[i] == 0.0) continue;
      std::uint32_t uj = static_cast<std::uint32_t>(j);
      std::uint32_t bit = 1u << i;
      double s = reorder_sign(bit, uj);  // moves e_i to the front of the blade
      out.c_[uj ^ bit] += s * v[i] * b.c_[j];
    }
  }
  return out;
}

inline Multivector hodge_star(const Multivector& a) {
  return left_contraction(a.reversion(), Multivector::volume_element(a.sig()));
}

inline Multivector hodge_star_inverse(const Multivector& a) {
  const Signature& sig = *a.sig();
  int n = sig.dim();
  double sgn = sig.metric_det() > 0 ? 1.0 : -1.0;
  Multivector out(a.sig());
  for (int k = 0; k <= n; ++k) {
    Multivector part = a.grade(k);
    if (part.max_abs_coeff() == 0.0) continue;
    double f = ((k * (n - k)) & 1 ? -1.0 : 1.0) * sgn;
    out = out + hodge_star(part).scaled(f);
  }
  return out;
}

// Component-formula Hodge dual (Levi-Civita route), independent of the
// contraction path; used for cross-checks.
inline Multivector hodge_star_components(const Multivector& a) {
  const Signature& sig = *a.sig();
  int n = sig.dim();
  int nb = sig.n_blades();
  // inverse of the signature metric = metric with indices down
  double volc = sig.volume_coeff();
  Multivector out(a.sig());
  // raise indices of each blade with the signature metric, then contract
  // against the permutation symbol.
  for (int m = 0; m < nb; ++m) {
    if (a.coeff(m) == 0.0) continue;
    int p = blade_grade(static_cast<std::uint32_t>(m));
    std::array<int, 5> idx{};
    int k = 0;
    for (int t = 0; t < n; ++t)
      if (m >> t & 1) idx[k++] = t;
    if (p == 0) {
      out.coeff_ref((1u << n) - 1u) += a.coeff(m) * volc;
      continue;
    }
    // sum over raised index assignments nu_1..nu_p
    std::array<int, 5> nu{};
    std::function<void(int, double)> rec = [&](int depth, double factor) {
      if (depth == p) {
        std::uint32_t used = 0;
        for (int t = 0; t < p; ++t) {
          if (used >> nu[t] & 1) return;
          used |= 1u << nu[t];
        }
        // permutation sign of (nu_1..nu_p, rest ascending)
        std::array<int, 5> perm{};
        for (int t = 0; t < p; ++t) perm[t] = nu[t];
        int w = p;
        for (int t = 0; t < n; ++t)
          if (!(used >> t & 1)) perm[w++] = t;
        int inv = 0;
        for (int s = 0; s < n; ++s)
          for (int t = s + 1; t < n; ++t)
            if (perm[s] > perm[t]) ++inv;
        double eps = (inv & 1) ? -1.0 : 1.0;
        std::uint32_t rest = ((1u << n) - 1u) & ~used;
        out.coeff_ref(rest) += a.coeff(m) * factor * eps * volc;
        return;
      }
      for (int v = 0; v < n; ++v) {
        double g = sig.metric(idx[depth], v);
        if (g == 0.0) continue;
        nu[depth] = v;
        rec(depth + 1, factor * g);
      }
    };
    rec(0, 1.0);
  }
  return out;
}

}  // namespace dslab
