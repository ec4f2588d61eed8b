#pragma once
// Independent reference computations used by the tests. Nothing here calls
// into the library beyond the representation matrices and plain containers.
#include "cetqft/reps.hpp"

#include <Eigen/Eigenvalues>
#include <gmpxx.h>

#include <numbers>
#include <vector>

namespace oracle {

using cetqft::cplx;
using cetqft::Mat;
using std::numbers::pi;

inline double trig_S(int a, int b, int r) { return std::sqrt(2.0 / r) * std::sin(a * b * pi / r); }
inline cplx theta(int k, int r) { return std::polar(1.0, pi * (k * k - 1) / (2.0 * r)); }
inline double global_X(int r) { return std::sqrt(r / 2.0) / std::sin(pi / r); }

// Surgery on the unknot with framing f, normalized so that S^3 -> S_11 and
// S^2 x S^1 -> 1. The signature correction uses the Gauss sum phase.
inline cplx rt_unknot_surgery(int r, int f) {
  cplx z = 0.0, gauss = 0.0;
  for (int m = 1; m < r; ++m) {
    double s = trig_S(1, m, r);
    z += s * s * std::pow(theta(m, r), f);
    gauss += s * s * theta(m, r);
  }
  cplx phase = gauss / std::abs(gauss);
  if (f > 0) z /= phase;
  if (f < 0) z *= phase;
  return z;
}

// Basis of {A : A ρ_in(g) = ρ_out(g) A for g = X, Y, K}, columns = vec(A).
inline Mat hom_space(const cetqft::Action& in, const cetqft::Action& out) {
  const long a = in.K.rows(), b = out.K.rows();
  Mat sys(3 * a * b, a * b);
  // vec(A M) = (Mᵀ ⊗ I) vec(A), vec(N A) = (I ⊗ N) vec(A), column-major
  auto rows = [&](const Mat& Min, const Mat& Mout, int blk) {
    sys.middleRows(blk * a * b, a * b) = cetqft::kron(Min.transpose(), cetqft::eye(b)) - cetqft::kron(cetqft::eye(a), Mout);
  };
  rows(in.X, out.X, 0);
  rows(in.Y, out.Y, 1);
  rows(in.K, out.K, 2);
  Eigen::SelfAdjointEigenSolver<Mat> es(sys.adjoint() * sys);
  std::vector<int> idx;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) < 1e-9) idx.push_back(i);
  Mat N(a * b, idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) N.col(c) = es.eigenvectors().col(idx[c]);
  return N;
}

// Exact signature of a rational symmetric matrix: the characteristic
// polynomial (Faddeev-LeVerrier) has only real roots, so Descartes' rule of
// signs counts the positive and negative eigenvalues exactly.
using QM = std::vector<std::vector<mpq_class>>;

inline std::vector<mpq_class> charpoly(const QM& A) {
  const std::size_t n = A.size();
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;
  QM M(n, std::vector<mpq_class>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    QM AM(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) M[i][j] += (i == j) ? c[n - k + 1] : mpq_class(0);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) AM[i][j] += A[i][l] * M[l][j];
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += AM[i][i];
    c[n - k] = -tr / mpq_class(static_cast<long>(k));
    M = AM;
  }
  return c;  // c[0] + c[1] x + ... + x^n
}

inline int sign_changes(const std::vector<mpq_class>& c) {
  int changes = 0, last = 0;
  for (auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline int exact_signature(const QM& A) {
  auto c = charpoly(A);
  auto neg = c;
  for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  return sign_changes(c) - sign_changes(neg);
}

// Kashiwara index: signature of Q(x1,x2,x3) = ω(x1,x2) + ω(x2,x3) + ω(x3,x1)
// on L1 ⊕ L2 ⊕ L3, with ω(a_i, b_i) = 1 in coordinates (a_1..a_g, b_1..b_g).
inline int kashiwara(const std::vector<std::vector<mpq_class>>& L1, const std::vector<std::vector<mpq_class>>& L2,
                     const std::vector<std::vector<mpq_class>>& L3) {
  auto omega = [](const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) {
    std::size_t g = x.size() / 2;
    mpq_class s = 0;
    for (std::size_t i = 0; i < g; ++i) s += x[i] * y[g + i] - x[g + i] * y[i];
    return s;
  };
  std::vector<const std::vector<std::vector<mpq_class>>*> Ls{&L1, &L2, &L3};
  std::vector<std::pair<int, const std::vector<mpq_class>*>> basis;
  for (int k = 0; k < 3; ++k)
    for (auto& v : *Ls[k]) basis.push_back({k, &v});
  const std::size_t n = basis.size();
  QM A(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto [ki, vi] = basis[i];
      auto [kj, vj] = basis[j];
      // Q's polarization: the term ω(x_k, x_{k+1}) couples block k with k+1
      mpq_class v = 0;
      if ((ki + 1) % 3 == kj) v += omega(*vi, *vj);
      if ((kj + 1) % 3 == ki) v += omega(*vj, *vi);
      A[i][j] = v / 2;
    }
  return exact_signature(A);
}

}  // namespace oracle
