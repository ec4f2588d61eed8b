#include "cetqft/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cetqft {

std::vector<int> fusion_range(int m, int n, const Params& P) {
  std::vector<int> out;
  int lo = std::abs(m - n) + 1, hi = std::min(m + n - 1, 2 * P.r - 1 - m - n);
  for (int p = lo; p <= hi; ++p)
    if ((m + n + p) % 2 == 1) out.push_back(p);
  return out;
}

bool admissible(int p, int m, int n, const Params& P) {
  if (p < 1 || m < 1 || n < 1 || p >= P.r || m >= P.r || n >= P.r) return false;
  auto v = fusion_range(m, n, P);
  return std::find(v.begin(), v.end(), p) != v.end();
}

Mat cap(int k, const Params& P) {
  Mat D = weyl_D(k, P);
  Mat c(1, k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) c(0, a * k + b) = D(b, a);
  return c;
}

Mat cup(int k, const Params& P) {
  Mat Di = weyl_D(k, P).inverse();
  Mat c(k * k, 1);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) c(a * k + b, 0) = Di(b, a);
  return c;
}

cplx proportionality(const Mat& a, const Mat& b, double tol) {
  cplx den = b.cwiseAbs2().sum();
  if (std::abs(den) == 0.0) throw std::runtime_error("proportionality: zero reference");
  cplx c = (b.reshaped().adjoint() * a.reshaped()).value() / den;
  double scale = std::max(1.0, max_abs(a));
  if (max_abs(a - c * b) > tol * scale) throw std::runtime_error("proportionality: maps are not proportional");
  return c;
}

namespace {

// Highest weight vector of weight (p-1)/2 inside m⊗n, then its lowering orbit.
Mat raw_inclusion(int m, int n, int p, const Action& A, const Params& P) {
  Irrep M(m), N(n), Pp(p);
  std::vector<int> ws;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b)
      if (M.weights2()[a] + N.weights2()[b] == p - 1) ws.push_back(a * n + b);
  Mat E = Mat::Zero(m * n, ws.size());
  for (std::size_t c = 0; c < ws.size(); ++c) E(ws[c], c) = 1.0;
  Eigen::JacobiSVD<Mat> svd(A.X * E, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() ? std::max(1.0, sv(0)) : 1.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * smax) ++rank;
  int nullity = static_cast<int>(ws.size()) - rank;
  if (nullity != 1) throw std::logic_error("unexpected highest-weight multiplicity");
  Mat v = E * svd.matrixV().col(ws.size() - 1);
  Mat inc = Mat::Zero(m * n, p);
  int pm2 = p - 1;
  inc.col(Pp.index(pm2)) = v;
  for (int j2 = pm2; j2 > -pm2; j2 -= 2)
    inc.col(Pp.index(j2 - 2)) = A.Y * inc.col(Pp.index(j2)) / q_int((pm2 - j2) / 2 + 1, P);
  return inc;
}

}  // namespace

Decomposition good_decomposition(int m, int n, const Params& P) {
  Action A = tensor_action({m, n}, P);
  Decomposition D;
  Mat acc = Mat::Zero(m * n, m * n);
  for (int p : fusion_range(m, n, P)) {
    Mat inc = raw_inclusion(m, n, p, A, P);
    Mat pr = adjoint(inc, {p}, {m, n}, P);
    cplx lam = (pr * inc)(0, 0);
    pr /= lam;
    acc += inc * pr;
    D.parts.push_back({p, inc, pr});
  }
  D.bad_projector = eye(m * n) - acc;
  return D;
}

Mat psi(int k, const Params& P) {
  Mat c = cap(k, P);
  double lam = (c * adjoint(c, {k, k}, {}, P))(0, 0).real();
  return c / std::sqrt(lam);
}

FusionBasis::FusionBasis(const Params& P) : P_(P) {
  for (int k : P.labels()) {
    caps_[k] = cetqft::cap(k, P);
    cups_[k] = cetqft::cup(k, P);
    for (int kp : P.labels()) rm_[{k, kp}] = r_matrix(k, kp, P);
  }
  std::map<std::tuple<int, int, int>, Mat> raw;
  for (int m : P.labels())
    for (int n : P.labels()) {
      auto D = good_decomposition(m, n, P);
      for (auto& s : D.parts) {
        Mat pr = adjoint(s.incl, {s.p}, {m, n}, P);
        double lam = (pr * s.incl)(0, 0).real();
        raw[{s.p, m, n}] = pr / std::sqrt(lam);
      }
    }
  for (auto& [key, b0] : raw) {
    if (beta_.count(key)) continue;
    auto [p, m, n] = key;
    Mat b = b0;
    if (p == 1 && m == n) {
      b = psi(m, P);
    } else {
      Mat inc = adjoint(b, {m, n}, {p}, P);
      auto col = inc.col(Irrep(p).index(p - 1));
      for (int i = 0; i < col.size(); ++i)
        if (std::abs(col(i)) > 1e-9) {
          b *= std::abs(col(i)) / col(i);
          break;
        }
    }
    beta_[key] = b;
    Mat b1 = rotate(b, p, m, n);
    beta_.try_emplace({n, p, m}, b1);
    beta_.try_emplace({m, n, p}, rotate(b1, n, p, m));
  }
}

const Mat& FusionBasis::beta(int p, int m, int n) const {
  auto it = beta_.find({p, m, n});
  if (it == beta_.end()) throw std::out_of_range("fusion space V_p^{mn} is zero");
  return it->second;
}

Mat FusionBasis::inclusion(int p, int m, int n) const { return adjoint(beta(p, m, n), {m, n}, {p}, P_); }

Mat FusionBasis::rotate(const Mat& a, int p, int m, int n) const {
  Mat out = kron(cap(p), eye(n)) * kron_all({eye(p), a, eye(n)}) * kron_all({eye(p), eye(m), cup(n)});
  return out * std::sqrt(q_int(n, P_) / q_int(p, P_));
}

cplx trace_pairing(const Mat& a, const Mat& b, int p, int m, int n, const Params& P) {
  Mat c = a * adjoint(b, {m, n}, {p}, P);
  return proportionality(c, eye(p));
}

Mat transpose_vee(const FusionBasis& B, const Mat& b, int p, int n, int m) {
  Mat cupnm = kron_all({eye(n), B.cup(m), eye(n)}) * B.cup(n);
  return kron_all({B.cap(p), eye(m), eye(n)}) * kron_all({eye(p), b, eye(m), eye(n)}) * kron(eye(p), cupnm);
}

Mat psi_dual(const FusionBasis& B, const Mat& b, int p, int m, int n) {
  // b : m⊗n -> p ; b^vee : p -> n⊗m ; adjoint : n⊗m -> p
  return adjoint(transpose_vee(B, b, p, m, n), {p}, {n, m}, B.params());
}

cplx dual_pairing(const FusionBasis& B, const Mat& a, const Mat& b, int p, int m, int n) {
  const Params& P = B.params();
  cplx c = proportionality(a * transpose_vee(B, b, p, n, m), eye(p));
  return P.X * P.X / std::sqrt(q_int(m, P) * q_int(n, P) * q_int(p, P)) * c;
}

}  // namespace cetqft
