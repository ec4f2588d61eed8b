#include "cetqft/reps.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cetqft {

using std::numbers::pi;

Params::Params(int r_) : r(r_) {
  if (r < 3) throw std::invalid_argument("level r must be >= 3");
  s = std::polar(1.0, pi / r);
  t = std::polar(1.0, pi / (2.0 * r));
  X = std::sqrt(r / 2.0) / std::sin(pi / r);
}

cplx Params::tpow(long e) const {
  long m = 4L * r;
  long red = ((e % m) + m) % m;
  return std::polar(1.0, pi * static_cast<double>(red) / (2.0 * r));
}

std::vector<int> Params::labels() const {
  std::vector<int> v;
  for (int k = 1; k < r; ++k) v.push_back(k);
  return v;
}

double q_int(int n, const Params& P) { return std::sin(pi * n / P.r) / std::sin(pi / P.r); }

double q_factorial(int n, const Params& P) {
  if (n < 0) throw std::domain_error("negative q-factorial");
  double v = 1.0;
  for (int i = 1; i <= n; ++i) v *= q_int(i, P);
  return v;
}

double q_binomial(int n, int k, const Params& P) {
  if (k < 0 || k > n) throw std::domain_error("q_binomial: need 0 <= k <= n");
  if (n >= P.r) throw std::domain_error("q_binomial: n >= r gives a vanishing q-factorial");
  return q_factorial(n, P) / (q_factorial(k, P) * q_factorial(n - k, P));
}

std::vector<int> Irrep::weights2() const {
  std::vector<int> w;
  for (int j2 = -(k - 1); j2 <= k - 1; j2 += 2) w.push_back(j2);
  return w;
}

int dim_of(const Labels& ls) {
  int d = 1;
  for (int l : ls) d *= std::abs(l);
  return d;
}

LinearMap::LinearMap(Labels dom, Labels cod, Mat mat)
    : domain(std::move(dom)), codomain(std::move(cod)), m(std::move(mat)) {
  if (m.rows() != dim_of(codomain) || m.cols() != dim_of(domain))
    throw std::invalid_argument("LinearMap: shape does not match labels");
}

LinearMap LinearMap::identity(const Labels& ls) { return {ls, ls, eye(dim_of(ls))}; }

cplx LinearMap::scalar() const {
  if (m.rows() != 1 || m.cols() != 1) throw std::logic_error("not a scalar map");
  return m(0, 0);
}

LinearMap compose(const LinearMap& after, const LinearMap& before) {
  if (after.domain != before.codomain) throw std::invalid_argument("compose: label mismatch");
  return {before.domain, after.codomain, after.m * before.m};
}

LinearMap tensor(const LinearMap& a, const LinearMap& b) {
  Labels d = a.domain, c = a.codomain;
  d.insert(d.end(), b.domain.begin(), b.domain.end());
  c.insert(c.end(), b.codomain.begin(), b.codomain.end());
  return {d, c, kron(a.m, b.m)};
}

Mat kron(const Mat& a, const Mat& b) { return Eigen::kroneckerProduct(a, b).eval(); }

Mat kron_all(std::initializer_list<Mat> ms) {
  Mat out = Mat::Identity(1, 1);
  for (const auto& m : ms) out = kron(out, m);
  return out;
}

Mat eye(int n) { return Mat::Identity(n, n); }

Action irrep_action(int k, const Params& P) {
  if (k < 1 || k >= P.r) throw std::out_of_range("irrep label out of range");
  Irrep V(k);
  int m2 = k - 1;
  Action A{Mat::Zero(k, k), Mat::Zero(k, k), Mat::Zero(k, k)};
  for (int j2 : V.weights2()) {
    int a = V.index(j2);
    A.K(a, a) = P.tpow(j2);
    if (j2 < m2) A.X(V.index(j2 + 2), a) = q_int((m2 + j2) / 2 + 1, P);
    if (j2 > -m2) A.Y(V.index(j2 - 2), a) = q_int((m2 - j2) / 2 + 1, P);
  }
  return A;
}

Action tensor_action(const Labels& ls, const Params& P) {
  Action T{Mat::Zero(1, 1), Mat::Zero(1, 1), eye(1)};
  for (int k : ls) {
    Action a = irrep_action(k, P);
    Mat Kinv = T.K.inverse();
    T.X = kron(T.X, a.K) + kron(Kinv, a.X);
    T.Y = kron(T.Y, a.K) + kron(Kinv, a.Y);
    T.K = kron(T.K, a.K);
  }
  return T;
}

Mat weyl_D(int k, const Params& P) {
  if (k < 1 || k >= P.r) throw std::out_of_range("irrep label out of range");
  Irrep V(k);
  int m2 = k - 1;
  Mat D = Mat::Zero(k, k);
  const cplx I(0, 1);
  for (int j2 : V.weights2()) {
    cplx ipow = std::pow(I, ((j2 % 4) + 4) % 4);
    D(V.index(-j2), V.index(j2)) = q_binomial(m2, (m2 - j2) / 2, P) * ipow * P.tpow(j2);
  }
  return D;
}

Mat r_matrix(int k, int kp, const Params& P) {
  Irrep A(k), B(kp);
  int m2 = k - 1, mp2 = kp - 1;
  Mat R = Mat::Zero(kp * k, k * kp);
  cplx ds = P.s - std::conj(P.s);
  for (int i2 : A.weights2()) {
    for (int j2 : B.weights2()) {
      for (int n = 0; i2 + 2 * n <= m2 && j2 - 2 * n >= -mp2; ++n) {
        int mi = (m2 + i2) / 2, mj = (mp2 - j2) / 2;
        cplx c = std::pow(ds, n) / q_factorial(n, P) * (q_factorial(mi + n, P) / q_factorial(mi, P)) *
                 (q_factorial(mj + n, P) / q_factorial(mj, P));
        long e = static_cast<long>(i2) * j2 - static_cast<long>(n) * (i2 - j2) - static_cast<long>(n) * (n + 1);
        c *= P.tpow(e);
        R(B.index(j2 - 2 * n) * k + A.index(i2 + 2 * n), A.index(i2) * kp + B.index(j2)) += c;
      }
    }
  }
  return R;
}

Mat r_matrix_inv(int k, int kp, const Params& P) { return r_matrix(kp, k, P).inverse(); }

Mat form_matrix(const Labels& ls, const Params& P) {
  Mat M = eye(1);
  const cplx I(0, 1);
  for (int k : ls) M = kron(M, std::pow(I, (k - 1) % 4) * weyl_D(k, P));
  return M;
}

Mat adjoint(const Mat& a, const Labels& dom, const Labels& cod, const Params& P) {
  Mat Md = form_matrix(dom, P), Mc = form_matrix(cod, P);
  return (Mc * a * Md.inverse()).adjoint();
}

LinearMap form_and_adjoint(const LinearMap& a, const Params& P) {
  return {a.codomain, a.domain, adjoint(a.m, a.domain, a.codomain, P)};
}

double max_abs(const Mat& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace cetqft
