#pragma once
#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace cetqft {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Labels = std::vector<int>;

// Level r quantum parameters: s = e^{iπ/r}, t = e^{iπ/2r}.
struct Params {
  int r = 0;
  cplx s, t;
  double X = 0.0;

  explicit Params(int r);
  // t^e with e reduced mod 4r first.
  cplx tpow(long e) const;
  cplx spow(long e) const { return tpow(2 * e); }
  std::vector<int> labels() const;
};

double q_int(int n, const Params& P);
double q_factorial(int n, const Params& P);
double q_binomial(int n, int k, const Params& P);
// (-1)^{k-1}
inline int nu(int k) { return (k % 2) ? 1 : -1; }

// Irreducible module of dimension k. Basis index a <-> weight j = a - (k-1)/2,
// stored as 2j = 2a - (k-1).
struct Irrep {
  int k;
  explicit Irrep(int k) : k(k) {}
  int dim() const { return k; }
  int twice_m() const { return k - 1; }
  std::vector<int> weights2() const;
  int index(int j2) const { return (j2 + k - 1) / 2; }
};

int dim_of(const Labels& ls);

// Complex matrix with typed tensor-product domain and codomain. Negative
// labels denote duals.
struct LinearMap {
  Labels domain, codomain;
  Mat m;

  LinearMap() = default;
  LinearMap(Labels dom, Labels cod, Mat mat);
  static LinearMap identity(const Labels& ls);
  bool is_scalar() const { return domain.empty() && codomain.empty(); }
  cplx scalar() const;
};

LinearMap compose(const LinearMap& after, const LinearMap& before);
LinearMap tensor(const LinearMap& a, const LinearMap& b);

Mat kron(const Mat& a, const Mat& b);
Mat kron_all(std::initializer_list<Mat> ms);
Mat eye(int n);

struct Action {
  Mat X, Y, K;
};

Action irrep_action(int k, const Params& P);
// Iterated coproduct X -> X⊗K + K̄⊗X, Y likewise, K -> K⊗K.
Action tensor_action(const Labels& ls, const Params& P);
// D(e^j) = qbinom(2m, m-j)(it)^{2j} e_{-j}; column j, row -j.
Mat weyl_D(int k, const Params& P);
// Ř : k⊗k' -> k'⊗k.
Mat r_matrix(int k, int kp, const Params& P);
Mat r_matrix_inv(int k, int kp, const Params& P);
// Gram matrix of the sesquilinear form on a tensor product.
Mat form_matrix(const Labels& ls, const Params& P);
// α* with (αw, v) = (w, α* v).
Mat adjoint(const Mat& a, const Labels& dom, const Labels& cod, const Params& P);
LinearMap form_and_adjoint(const LinearMap& a, const Params& P);

double max_abs(const Mat& a);

}  // namespace cetqft
