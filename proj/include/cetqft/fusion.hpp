#pragma once
#include "cetqft/reps.hpp"

#include <map>
#include <tuple>

namespace cetqft {

// |m-n|+1 <= p <= min(m+n-1, 2r-1-m-n), m+n+p odd.
std::vector<int> fusion_range(int m, int n, const Params& P);
bool admissible(int p, int m, int n, const Params& P);

// Invariant pairing k⊗k -> 1 (row vector) and copairing 1 -> k⊗k (column).
Mat cap(int k, const Params& P);
Mat cup(int k, const Params& P);

struct Summand {
  int p;
  Mat incl;  // m⊗n <- p
  Mat proj;  // p <- m⊗n, proj*incl = 1
};

struct Decomposition {
  std::vector<Summand> parts;
  Mat bad_projector;
};

Decomposition good_decomposition(int m, int n, const Params& P);

// Normalized invariant projection k⊗k -> 1.
Mat psi(int k, const Params& P);

// Scalar c with a = c*b (least squares); throws if a is not proportional to b.
cplx proportionality(const Mat& a, const Mat& b, double tol = 1e-8);

class FusionBasis {
 public:
  explicit FusionBasis(const Params& P);

  const Params& params() const { return P_; }
  bool has(int p, int m, int n) const { return beta_.count({p, m, n}) > 0; }
  // β_p^{mn} : m⊗n -> p
  const Mat& beta(int p, int m, int n) const;
  Mat inclusion(int p, int m, int n) const;
  // V_p^{mn} -> V_n^{pm}
  Mat rotate(const Mat& a, int p, int m, int n) const;
  const Mat& cap(int k) const { return caps_.at(k); }
  const Mat& cup(int k) const { return cups_.at(k); }
  const Mat& rmat(int k, int kp) const { return rm_.at({k, kp}); }
  const std::map<std::tuple<int, int, int>, Mat>& all() const { return beta_; }

 private:
  Params P_;
  std::map<std::tuple<int, int, int>, Mat> beta_;
  std::map<int, Mat> caps_, cups_;
  std::map<std::pair<int, int>, Mat> rm_;
};

// <α,β>_t with α∘β* = <α,β>_t 1_p.
cplx trace_pairing(const Mat& a, const Mat& b, int p, int m, int n, const Params& P);
// β : n⊗m -> p  gives  p -> m⊗n
Mat transpose_vee(const FusionBasis& B, const Mat& b, int p, int n, int m);
// ψ : V_p^{mn} -> V_p^{nm}, antilinear.
Mat psi_dual(const FusionBasis& B, const Mat& b, int p, int m, int n);
// α ∈ V_p^{mn}, β ∈ V_p^{nm}.
cplx dual_pairing(const FusionBasis& B, const Mat& a, const Mat& b, int p, int m, int n);

}  // namespace cetqft
