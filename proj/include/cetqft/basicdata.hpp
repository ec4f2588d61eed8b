#pragma once
#include "cetqft/fusion.hpp"

#include <array>
#include <map>

namespace cetqft {

// Square block of a move operator: rows indexed by output labels, columns by
// input labels.
struct Block {
  std::vector<int> rows, cols;
  Mat m;

  bool empty() const { return rows.empty(); }
  cplx at(int row_label, int col_label) const;
  int row_index(int label) const;
  int col_index(int label) const;
};

class BasicData {
 public:
  explicit BasicData(int r);

  const Params& params() const { return P_; }
  const FusionBasis& fusion() const { return B_; }
  int r() const { return P_.r; }

  int move_K(int m) const { return nu(m); }
  cplx theta(int k) const { return P_.tpow(static_cast<long>(k) * k - 1); }
  // Twist move acting on a boundary labelled k.
  cplx twist(int k) const { return std::conj(theta(k)); }
  cplx move_T1(int p, int m, int n) const;
  // B23 : V_p^{mn} -> V_p^{nm}
  cplx move_B23(int p, int m, int n) const;
  // R : V_p^{mn} -> V_n^{pm}; 1 in the orbit gauge.
  cplx move_R(int p, int m, int n) const;
  // ⊕_p V_p^{mn}⊗V_p^{kl} -> ⊕_q V_q^{lm}⊗V_q^{nk}; rows q, cols p.
  const Block& move_F(int m, int n, int k, int l) const;
  Block move_F_inverse(int m, int n, int k, int l) const;
  // ⊕_m V_p^{mm} -> ⊕_n V_p^{nn}
  const Block& move_S(int p) const;
  Mat torus_S() const { return move_S(1).m; }
  cplx scalar_C() const;
  double weight_S(int m) const { return q_int(m, P_) / P_.X; }
  // <β_p^{mn}, β_p^{nm}>
  cplx pairing(int p, int m, int n) const;

 private:
  Block compute_F(int m, int n, int k, int l) const;
  Block compute_S(int p) const;

  Params P_;
  FusionBasis B_;
  std::map<std::array<int, 4>, Block> F_;
  std::map<int, Block> S_;
  std::map<std::array<int, 3>, cplx> B23_, R_, pair_;
};

}  // namespace cetqft
