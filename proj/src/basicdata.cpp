#include "cetqft/basicdata.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace cetqft {

cplx Block::at(int row_label, int col_label) const { return m(row_index(row_label), col_index(col_label)); }

int Block::row_index(int label) const {
  auto it = std::find(rows.begin(), rows.end(), label);
  if (it == rows.end()) throw std::out_of_range("block row label");
  return static_cast<int>(it - rows.begin());
}

int Block::col_index(int label) const {
  auto it = std::find(cols.begin(), cols.end(), label);
  if (it == cols.end()) throw std::out_of_range("block column label");
  return static_cast<int>(it - cols.begin());
}

BasicData::BasicData(int r) : P_(r), B_(P_) {
  const auto L = P_.labels();
  for (const auto& [key, b] : B_.all()) {
    auto [p, m, n] = key;
    Mat moved = b * r_matrix_inv(n, m, P_);
    B23_[{p, m, n}] = proportionality(moved, B_.beta(p, n, m));
    pair_[{p, m, n}] = dual_pairing(B_, b, B_.beta(p, n, m), p, m, n);
    R_[{p, m, n}] = proportionality(B_.rotate(b, p, m, n), B_.beta(n, p, m));
  }
  std::vector<std::array<int, 4>> keys;
  for (int m : L)
    for (int n : L)
      for (int k : L)
        for (int l : L) keys.push_back({m, n, k, l});
  unsigned nt = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<std::vector<Block>>> jobs;
  std::size_t chunk = (keys.size() + nt - 1) / nt;
  for (std::size_t s = 0; s < keys.size(); s += chunk) {
    jobs.push_back(std::async(std::launch::async, [this, &keys, s, chunk] {
      std::vector<Block> out;
      for (std::size_t i = s; i < std::min(keys.size(), s + chunk); ++i) {
        auto [m, n, k, l] = keys[i];
        out.push_back(compute_F(m, n, k, l));
      }
      return out;
    }));
  }
  std::size_t i = 0;
  for (auto& j : jobs)
    for (auto& blk : j.get()) F_[keys[i++]] = std::move(blk);
  for (int p : L) S_[p] = compute_S(p);
}

cplx BasicData::move_T1(int p, int, int) const { return twist(p); }

cplx BasicData::move_B23(int p, int m, int n) const {
  auto it = B23_.find({p, m, n});
  if (it == B23_.end()) throw std::out_of_range("B23 on a zero space");
  return it->second;
}

cplx BasicData::move_R(int p, int m, int n) const {
  auto it = R_.find({p, m, n});
  if (it == R_.end()) throw std::out_of_range("R on a zero space");
  return it->second;
}

cplx BasicData::pairing(int p, int m, int n) const {
  auto it = pair_.find({p, m, n});
  if (it == pair_.end()) throw std::out_of_range("pairing on a zero space");
  return it->second;
}

const Block& BasicData::move_F(int m, int n, int k, int l) const { return F_.at({m, n, k, l}); }

Block BasicData::move_F_inverse(int m, int n, int k, int l) const {
  const Block& f = move_F(m, n, k, l);
  Block inv{f.cols, f.rows, f.empty() ? Mat() : Mat(f.m.inverse())};
  return inv;
}

const Block& BasicData::move_S(int p) const { return S_.at(p); }

cplx BasicData::scalar_C() const { return std::polar(1.0, 3.0 * std::numbers::pi * (P_.r - 2) / (4.0 * P_.r)); }

namespace {

// Functional on a⊗rest moved to rest⊗a by carrying the first leg around.
Mat rotate_functional(const Mat& f, int a, int rest, const FusionBasis& B) {
  Mat C = B.cup(a).reshaped<Eigen::RowMajor>(a, a);
  Mat Cap = B.cap(a).reshaped<Eigen::RowMajor>(a, a);
  Mat F = f.reshaped<Eigen::RowMajor>(a, rest);
  Mat g = F.transpose() * C.transpose() * Cap;  // rest × a
  return g.reshaped<Eigen::RowMajor>(1, rest * a);
}

}  // namespace

Block BasicData::compute_F(int m, int n, int k, int l) const {
  Block out;
  for (int p : P_.labels())
    if (B_.has(p, m, n) && B_.has(p, k, l)) out.cols.push_back(p);
  for (int q : P_.labels())
    if (B_.has(q, l, m) && B_.has(q, n, k)) out.rows.push_back(q);
  if (out.cols.empty() && out.rows.empty()) return out;
  if (out.cols.size() != out.rows.size()) throw std::logic_error("F block is not square");
  const int d = static_cast<int>(out.cols.size());
  auto phi = [&](int p, int a, int b, int c, int e) {
    return Mat(B_.cap(p) * kron(B_.beta(p, a, b), B_.beta(p, c, e)) / std::sqrt(q_int(p, P_)));
  };
  std::vector<Mat> W, Phi;
  for (int p : out.cols) {
    W.push_back(kron(B_.inclusion(p, m, n), B_.inclusion(p, k, l)) * B_.cup(p));
    Phi.push_back(phi(p, m, n, k, l));
  }
  Mat G(d, d);
  for (int a = 0; a < d; ++a) {
    int q = out.rows[a];
    Mat psi = rotate_functional(phi(q, l, m, n, k), l, m * n * k, B_);
    for (int b = 0; b < d; ++b) G(a, b) = (psi * W[b]).value() / (Phi[b] * W[b]).value();
  }
  out.m = G.inverse().transpose();
  out.m *= static_cast<double>(nu(l));
  return out;
}

Block BasicData::compute_S(int p) const {
  Block out;
  for (int m : P_.labels())
    if (B_.has(p, m, m)) out.cols.push_back(m);
  out.rows = out.cols;
  const int d = static_cast<int>(out.cols.size());
  out.m = Mat::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    int m = out.cols[a];
    Mat Km = irrep_action(m, P_).K;
    for (int b = 0; b < d; ++b) {
      int n = out.rows[b];
      Mat Kn = irrep_action(n, P_).K;
      Mat E = kron(B_.beta(m, m, p), eye(n)) * kron(eye(m), B_.inclusion(n, p, n));
      Mat RR = B_.rmat(n, m) * B_.rmat(m, n);
      Mat K2 = kron(Km * Km, Kn * Kn);
      out.m(b, a) = (K2 * E * RR).trace() / P_.X;
    }
  }
  return out;
}

}  // namespace cetqft
