#include <doctest.h>

#include "cetqft/msverify.hpp"
#include "oracles.hpp"

#include <random>

using namespace cetqft;
using oracle::hom_space;

namespace {

// Multiplicity of p as a direct summand of m⊗n: rank of the composition
// pairing Hom(m⊗n, p) × Hom(p, m⊗n) -> End(p) = C.
int summand_multiplicity(int p, int m, int n, const Params& P) {
  Action mn = tensor_action({m, n}, P), pp = irrep_action(p, P);
  Mat down = hom_space(mn, pp), up = hom_space(pp, mn);
  if (down.cols() == 0 || up.cols() == 0) return 0;
  Mat G(down.cols(), up.cols());
  for (int i = 0; i < down.cols(); ++i)
    for (int j = 0; j < up.cols(); ++j) {
      Mat A = down.col(i).reshaped(p, m * n), C = up.col(j).reshaped(m * n, p);
      G(i, j) = (A * C).trace();
    }
  Eigen::JacobiSVD<Mat> svd(G);
  int rk = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i) rk += svd.singularValues()(i) > 1e-8;
  return rk;
}

std::vector<int> range(std::initializer_list<int> v) { return v; }

}  // namespace

TEST_CASE("fusion range examples") {
  CHECK(fusion_range(2, 2, Params(5)) == range({1, 3}));
  CHECK(fusion_range(2, 3, Params(5)) == range({2, 4}));
  CHECK(fusion_range(2, 2, Params(4)) == range({1, 3}));
  for (int r = 3; r <= 8; ++r) {
    Params P(r);
    for (int m = 1; m < r; ++m)
      for (int n = 1; n < r; ++n)
        for (int p : fusion_range(m, n, P)) CHECK((m + n + p) % 2 == 1);
  }
}

TEST_CASE("multiplicity oracle agrees with the fusion range") {
  for (int r = 3; r <= 8; ++r) {
    Params P(r);
    for (int m = 1; m < r; ++m)
      for (int n = m; n < r; ++n)
        for (int p = 1; p < r; ++p) {
          int want = admissible(p, m, n, P) ? 1 : 0;
          CHECK_MESSAGE(summand_multiplicity(p, m, n, P) == want, "r=" << r << " (p,m,n)=" << p << m << n);
        }
  }
}

TEST_CASE("good decomposition") {
  {
    Params P(5);
    for (int n = 1; n < 5; ++n) {
      auto d = good_decomposition(1, n, P);
      REQUIRE(d.parts.size() == 1);
      CHECK(d.parts[0].p == n);
      CHECK(max_abs(d.parts[0].incl * d.parts[0].proj - eye(n)) < 1e-10);
    }
  }
  {
    Params P(4);
    auto d = good_decomposition(2, 2, P);
    REQUIRE(d.parts.size() == 2);
    Eigen::JacobiSVD<Mat> bad(d.bad_projector);
    CHECK(bad.singularValues().size() == 4);
    CHECK(bad.singularValues().maxCoeff() < 1e-9);
    CHECK(d.parts[0].p == 1);
    CHECK(d.parts[1].p == 3);
  }
  {
    Params P(4);
    auto d = good_decomposition(3, 3, P);
    Mat Pb = d.bad_projector;
    Eigen::ColPivHouseholderQR<Mat> qr(Pb);
    qr.setThreshold(1e-9);
    int good = 0;
    for (auto& s : d.parts) good += s.p;
    CHECK(good + qr.rank() == 9);
    // every intertwiner of the bad part has vanishing quantum trace
    Action A = tensor_action({3, 3}, P);
    Mat comm = hom_space(A, A);
    Mat K2 = A.K * A.K;
    for (int c = 0; c < comm.cols(); ++c) {
      Mat alpha = comm.col(c).reshaped(9, 9);
      CHECK(std::abs((K2 * Pb * alpha * Pb).trace()) < 1e-9);
    }
  }
  for (int r = 3; r <= 6; ++r) {
    Params P(r);
    for (int m = 1; m < r; ++m)
      for (int n = 1; n < r; ++n) {
        auto d = good_decomposition(m, n, P);
        Mat sum = d.bad_projector;
        for (auto& s : d.parts) {
          sum += s.incl * s.proj;
          for (auto& t : d.parts) {
            Mat want = s.p == t.p ? eye(s.p) : Mat::Zero(s.p, t.p);
            CHECK(max_abs(s.proj * t.incl - want) < 1e-9);
          }
        }
        CHECK(max_abs(sum - eye(m * n)) < 1e-9);
      }
  }
}

TEST_CASE("psi and special betas") {
  for (int r = 3; r <= 8; ++r) {
    Params P(r);
    FusionBasis B(P);
    for (int k = 1; k < r; ++k) {
      // ψ_k(e_j⊗e_{-j}) = qbinom(2m, m-j) (it)^{2j} / sqrt([2m+1])
      Mat want = Mat::Zero(1, k * k);
      for (int j2 : Irrep(k).weights2()) {
        int e = j2;
        cplx it = std::pow(cplx(0, 1), ((e % 4) + 4) % 4) * P.tpow(e);
        want(0, Irrep(k).index(j2) * k + Irrep(k).index(-j2)) =
            1.0 / std::sqrt(q_int(k, P)) * q_binomial(k - 1, (k - 1 - j2) / 2, P) * it;
      }
      CHECK(max_abs(psi(k, P) - want) < 1e-10);
      CHECK(max_abs(B.beta(1, k, k) - psi(k, P)) < 1e-10);
      CHECK(max_abs(B.beta(k, 1, k) - eye(k)) < 1e-12);
      CHECK(max_abs(B.beta(k, k, 1) - eye(k)) < 1e-12);
      auto T = tensor_action({k, k}, P);
      CHECK(max_abs(psi(k, P) * T.X) < 1e-9);
      CHECK(max_abs(psi(k, P) * T.Y) < 1e-9);
    }
  }
  Params P(5);
  Mat p2 = psi(2, P);
  cplx it = cplx(0, 1) * P.t;
  CHECK(std::abs(p2(0, 2) - it / std::sqrt(q_int(2, P))) < 1e-12);
}

TEST_CASE("beta is an intertwiner with unit trace norm") {
  for (int r = 3; r <= 8; ++r) {
    Params P(r);
    FusionBasis B(P);
    for (auto& [key, b] : B.all()) {
      auto [p, m, n] = key;
      CHECK(admissible(p, m, n, P));
      auto in = tensor_action({m, n}, P);
      auto out = irrep_action(p, P);
      CHECK(max_abs(b * in.X - out.X * b) < 1e-9);
      CHECK(max_abs(b * in.K - out.K * b) < 1e-9);
      CHECK(std::abs(trace_pairing(b, b, p, m, n, P) - 1.0) < 1e-9);
    }
    CHECK_THROWS(B.beta(2, 2, 2));
  }
}

TEST_CASE("R orbits are gauge coherent") {
  for (int r = 3; r <= 7; ++r) {
    FusionBasis B{Params(r)};
    for (auto& [key, b] : B.all()) {
      auto [p, m, n] = key;
      REQUIRE(B.has(n, p, m));
      CHECK(max_abs(B.rotate(b, p, m, n) - B.beta(n, p, m)) < 1e-9);
    }
  }
}

TEST_CASE("trace pairing") {
  Params P(6);
  FusionBasis B(P);
  std::mt19937 rng(3);
  std::normal_distribution<double> g;
  for (auto& [key, b] : B.all()) {
    auto [p, m, n] = key;
    cplx c1(g(rng), g(rng)), c2(g(rng), g(rng));
    Mat x = c1 * b, y = c2 * b;
    cplx xy = trace_pairing(x, y, p, m, n, P), yx = trace_pairing(y, x, p, m, n, P);
    CHECK(std::abs(xy - std::conj(yx)) < 1e-9);
    CHECK(trace_pairing(x, x, p, m, n, P).real() > 0);
    CHECK(std::abs(trace_pairing(Mat(2.0 * x), y, p, m, n, P) - 2.0 * xy) < 1e-9);
  }
}

TEST_CASE("duality map and dual pairing") {
  for (int r = 3; r <= 7; ++r) {
    Params P(r);
    FusionBasis B(P);
    const double X = P.X;
    for (auto& [key, b] : B.all()) {
      auto [p, m, n] = key;
      Mat pb = psi_dual(B, b, p, m, n);
      cplx c = proportionality(pb, B.beta(p, n, m));
      CHECK(std::abs(c) > 1e-6);
      Mat a = B.beta(p, m, n), bb = B.beta(p, n, m);
      cplx lhs = dual_pairing(B, a, bb, p, m, n);
      cplx rhs = X * X / std::sqrt(q_int(m, P) * q_int(n, P) * q_int(p, P)) *
                 trace_pairing(a, psi_dual(B, bb, p, n, m), p, m, n, P);
      CHECK(std::abs(lhs - rhs) < 1e-9);
      CHECK(std::abs(dual_pairing(B, a, bb, p, m, n) - dual_pairing(B, bb, a, p, n, m)) < 1e-9);
    }
  }
}

TEST_CASE("pairings of disks and annuli") {
  for (int r = 3; r <= 7; ++r) {
    BasicData D(r);
    const Params& P = D.params();
    CHECK(std::abs(surface_pairing(D, Skeleton::from({{0}}), {1}) - 1.0) < 1e-12);
    for (int m = 1; m < r; ++m)
      CHECK(std::abs(surface_pairing(D, Skeleton::from({{0, 1}}), {m, m}) - P.X / q_int(m, P)) < 1e-9);
  }
}
