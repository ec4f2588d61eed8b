#include <doctest.h>

#include "cetqft/basicdata.hpp"
#include "oracles.hpp"

using namespace cetqft;
using std::numbers::pi;

using oracle::theta;
using oracle::trig_S;

TEST_CASE("K and scalar moves") {
  BasicData B(5);
  CHECK(B.move_K(1) == 1);
  CHECK(B.move_K(2) == -1);
  CHECK(B.move_K(3) == 1);
  for (int m = 1; m < 5; ++m) CHECK(B.move_K(m) * B.move_K(m) == 1);

  BasicData B3(3);
  CHECK(std::abs(B3.scalar_C() - std::polar(1.0, pi / 4)) < 1e-14);
  CHECK(B3.weight_S(1) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(B3.weight_S(2) == doctest::Approx(1 / std::sqrt(2.0)));
  for (int r = 3; r <= 8; ++r) {
    BasicData D(r);
    CHECK(std::abs(std::abs(D.scalar_C()) - 1.0) < 1e-14);
    CHECK(std::abs(D.scalar_C() - std::polar(1.0, 3 * pi * (r - 2) / (4.0 * r))) < 1e-14);
  }
}

TEST_CASE("twists and half twists") {
  for (int r = 3; r <= 6; ++r) {
    BasicData B(r);
    for (auto& [key, b] : B.fusion().all()) {
      auto [p, m, n] = key;
      CHECK(std::abs(std::abs(B.move_T1(p, m, n)) - 1.0) < 1e-12);
      CHECK(std::abs(B.move_T1(p, m, n) - std::conj(theta(p, r))) < 1e-12);
      // B23^2 = T1 T2^{-1} T3^{-1}
      cplx b2 = B.move_B23(p, n, m) * B.move_B23(p, m, n);
      cplx want = std::conj(theta(p, r)) * theta(m, r) * theta(n, r);
      CHECK(std::abs(b2 - want) < 1e-10);
    }
  }
}

TEST_CASE("R cycles with period three") {
  for (int r = 3; r <= 7; ++r) {
    BasicData B(r);
    for (auto& [key, b] : B.fusion().all()) {
      auto [p, m, n] = key;
      cplx c = B.move_R(p, m, n) * B.move_R(n, p, m) * B.move_R(m, n, p);
      CHECK(std::abs(c - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("pairing sign law under R") {
  for (int r = 3; r <= 7; ++r) {
    BasicData B(r);
    for (auto& [key, b] : B.fusion().all()) {
      auto [p, m, n] = key;
      // <Rβ_p^{mn}, β_n^{mp}> = (-1)^{m-1} <β_p^{mn}, Rβ_n^{mp}>
      cplx lhs = B.move_R(p, m, n) * B.pairing(n, p, m);
      cplx rhs = double(nu(m)) * B.move_R(n, m, p) * B.pairing(p, m, n);
      CHECK(std::abs(lhs - rhs) < 1e-9);
      CHECK(std::abs(B.pairing(p, m, n) - B.pairing(p, n, m)) < 1e-9);
    }
  }
}

TEST_CASE("F against the unit") {
  for (int r = 3; r <= 7; ++r) {
    BasicData B(r);
    for (auto& [key, b] : B.fusion().all()) {
      auto [p, m, n] = key;
      // F(β_p^{mn} ⊗ β_p^{p1}) = β_m^{1m} ⊗ β_m^{np}
      const Block& F = B.move_F(m, n, p, 1);
      REQUIRE(F.cols.size() == 1);
      CHECK(std::abs(F.at(m, p) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("F and S blocks are unitary and invertible") {
  for (int r = 3; r <= 6; ++r) {
    BasicData B(r);
    for (int m = 1; m < r; ++m)
      for (int n = 1; n < r; ++n)
        for (int k = 1; k < r; ++k)
          for (int l = 1; l < r; ++l) {
            const Block& F = B.move_F(m, n, k, l);
            if (F.empty()) continue;
            REQUIRE(F.rows.size() == F.cols.size());
            CHECK(max_abs(F.m.adjoint() * F.m - eye(F.m.rows())) < 1e-9);
            Block Fi = B.move_F_inverse(m, n, k, l);
            CHECK(max_abs(Fi.m * F.m - eye(F.m.rows())) < 1e-9);
          }
    for (int p = 1; p < r; ++p) {
      const Block& S = B.move_S(p);
      if (S.empty()) continue;
      CHECK(max_abs(S.m.adjoint() * S.m - eye(S.m.rows())) < 1e-9);
    }
  }
}

TEST_CASE("torus S against the trigonometric oracle") {
  for (int r = 3; r <= 8; ++r) {
    BasicData B(r);
    Mat S = B.torus_S();
    REQUIRE(S.rows() == r - 1);
    for (int a = 1; a < r; ++a) {
      CHECK(std::abs(S(0, a - 1) - q_int(a, B.params()) / B.params().X) < 1e-9);
      CHECK(std::abs(S(0, a - 1) - trig_S(1, a, r)) < 1e-9);
      for (int b = 1; b < r; ++b) CHECK(std::abs(std::abs(S(a - 1, b - 1)) - std::abs(trig_S(a, b, r))) < 1e-9);
    }
    CHECK(max_abs(S.adjoint() * S - eye(r - 1)) < 1e-9);
    CHECK(max_abs(S - S.transpose()) < 1e-9);
  }
}
