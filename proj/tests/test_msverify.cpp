#include <doctest.h>

#include "cetqft/msverify.hpp"
#include "oracles.hpp"

#include <chrono>
#include <random>

using namespace cetqft;

TEST_CASE("move word parsing") {
  auto w = parse_word("K1^(1)P13R^(2)'F^(12)A^(12)_2D_3^(13)B23'C");
  REQUIRE(w.size() == 8);
  CHECK(w[0].gen == 'K');
  CHECK(w[0].slot == 1);
  CHECK(w[0].i == 1);
  CHECK(w[1].gen == 'P');
  CHECK(w[1].i == 1);
  CHECK(w[1].j == 3);
  CHECK(w[2].gen == 'R');
  CHECK(w[2].i == 2);
  CHECK(w[2].inverse);
  CHECK(w[3].gen == 'F');
  CHECK(w[3].i == 1);
  CHECK(w[3].j == 2);
  CHECK(w[4].gen == 'A');
  CHECK(w[4].slot == 2);
  CHECK(w[5].gen == 'D');
  CHECK(w[5].slot == 3);
  CHECK(w[5].i == 1);
  CHECK(w[5].j == 3);
  CHECK(w[6].gen == 'B');
  CHECK(w[6].inverse);
  CHECK(w[7].gen == 'C');
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(parse_word("B12"), WordError);
  CHECK_THROWS_AS(parse_word("K"), WordError);
  CHECK_THROWS_AS(parse_word("Q1"), WordError);
}

TEST_CASE("relation examples") {
  BasicData B4(4), B5(5);
  auto r1c = verify("1c", B4);
  CHECK(r1c.pass);
  CHECK(r1c.residual < 1e-9);
  CHECK(verify("3a", B5).pass);
  auto off = verify("3a", B4, false);
  CHECK_FALSE(off.pass);
  CHECK(off.residual >= 0.5);
  bool even = false;
  for (int l : off.worst) even = even || (l % 2 == 0);
  CHECK(even);
  CHECK_THROWS_AS(verify("7z", B4), std::invalid_argument);
}

TEST_CASE("Moore-Seiberg suite for r = 3..8") {
  auto t0 = std::chrono::steady_clock::now();
  for (int r = 3; r <= 8; ++r) {
    BasicData B(r);
    auto reps = verify_all(B);
    REQUIRE(reps.size() == relation_ids().size());
    for (auto& rep : reps) {
      CAPTURE(r);
      CAPTURE(rep.id);
      CHECK(rep.pass);
      CHECK(rep.residual < 1e-8);
      CHECK(rep.labelings > 0);
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 60.0);
}

TEST_CASE("r = 3 gives one passing report per relation id") {
  auto reps = verify_all(BasicData(3));
  CHECK(reps.size() == 19);
  for (std::size_t i = 0; i < reps.size(); ++i) CHECK(reps[i].id == relation_ids()[i]);
}

TEST_CASE("sign ablation") {
  for (int r = 4; r <= 6; ++r) {
    BasicData B(r);
    auto reps = verify_all(B, false);
    int failures = 0;
    for (auto& rep : reps) {
      CAPTURE(r);
      CAPTURE(rep.id);
      if (!rep.pass) {
        ++failures;
        CHECK(rep.uses_K);
      }
      if (!rep.uses_K) CHECK(rep.pass);
    }
    CHECK(failures > 0);
  }
}

TEST_CASE("contraction of a cycle of intertwiners") {
  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  int nonzero = 0;
  for (int r = 4; r <= 5; ++r) {
    Params P(r);
    FusionBasis B(P);
    std::uniform_int_distribution<int> lab(1, r - 1);
    for (int N = 1; N <= 3; ++N)
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<std::pair<int, int>> mn(N);
        for (auto& x : mn) x = {lab(rng), lab(rng)};
        // F_i : m_i⊗n_i -> m_{i+1}⊗n_{i+1}
        std::vector<Mat> F;
        for (int i = 0; i < N; ++i) {
          auto [m, n] = mn[i];
          auto [m2, n2] = mn[(i + 1) % N];
          Mat H = oracle::hom_space(tensor_action({m, n}, P), tensor_action({m2, n2}, P));
          Mat f = Mat::Zero(m2 * n2, m * n);
          for (int c = 0; c < H.cols(); ++c) f += cplx(g(rng), g(rng)) * H.col(c).reshaped(m2 * n2, m * n);
          F.push_back(f);
        }
        auto [m1, n1] = mn[0];
        Mat E = eye(m1 * n1);
        for (auto& f : F) E = f * E;
        Mat K = tensor_action({m1, n1}, P).K;
        cplx lhs = (K * K * E).trace();
        cplx rhs = 0.0;
        for (int q = 1; q < r; ++q) {
          cplx prod = double(q_int(q, P));
          bool ok = true;
          for (int i = 0; i < N && ok; ++i) {
            auto [m, n] = mn[i];
            auto [m2, n2] = mn[(i + 1) % N];
            if (!B.has(q, m, n) || !B.has(q, m2, n2)) {
              ok = false;
              break;
            }
            Mat c = B.beta(q, m2, n2) * F[i] * B.inclusion(q, m, n);
            prod *= proportionality(c, eye(q));
          }
          if (ok) rhs += prod;
        }
        CAPTURE(N);
        CHECK(std::abs(lhs - rhs) < 1e-8 * std::max(1.0, std::abs(lhs)));
        nonzero += std::abs(lhs) > 1e-3;
      }
  }
  CHECK(nonzero >= 12);
}

TEST_CASE("word engine basics") {
  BasicData B(4);
  WordEngine E(B);
  Skeleton s = Skeleton::from({{0, 1, 2}});
  CHECK(E.labelings(s).size() == 10);
  for (auto& lab : E.labelings(s)) CHECK(E.admissible(s, lab));
  // empty word is the identity; a word and its inverse cancel
  CHECK(compare_words(E, s, "", "").residual == 0.0);
  CHECK(compare_words(E, s, "RB23T2R'", "RT3B23R'").residual < 1e-12);
  CHECK(compare_words(E, s, "B23B23'", "").residual < 1e-12);
  CHECK(compare_words(E, s, "T1", "").residual > 0.1);
  Skeleton torus = Skeleton::from({{0, 1, 1}});
  CHECK(compare_words(E, torus, "SS'", "").residual < 1e-12);
  CHECK_THROWS_AS(compare_words(E, s, "S", ""), WordError);
}
