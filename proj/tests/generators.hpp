#pragma once
// Random inputs shared by the framing tests and the acceptance runner.
#include "cetqft/framing.hpp"

#include <random>
#include <string>

namespace gen {

using namespace cetqft;

// x -> x + λ ω(v, x) v
inline void transvect(const SymplecticSpace& V, std::vector<QVec>& span, const QVec& v, const Q& lam) {
  for (auto& x : span) {
    Q c = lam * V.omega(v, x);
    for (int i = 0; i < V.dim(); ++i) x[i] += c * v[i];
  }
}

inline QVec random_vec(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<int> d(-2, 2);
  QVec v(dim);
  for (auto& x : v) x = d(rng);
  return v;
}

// Image of a coordinate Lagrangian under a few random transvections.
inline Lagrangian random_lagrangian(std::mt19937& rng, const SymplecticSpace& V) {
  Lagrangian L;
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < V.g; ++i) {
    QVec e(V.dim(), Q(0));
    e[coin(rng) ? i : V.g + i] = 1;
    L.span.push_back(e);
  }
  int k = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int t = 0; t < k; ++t) {
    Q lam(std::uniform_int_distribution<int>(-2, 2)(rng), std::uniform_int_distribution<int>(1, 3)(rng));
    lam.canonicalize();
    transvect(V, L.span, random_vec(rng, V.dim()), lam);
  }
  return L;
}

// Lagrangian through the first vector u of L: transvections along w with
// ω(w, u) = 0 fix u.
inline Lagrangian near(std::mt19937& rng, const SymplecticSpace& V, const Lagrangian& L) {
  Lagrangian out = L;
  const QVec& u = L.span[0];
  for (int t = 0, done = 0; t < 50 && done < 3; ++t) {
    QVec w = random_vec(rng, V.dim());
    if (V.omega(w, u) != 0) continue;
    transvect(V, out.span, w, Q(1));
    ++done;
  }
  return out;
}

// Random torus word in S, T, C with powers in [-2, 2], possibly empty.
inline std::string random_word(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 4), gen(0, 2), pw(-2, 2);
  std::string w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int p = pw(rng);
    if (p == 0) p = 1;
    w += std::string(1, "STC"[gen(rng)]) + "^(" + std::to_string(p) + ")";
  }
  return w;
}

}  // namespace gen
