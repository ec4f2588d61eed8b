#pragma once
#include "cetqft/surface.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cetqft {

using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;  // row-major

// Q^{2g} with basis a_1..a_g, b_1..b_g and ω(a_i, b_j) = δ_ij.
struct SymplecticSpace {
  int g = 0;
  int dim() const { return 2 * g; }
  Q omega(const QVec& x, const QVec& y) const;
};

struct Lagrangian {
  std::vector<QVec> span;
};

int rank(QMat m);
// Basis of {v : m v = 0}.
std::vector<QVec> nullspace(const QMat& m);
// Signature of a symmetric rational matrix (exact congruence diagonalization).
int signature(QMat m);

bool is_lagrangian(const SymplecticSpace& V, const Lagrangian& L);

// Signature of ψ(x, x') = ω(x, c') on L1 ∩ (L2 + L3), x' = b' + c'.
int wall_sigma(const SymplecticSpace& V, const Lagrangian& L1, const Lagrangian& L2, const Lagrangian& L3);

struct DecompositionHomology {
  SymplecticSpace space;
  std::vector<QVec> circle_class;  // by circle id of circle_index()
  Lagrangian L;
};
// Boundary circles are treated as capped by disks.
DecompositionHomology lagrangian_of_decomposition(const CeSurface& s);

// Torus DB-structures up to the band data: decomposition curve γ and dual δ in H1(T²).
struct TorusFrame {
  QVec gamma{Q(1), Q(0)}, delta{Q(0), Q(1)};
  bool operator==(const TorusFrame& o) const { return gamma == o.gamma && delta == o.delta; }
};

// Torus generator word: S, T, C, each optionally with ' or ^k; rightmost acts first.
struct TorusGen {
  char gen;
  int power;
};
std::vector<TorusGen> parse_torus_word(const std::string& w);
std::string format_torus_word(const std::vector<TorusGen>& w);
TorusFrame apply_torus_gen(const TorusFrame& f, char gen, int sign);
TorusFrame apply_torus_word(const TorusFrame& f, const std::string& w);
// H1 action of one generator, as a matrix in frame coordinates.
QMat torus_gen_matrix(char gen, int sign);

// A ce-morphism of the torus given by a move word from `source`, plus framing.
struct TorusMorphism {
  std::string word;
  long n = 0;
  TorusFrame source;
  TorusFrame target() const { return apply_torus_word(source, word); }
};

struct FramingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (f2,n2)(f1,n1) = (f2 f1, n2 + n1 - σ(L1, L2, L3)).
TorusMorphism compose_morphisms(const TorusMorphism& phi2, const TorusMorphism& phi1);
// Framing of the composite of the word's elementary moves, each (id, 0).
long word_framing(const std::string& w, const TorusFrame& source = {});
// Framing of a manifold of framing n glued through the mapping cylinder of phi.
long glue_framing(long n, const TorusMorphism& phi);

}  // namespace cetqft
