#pragma once
#include "cetqft/basicdata.hpp"

#include <string>

namespace cetqft {

// One generator of a move word, e.g. K1^(1), B23', F^(12), P13, A^(12)_2.
struct Move {
  char gen = 0;      // K T B R F S P C A D
  int slot = 0;      // subscript (K, T, A, D); 0 = not given
  int i = 1, j = 2;  // superscript pieces (1-based); P uses i, j from its subscript
  bool inverse = false;
  std::string text;
};

std::vector<Move> parse_word(const std::string& w);

// Pieces of a decomposed surface. A piece is the list of its circle ids by
// slot; 1, 2, 3 entries for disk, annulus, pants. Removed pieces are empty.
struct Skeleton {
  std::vector<std::vector<int>> pieces;
  std::vector<int> alias;
  int ncircles = 0;

  static Skeleton from(std::vector<std::vector<int>> pieces);
  int resolve(int j) const;
  std::vector<int> boundary() const;
  std::vector<int> internal() const;
  std::vector<std::vector<int>> compact() const;
};

using Labeling = std::vector<int>;
using StateVec = std::map<Labeling, cplx>;

struct WordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class WordEngine {
 public:
  explicit WordEngine(const BasicData& B, bool signs_on = true) : B_(B), signs_(signs_on) {}

  // Rightmost generator acts first.
  Skeleton apply(const std::vector<Move>& w, Skeleton s, StateVec& v) const;
  Skeleton apply_move(const Move& mv, const Skeleton& s, StateVec& v) const;
  bool admissible(const Skeleton& s, const Labeling& lab) const;
  std::vector<Labeling> labelings(const Skeleton& s) const;
  const BasicData& data() const { return B_; }

 private:
  const BasicData& B_;
  bool signs_;
};

// Max over boundary labelings of the spectral norm of V(lhs) - V(rhs),
// after identifying the two resulting decompositions slot by slot.
struct Comparison {
  double residual = 0.0;
  long labelings = 0;
  Labeling worst;  // input labeling with the largest column defect
};
Comparison compare_words(const WordEngine& E, const Skeleton& s, const std::string& lhs, const std::string& rhs);

// <x, y> between V(dual σ) and V(σ) in β coordinates.
cplx surface_pairing(const BasicData& B, const Skeleton& s, const Labeling& lab);
Skeleton dual_skeleton(const Skeleton& s);
// max |<V(h)x, V(g)y> - <x,y>| / |<x,x'>| over basis vectors.
Comparison duality_defect(const WordEngine& E, const Skeleton& s, const std::string& g, const std::string& h);

struct RelationReport {
  std::string id;
  int r = 0;
  double residual = 0.0;
  bool pass = false;
  long labelings = 0;
  bool uses_K = false;
  Labeling worst;
};

const std::vector<std::string>& relation_ids();
RelationReport verify(const std::string& id, const BasicData& B, bool signs_on = true, double tol = 1e-8);
std::vector<RelationReport> verify_all(const BasicData& B, bool signs_on = true, double tol = 1e-8);

}  // namespace cetqft
