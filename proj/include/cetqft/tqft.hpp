#pragma once
#include "cetqft/framing.hpp"
#include "cetqft/msverify.hpp"

namespace cetqft {

// V(σ, l) → V(σ', l) in β coordinates; columns are the source labelings.
struct BlockMatrix {
  std::vector<Labeling> rows, cols;
  Mat m;
};

// Coordinates keyed by (boundary labels, source internal labels, target
// internal labels); absent keys are zero.
struct PartitionVector {
  int nb = 0, nsrc = 0, ntgt = 0;
  std::map<Labeling, cplx> coords;
  long framing = 0;
};

struct ClosedInvariant {
  cplx value;
  long word_framing = 0;  // framing of the composed moves, cancelled in value
  long framing = 0;       // framing of the presented manifold
};

class Tqft {
 public:
  explicit Tqft(const BasicData& B) : B_(B), E_(B) {}

  const BasicData& data() const { return B_; }

  // boundary labels in the order of s.boundary()
  BlockMatrix V_of_word(const std::string& word, const Skeleton& s, const std::vector<int>& boundary_labels,
                        long framing = 0) const;
  // Closed torus words in S, T, C (cf. parse_torus_word), indexed by the
  // label of the decomposition circle.
  Mat torus_operator(const std::string& word) const;
  // Genus-1 Heegaard gluing of two solid tori through the word, presented
  // with framing m.
  ClosedInvariant invariant_closed(const std::string& torus_word, long m = 0) const;

  PartitionVector Z_mapping_cylinder(const std::string& word, const Skeleton& s, long framing = 0) const;
  // Merge boundary circles i and j (positions among the boundary labels).
  PartitionVector Z_glue_circles(const PartitionVector& z, int i, int j) const;
  // Glue I2 on top of I1 along their common surface.
  PartitionVector Z_compose(const PartitionVector& z2, const PartitionVector& z1, long sigma = 0) const;

 private:
  const BasicData& B_;
  WordEngine E_;
};

std::string torus_to_move_word(const std::string& torus_word);

}  // namespace cetqft
