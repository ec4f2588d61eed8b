#pragma once
#include "cetqft/msverify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cetqft {

// Klein four-group {e,a,b,c} as two bits: a=01, b=10, c=11.
enum class Klein : unsigned char { e = 0, a = 1, b = 2, c = 3 };

inline Klein operator*(Klein x, Klein y) {
  return static_cast<Klein>(static_cast<unsigned>(x) ^ static_cast<unsigned>(y));
}
inline bool is_ec(Klein x) { return x == Klein::e || x == Klein::c; }
// ū = u for e, c and cu for a, b
inline Klein slide_bar(Klein u) { return is_ec(u) ? u : u * Klein::c; }
char klein_char(Klein x);
Klein klein_from(char ch);

enum class PieceKind { Disk = 1, Annulus = 2, Pants = 3 };

struct ElementaryPiece {
  PieceKind kind = PieceKind::Pants;
  std::string name;
  std::vector<Klein> bands;  // by slot, size = kind

  int slots() const { return static_cast<int>(kind); }
};

struct SlotRef {
  int piece = 0;  // 0-based
  int slot = 1;   // 1-based
  auto operator<=>(const SlotRef&) const = default;
};

struct CeSurface {
  std::vector<ElementaryPiece> pieces;
  std::vector<std::pair<SlotRef, SlotRef>> circles;  // first < second

  std::optional<SlotRef> partner(SlotRef s) const;
  std::vector<SlotRef> boundary_slots() const;
  bool operator==(const CeSurface&) const;
};

struct SurfaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> validate(const CeSurface& s);
// '+' or '-'
char boundary_type(const CeSurface& s, SlotRef slot);
CeSurface normalize(const CeSurface& s);
bool equivalent(const CeSurface& x, const CeSurface& y);

// Acts on the DB-structure only; pieces are addressed by the superscripts.
CeSurface apply_move(const CeSurface& s, const Move& mv);
CeSurface apply_word(const CeSurface& s, const std::string& word);
std::optional<std::string> find_move(const CeSurface& from, const CeSurface& to);

CeSurface disjoint_union(const CeSurface& x, const CeSurface& y);
CeSurface glue(const CeSurface& s, SlotRef c1, SlotRef c2);
CeSurface dual(const CeSurface& s);

// Circle ids: internal circles first (in order), then boundary slots in order.
struct CircleIndex {
  std::vector<std::vector<int>> pieces;  // circle id per slot
  std::vector<int> boundary;             // circle ids of boundary slots
  std::vector<SlotRef> boundary_slots;
  int ncircles = 0;
};
CircleIndex circle_index(const CeSurface& s);
Skeleton skeleton_of(const CeSurface& s);

// boundary labels follow boundary_slots() order
long dim_V(const CeSurface& s, const std::vector<int>& boundary_labels, int r);

// Text DSL
CeSurface parse_surface(const std::string& text);
std::string serialize_surface(const CeSurface& s);

// Standard surfaces used by tests and the CLI.
CeSurface make_disk();
CeSurface make_torus();
CeSurface make_one_holed_torus();
CeSurface make_closed_genus2();

}  // namespace cetqft

#include <random>

namespace cetqft {

// Valid surface with 1..max_pieces pieces and random gluings and bands.
CeSurface random_surface(std::mt19937& rng, int max_pieces);
// Elementary moves (K, T, B23, R, R', F, F', S, P, C) applicable to s.
std::vector<std::string> applicable_moves(const CeSurface& s);

}  // namespace cetqft
