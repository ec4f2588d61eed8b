#include "cetqft/surface.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace cetqft {

char klein_char(Klein x) { return "eabc"[static_cast<int>(x)]; }

Klein klein_from(char ch) {
  switch (ch) {
    case 'e': return Klein::e;
    case 'a': return Klein::a;
    case 'b': return Klein::b;
    case 'c': return Klein::c;
  }
  throw SurfaceError(std::string("bad band index '") + ch + "'");
}

std::optional<SlotRef> CeSurface::partner(SlotRef s) const {
  for (auto& [x, y] : circles) {
    if (x == s) return y;
    if (y == s) return x;
  }
  return std::nullopt;
}

std::vector<SlotRef> CeSurface::boundary_slots() const {
  std::set<SlotRef> used;
  for (auto& [x, y] : circles) used.insert(x), used.insert(y);
  std::vector<SlotRef> out;
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i)
    for (int k = 1; k <= pieces[i].slots(); ++k)
      if (!used.count({i, k})) out.push_back({i, k});
  return out;
}

bool CeSurface::operator==(const CeSurface& o) const {
  if (pieces.size() != o.pieces.size()) return false;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (pieces[i].kind != o.pieces[i].kind || pieces[i].bands != o.pieces[i].bands) return false;
  auto norm = [](std::vector<std::pair<SlotRef, SlotRef>> c) {
    for (auto& [x, y] : c)
      if (y < x) std::swap(x, y);
    std::sort(c.begin(), c.end());
    return c;
  };
  return norm(circles) == norm(o.circles);
}

namespace {

Klein& band(CeSurface& s, SlotRef r) { return s.pieces[r.piece].bands[r.slot - 1]; }
Klein band(const CeSurface& s, SlotRef r) { return s.pieces[r.piece].bands[r.slot - 1]; }

// Product of the two bands must be a or b iff both or neither slot numbers are 1.
bool circle_ok(int n1, Klein u, int n2, Klein v) {
  bool same = (n1 == 1) == (n2 == 1);
  return same ? !is_ec(u * v) : is_ec(u * v);
}

std::string slot_name(const CeSurface& s, SlotRef r) {
  const auto& p = s.pieces[r.piece];
  std::string nm = p.name.empty() ? "#" + std::to_string(r.piece + 1) : p.name;
  return nm + "." + std::to_string(r.slot);
}

void check_structure(const CeSurface& s) {
  std::set<SlotRef> used;
  for (auto& p : s.pieces)
    if (static_cast<int>(p.bands.size()) != p.slots()) throw SurfaceError("band count does not match piece kind");
  for (auto& [x, y] : s.circles) {
    for (auto r : {x, y}) {
      if (r.piece < 0 || r.piece >= static_cast<int>(s.pieces.size()) || r.slot < 1 ||
          r.slot > s.pieces[r.piece].slots())
        throw SurfaceError("circle refers to a missing slot");
      if (!used.insert(r).second) throw SurfaceError("slot " + slot_name(s, r) + " is glued twice");
    }
  }
}

}  // namespace

std::vector<std::string> validate(const CeSurface& s) {
  std::vector<std::string> out;
  try {
    check_structure(s);
  } catch (const SurfaceError& e) {
    out.push_back(e.what());
    return out;
  }
  for (auto& [x, y] : s.circles) {
    Klein u = band(s, x), v = band(s, y);
    if (!circle_ok(x.slot, u, y.slot, v)) {
      std::ostringstream os;
      os << "band rule violated on circle " << slot_name(s, x) << " ~ " << slot_name(s, y) << " (bands "
         << klein_char(u) << ", " << klein_char(v) << ", product " << klein_char(u * v) << ")";
      out.push_back(os.str());
    }
  }
  return out;
}

char boundary_type(const CeSurface& s, SlotRef slot) {
  if (s.partner(slot)) throw std::domain_error("slot " + slot_name(s, slot) + " is not a boundary slot");
  Klein u = band(s, slot);
  bool plus = slot.slot == 1 ? is_ec(u) : !is_ec(u);
  return plus ? '+' : '-';
}

namespace {

using Bits = std::vector<unsigned char>;

std::vector<std::pair<SlotRef, SlotRef>> sorted_circles(const CeSurface& s) {
  auto c = s.circles;
  for (auto& [x, y] : c)
    if (y < x) std::swap(x, y);
  std::sort(c.begin(), c.end());
  return c;
}

// Class coordinates: for each circle the high bit of ū·v, for each boundary
// slot the high bit of its band. The low bit (parity) is fixed by validity
// and by the boundary type.
struct Coords {
  Bits bits;
  Bits parity;
};

Coords coords_of(const CeSurface& s) {
  Coords c;
  auto push = [&](Klein w) {
    unsigned x = static_cast<unsigned>(w);
    c.bits.push_back((x >> 1) & 1);
    c.parity.push_back(((x >> 1) ^ x) & 1);
  };
  for (auto& [x, y] : sorted_circles(s)) push(slide_bar(band(s, x)) * band(s, y));
  for (auto r : s.boundary_slots()) push(band(s, r));
  return c;
}

// Identification 2 on a single piece flips every coordinate it touches once.
std::vector<Bits> flip_vectors(const CeSurface& s) {
  auto circ = sorted_circles(s);
  auto bnd = s.boundary_slots();
  std::vector<Bits> out;
  for (int i = 0; i < static_cast<int>(s.pieces.size()); ++i) {
    Bits v;
    for (auto& [x, y] : circ) v.push_back((x.piece == i) != (y.piece == i));
    for (auto r : bnd) v.push_back(r.piece == i);
    out.push_back(v);
  }
  return out;
}

std::vector<Bits> rref(std::vector<Bits> rows) {
  std::vector<Bits> basis;
  if (rows.empty()) return basis;
  std::size_t n = rows[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < rows.size(); ++col) {
    std::size_t piv = row;
    while (piv < rows.size() && !rows[piv][col]) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[row], rows[piv]);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != row && rows[k][col])
        for (std::size_t j = 0; j < n; ++j) rows[k][j] ^= rows[row][j];
    ++row;
  }
  rows.resize(row);
  return rows;
}

Bits reduce(Bits x, const std::vector<Bits>& basis) {
  for (auto& b : basis) {
    std::size_t piv = std::find(b.begin(), b.end(), 1) - b.begin();
    if (x[piv])
      for (std::size_t j = 0; j < x.size(); ++j) x[j] ^= b[j];
  }
  return x;
}

Klein from_bits(unsigned char hi, unsigned char parity) {
  return static_cast<Klein>((hi << 1) | (hi ^ parity));
}

}  // namespace

CeSurface normalize(const CeSurface& s) {
  auto v = validate(s);
  if (!v.empty()) throw SurfaceError("normalize: invalid surface: " + v.front());
  Coords c = coords_of(s);
  Bits red = reduce(c.bits, rref(flip_vectors(s)));
  CeSurface out = s;
  out.circles = sorted_circles(s);
  std::size_t k = 0;
  for (auto& [x, y] : out.circles) {
    band(out, x) = Klein::e;
    band(out, y) = from_bits(red[k], c.parity[k]);
    ++k;
  }
  for (auto r : s.boundary_slots()) {
    band(out, r) = from_bits(red[k], c.parity[k]);
    ++k;
  }
  for (auto& p : out.pieces) p.name.clear();
  return out;
}

bool equivalent(const CeSurface& x, const CeSurface& y) { return normalize(x) == normalize(y); }

namespace {

// Moves slot contents (band and gluing) according to `to`, old -> new slot.
void rewire(CeSurface& s, const std::map<SlotRef, SlotRef>& to) {
  CeSurface old = s;
  for (auto [from, dst] : to) band(s, dst) = band(old, from);
  auto m = [&](SlotRef r) {
    auto it = to.find(r);
    return it == to.end() ? r : it->second;
  };
  for (auto& [x, y] : s.circles) x = m(x), y = m(y);
}

ElementaryPiece& pants_at(CeSurface& s, int i1, const char* what) {
  if (i1 < 1 || i1 > static_cast<int>(s.pieces.size())) throw SurfaceError(std::string(what) + ": piece out of range");
  auto& p = s.pieces[i1 - 1];
  if (p.kind != PieceKind::Pants) throw SurfaceError(std::string(what) + " needs a pair of pants");
  return p;
}

void erase_piece(CeSurface& s, int idx) {
  s.pieces.erase(s.pieces.begin() + idx);
  for (auto& [x, y] : s.circles) {
    if (x.piece > idx) --x.piece;
    if (y.piece > idx) --y.piece;
  }
}

// Drop slot `slot` of piece `idx`; renumbered slots crossing the 1 / non-1
// divide are multiplied by a, which keeps circle rules and boundary types.
void drop_slot(CeSurface& s, int idx, int slot) {
  auto& p = s.pieces[idx];
  int n = p.slots();
  std::map<SlotRef, SlotRef> to;
  std::vector<Klein> nb;
  for (int k = 1; k <= n; ++k) {
    if (k == slot) continue;
    int nk = static_cast<int>(nb.size()) + 1;
    Klein u = p.bands[k - 1];
    if ((k == 1) != (nk == 1)) u = u * Klein::a;
    nb.push_back(u);
    to[{idx, k}] = {idx, nk};
  }
  p.kind = static_cast<PieceKind>(n - 1);
  for (auto& [x, y] : s.circles) {
    if (auto it = to.find(x); it != to.end()) x = it->second;
    if (auto it = to.find(y); it != to.end()) y = it->second;
  }
  p.bands = nb;
}

}  // namespace

CeSurface apply_move(const CeSurface& s0, const Move& mv) {
  CeSurface s = s0;
  auto piece = [&](int i1) -> ElementaryPiece& {
    if (i1 < 1 || i1 > static_cast<int>(s.pieces.size())) throw SurfaceError("piece out of range");
    return s.pieces[i1 - 1];
  };
  const int i = mv.i - 1;
  switch (mv.gen) {
    case 'K': {
      auto& p = piece(mv.i);
      if (mv.slot < 1 || mv.slot > p.slots()) throw SurfaceError("K: slot out of range");
      p.bands[mv.slot - 1] = p.bands[mv.slot - 1] * Klein::c;
      break;
    }
    case 'T':
      if (mv.slot < 1 || mv.slot > piece(mv.i).slots()) throw SurfaceError("T: slot out of range");
      break;
    case 'C':
      break;
    case 'B':
      pants_at(s, mv.i, "B23");
      rewire(s, {{{i, 2}, {i, 3}}, {{i, 3}, {i, 2}}});
      break;
    case 'R': {
      auto& p = pants_at(s, mv.i, "R");
      if (!mv.inverse) {
        rewire(s, {{{i, 3}, {i, 1}}, {{i, 1}, {i, 2}}, {{i, 2}, {i, 3}}});
        p.bands[0] = p.bands[0] * Klein::a;
        p.bands[1] = p.bands[1] * Klein::b;
      } else {
        rewire(s, {{{i, 2}, {i, 1}}, {{i, 3}, {i, 2}}, {{i, 1}, {i, 3}}});
        p.bands[2] = p.bands[2] * Klein::a;
        p.bands[0] = p.bands[0] * Klein::b;
      }
      break;
    }
    case 'P': {
      int a = mv.i - 1, b = mv.j - 1;
      piece(mv.i), piece(mv.j);
      std::swap(s.pieces[a], s.pieces[b]);
      for (auto& [x, y] : s.circles)
        for (auto* r : {&x, &y}) {
          if (r->piece == a) r->piece = b;
          else if (r->piece == b) r->piece = a;
        }
      break;
    }
    case 'F': {
      pants_at(s, mv.i, "F");
      pants_at(s, mv.j, "F");
      int j = mv.j - 1;
      auto pr = s.partner({i, 1});
      if (!pr || *pr != SlotRef{j, 1}) throw SurfaceError("F needs two pants glued along slot 1");
      if (!is_ec(band(s, {i, 1}))) throw SurfaceError("F: arrows on the shared circle point the wrong way");
      if (!mv.inverse)
        rewire(s, {{{j, 3}, {i, 2}}, {{i, 2}, {i, 3}}, {{i, 3}, {j, 2}}, {{j, 2}, {j, 3}}});
      else
        rewire(s, {{{i, 3}, {i, 2}}, {{j, 2}, {i, 3}}, {{j, 3}, {j, 2}}, {{i, 2}, {j, 3}}});
      break;
    }
    case 'S': {
      pants_at(s, mv.i, "S");
      auto pr = s.partner({i, 2});
      if (!pr || *pr != SlotRef{i, 3}) throw SurfaceError("S needs slots 2 and 3 glued together");
      if (!is_ec(band(s, {i, 2}))) throw SurfaceError("S: arrows point the wrong way");
      break;
    }
    case 'D': {
      int j = mv.j - 1;
      int slot = mv.slot ? mv.slot : 1;
      auto& disk = piece(mv.j);
      if (disk.kind != PieceKind::Disk) throw SurfaceError("D needs a disk");
      if (slot > piece(mv.i).slots()) throw SurfaceError("D: slot out of range");
      auto pr = s.partner({i, slot});
      if (!pr || *pr != SlotRef{j, 1}) throw SurfaceError("D: disk is not glued to that slot");
      if (piece(mv.i).kind == PieceKind::Disk) throw SurfaceError("D: cannot remove the last slot");
      s.circles.erase(std::find_if(s.circles.begin(), s.circles.end(), [&](auto& c) {
        return c.first == SlotRef{i, slot} || c.second == SlotRef{i, slot};
      }));
      drop_slot(s, i, slot);
      erase_piece(s, j);
      break;
    }
    case 'A': {
      int j = mv.j - 1;
      piece(mv.i), piece(mv.j);
      int ann = s.pieces[j].kind == PieceKind::Annulus ? j : (s.pieces[i].kind == PieceKind::Annulus ? i : -1);
      if (ann < 0) throw SurfaceError("A needs an annulus");
      int other = ann == j ? i : j;
      std::optional<std::pair<SlotRef, SlotRef>> link;
      for (auto& [x, y] : s.circles) {
        std::pair<SlotRef, SlotRef> c{x, y};
        if (c.second.piece == other) std::swap(c.first, c.second);
        if (c.first.piece != other || c.second.piece != ann) continue;
        if (mv.slot && ann == j && c.first.slot != mv.slot) continue;
        link = c;
        break;
      }
      if (!link) throw SurfaceError("A: pieces are not adjacent");
      auto [os, as] = *link;
      SlotRef far{ann, 3 - as.slot};
      Klein u = band(s, far);
      if ((far.slot == 1) != (os.slot == 1)) u = u * Klein::a;
      auto far_partner = s.partner(far);
      s.circles.erase(std::find_if(s.circles.begin(), s.circles.end(), [&](auto& c) {
        return (c.first == os && c.second == as) || (c.first == as && c.second == os);
      }));
      if (far_partner) {
        if (*far_partner == os) throw SurfaceError("A: annulus glued to itself through one piece");
        for (auto& [x, y] : s.circles) {
          if (x == far) x = os;
          if (y == far) y = os;
        }
      }
      band(s, os) = u;
      erase_piece(s, ann);
      break;
    }
    default:
      throw SurfaceError(std::string("unknown move ") + mv.gen);
  }
  return s;
}

CeSurface apply_word(const CeSurface& s, const std::string& word) {
  auto w = parse_word(word);
  CeSurface out = s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = apply_move(out, *it);
  return out;
}

std::optional<std::string> find_move(const CeSurface& from, const CeSurface& to) {
  if (from.pieces.size() != to.pieces.size() || sorted_circles(from) != sorted_circles(to)) return std::nullopt;
  for (std::size_t i = 0; i < from.pieces.size(); ++i)
    if (from.pieces[i].kind != to.pieces[i].kind) return std::nullopt;
  for (auto r : from.boundary_slots())
    if (boundary_type(from, r) != boundary_type(to, r)) return std::nullopt;
  if (!validate(from).empty() || !validate(to).empty()) return std::nullopt;
  Coords a = coords_of(from), b = coords_of(to);
  Bits diff(a.bits.size());
  for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = a.bits[k] ^ b.bits[k];
  auto flips = flip_vectors(from);
  auto basis = rref(flips);
  // least-weight representative of diff modulo the piece flips
  Bits best = reduce(diff, basis);
  if (basis.size() <= 16) {
    auto weight = [](const Bits& x) { return std::count(x.begin(), x.end(), 1); };
    for (unsigned mask = 0; mask < (1u << basis.size()); ++mask) {
      Bits x = diff;
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (mask >> k & 1)
          for (std::size_t j = 0; j < x.size(); ++j) x[j] ^= basis[k][j];
      if (weight(x) < weight(best) || (weight(x) == weight(best) && x < best)) best = x;
    }
  }
  auto circ = sorted_circles(from);
  auto bnd = from.boundary_slots();
  std::string word;
  for (std::size_t k = 0; k < best.size(); ++k) {
    if (!best[k]) continue;
    SlotRef r = k < circ.size() ? circ[k].second : bnd[k - circ.size()];
    word += "K" + std::to_string(r.slot) + "^(" + std::to_string(r.piece + 1) + ")";
  }
  return word;
}

CeSurface disjoint_union(const CeSurface& x, const CeSurface& y) {
  CeSurface out = x;
  int off = static_cast<int>(x.pieces.size());
  out.pieces.insert(out.pieces.end(), y.pieces.begin(), y.pieces.end());
  for (auto [a, b] : y.circles) {
    a.piece += off;
    b.piece += off;
    out.circles.push_back({a, b});
  }
  return out;
}

CeSurface glue(const CeSurface& s, SlotRef c1, SlotRef c2) {
  if (c1 == c2) throw SurfaceError("cannot glue a slot to itself");
  char t1 = boundary_type(s, c1), t2 = boundary_type(s, c2);
  if (t1 == t2)
    throw SurfaceError("gluing needs opposite types: " + slot_name(s, c1) + " is " + t1 + ", " + slot_name(s, c2) +
                       " is " + t2);
  CeSurface out = s;
  out.circles.push_back(c1 < c2 ? std::pair{c1, c2} : std::pair{c2, c1});
  return out;
}

CeSurface dual(const CeSurface& s) {
  CeSurface out = s;
  for (auto r : s.boundary_slots())
    band(out, r) = band(s, r) * (boundary_type(s, r) == '+' ? Klein::a : Klein::b);
  for (int i = 0; i < static_cast<int>(out.pieces.size()); ++i)
    if (out.pieces[i].kind == PieceKind::Pants) rewire(out, {{{i, 2}, {i, 3}}, {{i, 3}, {i, 2}}});
  return out;
}

CircleIndex circle_index(const CeSurface& s) {
  CircleIndex ci;
  for (auto& p : s.pieces) ci.pieces.emplace_back(p.slots(), -1);
  for (auto& [x, y] : s.circles) {
    ci.pieces[x.piece][x.slot - 1] = ci.ncircles;
    ci.pieces[y.piece][y.slot - 1] = ci.ncircles;
    ++ci.ncircles;
  }
  ci.boundary_slots = s.boundary_slots();
  for (auto r : ci.boundary_slots) {
    ci.pieces[r.piece][r.slot - 1] = ci.ncircles;
    ci.boundary.push_back(ci.ncircles++);
  }
  return ci;
}

Skeleton skeleton_of(const CeSurface& s) {
  auto ci = circle_index(s);
  Skeleton sk = Skeleton::from(ci.pieces);
  sk.ncircles = ci.ncircles;
  return sk;
}

long dim_V(const CeSurface& s, const std::vector<int>& boundary_labels, int r) {
  auto ci = circle_index(s);
  if (boundary_labels.size() != ci.boundary.size()) throw std::invalid_argument("dim_V: wrong number of boundary labels");
  Params P(r);
  std::vector<int> lab(ci.ncircles, 0);
  for (std::size_t k = 0; k < ci.boundary.size(); ++k) {
    int m = boundary_labels[k];
    if (m < 1 || m >= r) throw std::invalid_argument("dim_V: label out of range");
    lab[ci.boundary[k]] = m;
  }
  auto ok = [&](const std::vector<int>& p) {
    for (int c : p)
      if (!lab[c]) return true;
    if (p.size() == 1) return lab[p[0]] == 1;
    if (p.size() == 2) return lab[p[0]] == lab[p[1]];
    return admissible(lab[p[0]], lab[p[1]], lab[p[2]], P);
  };
  const int ninternal = static_cast<int>(s.circles.size());
  long count = 0;
  std::function<void(int)> rec = [&](int c) {
    for (auto& p : ci.pieces)
      if (!ok(p)) return;
    if (c == ninternal) {
      ++count;
      return;
    }
    for (int m = 1; m < r; ++m) {
      lab[c] = m;
      rec(c + 1);
    }
    lab[c] = 0;
  };
  rec(0);
  return count;
}

namespace {

struct ParseError : SurfaceError {
  ParseError(int line, int col, const std::string& msg)
      : SurfaceError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg) {}
};

}  // namespace

CeSurface parse_surface(const std::string& text) {
  static const std::regex piece_re(R"(^\s*(disk|annulus|pants)\s+([A-Za-z_][A-Za-z0-9_]*)\s+slots\(([^)]*)\)\s*$)");
  static const std::regex slot_re(R"(^\s*([123])\s*:\s*([eabc])\s*$)");
  static const std::regex circle_re(
      R"(^\s*circle\s+([A-Za-z_][A-Za-z0-9_]*)\.([123])\s*~\s*([A-Za-z_][A-Za-z0-9_]*)\.([123])\s*$)");
  CeSurface s;
  std::map<std::string, int> names;
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    int col = static_cast<int>(line.find_first_not_of(" \t")) + 1;
    std::smatch m;
    if (std::regex_match(line, m, piece_re)) {
      ElementaryPiece p;
      std::string kind = m[1];
      p.kind = kind == "disk" ? PieceKind::Disk : kind == "annulus" ? PieceKind::Annulus : PieceKind::Pants;
      p.name = m[2];
      if (names.count(p.name)) throw ParseError(ln, static_cast<int>(m.position(2)) + 1, "duplicate piece name " + p.name);
      std::string body = m[3];
      std::vector<Klein> bands(p.slots(), Klein::e);
      std::vector<bool> seen(p.slots(), false);
      std::size_t pos = 0;
      int items = 0;
      while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int icol = static_cast<int>(m.position(3) + pos) + 1;
        std::smatch sm;
        if (!std::regex_match(item, sm, slot_re)) throw ParseError(ln, icol, "expected slot:band, got '" + item + "'");
        int k = std::stoi(sm[1]);
        if (k > p.slots()) throw ParseError(ln, icol, "slot " + std::to_string(k) + " out of range for " + kind);
        if (seen[k - 1]) throw ParseError(ln, icol, "slot " + std::to_string(k) + " given twice");
        seen[k - 1] = true;
        bands[k - 1] = klein_from(sm[2].str()[0]);
        ++items;
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      if (items != p.slots()) throw ParseError(ln, static_cast<int>(m.position(3)) + 1, "every slot needs a band");
      p.bands = bands;
      names[p.name] = static_cast<int>(s.pieces.size());
      s.pieces.push_back(p);
    } else if (std::regex_match(line, m, circle_re)) {
      SlotRef ends[2];
      for (int e = 0; e < 2; ++e) {
        std::string nm = m[1 + 2 * e];
        auto it = names.find(nm);
        if (it == names.end()) throw ParseError(ln, static_cast<int>(m.position(1 + 2 * e)) + 1, "unknown piece " + nm);
        int k = std::stoi(m[2 + 2 * e]);
        if (k > s.pieces[it->second].slots())
          throw ParseError(ln, static_cast<int>(m.position(2 + 2 * e)) + 1, "slot out of range for " + nm);
        ends[e] = {it->second, k};
      }
      s.circles.push_back({ends[0], ends[1]});
    } else {
      throw ParseError(ln, col, "expected 'disk|annulus|pants NAME slots(...)' or 'circle A.i ~ B.j'");
    }
  }
  auto v = validate(s);
  if (!v.empty()) throw SurfaceError(v.front());
  return s;
}

std::string serialize_surface(const CeSurface& s) {
  std::ostringstream os;
  auto name = [&](int i) { return s.pieces[i].name.empty() ? "P" + std::to_string(i + 1) : s.pieces[i].name; };
  for (int i = 0; i < static_cast<int>(s.pieces.size()); ++i) {
    auto& p = s.pieces[i];
    os << (p.kind == PieceKind::Disk ? "disk" : p.kind == PieceKind::Annulus ? "annulus" : "pants") << ' ' << name(i)
       << " slots(";
    for (int k = 1; k <= p.slots(); ++k) os << (k > 1 ? "," : "") << k << ':' << klein_char(p.bands[k - 1]);
    os << ")\n";
  }
  for (auto& [x, y] : s.circles)
    os << "circle " << name(x.piece) << '.' << x.slot << " ~ " << name(y.piece) << '.' << y.slot << '\n';
  return os.str();
}

CeSurface make_disk() {
  CeSurface s;
  s.pieces.push_back({PieceKind::Disk, "D1", {Klein::e}});
  return s;
}

CeSurface make_torus() {
  CeSurface s;
  s.pieces.push_back({PieceKind::Annulus, "A1", {Klein::e, Klein::e}});
  s.circles.push_back({{0, 1}, {0, 2}});
  return s;
}

CeSurface make_one_holed_torus() {
  CeSurface s;
  s.pieces.push_back({PieceKind::Pants, "P1", {Klein::e, Klein::e, Klein::a}});
  s.circles.push_back({{0, 2}, {0, 3}});
  return s;
}

CeSurface make_closed_genus2() {
  CeSurface s;
  s.pieces.push_back({PieceKind::Pants, "P1", {Klein::e, Klein::e, Klein::a}});
  s.pieces.push_back({PieceKind::Pants, "P2", {Klein::a, Klein::e, Klein::a}});
  s.circles.push_back({{0, 1}, {1, 1}});
  s.circles.push_back({{0, 2}, {0, 3}});
  s.circles.push_back({{1, 2}, {1, 3}});
  return s;
}

}  // namespace cetqft

namespace cetqft {

CeSurface random_surface(std::mt19937& rng, int max_pieces) {
  std::uniform_int_distribution<int> npieces(1, std::max(1, max_pieces)), kind(1, 3), four(0, 3), coin(0, 1);
  CeSurface s;
  int n = npieces(rng);
  for (int i = 0; i < n; ++i) {
    ElementaryPiece p;
    p.kind = static_cast<PieceKind>(kind(rng));
    p.name = "P" + std::to_string(i + 1);
    for (int k = 0; k < p.slots(); ++k) p.bands.push_back(static_cast<Klein>(four(rng)));
    s.pieces.push_back(p);
  }
  auto free = s.boundary_slots();
  std::shuffle(free.begin(), free.end(), rng);
  std::uniform_int_distribution<int> ngl(0, static_cast<int>(free.size()) / 2);
  int glue_count = ngl(rng);
  for (int g = 0; g < glue_count; ++g) {
    SlotRef x = free[2 * g], y = free[2 * g + 1];
    if (y < x) std::swap(x, y);
    // pick v in the coset required by the circle rule
    Klein u = band(s, x);
    bool same = (x.slot == 1) == (y.slot == 1);
    Klein prod = same ? (coin(rng) ? Klein::a : Klein::b) : (coin(rng) ? Klein::e : Klein::c);
    band(s, y) = u * prod;
    s.circles.push_back({x, y});
  }
  return s;
}

std::vector<std::string> applicable_moves(const CeSurface& s) {
  std::vector<std::string> out{"C"};
  const int n = static_cast<int>(s.pieces.size());
  auto sup = [](int i) { return "^(" + std::to_string(i + 1) + ")"; };
  for (int i = 0; i < n; ++i) {
    const auto& p = s.pieces[i];
    for (int k = 1; k <= p.slots(); ++k) {
      out.push_back("K" + std::to_string(k) + sup(i));
      out.push_back("T" + std::to_string(k) + sup(i));
    }
    if (p.kind != PieceKind::Pants) continue;
    out.push_back("B23" + sup(i));
    out.push_back("R" + sup(i));
    out.push_back("R" + sup(i) + "'");
    if (s.partner({i, 2}) == SlotRef{i, 3} && is_ec(p.bands[1])) out.push_back("S" + sup(i));
    if (auto q = s.partner({i, 1}); q && q->slot == 1 && q->piece != i && s.pieces[q->piece].kind == PieceKind::Pants &&
                                    is_ec(p.bands[0])) {
      std::string ij = "^(" + std::to_string(i + 1) + std::to_string(q->piece + 1) + ")";
      if (i < 9 && q->piece < 9) {
        out.push_back("F" + ij);
        out.push_back("F" + ij + "'");
      }
    }
  }
  for (int i = 0; i < n && i < 9; ++i)
    for (int j = i + 1; j < n && j < 9; ++j) out.push_back("P" + std::to_string(i + 1) + std::to_string(j + 1));
  return out;
}

}  // namespace cetqft
