#include "cetqft/msverify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <regex>
#include <set>

namespace cetqft {

std::vector<Move> parse_word(const std::string& w) {
  static const std::regex tok(R"(\s*([KTBRFSPCAD])(\d*)(?:_(\d+))?(?:\^\((\d+)\))?(?:_(\d+))?('?)\s*)");
  std::vector<Move> out;
  auto begin = w.cbegin();
  std::smatch m;
  while (begin != w.cend()) {
    if (!std::regex_search(begin, w.cend(), m, tok, std::regex_constants::match_continuous))
      throw WordError("cannot parse move word at '" + std::string(begin, w.cend()) + "'");
    Move mv;
    mv.gen = m[1].str()[0];
    std::string sub = m[2].str();
    std::string sub2 = m[3].matched ? m[3].str() : (m[5].matched ? m[5].str() : "");
    std::string sup = m[4].str();
    mv.inverse = m[6].matched && !m[6].str().empty();
    mv.text = m[0].str();
    switch (mv.gen) {
      case 'B':
        if (sub != "23") throw WordError("braid generator must be B23");
        break;
      case 'P':
        if (sub.size() != 2) throw WordError("permutation needs two piece indices");
        mv.i = sub[0] - '0';
        mv.j = sub[1] - '0';
        break;
      case 'K':
      case 'T':
        if (sub.size() != 1) throw WordError(std::string(1, mv.gen) + " needs a slot subscript");
        mv.slot = sub[0] - '0';
        break;
      default:
        if (!sub.empty()) mv.slot = std::stoi(sub);
    }
    if (!sub2.empty()) mv.slot = std::stoi(sub2);
    if (!sup.empty()) {
      mv.i = sup[0] - '0';
      if (sup.size() > 1) mv.j = sup[1] - '0';
    } else if (mv.gen != 'P') {
      mv.i = 1;
      mv.j = 2;
    }
    out.push_back(mv);
    begin = m[0].second;
  }
  return out;
}

Skeleton Skeleton::from(std::vector<std::vector<int>> pieces) {
  Skeleton s;
  s.pieces = std::move(pieces);
  for (std::size_t i = 0; i < s.pieces.size(); ++i) s.alias.push_back(static_cast<int>(i));
  for (auto& p : s.pieces)
    for (int c : p) s.ncircles = std::max(s.ncircles, c + 1);
  return s;
}

int Skeleton::resolve(int j) const {
  while (alias[j] != j) j = alias[j];
  return j;
}

std::vector<int> Skeleton::boundary() const {
  std::map<int, int> cnt;
  for (auto& p : pieces)
    for (int c : p) ++cnt[c];
  std::vector<int> out;
  for (auto [c, n] : cnt)
    if (n == 1) out.push_back(c);
  return out;
}

std::vector<int> Skeleton::internal() const {
  std::map<int, int> cnt;
  for (auto& p : pieces)
    for (int c : p) ++cnt[c];
  std::vector<int> out;
  for (auto [c, n] : cnt)
    if (n == 2) out.push_back(c);
  return out;
}

std::vector<std::vector<int>> Skeleton::compact() const {
  std::vector<std::vector<int>> out;
  for (auto& p : pieces)
    if (!p.empty()) out.push_back(p);
  return out;
}

bool WordEngine::admissible(const Skeleton& s, const Labeling& lab) const {
  const auto& F = B_.fusion();
  for (auto& p : s.pieces) {
    if (p.size() == 3 && !F.has(lab[p[0]], lab[p[1]], lab[p[2]])) return false;
    if (p.size() == 2 && lab[p[0]] != lab[p[1]]) return false;
    if (p.size() == 1 && lab[p[0]] != 1) return false;
  }
  return true;
}

std::vector<Labeling> WordEngine::labelings(const Skeleton& s) const {
  std::set<int> used;
  for (auto& p : s.pieces)
    for (int c : p) used.insert(c);
  std::vector<int> circles(used.begin(), used.end());
  std::vector<Labeling> out;
  Labeling lab(s.ncircles, 0);
  const int r = B_.r();
  const auto& F = B_.fusion();
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    for (auto& p : s.pieces) {
      bool full = std::all_of(p.begin(), p.end(), [&](int c) { return lab[c] != 0; });
      if (!full || p.empty()) continue;
      if (p.size() == 3 && !F.has(lab[p[0]], lab[p[1]], lab[p[2]])) return;
      if (p.size() == 2 && lab[p[0]] != lab[p[1]]) return;
      if (p.size() == 1 && lab[p[0]] != 1) return;
    }
    if (i == circles.size()) {
      out.push_back(lab);
      return;
    }
    for (int k = 1; k < r; ++k) {
      lab[circles[i]] = k;
      rec(i + 1);
    }
    lab[circles[i]] = 0;
  };
  rec(0);
  return out;
}

namespace {

void scale(StateVec& v, const std::function<cplx(const Labeling&)>& f) {
  for (auto& [lab, c] : v) c *= f(lab);
}

std::vector<int>& piece_at(Skeleton& s, int j1) {
  if (j1 < 1 || j1 > static_cast<int>(s.pieces.size())) throw WordError("piece index out of range");
  auto& p = s.pieces[s.resolve(j1 - 1)];
  if (p.empty()) throw WordError("piece was removed");
  return p;
}

}  // namespace

Skeleton WordEngine::apply_move(const Move& mv, const Skeleton& s0, StateVec& v) const {
  Skeleton s = s0;
  const auto& B = B_;
  switch (mv.gen) {
    case 'K': {
      auto& p = piece_at(s, mv.i);
      if (mv.slot < 1 || mv.slot > static_cast<int>(p.size())) throw WordError("K slot out of range");
      int c = p[mv.slot - 1];
      if (signs_) scale(v, [&](const Labeling& l) { return cplx(nu(l[c])); });
      break;
    }
    case 'T': {
      auto& p = piece_at(s, mv.i);
      if (mv.slot < 1 || mv.slot > static_cast<int>(p.size())) throw WordError("T slot out of range");
      int c = p[mv.slot - 1];
      scale(v, [&](const Labeling& l) { return mv.inverse ? B.theta(l[c]) : B.twist(l[c]); });
      break;
    }
    case 'C':
      scale(v, [&](const Labeling&) { return mv.inverse ? std::conj(B.scalar_C()) : B.scalar_C(); });
      break;
    case 'B': {
      auto& p = piece_at(s, mv.i);
      if (p.size() != 3) throw WordError("B23 needs a pair of pants");
      std::vector<int> q = p;
      scale(v, [&](const Labeling& l) {
        int a = l[q[0]], b = l[q[1]], c = l[q[2]];
        return mv.inverse ? 1.0 / B.move_B23(a, c, b) : B.move_B23(a, b, c);
      });
      std::swap(p[1], p[2]);
      break;
    }
    case 'R': {
      auto& p = piece_at(s, mv.i);
      if (p.size() != 3) throw WordError("R needs a pair of pants");
      std::vector<int> q = p;
      scale(v, [&](const Labeling& l) {
        int a = l[q[0]], b = l[q[1]], c = l[q[2]];
        return mv.inverse ? 1.0 / B.move_R(b, c, a) : B.move_R(a, b, c);
      });
      p = mv.inverse ? std::vector<int>{q[1], q[2], q[0]} : std::vector<int>{q[2], q[0], q[1]};
      break;
    }
    case 'P': {
      int a = s.resolve(mv.i - 1), b = s.resolve(mv.j - 1);
      std::swap(s.pieces[a], s.pieces[b]);
      break;
    }
    case 'F': {
      auto& pa = piece_at(s, mv.i);
      auto& pb = piece_at(s, mv.j);
      if (pa.size() != 3 || pb.size() != 3 || pa[0] != pb[0]) throw WordError("F needs two pants glued along slot 1");
      int c = pa[0];
      std::vector<int> a = pa, b = pb;
      StateVec out;
      for (auto& [lab, x] : v) {
        int m, n, k, l;
        Block blk;
        if (!mv.inverse) {
          m = lab[a[1]], n = lab[a[2]], k = lab[b[1]], l = lab[b[2]];
          blk = B.move_F(m, n, k, l);
        } else {
          l = lab[a[1]], m = lab[a[2]], n = lab[b[1]], k = lab[b[2]];
          blk = B.move_F_inverse(m, n, k, l);
        }
        int col = blk.col_index(lab[c]);
        for (std::size_t rI = 0; rI < blk.rows.size(); ++rI) {
          Labeling l2 = lab;
          l2[c] = blk.rows[rI];
          out[l2] += x * blk.m(rI, col);
        }
      }
      v = std::move(out);
      if (!mv.inverse) {
        pa = {c, b[2], a[1]};
        pb = {c, a[2], b[1]};
      } else {
        pa = {c, a[2], b[1]};
        pb = {c, b[2], a[1]};
      }
      break;
    }
    case 'S': {
      auto& p = piece_at(s, mv.i);
      if (p.size() != 3 || p[1] != p[2]) throw WordError("S needs a pants with slots 2 and 3 glued");
      int c = p[1], e = p[0];
      StateVec out;
      for (auto& [lab, x] : v) {
        const Block& blk = B.move_S(lab[e]);
        Mat M = mv.inverse ? Mat(blk.m.inverse()) : blk.m;
        int col = blk.col_index(lab[c]);
        for (std::size_t rI = 0; rI < blk.rows.size(); ++rI) {
          Labeling l2 = lab;
          l2[c] = blk.rows[rI];
          out[l2] += x * M(rI, col);
        }
      }
      v = std::move(out);
      break;
    }
    case 'D': {
      int si = mv.slot ? mv.slot : 1;
      int ia = s.resolve(mv.i - 1), ib = s.resolve(mv.j - 1);
      auto& pa = s.pieces[ia];
      auto& pb = s.pieces[ib];
      if (pb.size() != 1 || si > static_cast<int>(pa.size()) || pa[si - 1] != pb[0])
        throw WordError("D needs a disk glued to the given slot");
      pa.erase(pa.begin() + si - 1);
      pb.clear();
      s.alias[ib] = ia;
      break;
    }
    case 'A': {
      int ia = s.resolve(mv.i - 1), ib = s.resolve(mv.j - 1);
      auto& pa = s.pieces[ia];
      auto& pb = s.pieces[ib];
      int c = -1;
      if (mv.slot) {
        if (mv.slot > static_cast<int>(pa.size())) throw WordError("A slot out of range");
        c = pa[mv.slot - 1];
      } else {
        for (int x : pa)
          if (std::find(pb.begin(), pb.end(), x) != pb.end()) c = x;
      }
      if (c < 0 || std::find(pb.begin(), pb.end(), c) == pb.end()) throw WordError("A needs adjacent pieces");
      auto other = [c](const std::vector<int>& ann) { return ann[0] == c ? ann[1] : ann[0]; };
      if (pb.size() == 2) {
        *std::find(pa.begin(), pa.end(), c) = other(pb);
        pb.clear();
        s.alias[ib] = ia;
      } else if (pa.size() == 2) {
        *std::find(pb.begin(), pb.end(), c) = other(pa);
        pa.clear();
        s.alias[ia] = ib;
      } else {
        throw WordError("A needs an annulus");
      }
      break;
    }
    default:
      throw WordError("unknown generator");
  }
  StateVec cleaned;
  for (auto& [lab, x] : v) {
    Labeling l2 = lab;
    std::vector<bool> live(s.ncircles, false);
    for (auto& p : s.pieces)
      for (int c : p) live[c] = true;
    for (int c = 0; c < s.ncircles; ++c)
      if (!live[c]) l2[c] = 0;
    cleaned[l2] += x;
  }
  v = std::move(cleaned);
  return s;
}

Skeleton WordEngine::apply(const std::vector<Move>& w, Skeleton s, StateVec& v) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) s = apply_move(*it, s, v);
  return s;
}

namespace {

// Map circle ids of `from` onto `to` slot by slot; empty optional if shapes differ.
std::optional<std::vector<int>> circle_map(const Skeleton& from, const Skeleton& to) {
  auto a = from.compact(), b = to.compact();
  if (a.size() != b.size()) return std::nullopt;
  std::vector<int> mp(from.ncircles, -1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return std::nullopt;
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      int x = a[i][k], y = b[i][k];
      if (mp[x] >= 0 && mp[x] != y) return std::nullopt;
      mp[x] = y;
    }
  }
  return mp;
}

StateVec rename(const StateVec& v, const std::vector<int>& mp, int n) {
  StateVec out;
  for (auto& [lab, x] : v) {
    Labeling l2(n, 0);
    for (std::size_t c = 0; c < lab.size(); ++c)
      if (lab[c] && mp[c] >= 0) l2[mp[c]] = lab[c];
    out[l2] += x;
  }
  return out;
}

double spectral_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

}  // namespace

Comparison compare_words(const WordEngine& E, const Skeleton& s, const std::string& lhs, const std::string& rhs) {
  auto wl = parse_word(lhs), wr = parse_word(rhs);
  auto bnd = s.boundary();
  std::map<std::vector<int>, std::vector<Labeling>> groups;
  for (auto& lab : E.labelings(s)) {
    std::vector<int> key;
    for (int c : bnd) key.push_back(lab[c]);
    groups[key].push_back(lab);
  }
  Comparison res;
  std::optional<std::vector<int>> mp;
  int n2 = 0;
  for (auto& [key, labs] : groups) {
    std::vector<StateVec> L, R;
    std::set<Labeling> rowset;
    for (auto& lab : labs) {
      StateVec a{{lab, 1.0}}, b{{lab, 1.0}};
      Skeleton sa = E.apply(wl, s, a);
      Skeleton sb = E.apply(wr, s, b);
      if (!mp) {
        mp = circle_map(sa, sb);
        if (!mp) throw WordError("the two sides end on different decompositions");
        n2 = sb.ncircles;
      }
      a = rename(a, *mp, n2);
      L.push_back(a);
      R.push_back(b);
      for (auto& [l, x] : a) rowset.insert(l);
      for (auto& [l, x] : b) rowset.insert(l);
      ++res.labelings;
    }
    std::vector<Labeling> rows(rowset.begin(), rowset.end());
    Mat D = Mat::Zero(rows.size(), labs.size());
    for (std::size_t j = 0; j < labs.size(); ++j) {
      for (auto& [l, x] : L[j]) D(std::lower_bound(rows.begin(), rows.end(), l) - rows.begin(), j) += x;
      for (auto& [l, x] : R[j]) D(std::lower_bound(rows.begin(), rows.end(), l) - rows.begin(), j) -= x;
    }
    double sn = spectral_norm(D);
    if (sn > res.residual || res.worst.empty()) {
      Eigen::Index j = 0;
      D.colwise().norm().maxCoeff(&j);
      res.worst = labs[j];
    }
    res.residual = std::max(res.residual, sn);
  }
  return res;
}

Skeleton dual_skeleton(const Skeleton& s) {
  Skeleton d = s;
  for (auto& p : d.pieces)
    if (p.size() == 3) std::swap(p[1], p[2]);
  return d;
}

cplx surface_pairing(const BasicData& B, const Skeleton& s, const Labeling& lab) {
  cplx v = 1.0;
  for (auto& p : s.pieces) {
    if (p.size() == 3) {
      v *= B.pairing(lab[p[0]], lab[p[1]], lab[p[2]]);
      if (p[1] == p[2]) v *= nu(lab[p[1]]);
    } else if (p.size() == 2) {
      v /= B.weight_S(lab[p[0]]);
    }
  }
  for (int c : s.internal()) v *= B.weight_S(lab[c]);
  return v;
}

Comparison duality_defect(const WordEngine& E, const Skeleton& s, const std::string& g, const std::string& h) {
  auto wg = parse_word(g), wh = parse_word(h);
  Skeleton ds = dual_skeleton(s);
  auto labs = E.labelings(s);
  Comparison res;
  const BasicData& B = E.data();
  for (auto& lx : labs) {
    StateVec vx{{lx, 1.0}};
    Skeleton px = E.apply(wh, ds, vx);
    double norm = std::abs(surface_pairing(B, s, lx));
    for (auto& ly : labs) {
      StateVec vy{{ly, 1.0}};
      Skeleton py = E.apply(wg, s, vy);
      auto mp = circle_map(px, dual_skeleton(py));
      if (!mp) throw WordError("dual words end on mismatched decompositions");
      StateVec vx2 = rename(vx, *mp, py.ncircles);
      cplx tot = 0.0;
      for (auto& [l, x] : vx2) {
        auto it = vy.find(l);
        if (it != vy.end()) tot += x * it->second * surface_pairing(B, py, l);
      }
      cplx ref = (lx == ly) ? surface_pairing(B, s, lx) : cplx(0.0);
      res.residual = std::max(res.residual, std::abs(tot - ref) / norm);
      ++res.labelings;
    }
  }
  return res;
}

namespace {

using Pieces = std::vector<std::vector<int>>;

const Pieces kPants = {{0, 1, 2}};
const Pieces kOneHoledTorus = {{0, 1, 1}};
const Pieces kFourHoled = {{0, 1, 2}, {0, 3, 4}};
const Pieces kFiveHoled = {{0, 2, 3}, {0, 1, 4}, {1, 5, 6}};
const Pieces kTwoHoledTorus = {{0, 2, 1}, {0, 1, 3}};
const Pieces kCappedPants = {{0, 1, 2}, {1}, {2}};
const Pieces kAnnulusChain = {{0, 1}, {1, 2}, {2, 3}};

struct WordRelation {
  Pieces surface;
  std::vector<std::pair<std::string, std::string>> equations;
};

const std::map<std::string, WordRelation>& word_relations() {
  static const std::map<std::string, WordRelation> rels = {
      {"1a", {kPants, {{"T1B23", "B23T1"}, {"T2B23", "B23T3"}, {"T3B23", "B23T2"}}}},
      {"1b", {kPants, {{"B23B23", "T1T2'T3'"}}}},
      {"1c", {kPants, {{"RRR", ""}}}},
      {"1d", {kPants, {{"RB23RRB23RB23RR", "B23RB23RRB23"}}}},
      {"1e", {kPants, {{"K1K1", ""}, {"K2K2", ""}, {"K3K3", ""}}}},
      {"2a", {kFourHoled, {{"P12K1^(1)FF", ""}}}},
      {"2b", {kOneHoledTorus, {{"K2T3'B23'SS", ""}}}},
      {"3a",
       {kFiveHoled,
        {{"K1^(1)P13R^(2)F^(12)K1^(1)R^(2)K1^(2)F^(23)R^(2)F^(12)K1^(1)R^(2)K1^(2)F^(23)R^(2)F^(12)", ""}}}},
      {"3b", {kFourHoled, {{"T3^(1)FB23^(1)FB23^(1)FB23^(1)", ""}}}},
      {"3c", {kOneHoledTorus, {{"C'K2B23'T3'T3'ST3'ST3'S", ""}}}},
      {"3d", {kTwoHoledTorus, {{"R^(1)R^(2)'FS^(1)FB23^(2)B23^(1)", "K1^(1)FS^(2)T3^(2)T1^(2)'B23^(2)F"}}}},
      {"4b", {kCappedPants, {{"A^(12)_2D_3^(13)", "D_2D_3^(13)"}}}},
      {"4c", {kAnnulusChain, {{"A^(12)A^(23)", "A^(23)A^(12)"}}}},
  };
  return rels;
}

struct DualityCase {
  Pieces surface;
  std::string g, h;
};

// Bar of each generator, evaluated on the dual decomposition. The K's of the
// R entry are indexed on the pants produced by R^{-1}.
const std::vector<DualityCase>& duality_cases() {
  static const std::vector<DualityCase> cs = {
      {kPants, "B23", "B23'"},  {kPants, "K1", "K1"},       {kPants, "K2", "K3"},
      {kPants, "T1", "T1'"},    {kPants, "T2", "T3'"},      {kPants, "R", "K1K3R'"},
      {kOneHoledTorus, "S", "S'"}, {kFourHoled, "F", "F'"},
  };
  return cs;
}

bool word_has_K(const std::string& w) { return w.find('K') != std::string::npos; }

}  // namespace

const std::vector<std::string>& relation_ids() {
  static const std::vector<std::string> ids = {"1a", "1b", "1c", "1d", "1e", "2a", "2b", "3a", "3b", "3c",
                                               "3d", "4a", "4b", "4c", "5",  "6a", "6b", "52a", "52b"};
  return ids;
}

RelationReport verify(const std::string& id, const BasicData& B, bool signs_on, double tol) {
  RelationReport rep;
  rep.id = id;
  rep.r = B.r();
  WordEngine E(B, signs_on);
  const auto L = B.params().labels();
  auto& wr = word_relations();
  if (auto it = wr.find(id); it != wr.end()) {
    Skeleton s = Skeleton::from(it->second.surface);
    for (auto& [l, r] : it->second.equations) {
      auto c = compare_words(E, s, l, r);
      if (c.residual >= rep.residual) rep.worst = c.worst;
      rep.residual = std::max(rep.residual, c.residual);
      rep.labelings += c.labelings;
      rep.uses_K = rep.uses_K || word_has_K(l) || word_has_K(r);
    }
  } else if (id == "4a") {
    for (int m : L)
      for (int n : L)
        for (int p : L) {
          if (!B.fusion().has(p, m, n)) continue;
          const Block& f = B.move_F(m, n, p, 1);
          int col = f.col_index(p);
          for (std::size_t a = 0; a < f.rows.size(); ++a) {
            cplx want = f.rows[a] == m ? 1.0 : 0.0;
            rep.residual = std::max(rep.residual, std::abs(f.m(a, col) - want));
          }
          ++rep.labelings;
        }
  } else if (id == "5") {
    for (auto& c : duality_cases()) {
      auto d = duality_defect(E, Skeleton::from(c.surface), c.g, c.h);
      rep.residual = std::max(rep.residual, d.residual);
      rep.labelings += d.labelings;
      rep.uses_K = rep.uses_K || word_has_K(c.h);
    }
  } else if (id == "6a") {
    for (int m : L) {
      // annulus = pants (m;1,m) capped by a disk along a circle labelled 1
      cplx v = B.pairing(m, 1, m) * B.weight_S(1);
      rep.residual = std::max(rep.residual, std::abs(v - 1.0 / B.weight_S(m)));
      ++rep.labelings;
    }
  } else if (id == "6b") {
    for (int m : L) {
      cplx v = B.pairing(m, m, 1);
      rep.residual = std::max(rep.residual, std::abs(v - 1.0 / (B.weight_S(1) * B.weight_S(m))));
      ++rep.labelings;
    }
  } else if (id == "52a") {
    Mat S = B.torus_S();
    for (int m : L) {
      rep.residual = std::max(rep.residual, std::abs(S(0, m - 1) - B.weight_S(m)));
      ++rep.labelings;
    }
  } else if (id == "52b") {
    for (int m : L)
      for (int n : L) {
        const Block& f = B.move_F(m, m, n, n);
        int col = f.col_index(1);
        for (std::size_t a = 0; a < f.rows.size(); ++a) {
          int q = f.rows[a];
          cplx want = double(nu(n)) / (B.weight_S(m) * B.weight_S(n) * B.pairing(q, n, m));
          rep.residual = std::max(rep.residual, std::abs(f.m(a, col) - want));
        }
        ++rep.labelings;
      }
  } else {
    throw std::invalid_argument("unknown relation id '" + id + "'");
  }
  rep.pass = rep.residual < tol;
  return rep;
}

std::vector<RelationReport> verify_all(const BasicData& B, bool signs_on, double tol) {
  std::vector<RelationReport> out;
  for (auto& id : relation_ids()) out.push_back(verify(id, B, signs_on, tol));
  return out;
}

}  // namespace cetqft
