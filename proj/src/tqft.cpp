#include "cetqft/tqft.hpp"

#include <algorithm>
#include <set>

namespace cetqft {

namespace {

cplx cpow(cplx z, long n) {
  cplx out = 1.0;
  cplx b = n >= 0 ? z : 1.0 / z;
  for (long k = 0; k < std::labs(n); ++k) out *= b;
  return out;
}

std::vector<int> internal_of(const Skeleton& s) { return s.internal(); }

}  // namespace

BlockMatrix Tqft::V_of_word(const std::string& word, const Skeleton& s, const std::vector<int>& boundary_labels,
                            long framing) const {
  auto bnd = s.boundary();
  if (bnd.size() != boundary_labels.size()) throw WordError("V_of_word: wrong number of boundary labels");
  auto w = parse_word(word);
  BlockMatrix out;
  for (auto& lab : E_.labelings(s)) {
    bool match = true;
    for (std::size_t k = 0; k < bnd.size(); ++k) match = match && lab[bnd[k]] == boundary_labels[k];
    if (match) out.cols.push_back(lab);
  }
  std::vector<StateVec> images;
  std::set<Labeling> rowset;
  for (auto& lab : out.cols) {
    StateVec v{{lab, 1.0}};
    E_.apply(w, s, v);
    for (auto& [l, x] : v) rowset.insert(l);
    images.push_back(std::move(v));
  }
  out.rows.assign(rowset.begin(), rowset.end());
  out.m = Mat::Zero(out.rows.size(), out.cols.size());
  cplx c = cpow(B_.scalar_C(), framing);
  for (std::size_t j = 0; j < images.size(); ++j)
    for (auto& [l, x] : images[j])
      out.m(std::lower_bound(out.rows.begin(), out.rows.end(), l) - out.rows.begin(), j) += x * c;
  return out;
}

std::string torus_to_move_word(const std::string& torus_word) {
  std::string out;
  for (auto& g : parse_torus_word(torus_word)) {
    std::string tok = g.gen == 'S' ? "S" : g.gen == 'T' ? "T2" : "C";
    if (g.power < 0) tok += "'";
    for (int k = 0; k < std::abs(g.power); ++k) out += tok;
  }
  return out;
}

Mat Tqft::torus_operator(const std::string& word) const {
  // one-holed torus capped by a disk: circle 0 carries the label 1
  Skeleton s = Skeleton::from({{0, 1, 1}});
  auto w = parse_word(torus_to_move_word(word));
  const int n = B_.r() - 1;
  Mat M = Mat::Zero(n, n);
  for (int m = 1; m <= n; ++m) {
    StateVec v{{{1, m}, 1.0}};
    E_.apply(w, s, v);
    for (auto& [l, x] : v) M(l[1] - 1, m - 1) += x;
  }
  return M;
}

ClosedInvariant Tqft::invariant_closed(const std::string& torus_word, long m) const {
  ClosedInvariant out;
  out.word_framing = word_framing(torus_word);
  out.framing = m;
  Mat V = torus_operator(torus_word);
  out.value = B_.weight_S(1) * V(0, 0) * cpow(B_.scalar_C(), m - out.word_framing);
  return out;
}

PartitionVector Tqft::Z_mapping_cylinder(const std::string& word, const Skeleton& s, long framing) const {
  auto bnd = s.boundary();
  auto src_int = internal_of(s);
  auto w = parse_word(word);
  PartitionVector z;
  z.nb = static_cast<int>(bnd.size());
  z.nsrc = static_cast<int>(src_int.size());
  z.framing = framing;
  cplx c = cpow(B_.scalar_C(), framing);
  std::optional<std::vector<int>> tgt_int;
  for (auto& lab : E_.labelings(s)) {
    StateVec v{{lab, 1.0}};
    Skeleton t = E_.apply(w, s, v);
    if (!tgt_int) tgt_int = internal_of(t);
    for (auto& [l, x] : v) {
      Labeling key;
      for (int b : bnd) key.push_back(lab[b]);
      for (int i : src_int) key.push_back(lab[i]);
      for (int i : *tgt_int) key.push_back(l[i]);
      z.coords[key] += x * c;
    }
  }
  z.ntgt = tgt_int ? static_cast<int>(tgt_int->size()) : 0;
  return z;
}

PartitionVector Tqft::Z_glue_circles(const PartitionVector& z, int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= z.nb || j >= z.nb) throw std::invalid_argument("Z_glue_circles: bad boundary positions");
  PartitionVector out = z;
  out.coords.clear();
  out.nb = z.nb - 1;
  for (auto& [key, x] : z.coords) {
    if (key[i] != key[j]) continue;
    Labeling k2 = key;
    k2.erase(k2.begin() + j);
    out.coords[k2] += x * B_.weight_S(key[i]);
  }
  return out;
}

PartitionVector Tqft::Z_compose(const PartitionVector& z2, const PartitionVector& z1, long sigma) const {
  if (z1.nb != z2.nb || z1.ntgt != z2.nsrc) throw std::invalid_argument("Z_compose: surfaces do not match");
  PartitionVector out;
  out.nb = z1.nb;
  out.nsrc = z1.nsrc;
  out.ntgt = z2.ntgt;
  out.framing = z1.framing + z2.framing - sigma;
  const int nb = z1.nb, ni = z1.nsrc, nm = z1.ntgt;
  std::map<Labeling, std::vector<std::pair<Labeling, cplx>>> by_src;
  for (auto& [key, x] : z2.coords) {
    Labeling head(key.begin(), key.begin() + nb + nm);
    by_src[head].push_back({key, x});
  }
  for (auto& [key, x] : z1.coords) {
    Labeling head(key.begin(), key.begin() + nb);
    head.insert(head.end(), key.begin() + nb + ni, key.end());
    auto it = by_src.find(head);
    if (it == by_src.end()) continue;
    for (auto& [k2, y] : it->second) {
      Labeling k(key.begin(), key.begin() + nb + ni);
      k.insert(k.end(), k2.begin() + nb + nm, k2.end());
      out.coords[k] += x * y;
    }
  }
  return out;
}

}  // namespace cetqft
