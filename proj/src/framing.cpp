#include "cetqft/framing.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

namespace cetqft {

Q SymplecticSpace::omega(const QVec& x, const QVec& y) const {
  Q s = 0;
  for (int i = 0; i < g; ++i) s += x[i] * y[g + i] - x[g + i] * y[i];
  return s;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(QMat& m) {
  std::vector<std::size_t> piv;
  if (m.empty()) return piv;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][c] == 0) continue;
      Q f = m[k][c];
      for (std::size_t j = 0; j < cols; ++j) m[k][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

int rank(QMat m) { return static_cast<int>(echelon(m).size()); }

std::vector<QVec> nullspace(const QMat& m0) {
  QMat m = m0;
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  auto piv = echelon(m);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<QVec> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    QVec v(cols, Q(0));
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m[k][f];
    out.push_back(v);
  }
  return out;
}

int signature(QMat m) {
  int sig = 0;
  std::size_t n = m.size();
  std::vector<bool> done(n, false);
  for (;;) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      if (!done[i] && m[i][i] != 0) p = i;
    if (p == n) {
      // hyperbolic pair: fold row j into row i to create a nonzero diagonal
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && m[i][j] != 0) {
            a = i, b = j;
            break;
          }
      if (a == n) break;
      for (std::size_t k = 0; k < n; ++k) m[a][k] += m[b][k];
      for (std::size_t k = 0; k < n; ++k) m[k][a] += m[k][b];
      continue;
    }
    sig += sgn(m[p][p]);
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m[i][p] == 0) continue;
      Q f = m[i][p] / m[p][p];
      for (std::size_t k = 0; k < n; ++k) m[i][k] -= f * m[p][k];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      m[p][i] = 0;
      m[i][p] = 0;
    }
  }
  return sig;
}

bool is_lagrangian(const SymplecticSpace& V, const Lagrangian& L) {
  if (rank(L.span) != V.g) return false;
  for (auto& x : L.span)
    for (auto& y : L.span)
      if (V.omega(x, y) != 0) return false;
  return true;
}

int wall_sigma(const SymplecticSpace& V, const Lagrangian& L1, const Lagrangian& L2, const Lagrangian& L3) {
  const std::size_t n = V.dim();
  std::size_t k1 = L1.span.size(), k2 = L2.span.size(), k3 = L3.span.size();
  QMat M(n, QVec(k1 + k2 + k3, Q(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k1; ++j) M[i][j] = L1.span[j][i];
    for (std::size_t j = 0; j < k2; ++j) M[i][k1 + j] = -L2.span[j][i];
    for (std::size_t j = 0; j < k3; ++j) M[i][k1 + k2 + j] = -L3.span[j][i];
  }
  auto ker = nullspace(M);
  std::vector<QVec> xs, cs;
  for (auto& v : ker) {
    QVec x(n, Q(0)), c(n, Q(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k1; ++j) x[i] += v[j] * L1.span[j][i];
      for (std::size_t j = 0; j < k3; ++j) c[i] += v[k1 + k2 + j] * L3.span[j][i];
    }
    xs.push_back(x);
    cs.push_back(c);
  }
  QMat G(xs.size(), QVec(xs.size(), Q(0)));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) G[i][j] = V.omega(xs[i], cs[j]);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (G[i][j] != G[j][i]) throw FramingError("Wall form is not symmetric; arguments are not Lagrangian");
  return signature(G);
}

DecompositionHomology lagrangian_of_decomposition(const CeSurface& s) {
  auto ci = circle_index(s);
  const int V = static_cast<int>(s.pieces.size());
  const int E = static_cast<int>(s.circles.size());
  // spanning forest of the decomposition graph by BFS
  std::vector<int> parent_edge(V, -1), seen(V, 0);
  std::vector<bool> tree(E, false);
  std::vector<std::vector<std::pair<int, int>>> adj(V);
  for (int e = 0; e < E; ++e) {
    auto [x, y] = s.circles[e];
    adj[x.piece].push_back({y.piece, e});
    adj[y.piece].push_back({x.piece, e});
  }
  std::vector<int> depth(V, 0);
  for (int root = 0; root < V; ++root) {
    if (seen[root]) continue;
    std::vector<int> q{root};
    seen[root] = 1;
    for (std::size_t h = 0; h < q.size(); ++h) {
      for (auto [w, e] : adj[q[h]]) {
        if (seen[w]) continue;
        seen[w] = 1;
        tree[e] = true;
        parent_edge[w] = e;
        depth[w] = depth[q[h]] + 1;
        q.push_back(w);
      }
    }
  }
  std::vector<int> cotree;
  for (int e = 0; e < E; ++e)
    if (!tree[e]) cotree.push_back(e);
  const int g = static_cast<int>(cotree.size());
  DecompositionHomology H;
  H.space.g = g;
  // fundamental cycle of cotree edge f: f from its first to its second piece,
  // then back through the tree
  auto cycle = [&](int f) {
    std::vector<int> z(E, 0);
    z[f] = 1;
    int u = s.circles[f].second.piece, v = s.circles[f].first.piece;
    auto up = [&](int& w) {
      int e = parent_edge[w];
      int sign = s.circles[e].first.piece == w ? 1 : -1;
      w = sign > 0 ? s.circles[e].second.piece : s.circles[e].first.piece;
      return std::pair{e, sign};
    };
    while (u != v) {
      if (depth[u] >= depth[v]) {
        auto [e, sg] = up(u);
        z[e] += sg;
      } else {
        auto [e, sg] = up(v);
        z[e] -= sg;
      }
    }
    return z;
  };
  std::vector<std::vector<int>> Z;
  for (int f : cotree) Z.push_back(cycle(f));
  H.circle_class.assign(ci.ncircles, QVec(2 * g, Q(0)));
  for (int e = 0; e < E; ++e)
    for (int k = 0; k < g; ++k) H.circle_class[e][k] = Z[k][e];
  for (int k = 0; k < g; ++k) {
    QVec a(2 * g, Q(0));
    a[k] = 1;
    H.L.span.push_back(a);
  }
  return H;
}

std::vector<TorusGen> parse_torus_word(const std::string& w) {
  static const std::regex tok(R"(\s*(S_T|[STC])(?:(')|\^\(?(-?\d+)\)?)?\s*)");
  std::vector<TorusGen> out;
  auto it = w.cbegin();
  std::smatch m;
  while (it != w.cend()) {
    if (std::all_of(it, w.cend(), [](unsigned char ch) { return std::isspace(ch); })) break;
    if (!std::regex_search(it, w.cend(), m, tok, std::regex_constants::match_continuous))
      throw FramingError("cannot parse torus word at '" + std::string(it, w.cend()) + "'");
    int p = 1;
    if (m[2].matched) p = -1;
    if (m[3].matched) p = std::stoi(m[3]);
    out.push_back({m[1].str()[0], p});
    it = m[0].second;
  }
  return out;
}

std::string format_torus_word(const std::vector<TorusGen>& w) {
  std::string s;
  for (auto& g : w) {
    s += g.gen;
    if (g.power == -1) s += "'";
    else if (g.power != 1) s += "^" + std::to_string(g.power);
  }
  return s;
}

QMat torus_gen_matrix(char gen, int sign) {
  // columns give the new (γ, δ) in old frame coordinates
  switch (gen) {
    case 'S':
      return sign > 0 ? QMat{{0, -1}, {1, 0}} : QMat{{0, 1}, {-1, 0}};
    case 'T':
      return QMat{{1, Q(-sign)}, {0, 1}};
    case 'C':
      return QMat{{1, 0}, {0, 1}};
  }
  throw FramingError(std::string("unknown torus generator ") + gen);
}

TorusFrame apply_torus_gen(const TorusFrame& f, char gen, int sign) {
  QMat A = torus_gen_matrix(gen, sign);
  TorusFrame out;
  for (int i = 0; i < 2; ++i) {
    out.gamma[i] = A[0][0] * f.gamma[i] + A[1][0] * f.delta[i];
    out.delta[i] = A[0][1] * f.gamma[i] + A[1][1] * f.delta[i];
  }
  return out;
}

TorusFrame apply_torus_word(const TorusFrame& f, const std::string& w) {
  auto gens = parse_torus_word(w);
  TorusFrame cur = f;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it)
    for (int k = 0; k < std::abs(it->power); ++k) cur = apply_torus_gen(cur, it->gen, it->power > 0 ? 1 : -1);
  return cur;
}

namespace {

const SymplecticSpace kTorus{1};

Lagrangian lag(const TorusFrame& f) { return {{f.gamma}}; }

std::vector<TorusFrame> frames_along(const std::string& w, const TorusFrame& source) {
  auto gens = parse_torus_word(w);
  std::vector<TorusFrame> out{source};
  for (auto it = gens.rbegin(); it != gens.rend(); ++it)
    for (int k = 0; k < std::abs(it->power); ++k)
      out.push_back(apply_torus_gen(out.back(), it->gen, it->power > 0 ? 1 : -1));
  return out;
}

}  // namespace

TorusMorphism compose_morphisms(const TorusMorphism& phi2, const TorusMorphism& phi1) {
  if (!(phi1.target() == phi2.source)) throw FramingError("compose_morphisms: target of the first is not the source of the second");
  TorusMorphism out;
  out.source = phi1.source;
  out.word = phi2.word + phi1.word;
  out.n = phi2.n + phi1.n - wall_sigma(kTorus, lag(phi1.source), lag(phi2.source), lag(phi2.target()));
  return out;
}

long word_framing(const std::string& w, const TorusFrame& source) {
  auto fr = frames_along(w, source);
  long n = 0;
  for (std::size_t k = 2; k < fr.size(); ++k) n -= wall_sigma(kTorus, lag(fr[0]), lag(fr[k - 1]), lag(fr[k]));
  return n;
}

long glue_framing(long n, const TorusMorphism& phi) {
  // M ∪ I_(f,m): the boundary Lagrangian of M is the decomposition
  // Lagrangian of the source, so the gluing σ term has a repeated argument.
  TorusMorphism id{"", 0, phi.source};
  TorusMorphism c = compose_morphisms(phi, id);
  return n + c.n;
}

}  // namespace cetqft
