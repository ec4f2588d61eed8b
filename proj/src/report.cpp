#include "cetqft/report.hpp"

#include "cetqft/diagrams.hpp"
#include "cetqft/dsl.hpp"
#include "cetqft/framing.hpp"
#include "cetqft/msverify.hpp"
#include "cetqft/surface.hpp"
#include "cetqft/tqft.hpp"

#include <json.hpp>

#include <algorithm>
#include <numbers>
#include <random>
#include <sstream>

namespace cetqft {

std::vector<Record> verify_records(const BasicData& B, bool signs_on, double tol) {
  std::vector<Record> out;
  for (auto& rep : verify_all(B, signs_on, tol))
    out.push_back({"verify", B.r(), rep.id, std::to_string(rep.labelings), rep.residual, rep.pass});
  return out;
}

namespace {

Record check(const std::string& cmd, int r, const std::string& id, double residual, double tol,
             const std::string& value = "") {
  return {cmd, r, id, value, residual, residual < tol};
}

void modular_records(const BasicData& B, std::vector<Record>& out) {
  const int r = B.r();
  Mat S = B.torus_S();
  const int n = static_cast<int>(S.rows());
  double first_row = 0, trig = 0;
  for (int m = 1; m <= n; ++m) first_row = std::max(first_row, std::abs(S(0, m - 1) - B.weight_S(m)));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      trig = std::max(trig, std::abs(std::abs(S(a - 1, b - 1)) -
                                     std::sqrt(2.0 / r) * std::abs(std::sin(a * b * std::numbers::pi / r))));
  out.push_back(check("smatrix", r, "first-row", first_row, 1e-9));
  out.push_back(check("smatrix", r, "unitary", max_abs(S.adjoint() * S - eye(n)), 1e-9));
  out.push_back(check("smatrix", r, "symmetric", max_abs(S - S.transpose()), 1e-9));
  out.push_back(check("smatrix", r, "abs-vs-sin", trig, 1e-9));
}

void operator_records(const BasicData& B, std::vector<Record>& out) {
  const Params& P = B.params();
  const int r = B.r();
  double slide = 0, runit = 0, minpair = 1e300;
  for (int k = 1; k < r; ++k) {
    slide = std::max(slide, std::abs(coupon_slide_check(k, P) - nu(k)));
    for (int kp = 1; kp < r; ++kp) {
      Mat R = B.fusion().rmat(k, kp);
      runit = std::max(runit, max_abs(R.adjoint() * form_matrix({kp, k}, P) * R - form_matrix({k, kp}, P)));
    }
  }
  for (auto& [key, b] : B.fusion().all()) {
    auto [p, m, n] = key;
    minpair = std::min(minpair, trace_pairing(b, b, p, m, n, P).real());
  }
  out.push_back(check("operators", r, "coupon-slide", slide, 1e-10));
  out.push_back(check("operators", r, "R-form-unitary", runit, 1e-10));
  out.push_back({"operators", r, "trace-pairing-min", format_real(minpair), 0.0, minpair > 1e-10});
}

void dim_records(int r, std::vector<Record>& out) {
  auto rec = [&](const std::string& id, long got, long want) {
    out.push_back({"dim", r, id, std::to_string(got), static_cast<double>(std::labs(got - want)), got == want});
  };
  CeSurface disk = make_disk();
  rec("disk-1", dim_V(disk, {1}, r), 1);
  long others = 0;
  for (int m = 2; m < r; ++m) others += dim_V(disk, {m}, r);
  rec("disk-other", others, 0);
  rec("torus", dim_V(make_torus(), {}, r), r - 1);
  long g2 = dim_V(make_closed_genus2(), {}, r);
  if (r == 3) rec("genus2", g2, 4);
  else out.push_back({"dim", r, "genus2", std::to_string(g2), 0.0, true});
}

// RT of surgery on the unknot with framing f, from the trigonometric S and θ.
cplx rt_unknot(int r, int f) {
  using std::numbers::pi;
  auto S1 = [&](int m) { return std::sqrt(2.0 / r) * std::sin(m * pi / r); };
  auto th = [&](int m) { return std::polar(1.0, pi * (m * m - 1) / (2.0 * r)); };
  cplx gauss = 0.0, z = 0.0;
  for (int m = 1; m < r; ++m) {
    gauss += S1(m) * S1(m) * th(m);
    z += S1(m) * S1(m) * std::pow(th(m), f);
  }
  gauss /= S1(1);
  if (f > 0) z /= gauss;
  if (f < 0) z *= gauss;
  return z;
}

void invariant_records(const BasicData& B, std::vector<Record>& out) {
  Tqft T(B);
  const int r = B.r();
  const double X = B.params().X;
  auto rec = [&](const std::string& id, const std::string& w, cplx want) {
    cplx got = T.invariant_closed(w).value;
    out.push_back(check("invariant", r, id, std::abs(got - want), 1e-8, format_complex(got)));
  };
  rec("S2xS1", "", 1.0 / X);
  rec("S3", "S", 1.0 / (X * X));
  for (int p = 1; p <= 3; ++p) rec("L" + std::to_string(p), "ST^" + std::to_string(p) + "S", rt_unknot(r, -p) / X);
  cplx c1 = T.invariant_closed("ST^2S", 1).value / T.invariant_closed("ST^2S", 0).value;
  out.push_back(check("framing", r, "C-factor", std::abs(c1 - B.scalar_C()), 1e-10, format_complex(c1)));
}

std::string random_torus_word(std::mt19937& rng, int len) {
  static const char* gens[] = {"S", "S'", "T", "T'", "C"};
  std::uniform_int_distribution<int> pick(0, 4);
  std::string w;
  for (int k = 0; k < len; ++k) w += gens[pick(rng)];
  return w;
}

void framing_records(std::vector<Record>& out) {
  SymplecticSpace V{1};
  Lagrangian a{{{Q(1), Q(0)}}}, b{{{Q(0), Q(1)}}}, ab{{{Q(1), Q(1)}}};
  int s1 = wall_sigma(V, a, b, ab), s0 = wall_sigma(V, a, a, b);
  out.push_back({"framing", 0, "sigma(a,b,a+b)", std::to_string(s1), 0.0, s1 == 1});
  out.push_back({"framing", 0, "sigma-repeated", std::to_string(s0), 0.0, s0 == 0});
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> len(0, 6), fr(-3, 3);
  long bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    TorusMorphism f1{random_torus_word(rng, len(rng)), fr(rng), {}};
    TorusMorphism f2{random_torus_word(rng, len(rng)), fr(rng), f1.target()};
    TorusMorphism f3{random_torus_word(rng, len(rng)), fr(rng), f2.target()};
    auto left = compose_morphisms(compose_morphisms(f3, f2), f1);
    auto right = compose_morphisms(f3, compose_morphisms(f2, f1));
    if (left.n != right.n || !(left.target() == right.target())) ++bad;
  }
  out.push_back({"framing", 0, "associativity", std::to_string(200 - bad) + "/200", static_cast<double>(bad), bad == 0});
}

// Sorted dimensions over all boundary labelings; invariant under relabeling
// of the boundary slots.
std::vector<long> dim_profile(const CeSurface& s, int r) {
  std::size_t nb = s.boundary_slots().size();
  std::vector<int> lab(nb, 1);
  std::vector<long> out;
  for (;;) {
    out.push_back(dim_V(s, lab, r));
    std::size_t k = 0;
    while (k < nb && lab[k] == r - 1) lab[k++] = 1;
    if (k == nb) break;
    ++lab[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

void surface_records(std::vector<Record>& out) {
  std::mt19937 rng(7);
  long idem = 0, closed = 0, reflexive = 0, glue_ok = 0, dims = 0, dim_cases = 0;
  const int N = 200;
  for (int t = 0; t < N; ++t) {
    CeSurface s = random_surface(rng, 8);
    CeSurface n = normalize(s);
    idem += normalize(n) == n;
    reflexive += equivalent(dual(dual(s)), s);
    CeSurface cur = s;
    bool ok = true;
    for (int k = 0; k < 20; ++k) {
      auto mv = applicable_moves(cur);
      cur = apply_word(cur, mv[std::uniform_int_distribution<std::size_t>(0, mv.size() - 1)(rng)]);
      ok = ok && validate(cur).empty();
    }
    closed += ok;
    if (s.boundary_slots().size() <= 8) {
      ++dim_cases;
      dims += dim_profile(cur, 3) == dim_profile(s, 3) && dim_profile(n, 3) == dim_profile(s, 3);
    }
    auto bnd = s.boundary_slots();
    bool gl = true;
    if (bnd.size() >= 2) {
      bool opposite = boundary_type(s, bnd[0]) != boundary_type(s, bnd[1]);
      try {
        CeSurface g = glue(s, bnd[0], bnd[1]);
        gl = opposite && validate(g).empty();
      } catch (const SurfaceError&) {
        gl = !opposite;
      }
    }
    glue_ok += gl;
  }
  auto rec = [&](const std::string& id, long got) {
    out.push_back({"surface", 0, id, std::to_string(got) + "/" + std::to_string(N), static_cast<double>(N - got), got == N});
  };
  rec("normalize-idempotent", idem);
  rec("dual-reflexive", reflexive);
  rec("closed-under-moves", closed);
  rec("glue-types", glue_ok);
  out.push_back({"surface", 0, "dim-invariant", std::to_string(dims) + "/" + std::to_string(dim_cases),
                 static_cast<double>(dim_cases - dims), dims == dim_cases});
}

}  // namespace

std::vector<Record> report_records(const std::vector<int>& rs, double tol) {
  std::vector<Record> out;
  for (int r : rs) {
    BasicData B(r);
    auto v = verify_records(B, true, tol);
    out.insert(out.end(), v.begin(), v.end());
    if (r == 4) {
      bool kfree = true;
      double k_fail = 0;
      for (auto& rep : verify_all(B, false, tol)) {
        if (!rep.uses_K) kfree = kfree && rep.pass;
        if (rep.id == "2a" || rep.id == "3a") k_fail = std::max(k_fail, rep.residual);
      }
      out.push_back({"ablation", r, "2a|3a-fail", format_real(k_fail), k_fail, k_fail >= 0.5});
      out.push_back({"ablation", r, "K-free-pass", kfree ? "yes" : "no", 0.0, kfree});
    }
    modular_records(B, out);
    operator_records(B, out);
    dim_records(r, out);
    if (r <= 5) invariant_records(B, out);
  }
  framing_records(out);
  surface_records(out);
  return out;
}

std::string render_text(const std::vector<Record>& recs) {
  std::ostringstream os;
  char line[256];
  for (auto& rc : recs) {
    std::snprintf(line, sizeof line, "%-10s r=%-2d %-22s %-28s residual=%-12s %s\n", rc.command.c_str(), rc.r,
                  rc.id.c_str(), rc.value.c_str(), format_real(rc.residual).c_str(), rc.pass ? "PASS" : "FAIL");
    os << line;
  }
  long npass = std::count_if(recs.begin(), recs.end(), [](auto& x) { return x.pass; });
  os << npass << "/" << recs.size() << " checks passed\n";
  return os.str();
}

std::string render_records(const std::vector<Record>& recs) {
  std::ostringstream os;
  for (auto& rc : recs) {
    nlohmann::ordered_json j;
    j["command"] = rc.command;
    j["r"] = rc.r;
    j["id"] = rc.id;
    j["value"] = rc.value;
    j["residual"] = std::stod(format_real(rc.residual));
    j["pass"] = rc.pass;
    os << j.dump() << '\n';
  }
  return os.str();
}

bool all_pass(const std::vector<Record>& recs) {
  return std::all_of(recs.begin(), recs.end(), [](auto& x) { return x.pass; });
}

}  // namespace cetqft
