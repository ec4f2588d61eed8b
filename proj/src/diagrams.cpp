#include "cetqft/diagrams.hpp"

#include <sstream>

namespace cetqft {

Slice Slice::crossing(int pos, int sign) {
  Slice s;
  s.kind = SliceKind::Crossing;
  s.pos = pos;
  s.sign = sign;
  return s;
}

Slice Slice::cap(int pos, Orient o) {
  Slice s;
  s.kind = SliceKind::Cap;
  s.pos = pos;
  s.orient = o;
  return s;
}

Slice Slice::cup(int pos, int color, Orient o) {
  Slice s;
  s.kind = SliceKind::Cup;
  s.pos = pos;
  s.color = color;
  s.orient = o;
  return s;
}

Slice Slice::box(int pos, LinearMap f) {
  Slice s;
  s.kind = SliceKind::Coupon;
  s.pos = pos;
  s.coupon = std::move(f);
  return s;
}

namespace {

Labels slice_output(const Labels& c, const Slice& s) {
  Labels o = c;
  auto need = [&](int n) {
    if (s.pos < 0 || s.pos + n > static_cast<int>(c.size())) throw DiagramError("slice position out of range");
  };
  switch (s.kind) {
    case SliceKind::Identity:
      break;
    case SliceKind::Crossing:
      need(2);
      std::swap(o[s.pos], o[s.pos + 1]);
      break;
    case SliceKind::Cap:
      need(2);
      if (c[s.pos] != c[s.pos + 1]) throw DiagramError("cap joins strands of different colors");
      o.erase(o.begin() + s.pos, o.begin() + s.pos + 2);
      break;
    case SliceKind::Cup:
      if (s.pos < 0 || s.pos > static_cast<int>(c.size())) throw DiagramError("cup position out of range");
      o.insert(o.begin() + s.pos, {s.color, s.color});
      break;
    case SliceKind::Coupon: {
      int n = static_cast<int>(s.coupon.domain.size());
      need(n);
      if (!std::equal(s.coupon.domain.begin(), s.coupon.domain.end(), c.begin() + s.pos))
        throw DiagramError("coupon domain does not match strand colors");
      o.erase(o.begin() + s.pos, o.begin() + s.pos + n);
      o.insert(o.begin() + s.pos, s.coupon.codomain.begin(), s.coupon.codomain.end());
      break;
    }
  }
  return o;
}

Mat local_map(const Labels& c, const Slice& s, const FusionBasis& B) {
  const Params& P = B.params();
  switch (s.kind) {
    case SliceKind::Identity:
      return eye(dim_of(c));
    case SliceKind::Crossing: {
      int a = c[s.pos], b = c[s.pos + 1];
      return s.sign > 0 ? B.rmat(a, b) : r_matrix_inv(a, b, P);
    }
    case SliceKind::Cap: {
      int k = c[s.pos];
      return s.orient == Orient::Left ? B.cap(k) : Mat(nu(k) * B.cap(k));
    }
    case SliceKind::Cup: {
      int k = s.color;
      return s.orient == Orient::Left ? B.cup(k) : Mat(nu(k) * B.cup(k));
    }
    case SliceKind::Coupon:
      return s.coupon.m;
  }
  return {};
}

int span(const Slice& s) {
  switch (s.kind) {
    case SliceKind::Crossing:
    case SliceKind::Cap:
      return 2;
    case SliceKind::Cup:
      return 0;
    case SliceKind::Coupon:
      return static_cast<int>(s.coupon.domain.size());
    default:
      return 0;
  }
}

}  // namespace

Labels Diagram::output() const {
  Labels c = input;
  for (const auto& s : slices) c = slice_output(c, s);
  return c;
}

Diagram Diagram::juxtapose(const Diagram& a, const Diagram& b) {
  Diagram d;
  d.input = a.input;
  d.input.insert(d.input.end(), b.input.begin(), b.input.end());
  d.slices = a.slices;
  int shift = static_cast<int>(a.output().size());
  for (Slice s : b.slices) {
    s.pos += shift;
    d.slices.push_back(s);
  }
  return d;
}

Diagram Diagram::stack(const Diagram& a, const Diagram& b) {
  if (a.output() != b.input) throw DiagramError("stack: boundary colors differ");
  Diagram d = a;
  d.slices.insert(d.slices.end(), b.slices.begin(), b.slices.end());
  return d;
}

LinearMap evaluate(const Diagram& d, const FusionBasis& B) {
  Labels c = d.input;
  Mat acc = eye(dim_of(c));
  for (const auto& s : d.slices) {
    Labels o = slice_output(c, s);
    if (s.kind != SliceKind::Identity) {
      Labels left(c.begin(), c.begin() + s.pos);
      Labels right(c.begin() + s.pos + span(s), c.end());
      Mat m = kron_all({eye(dim_of(left)), local_map(c, s, B), eye(dim_of(right))});
      acc = m * acc;
    }
    c = o;
  }
  return {d.input, c, acc};
}

double coupon_slide_check(int k, const Params& P) {
  Mat D = weyl_D(k, P);
  Mat K = irrep_action(k, P).K;
  Mat moved = D.transpose() * D.inverse();
  return proportionality(moved, K * K).real();
}

Diagram parse_diagram(const std::string& text, const FusionBasis& B) {
  Diagram d;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw DiagramError("line " + std::to_string(lineno) + ": " + msg);
  };
  auto orient = [&](const std::string& s) {
    if (s == "L") return Orient::Left;
    if (s == "R") return Orient::Right;
    fail("orientation must be L or R");
    return Orient::Left;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    if (op == "in") {
      int k;
      while (ls >> k) d.input.push_back(k);
    } else if (op == "cross") {
      int pos;
      std::string sg;
      if (!(ls >> pos >> sg) || (sg != "+" && sg != "-")) fail("expected: cross <pos> <+|->");
      d.slices.push_back(Slice::crossing(pos, sg == "+" ? 1 : -1));
    } else if (op == "cap") {
      int pos;
      std::string o;
      if (!(ls >> pos >> o)) fail("expected: cap <pos> <L|R>");
      d.slices.push_back(Slice::cap(pos, orient(o)));
    } else if (op == "cup") {
      int pos, k;
      std::string o;
      if (!(ls >> pos >> k >> o)) fail("expected: cup <pos> <color> <L|R>");
      d.slices.push_back(Slice::cup(pos, k, orient(o)));
    } else if (op == "beta" || op == "incl") {
      int pos, p, m, n;
      if (!(ls >> pos >> p >> m >> n)) fail("expected: " + op + " <pos> <p> <m> <n>");
      if (!B.has(p, m, n)) fail("inadmissible triple");
      if (op == "beta")
        d.slices.push_back(Slice::box(pos, LinearMap({m, n}, {p}, B.beta(p, m, n))));
      else
        d.slices.push_back(Slice::box(pos, LinearMap({p}, {m, n}, B.inclusion(p, m, n))));
    } else {
      fail("unknown slice '" + op + "'");
    }
  }
  d.output();
  return d;
}

}  // namespace cetqft
