#pragma once
#include "cetqft/fusion.hpp"

#include <string>

namespace cetqft {

enum class SliceKind { Identity, Crossing, Cap, Cup, Coupon };
// Left: D coupon on the left leg of the extremum; Right: on the right leg.
enum class Orient { Left, Right };

struct Slice {
  SliceKind kind = SliceKind::Identity;
  int pos = 0;
  int sign = +1;      // crossing
  Orient orient = Orient::Left;
  int color = 0;      // cup
  LinearMap coupon;   // coupon: replaces strands pos..pos+|domain|-1

  static Slice identity() { return {}; }
  static Slice crossing(int pos, int sign);
  static Slice cap(int pos, Orient o);
  static Slice cup(int pos, int color, Orient o);
  static Slice box(int pos, LinearMap f);
};

struct Diagram {
  Labels input;
  std::vector<Slice> slices;

  Labels output() const;
  // Side by side: a on the left, b on the right.
  static Diagram juxtapose(const Diagram& a, const Diagram& b);
  // b on top of a.
  static Diagram stack(const Diagram& a, const Diagram& b);
};

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LinearMap evaluate(const Diagram& d, const FusionBasis& B);

// Ratio of the extremum with the Weyl coupon carried over it to the original,
// normalized by the pivotal factor K^2.
double coupon_slide_check(int k, const Params& P);

// One slice per line:
//   in <labels...>
//   cross <pos> <+|->
//   cap <pos> <L|R>
//   cup <pos> <color> <L|R>
//   beta <pos> <p> <m> <n>     projection m⊗n -> p
//   incl <pos> <p> <m> <n>     inclusion p -> m⊗n
// '#' starts a comment.
Diagram parse_diagram(const std::string& text, const FusionBasis& B);

}  // namespace cetqft
