#pragma once

#include "parstab/cover.hpp"
#include "parstab/perm.hpp"

namespace fixtures {

using parstab::Cover;
using parstab::Perm;

// Degree-3 cover of the line, four simple branch points, full S_3 monodromy.
inline Cover trigonal_morse() {
  Cover d;
  d.degree = 3;
  d.branch = {{"y1", Perm::parse_cycles("(1 2)", 3)},
              {"y2", Perm::parse_cycles("(1 2)", 3)},
              {"y3", Perm::parse_cycles("(1 3)", 3)},
              {"y4", Perm::parse_cycles("(1 3)", 3)}};
  return d;
}

// Degree-4 cyclic cover of the line, two totally ramified points.
inline Cover cyclic_quartic() {
  Cover d;
  d.degree = 4;
  d.branch = {{"y1", Perm::parse_cycles("(1 2 3 4)", 4)},
              {"y2", Perm::parse_cycles("(1 4 3 2)", 4)}};
  return d;
}

// Unramified double cover of a genus-2 curve.
inline Cover etale_double_genus2() {
  Cover d;
  d.base_genus = 2;
  d.degree = 2;
  d.handles = {{Perm::parse_cycles("(1 2)", 2), Perm(2)}, {Perm(2), Perm(2)}};
  return d;
}

// Unramified Klein-four cover of an elliptic curve (regular action).
inline Cover etale_klein_genus1() {
  Cover d;
  d.base_genus = 1;
  d.degree = 4;
  d.handles = {{Perm::parse_cycles("(1 2)(3 4)", 4), Perm::parse_cycles("(1 3)(2 4)", 4)}};
  return d;
}

// Unramified cyclic degree-5 cover of an elliptic curve.
inline Cover etale_c5_genus1() {
  Cover d;
  d.base_genus = 1;
  d.degree = 5;
  d.handles = {{Perm::parse_cycles("(1 2 3 4 5)", 5), Perm::parse_cycles("(1 3 5 2 4)", 5)}};
  return d;
}

// Cyclic degree-3 monodromy: alternating A_3, the classification edge where
// no stability certificate applies.
inline Cover cyclic_cubic() {
  Cover d;
  d.degree = 3;
  d.branch = {{"y1", Perm::parse_cycles("(1 2 3)", 3)},
              {"y2", Perm::parse_cycles("(1 3 2)", 3)}};
  return d;
}

// Genus-1 base, Klein-four monodromy, branch closure NOT transitive: ramified
// but not genuinely ramified, and imprimitive.
inline Cover imprimitive_handle() {
  Cover d;
  d.base_genus = 1;
  d.degree = 4;
  d.handles = {{Perm::parse_cycles("(1 3)(2 4)", 4), Perm(4)}};
  d.branch = {{"y1", Perm::parse_cycles("(1 2)(3 4)", 4)},
              {"y2", Perm::parse_cycles("(1 2)(3 4)", 4)}};
  return d;
}

// Degree 6 with mixed cycle types [4,2] and [2,1,1,1,1].
inline Cover mixed_cycle() {
  Cover d;
  d.degree = 6;
  d.branch = {{"y1", Perm::parse_cycles("(1 2 3 4)(5 6)", 6)},
              {"y2", Perm::parse_cycles("(1 4 3 2)(5 6)", 6)},
              {"y3", Perm::parse_cycles("(1 5)", 6)},
              {"y4", Perm::parse_cycles("(1 5)", 6)}};
  return d;
}

// Ramified double cover of the line.
inline Cover ramified_double() {
  Cover d;
  d.degree = 2;
  d.branch = {{"y1", Perm::parse_cycles("(1 2)", 2)},
              {"y2", Perm::parse_cycles("(1 2)", 2)}};
  return d;
}

// Degree-1 identity cover; pushforward is the trivial line bundle.
inline Cover identity_cover() {
  Cover d;
  d.degree = 1;
  return d;
}

}  // namespace fixtures
