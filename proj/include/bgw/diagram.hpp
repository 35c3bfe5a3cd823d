#pragma once

#include "bgw/group.hpp"
#include "bgw/wreath.hpp"

#include <string>
#include <vector>

namespace bgw {

enum class DiagramStyle { beads, twists, bundles };
enum class DiagramFormat { svg, ascii };

DiagramStyle parse_style(const std::string& s);    // throws std::invalid_argument
DiagramFormat parse_format(const std::string& s);  // throws std::invalid_argument
std::string to_string(DiagramStyle s);

// String diagram of a wreath element, read bottom to top. Slot s at the bottom
// is joined to slot path[s] at the top; decorations sit at the top of each
// strand and are indexed by top slot.
//
//  beads:   one strand per coordinate, labelled by the repr of its bead.
//  twists:  one strand per coordinate carrying twist[i] units of 1/modulus,
//           the bead being generator^twist[i] in a cyclic group.
//  bundles: each coordinate becomes a ribbon of `ribbon` primitive strands and
//           the bead is spelled out as the within-ribbon permutation.
struct DiagramSpec {
  DiagramStyle style = DiagramStyle::beads;
  GroupPtr base;
  int strands = 0;                // primitive strands
  std::vector<int> path;          // size `strands`
  std::vector<std::string> beads; // beads style: size `strands`, "" for the identity
  int generator = -1;             // twists style: base element that one unit stands for
  int modulus = 0;                // twists style: order of `generator`
  std::vector<int> twist;         // twists style: counts in [0, modulus)
  int ribbon = 1;                 // bundles style: strands per ribbon
  std::vector<std::vector<int>> bundles;  // slots of each ribbon, left to right
  std::string caption;

  // Everything except the caption.
  friend bool operator==(const DiagramSpec& a, const DiagramSpec& b);
};

// Throws std::invalid_argument when the twists style meets beads that do not
// lie in a cyclic group.
DiagramSpec diagram_from_wreath(const WreathElem& w, DiagramStyle style, const std::string& caption = "");

// Recovers the wreath element; throws std::invalid_argument on a malformed diagram.
WreathElem extract(const DiagramSpec& d);

// `top` drawn above `bottom`, so extract(stack(u, v)) = w_mul(extract(u), extract(v)).
// Throws std::invalid_argument when style, base, grouping or twist unit differ.
DiagramSpec stack(const DiagramSpec& top, const DiagramSpec& bottom);

std::string render(const DiagramSpec& d, DiagramFormat format);

}  // namespace bgw
