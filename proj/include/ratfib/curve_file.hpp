#pragma once

// Text format for pointed curves.
//
//   format 1
//   genus 5
//   quadric          (three blocks of "i j coeff" lines, 0 <= i <= j <= 4)
//   0 4 1
//   end
//   point 0 0 0 0 1
//
//   format 1
//   genus 6
//   base 1 0 0       (four lines)
//   sextic           (one block of "i j k coeff" lines, i + j + k = 6)
//   6 0 0 1
//   end
//   point 1 2 3
//
// '#' starts a comment, ';' separates lines like a newline. Coefficients are
// exact rationals "p" or "p/q"; floating-point literals are rejected.

#include <string>
#include <string_view>

#include "ratfib/curve5.hpp"
#include "ratfib/genus6.hpp"

namespace ratfib {

struct CurveFile {
  int genus = 5;
  PointedCurve5 g5;
  /// Base points are stored as read; QuinticDP::make is not applied.
  PointedCurve6 g6;

  bool operator==(const CurveFile& o) const;
};

/// Throws Error(ParseError) with "line L, column C" in the message.
CurveFile parse_curve_file(std::string_view text);

/// Canonical text; parse_curve_file(print_curve_file(f)) == f.
std::string print_curve_file(const CurveFile& f);
/// Same content on one line with ';' separators.
std::string print_curve_file_inline(const CurveFile& f);

CurveFile genus5_file(const PointedCurve5& c);

}  // namespace ratfib
