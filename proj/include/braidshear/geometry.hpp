#pragma once

#include <ostream>

#include "braidshear/rational.hpp"

namespace braidshear {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << "(" << p.x << ", " << p.y << ")";
  }
};

/// Sign of det[q - p, r - p]; +1 for a counterclockwise turn.
int orient(const Point& p, const Point& q, const Point& r);

/// +1 if s lies strictly inside the circle through p, q, r; 0 if the four
/// points are cocircular; -1 outside. The triple is re-oriented internally,
/// so the answer does not depend on its order. Throws DegenerateInput when
/// p, q, r are collinear.
int incircle(const Point& p, const Point& q, const Point& r, const Point& s);

namespace detail {

// Determinant kernels shared by the rational front ends and the integer
// fast path of delaunay(). Both are homogeneous, so scaling every
// coordinate by a positive constant preserves the sign.
template <class T>
int orient_sign(const T& px, const T& py, const T& qx, const T& qy, const T& rx, const T& ry) {
  const T det = (qx - px) * (ry - py) - (qy - py) * (rx - px);
  return sgn(det);
}

/// Raw incircle sign; positive iff s is inside when (p, q, r) is CCW.
template <class T>
int incircle_sign(const T& px, const T& py, const T& qx, const T& qy, const T& rx, const T& ry,
                  const T& sx, const T& sy) {
  const T adx = px - sx;
  const T ady = py - sy;
  const T bdx = qx - sx;
  const T bdy = qy - sy;
  const T cdx = rx - sx;
  const T cdy = ry - sy;
  const T alift = adx * adx + ady * ady;
  const T blift = bdx * bdx + bdy * bdy;
  const T clift = cdx * cdx + cdy * cdy;
  const T det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) + clift * (adx * bdy - bdx * ady);
  return sgn(det);
}

}  // namespace detail

}  // namespace braidshear
