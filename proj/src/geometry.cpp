#include "braidshear/geometry.hpp"

#include "braidshear/errors.hpp"

namespace braidshear {

int orient(const Point& p, const Point& q, const Point& r) {
  return detail::orient_sign(p.x.get(), p.y.get(), q.x.get(), q.y.get(), r.x.get(), r.y.get());
}

int incircle(const Point& p, const Point& q, const Point& r, const Point& s) {
  const int o = orient(p, q, r);
  if (o == 0) {
    throw DegenerateInput(DegenerateInput::Kind::kCollinear, {},
                          "incircle: the first three points are collinear");
  }
  const int raw = detail::incircle_sign(p.x.get(), p.y.get(), q.x.get(), q.y.get(), r.x.get(), r.y.get(),
                                        s.x.get(), s.y.get());
  return o > 0 ? raw : -raw;
}

}  // namespace braidshear
