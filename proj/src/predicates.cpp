#include "proxigraph/predicates.hpp"

#include <gmpxx.h>

#include <cmath>

namespace proxigraph::predicates {
namespace {

// Every predicate below is a polynomial of degree <= 4 in coordinate
// differences; its double-precision rounding error is a small multiple of
// machine epsilon times the sum of absolute term magnitudes. This threshold
// exceeds that bound by several orders of magnitude.
constexpr double kFilter = 1e-12;

inline int sign_of(double v) { return (v > 0) - (v < 0); }

inline int filtered(double value, double magnitude) {
  if (std::abs(value) > kFilter * magnitude) return sign_of(value);
  return 2;  // undecided
}

inline int exact_sign(const mpq_class& v) { return sgn(v); }

struct Exact {
  mpq_class x, y;
  explicit Exact(const Point2& p) : x(p.x), y(p.y) {}
};

mpq_class exact_sq(const Point2& a, const Point2& b) {
  Exact ea(a), eb(b);
  mpq_class dx = ea.x - eb.x;
  mpq_class dy = ea.y - eb.y;
  return dx * dx + dy * dy;
}

}  // namespace

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
  const double l = (b.x - a.x) * (c.y - a.y);
  const double r = (b.y - a.y) * (c.x - a.x);
  if (int s = filtered(l - r, std::abs(l) + std::abs(r)); s != 2) return s;

  Exact ea(a), eb(b), ec(c);
  mpq_class det = (eb.x - ea.x) * (ec.y - ea.y) - (eb.y - ea.y) * (ec.x - ea.x);
  return exact_sign(det);
}

int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double alift = adx * adx + ady * ady;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double blift = bdx * bdx + bdy * bdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                           (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                           (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  if (int s = filtered(det, permanent); s != 2) return s;

  Exact ea(a), eb(b), ec(c), ed(d);
  mpq_class eadx = ea.x - ed.x, eady = ea.y - ed.y;
  mpq_class ebdx = eb.x - ed.x, ebdy = eb.y - ed.y;
  mpq_class ecdx = ec.x - ed.x, ecdy = ec.y - ed.y;
  mpq_class ea2 = eadx * eadx + eady * eady;
  mpq_class eb2 = ebdx * ebdx + ebdy * ebdy;
  mpq_class ec2 = ecdx * ecdx + ecdy * ecdy;
  mpq_class edet = ea2 * (ebdx * ecdy - ecdx * ebdy) + eb2 * (ecdx * eady - eadx * ecdy) +
                   ec2 * (eadx * ebdy - ebdx * eady);
  return exact_sign(edet);
}

int compare_distance(const Point2& p, const Point2& a, const Point2& b) {
  return compare_lengths(p, a, p, b);
}

int compare_lengths(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const double ab = squared_distance(a, b);
  const double cd = squared_distance(c, d);
  if (int s = filtered(ab - cd, ab + cd); s != 2) return s;
  return exact_sign(exact_sq(a, b) - exact_sq(c, d));
}

int diametral_sign(const Point2& p, const Point2& q, const Point2& r) {
  const double l = (p.x - r.x) * (q.x - r.x);
  const double rr = (p.y - r.y) * (q.y - r.y);
  if (int s = filtered(l + rr, std::abs(l) + std::abs(rr)); s != 2) return s;

  Exact ep(p), eq(q), er(r);
  mpq_class dot = (ep.x - er.x) * (eq.x - er.x) + (ep.y - er.y) * (eq.y - er.y);
  return exact_sign(dot);
}

int compare_to_radius(const Point2& a, const Point2& b, double radius) {
  const double d2 = squared_distance(a, b);
  const double r2 = radius * radius;
  if (int s = filtered(d2 - r2, d2 + r2); s != 2) return s;
  mpq_class er(radius);
  return exact_sign(exact_sq(a, b) - er * er);
}

int compare_to_length_sum(const Point2& p, const Point2& q, const Point2& a, const Point2& b) {
  const double c = distance(p, q);
  const double ra = distance(p, a);
  const double rb = distance(q, b);
  if (int s = filtered(c - ra - rb, c + ra + rb); s != 2) return s;

  // sqrt(C) vs sqrt(A) + sqrt(B)  <=>  C - A - B vs 2 sqrt(AB).
  mpq_class cc = exact_sq(p, q);
  mpq_class aa = exact_sq(p, a);
  mpq_class bb = exact_sq(q, b);
  mpq_class diff = cc - aa - bb;
  if (sgn(diff) < 0) return -1;
  return exact_sign(diff * diff - 4 * aa * bb);
}

}  // namespace proxigraph::predicates
