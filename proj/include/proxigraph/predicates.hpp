#pragma once

#include "proxigraph/geometry.hpp"

/// Exact-sign geometric predicates.
///
/// Each predicate first evaluates its polynomial in double precision together
/// with a magnitude bound on the rounding error. Only when the computed value
/// falls inside that bound is the polynomial re-evaluated in exact rational
/// arithmetic (every finite double is an exact dyadic rational), so the sign
/// returned is always the sign of the true real value.
namespace proxigraph::predicates {

/// +1 if a, b, c make a left turn, -1 for a right turn, 0 if collinear.
int orient2d(const Point2& a, const Point2& b, const Point2& c);

/// +1 if d lies strictly inside the circle through a, b, c (counterclockwise),
/// -1 if strictly outside, 0 if cocircular.
int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// sign(|p - a|^2 - |p - b|^2): negative when a is closer to p than b.
int compare_distance(const Point2& p, const Point2& a, const Point2& b);

/// sign(|a - b|^2 - |c - d|^2).
int compare_lengths(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// sign((p - r) . (q - r)); non-positive exactly when r lies in the closed disk
/// with diameter pq.
int diametral_sign(const Point2& p, const Point2& q, const Point2& r);

/// sign(|a - b|^2 - radius^2).
int compare_to_radius(const Point2& a, const Point2& b, double radius);

/// sign(|p - q| - (|p - a| + |q - b|)): compares the length of pq with the sum
/// of two other segment lengths without taking square roots inexactly.
int compare_to_length_sum(const Point2& p, const Point2& q, const Point2& a, const Point2& b);

}  // namespace proxigraph::predicates
