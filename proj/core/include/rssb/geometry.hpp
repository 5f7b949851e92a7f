// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace rssb::geometry {

struct Vec2 {
  double x{0.0};
  double y{0.0};

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  bool operator==(const Vec2&) const = default;
};

using Point2 = Vec2;

/// Reflection points closer than this to a node are rejected.
inline constexpr double kDegenerateDistance = 1e-9;

struct LinkGeometry {
  Point2 tx;
  Point2 rx;

  double length() const { return (rx - tx).norm(); }
  void validate() const;
};

/// Rigid reflector trajectory p(t) = p0 + v t + A sin(2 pi f t) direction.
struct ReflectorMotion {
  Point2 p0;
  Vec2 direction{0.0, -1.0};
  double amplitude{0.01};    // m
  double breath_freq{0.2};   // Hz
  Vec2 velocity{0.0, 0.0};   // m/s

  double displacement(double t) const;
  Point2 position(double t) const;
  void validate() const;
};

struct MediumParams {
  double wavelength{0.125};      // m
  double pathloss_exponent{2.0};
  double rel_permittivity{1.5};

  void validate() const;
};

/// Excess path length d_t + d_r - d of the ray reflected at p.
double excess_path(const LinkGeometry& link, Point2 p);

/// Gradient of the excess path with respect to the reflection point: the sum of
/// the unit vectors pointing from each node towards p.
Vec2 excess_path_gradient(const LinkGeometry& link, Point2 p);

/// Inner product of the excess-path gradient at p0 with `direction`. For a unit
/// direction this is delta_Delta in [-2, 2]; for a velocity vector it is delta_v.
double gradient_projection(const LinkGeometry& link, Point2 p0, Vec2 direction);

/// Cosine of the angle between the node-to-p unit vectors, in [-1, 1]. Equals -1 on
/// the link segment and tends to 1 far from the link.
double incidence_cosine(const LinkGeometry& link, Point2 p);

/// Grazing incidence angle theta_i = pi/2 - arccos(p_inner)/2.
double incidence_angle(double p_inner);

/// Magnitude of the perpendicular-polarized Fresnel reflection coefficient at the
/// grazing angle implied by p_inner. Tends to 1 as p_inner -> -1 (link line).
double fresnel_coefficient(double p_inner, double rel_permittivity);

/// G = gamma / (1 + excess/d)^(eta/2).
double effective_reflection(double gamma, double excess, double link_length,
                            double pathloss_exponent);

/// Point on the perpendicular bisector of the link, on the +normal side, whose
/// excess path equals `excess`.
Point2 midline_point_for_excess(const LinkGeometry& link, double excess);

}  // namespace rssb::geometry
