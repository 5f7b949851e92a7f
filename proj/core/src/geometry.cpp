// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include "rssb/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "rssb/error.hpp"

namespace rssb::geometry {
namespace {

bool finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

void require_clear_of_nodes(const LinkGeometry& link, Point2 p) {
  if ((p - link.tx).norm() < kDegenerateDistance ||
      (p - link.rx).norm() < kDegenerateDistance) {
    throw DegenerateGeometryError("reflection point coincides with a link node");
  }
}

}  // namespace

void LinkGeometry::validate() const {
  if (!finite(tx) || !finite(rx)) throw ValidationError("link: node coordinates must be finite");
  if (length() <= kDegenerateDistance) throw ValidationError("link: tx and rx must be distinct");
}

double ReflectorMotion::displacement(double t) const {
  return amplitude * std::sin(2.0 * std::numbers::pi * breath_freq * t);
}

Point2 ReflectorMotion::position(double t) const {
  return p0 + velocity * t + direction * displacement(t);
}

void ReflectorMotion::validate() const {
  if (!finite(p0) || !finite(direction) || !finite(velocity)) {
    throw ValidationError("motion: vectors must be finite");
  }
  if (std::abs(direction.norm() - 1.0) > 1e-12) {
    throw ValidationError("motion: direction must be a unit vector");
  }
  if (!(amplitude >= 0.0)) throw ValidationError("motion: amplitude must be >= 0");
  if (!(breath_freq > 0.0)) throw ValidationError("motion: breath_freq must be > 0");
}

void MediumParams::validate() const {
  if (!(wavelength > 0.0)) throw ValidationError("medium: wavelength must be > 0");
  if (!(pathloss_exponent > 0.0)) throw ValidationError("medium: pathloss_exponent must be > 0");
  if (!(rel_permittivity >= 1.0)) throw ValidationError("medium: rel_permittivity must be >= 1");
}

double excess_path(const LinkGeometry& link, Point2 p) {
  require_clear_of_nodes(link, p);
  return (p - link.tx).norm() + (p - link.rx).norm() - link.length();
}

Vec2 excess_path_gradient(const LinkGeometry& link, Point2 p) {
  require_clear_of_nodes(link, p);
  const Vec2 from_rx = p - link.rx;
  const Vec2 from_tx = p - link.tx;
  return from_rx * (1.0 / from_rx.norm()) + from_tx * (1.0 / from_tx.norm());
}

double gradient_projection(const LinkGeometry& link, Point2 p0, Vec2 direction) {
  return excess_path_gradient(link, p0).dot(direction);
}

double incidence_cosine(const LinkGeometry& link, Point2 p) {
  require_clear_of_nodes(link, p);
  const Vec2 from_rx = p - link.rx;
  const Vec2 from_tx = p - link.tx;
  const double c = from_rx.dot(from_tx) / (from_rx.norm() * from_tx.norm());
  return std::clamp(c, -1.0, 1.0);
}

double incidence_angle(double p_inner) {
  return std::numbers::pi / 2.0 - 0.5 * std::acos(std::clamp(p_inner, -1.0, 1.0));
}

double fresnel_coefficient(double p_inner, double rel_permittivity) {
  const double p = std::clamp(p_inner, -1.0, 1.0);
  // sin(theta_i) = cos(arccos(p)/2), cos^2(theta_i) = sin^2(arccos(p)/2).
  const double sin_t = std::sqrt(0.5 * (1.0 + p));
  const double cos2_t = 0.5 * (1.0 - p);
  const double root = std::sqrt(std::max(rel_permittivity - cos2_t, 0.0));
  const double denom = sin_t + root;
  if (denom == 0.0) return 0.0;  // eps_r = 1 on the link line; no dielectric contrast
  return std::min(std::abs((sin_t - root) / denom), 1.0);
}

double effective_reflection(double gamma, double excess, double link_length,
                            double pathloss_exponent) {
  return gamma / std::pow(1.0 + excess / link_length, 0.5 * pathloss_exponent);
}

Point2 midline_point_for_excess(const LinkGeometry& link, double excess) {
  if (!(excess > 0.0)) throw ValidationError("midline point requires excess > 0");
  const double d = link.length();
  const double half = 0.5 * d;
  const double reach = half + 0.5 * excess;
  const double offset = std::sqrt(reach * reach - half * half);
  const Vec2 along = (link.rx - link.tx) * (1.0 / d);
  const Vec2 normal{-along.y, along.x};
  const Point2 mid = (link.tx + link.rx) * 0.5;
  return mid + normal * offset;
}

}  // namespace rssb::geometry
