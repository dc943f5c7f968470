#pragma once

#include "numspec/types.hpp"

#include <vector>

namespace numspec {

// Planar convex geometry on Complex points. Polygons are CCW vertex lists;
// 1 vertex = point, 2 vertices = segment.

std::vector<Complex> convex_hull(std::vector<Complex> points);

double polygon_area(const std::vector<Complex>& poly);

// Euclidean distance from a point to a convex polygon (0 inside).
double distance_to_polygon(Complex z, const std::vector<Complex>& poly);

// Hausdorff distance between two convex polygons (max of vertex distances
// in both directions; exact for convex sets).
double hausdorff_distance(const std::vector<Complex>& a,
                          const std::vector<Complex>& b);

// Vertices of the intersection of half planes Re(e^{-i theta_k} z) <= h_k.
// Angles must be sorted, distinct, spanning [0, 2pi) with gaps < pi.
// Returns the CCW polygon; collapses flat regions to segments/points.
// Throws GeometryError when the data admits no nonempty intersection.
std::vector<Complex> halfplane_intersection(const std::vector<double>& thetas,
                                            const std::vector<double>& hs);

}  // namespace numspec
