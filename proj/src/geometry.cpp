#include "numspec/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace numspec {

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double coordinate_scale(const std::vector<Complex>& pts) {
  double s = 1.0;
  for (Complex p : pts) s = std::max({s, std::abs(p.real()), std::abs(p.imag())});
  return s;
}

std::vector<Complex> dedup(const std::vector<Complex>& pts, double tol) {
  std::vector<Complex> out;
  for (Complex p : pts) {
    bool dup = false;
    for (Complex q : out)
      if (std::abs(p - q) <= tol) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

double point_segment_distance(Complex z, Complex a, Complex b) {
  Complex d = b - a;
  double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z - a).real() * d.real() + (z - a).imag() * d.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * d));
}

}  // namespace

std::vector<Complex> convex_hull(std::vector<Complex> points) {
  const double scale = coordinate_scale(points);
  points = dedup(points, 1e-12 * scale);
  if (points.size() <= 2) return points;
  std::sort(points.begin(), points.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  const double eps = 1e-14 * scale * scale;
  const std::size_t n = points.size();
  std::vector<Complex> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= eps) --k;
    hull[k++] = points[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && cross(hull[k - 2], hull[k - 1], points[i]) <= eps) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);  // last point equals the first
  if (hull.size() == 2 && std::abs(hull[0] - hull[1]) <= 1e-12 * scale)
    hull.pop_back();
  return hull;  // CCW
}

double polygon_area(const std::vector<Complex>& poly) {
  if (poly.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Complex a = poly[i], b = poly[(i + 1) % poly.size()];
    twice += a.real() * b.imag() - b.real() * a.imag();
  }
  return 0.5 * std::abs(twice);
}

double distance_to_polygon(Complex z, const std::vector<Complex>& poly) {
  if (poly.empty()) return kInf;
  if (poly.size() == 1) return std::abs(z - poly[0]);
  if (poly.size() == 2) return point_segment_distance(z, poly[0], poly[1]);
  bool inside = true;
  double dmin = kInf;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    Complex a = poly[i], b = poly[(i + 1) % poly.size()];
    if (cross(a, b, z) < 0.0) inside = false;  // CCW: left of every edge
    dmin = std::min(dmin, point_segment_distance(z, a, b));
  }
  return inside ? 0.0 : dmin;
}

double hausdorff_distance(const std::vector<Complex>& a,
                          const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) return kInf;
  double d = 0.0;
  for (Complex p : a) d = std::max(d, distance_to_polygon(p, b));
  for (Complex q : b) d = std::max(d, distance_to_polygon(q, a));
  return d;
}

namespace {

double halfplane_excess(Complex z, double theta, double h) {
  return z.real() * std::cos(theta) + z.imag() * std::sin(theta) - h;
}

// One Sutherland-Hodgman pass. `tol` counts boundary-grazing vertices as
// inside so exactly flat regions survive.
std::vector<Complex> clip_polygon(const std::vector<Complex>& poly, double theta,
                                  double h, double tol) {
  std::vector<Complex> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    Complex cur = poly[i], nxt = poly[(i + 1) % n];
    double sc = halfplane_excess(cur, theta, h);
    double sn = halfplane_excess(nxt, theta, h);
    if (sc <= tol) out.push_back(cur);
    if ((sc <= tol) != (sn <= tol) && sn != sc)
      out.push_back(cur + (sc / (sc - sn)) * (nxt - cur));
  }
  return out;
}

std::vector<Complex> clip_segment(Complex a, Complex b, double theta, double h,
                                  double tol) {
  double sa = halfplane_excess(a, theta, h);
  double sb = halfplane_excess(b, theta, h);
  if (sa <= tol && sb <= tol) return {a, b};
  if (sa > tol && sb > tol) return {};
  Complex crossing = a + (sa / (sa - sb)) * (b - a);
  return sa <= tol ? std::vector<Complex>{a, crossing}
                   : std::vector<Complex>{crossing, b};
}

}  // namespace

std::vector<Complex> halfplane_intersection(const std::vector<double>& thetas,
                                            const std::vector<double>& hs) {
  const std::size_t k = thetas.size();
  if (k < 3 || hs.size() != k)
    throw InputError("halfplane_intersection: need >= 3 sorted half planes");

  // Candidate vertices from consecutive support lines
  //   cos(theta_i) x + sin(theta_i) y = h_i.
  // Their hull contains the intersection (candidates on a line never fall
  // short of the feasible part of that line); clipping the hull against
  // every half plane then yields the intersection itself, pruning the
  // overshoot that inactive constraints introduce.
  std::vector<Complex> cand;
  cand.reserve(k);
  double hscale = 1.0;
  for (double h : hs) hscale = std::max(hscale, std::abs(h));
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = (i + 1) % k;
    const double ti = thetas[i], tj = thetas[j];
    const double det = std::sin(tj - ti);
    if (std::abs(det) < 1e-12) continue;  // duplicate/antipodal angles
    const double x = (hs[i] * std::sin(tj) - hs[j] * std::sin(ti)) / det;
    const double y = (hs[j] * std::cos(ti) - hs[i] * std::cos(tj)) / det;
    cand.emplace_back(x, y);
  }
  std::vector<Complex> poly = convex_hull(cand);
  const double tol = 1e-12 * (1.0 + hscale);

  if (poly.size() >= 3) {
    for (std::size_t i = 0; i < k && poly.size() >= 3; ++i)
      poly = clip_polygon(poly, thetas[i], hs[i], tol);
  }
  if (!poly.empty() && poly.size() <= 2) {
    Complex a = poly.front(), b = poly.back();
    std::vector<Complex> seg = {a, b};
    for (std::size_t i = 0; i < k && !seg.empty(); ++i)
      seg = clip_segment(seg.front(), seg.back(), thetas[i], hs[i], tol);
    poly = seg;
  }
  poly = convex_hull(poly);  // normalize: CCW, dedup, drop collinear interiors
  if (poly.empty())
    throw GeometryError(
        "halfplane_intersection: empty intersection; support data inconsistent");
  return poly;
}

}  // namespace numspec
