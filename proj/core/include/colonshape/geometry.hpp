#ifndef COLONSHAPE_GEOMETRY_HPP
#define COLONSHAPE_GEOMETRY_HPP

#include <Eigen/Dense>
#include <vector>

#include "colonshape/errors.hpp"

namespace colonshape {

using Vec3 = Eigen::Vector3d;
using Point3 = Eigen::Vector3d; // millimeters

/// Unit tangent direction. The constructor accepts vectors whose norm is
/// already within 1e-3 of 1 and re-normalizes them exactly; anything else is
/// malformed input. Use from_vector() to normalize an arbitrary tangent.
class Direction3 {
public:
    explicit Direction3(const Vec3& approx_unit);

    /// Normalize an arbitrary non-zero vector into a direction.
    static Direction3 from_vector(const Vec3& v);

    const Vec3& vec() const { return v_; }
    double dx() const { return v_.x(); }
    double dy() const { return v_.y(); }
    double dz() const { return v_.z(); }

    double dot(const Direction3& other) const { return v_.dot(other.v_); }

    bool operator==(const Direction3& other) const { return v_ == other.v_; }

private:
    struct AlreadyUnit {};
    Direction3(const Vec3& unit, AlreadyUnit) : v_(unit) {}
    Vec3 v_;
};

/// Proper rigid transform x -> R x + t. R is validated to be orthonormal
/// with determinant +1 within 1e-9.
struct RigidTransform {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Vec3 translation = Vec3::Zero();

    RigidTransform() = default;
    RigidTransform(const Eigen::Matrix3d& rotation, const Vec3& translation);

    static RigidTransform identity() { return RigidTransform{}; }

    /// Rotation of `angle_rad` about unit `axis` followed by `translation`.
    static RigidTransform from_angle_axis(double angle_rad, const Vec3& axis,
                                          const Vec3& translation);

    Point3 apply_point(const Point3& p) const { return rotation * p + translation; }
    Direction3 apply_direction(const Direction3& d) const {
        return Direction3(rotation * d.vec());
    }

    /// Composition: (*this) after `other`, so compose(a, b).apply == a(b(x)).
    RigidTransform compose(const RigidTransform& other) const;
    RigidTransform inverse() const;
};

/// Colonoscope shape at one time step: N sensed points with unit tangents,
/// tip (deepest inserted point) first.
struct ScopeFrame {
    std::vector<Point3> points;
    std::vector<Direction3> directions;
    int frame_index = 0;

    ScopeFrame() = default;
    ScopeFrame(std::vector<Point3> points, std::vector<Direction3> directions,
               int frame_index);

    int point_count() const { return static_cast<int>(points.size()); }
};

/// Colon shape at one time step: M markers along the centerline, marker 1
/// nearest the cecum, marker M nearest the anus.
struct ColonFrame {
    std::vector<Point3> markers;
    int frame_index = 0;

    ColonFrame() = default;
    ColonFrame(std::vector<Point3> markers, int frame_index);

    int marker_count() const { return static_cast<int>(markers.size()); }
};

/// Piecewise cubic Hermite curve through knots with the given unit tangents.
/// Each segment's endpoint tangents are scaled by that segment's chord
/// length, which keeps the parameterization stable without extra knobs.
class HermiteSpline {
public:
    HermiteSpline(std::vector<Point3> knots, std::vector<Direction3> tangents);

    int segment_count() const { return static_cast<int>(knots_.size()) - 1; }

    /// Position at local parameter s in [0, 1] of `segment`.
    Point3 position(int segment, double s) const;
    /// d(position)/ds at local parameter s of `segment` (not unit length).
    Vec3 derivative(int segment, double s) const;

    /// Uniform-parameter polyline: the first knot plus samples_per_segment
    /// points per segment (segment ends included). Passes through every knot.
    std::vector<Point3> sample(int samples_per_segment) const;

    /// Polyline arc length at the given sampling density.
    double length(int samples_per_segment) const;

private:
    std::vector<Point3> knots_;
    std::vector<Vec3> unit_tangents_;
};

/// A point sampled from a spline together with its (normalized) tangent.
struct CurveSample {
    Point3 position;
    Direction3 tangent;
};

/// Arc-length lookup over a densely sampled HermiteSpline. Supports querying
/// position and tangent at any arc length along the curve.
class ArcSampledCurve {
public:
    ArcSampledCurve(const HermiteSpline& spline, int samples_per_segment);

    double total_length() const { return cumulative_.back(); }

    /// Sample at arc length s (clamped to [0, total_length]).
    CurveSample at_arc_length(double s) const;

private:
    const HermiteSpline* spline_;
    std::vector<double> cumulative_;  // per dense sample
    std::vector<int> segment_;        // dense sample -> segment index
    std::vector<double> param_;       // dense sample -> local parameter
};

/// Cubic Hermite interpolation of the point/tangent sequence, sampled with
/// samples_per_segment points per segment. Throws on fewer than 2 points.
std::vector<Point3> hermite_interpolate(const std::vector<Point3>& points,
                                        const std::vector<Direction3>& tangents,
                                        int samples_per_segment);

double polyline_length(const std::vector<Point3>& polyline);

/// Insertion length l: arc length of the Hermite curve through the frame's
/// points and tangents.
double insertion_length(const ScopeFrame& frame, int samples_per_segment = 32);

ScopeFrame rigid_apply(const RigidTransform& tf, const ScopeFrame& frame);
ColonFrame rigid_apply(const RigidTransform& tf, const ColonFrame& frame);

/// Least-squares rigid transform mapping `source` onto `target` (ordered
/// correspondence), via SVD of the cross-covariance with reflection
/// correction. Throws DegenerateGeometryError for collinear inputs.
RigidTransform kabsch(const std::vector<Point3>& source,
                      const std::vector<Point3>& target);

} // namespace colonshape

#endif
