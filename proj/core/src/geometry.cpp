#include "colonshape/geometry.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace colonshape {

namespace {

void require_finite(const Point3& p, const char* what) {
    if (!p.allFinite()) {
        throw InvalidArgumentError(std::string(what) + ": coordinates must be finite");
    }
}

// Hermite basis at local parameter s.
struct HermiteBasis {
    double h00, h10, h01, h11;
    explicit HermiteBasis(double s) {
        const double s2 = s * s;
        const double s3 = s2 * s;
        h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
        h10 = s3 - 2.0 * s2 + s;
        h01 = -2.0 * s3 + 3.0 * s2;
        h11 = s3 - s2;
    }
};

struct HermiteBasisDerivative {
    double h00, h10, h01, h11;
    explicit HermiteBasisDerivative(double s) {
        const double s2 = s * s;
        h00 = 6.0 * s2 - 6.0 * s;
        h10 = 3.0 * s2 - 4.0 * s + 1.0;
        h01 = -6.0 * s2 + 6.0 * s;
        h11 = 3.0 * s2 - 2.0 * s;
    }
};

} // namespace

Direction3::Direction3(const Vec3& approx_unit) {
    if (!approx_unit.allFinite()) {
        throw InvalidArgumentError("Direction3: components must be finite");
    }
    const double norm = approx_unit.norm();
    if (std::abs(norm - 1.0) > 1e-3) {
        throw InvalidArgumentError("Direction3: norm " + std::to_string(norm) +
                                   " deviates from 1 by more than 1e-3");
    }
    v_ = approx_unit / norm;
}

Direction3 Direction3::from_vector(const Vec3& v) {
    if (!v.allFinite()) {
        throw InvalidArgumentError("Direction3: components must be finite");
    }
    const double norm = v.norm();
    if (norm < 1e-12) {
        throw InvalidArgumentError("Direction3: cannot normalize near-zero vector");
    }
    return Direction3(Vec3(v / norm), AlreadyUnit{});
}

RigidTransform::RigidTransform(const Eigen::Matrix3d& rotation_in, const Vec3& translation_in)
    : rotation(rotation_in), translation(translation_in) {
    if (!rotation.allFinite() || !translation.allFinite()) {
        throw InvalidArgumentError("RigidTransform: entries must be finite");
    }
    const Eigen::Matrix3d gram = rotation.transpose() * rotation;
    const double ortho_err = (gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    if (ortho_err > 1e-9) {
        throw InvalidArgumentError("RigidTransform: rotation is not orthonormal (error " +
                                   std::to_string(ortho_err) + ")");
    }
    if (std::abs(rotation.determinant() - 1.0) > 1e-9) {
        throw InvalidArgumentError("RigidTransform: rotation determinant is not +1");
    }
}

RigidTransform RigidTransform::from_angle_axis(double angle_rad, const Vec3& axis,
                                               const Vec3& translation) {
    const double norm = axis.norm();
    if (norm < 1e-12) {
        throw InvalidArgumentError("RigidTransform: rotation axis must be non-zero");
    }
    Eigen::Matrix3d r = Eigen::AngleAxisd(angle_rad, axis / norm).toRotationMatrix();
    return RigidTransform(r, translation);
}

RigidTransform RigidTransform::compose(const RigidTransform& other) const {
    RigidTransform out;
    out.rotation = rotation * other.rotation;
    out.translation = rotation * other.translation + translation;
    return out;
}

RigidTransform RigidTransform::inverse() const {
    RigidTransform out;
    out.rotation = rotation.transpose();
    out.translation = -(rotation.transpose() * translation);
    return out;
}

ScopeFrame::ScopeFrame(std::vector<Point3> points_in, std::vector<Direction3> directions_in,
                       int frame_index_in)
    : points(std::move(points_in)), directions(std::move(directions_in)),
      frame_index(frame_index_in) {
    if (points.size() != directions.size()) {
        throw InvalidArgumentError("ScopeFrame: points and directions must have equal length");
    }
    if (points.size() < 2) {
        throw InvalidArgumentError("ScopeFrame: needs at least 2 points");
    }
    for (const Point3& p : points) require_finite(p, "ScopeFrame");
}

ColonFrame::ColonFrame(std::vector<Point3> markers_in, int frame_index_in)
    : markers(std::move(markers_in)), frame_index(frame_index_in) {
    if (markers.empty()) {
        throw InvalidArgumentError("ColonFrame: needs at least 1 marker");
    }
    for (const Point3& p : markers) require_finite(p, "ColonFrame");
}

HermiteSpline::HermiteSpline(std::vector<Point3> knots, std::vector<Direction3> tangents)
    : knots_(std::move(knots)) {
    if (knots_.size() < 2) {
        throw InvalidArgumentError("HermiteSpline: needs at least 2 points");
    }
    if (tangents.size() != knots_.size()) {
        throw InvalidArgumentError("HermiteSpline: one tangent per knot required");
    }
    for (const Point3& p : knots_) require_finite(p, "HermiteSpline");
    unit_tangents_.reserve(tangents.size());
    for (const Direction3& d : tangents) unit_tangents_.push_back(d.vec());
}

Point3 HermiteSpline::position(int segment, double s) const {
    const Point3& p0 = knots_[segment];
    const Point3& p1 = knots_[segment + 1];
    const double chord = (p1 - p0).norm();
    const Vec3 m0 = unit_tangents_[segment] * chord;
    const Vec3 m1 = unit_tangents_[segment + 1] * chord;
    const HermiteBasis b(s);
    return b.h00 * p0 + b.h10 * m0 + b.h01 * p1 + b.h11 * m1;
}

Vec3 HermiteSpline::derivative(int segment, double s) const {
    const Point3& p0 = knots_[segment];
    const Point3& p1 = knots_[segment + 1];
    const double chord = (p1 - p0).norm();
    const Vec3 m0 = unit_tangents_[segment] * chord;
    const Vec3 m1 = unit_tangents_[segment + 1] * chord;
    const HermiteBasisDerivative b(s);
    return b.h00 * p0 + b.h10 * m0 + b.h01 * p1 + b.h11 * m1;
}

std::vector<Point3> HermiteSpline::sample(int samples_per_segment) const {
    if (samples_per_segment < 1) {
        throw InvalidArgumentError("HermiteSpline: samples_per_segment must be >= 1");
    }
    std::vector<Point3> out;
    out.reserve(1 + static_cast<std::size_t>(segment_count()) * samples_per_segment);
    out.push_back(knots_.front());
    for (int seg = 0; seg < segment_count(); ++seg) {
        for (int j = 1; j <= samples_per_segment; ++j) {
            if (j == samples_per_segment) {
                out.push_back(knots_[seg + 1]); // hit the knot exactly
            } else {
                out.push_back(position(seg, static_cast<double>(j) / samples_per_segment));
            }
        }
    }
    return out;
}

double HermiteSpline::length(int samples_per_segment) const {
    return polyline_length(sample(samples_per_segment));
}

ArcSampledCurve::ArcSampledCurve(const HermiteSpline& spline, int samples_per_segment)
    : spline_(&spline) {
    if (samples_per_segment < 1) {
        throw InvalidArgumentError("ArcSampledCurve: samples_per_segment must be >= 1");
    }
    const int nseg = spline.segment_count();
    cumulative_.reserve(1 + static_cast<std::size_t>(nseg) * samples_per_segment);
    segment_.reserve(cumulative_.capacity());
    param_.reserve(cumulative_.capacity());

    cumulative_.push_back(0.0);
    segment_.push_back(0);
    param_.push_back(0.0);
    Point3 prev = spline.position(0, 0.0);
    for (int seg = 0; seg < nseg; ++seg) {
        for (int j = 1; j <= samples_per_segment; ++j) {
            const double s = static_cast<double>(j) / samples_per_segment;
            const Point3 p = spline.position(seg, s);
            cumulative_.push_back(cumulative_.back() + (p - prev).norm());
            segment_.push_back(seg);
            param_.push_back(s);
            prev = p;
        }
    }
}

CurveSample ArcSampledCurve::at_arc_length(double s) const {
    const double total = cumulative_.back();
    s = std::clamp(s, 0.0, total);
    const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), s);
    std::size_t hi = static_cast<std::size_t>(it - cumulative_.begin());
    if (hi == 0) hi = 1;

    const std::size_t lo = hi - 1;
    const double span = cumulative_[hi] - cumulative_[lo];
    const double frac = span > 0.0 ? (s - cumulative_[lo]) / span : 0.0;

    int seg;
    double u0, u1;
    if (segment_[lo] == segment_[hi]) {
        seg = segment_[lo];
        u0 = param_[lo];
        u1 = param_[hi];
    } else {
        // Bracket crosses a knot; both parameterizations describe the same
        // point at the knot, so interpolate within the later segment.
        seg = segment_[hi];
        u0 = 0.0;
        u1 = param_[hi];
    }
    const double u = u0 + frac * (u1 - u0);
    const Vec3 d = spline_->derivative(seg, u);
    Direction3 tangent = d.norm() > 1e-12
        ? Direction3::from_vector(d)
        : Direction3::from_vector(spline_->position(seg, 1.0) - spline_->position(seg, 0.0));
    return CurveSample{spline_->position(seg, u), tangent};
}

std::vector<Point3> hermite_interpolate(const std::vector<Point3>& points,
                                        const std::vector<Direction3>& tangents,
                                        int samples_per_segment) {
    return HermiteSpline(points, tangents).sample(samples_per_segment);
}

double polyline_length(const std::vector<Point3>& polyline) {
    double total = 0.0;
    for (std::size_t i = 1; i < polyline.size(); ++i) {
        total += (polyline[i] - polyline[i - 1]).norm();
    }
    return total;
}

double insertion_length(const ScopeFrame& frame, int samples_per_segment) {
    return HermiteSpline(frame.points, frame.directions).length(samples_per_segment);
}

ScopeFrame rigid_apply(const RigidTransform& tf, const ScopeFrame& frame) {
    ScopeFrame out = frame;
    for (Point3& p : out.points) p = tf.apply_point(p);
    for (Direction3& d : out.directions) d = tf.apply_direction(d);
    return out;
}

ColonFrame rigid_apply(const RigidTransform& tf, const ColonFrame& frame) {
    ColonFrame out = frame;
    for (Point3& p : out.markers) p = tf.apply_point(p);
    return out;
}

RigidTransform kabsch(const std::vector<Point3>& source, const std::vector<Point3>& target) {
    if (source.size() != target.size()) {
        throw InvalidArgumentError("kabsch: source and target sizes differ");
    }
    if (source.size() < 3) {
        throw InvalidArgumentError("kabsch: needs at least 3 correspondences");
    }

    Vec3 src_centroid = Vec3::Zero();
    Vec3 tgt_centroid = Vec3::Zero();
    for (std::size_t i = 0; i < source.size(); ++i) {
        src_centroid += source[i];
        tgt_centroid += target[i];
    }
    src_centroid /= static_cast<double>(source.size());
    tgt_centroid /= static_cast<double>(target.size());

    Eigen::Matrix3d cross_cov = Eigen::Matrix3d::Zero();
    double src_spread = 0.0;
    for (std::size_t i = 0; i < source.size(); ++i) {
        const Vec3 s = source[i] - src_centroid;
        const Vec3 t = target[i] - tgt_centroid;
        cross_cov += t * s.transpose();
        src_spread = std::max(src_spread, s.norm());
    }

    Eigen::JacobiSVD<Eigen::Matrix3d> svd(cross_cov,
                                          Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Vec3 sv = svd.singularValues();
    // Rank < 2 means the correspondence does not pin down a rotation.
    const double scale = std::max(sv(0), src_spread * src_spread);
    if (sv(1) <= scale * 1e-12) {
        throw DegenerateGeometryError("kabsch: point sets are collinear or coincident");
    }

    Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
    d(2, 2) = (svd.matrixU() * svd.matrixV().transpose()).determinant() < 0.0 ? -1.0 : 1.0;
    const Eigen::Matrix3d rotation = svd.matrixU() * d * svd.matrixV().transpose();
    return RigidTransform(rotation, tgt_centroid - rotation * src_centroid);
}

} // namespace colonshape
