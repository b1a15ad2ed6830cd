#ifndef COLONSHAPE_FEATURES_HPP
#define COLONSHAPE_FEATURES_HPP

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "colonshape/geometry.hpp"
#include "colonshape/recording.hpp"

namespace colonshape {

/// Per-frame structure feature: all point coordinates (n = 1..N, each x,y,z),
/// then all direction components in the same order, then the insertion
/// length. Length 6N+1 (37 for N = 6).
struct StructureFeature {
    Eigen::VectorXd values;
    int frame_index = 0;

    double insertion_length() const { return values(values.size() - 1); }
};

/// Pairwise relation matrices of one colonoscope shape: positional entries
/// are point-to-point distances, directional entries are tangent inner
/// products in [-1, 1].
struct RelationMaps {
    Eigen::MatrixXd positional;
    Eigen::MatrixXd directional;
};

/// Input conditioning fitted on training data only: positions are mapped to
/// the unit ball by (x - center) * scale, insertion lengths to [0, 1] by
/// length_scale.
struct Normalizer {
    Vec3 center = Vec3::Zero();
    double scale = 1.0;        // 1/mm
    double length_scale = 1.0; // 1/mm

    Vec3 normalize_point(const Vec3& p) const { return (p - center) * scale; }
    Vec3 denormalize_point(const Vec3& p) const { return p / scale + center; }
};

/// Features of one frame as consumed by the estimation network, already
/// normalized: relation maps (positional entries scaled) plus the structure
/// feature (positions centered/scaled, insertion length scaled, directions
/// untouched).
struct FrameFeature {
    RelationMaps maps;
    StructureFeature structure;
};

/// The network input for one estimation: features of the tau consecutive
/// frames preceding the target frame.
struct FeatureWindow {
    std::vector<FrameFeature> frames; // exactly tau entries, consecutive
    int target_index = 0;

    int window_length() const { return static_cast<int>(frames.size()); }
};

StructureFeature structure_feature(const ScopeFrame& frame, int samples_per_segment = 32);

/// N x N matrix of pairwise Euclidean distances |p_i - p_j| in mm.
Eigen::MatrixXd positional_relation(const ScopeFrame& frame);

/// N x N matrix of pairwise inner products d_i . d_j, clamped to [-1, 1].
Eigen::MatrixXd directional_relation(const ScopeFrame& frame);

/// Fits center/scale/length_scale on the given training recordings: center
/// is the centroid of all colon markers; scale is 1 over the maximum
/// distance of any scope point or marker from the center; length_scale is
/// 1 over the maximum insertion length. Throws DataError on empty input.
Normalizer fit_normalizer(std::span<const InsertionRecording> recordings,
                          int samples_per_segment = 32);

/// Normalized features of a single frame.
FrameFeature frame_feature(const ScopeFrame& frame, const Normalizer& normalizer,
                           int samples_per_segment = 32);

/// Builds the feature window from exactly tau consecutive scope frames that
/// precede the target frame. Throws InvalidArgumentError on wrong length or
/// non-consecutive frame indices.
FeatureWindow build_window(std::span<const ScopeFrame> slice, int tau,
                           const Normalizer& normalizer, int samples_per_segment = 32);

} // namespace colonshape

#endif
