#ifndef COLONSHAPE_RECORDING_HPP
#define COLONSHAPE_RECORDING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "colonshape/geometry.hpp"

namespace colonshape {

/// One synchronized time step: the sensed colonoscope shape and the colon
/// shape it deformed, sharing a frame index.
struct FramePair {
    ScopeFrame scope;
    ColonFrame colon;
};

/// A full colonoscope insertion: paired shapes for consecutive frames
/// (frame_index starting at 1), plus provenance of how it was produced.
struct InsertionRecording {
    std::vector<FramePair> frames;
    std::uint64_t seed = 0;
    std::string config_snapshot; // text form of the generating config; empty when loaded

    int frame_count() const { return static_cast<int>(frames.size()); }
};

/// Checks the pairing invariants: non-empty, indices consecutive from 1 and
/// shared between scope and colon frames. Throws DataError on violation.
void validate_recording(const InsertionRecording& recording);

} // namespace colonshape

#endif
