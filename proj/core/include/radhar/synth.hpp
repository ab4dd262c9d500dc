#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "radhar/dsp.hpp"
#include "radhar/types.hpp"

namespace radhar::synth {

// ---------------------------------------------------------------------------
// Dynamic scenes: slow-time beat signals with micro-Doppler ground truth.
//
// The simulator works at the beat-signal abstraction: ranges and velocities
// map linearly to beat / Doppler frequencies through explicit scale constants,
// so every test oracle stays analytic. One slow-time sample per chirp.
// ---------------------------------------------------------------------------

struct Micromotion {
    double amplitude_mps = 0.0;
    double frequency_hz = 0.0;
    double phase_rad = 0.0;
};

struct Scatterer {
    double amplitude = 1.0;
    double base_range_m = 0.0;      // contributes a constant phase only
    double base_velocity_mps = 0.0;
    Micromotion micromotion;
};

struct DynamicSceneSpec {
    std::vector<Scatterer> scatterers;
    std::size_t chirps = 0;
    std::size_t samples_per_chirp = 1;  // metadata in the beat abstraction
    double chirp_rate_hz = 1.0;         // slow-time sample rate
    double range_scale_hz_per_m = 1.0;
    double doppler_scale_hz_per_mps = 1.0;
    std::uint64_t rng_seed = 0;
};

struct DynamicSceneResult {
    dsp::ComplexSignal slow_time;   // sample_rate_hz == chirp_rate_hz
    Mat<double> doppler_track_hz;   // scatterer x chirp instantaneous Doppler
};

DynamicSceneResult simulate_dynamic_scene(const DynamicSceneSpec& spec);

/// Illustrative multi-scatterer gait-like scene (torso + leg + arm lines).
DynamicSceneSpec walking_like_preset();
/// Near-zero Doppler scene with a faint breathing line.
DynamicSceneSpec static_sit_preset();

// ---------------------------------------------------------------------------
// Static multi-channel scenes: IQ cubes for the range-FFT + Capon chain.
//
// Fast-time convention: one chirp spans 1 s sampled at samples_per_chirp Hz,
// so a beat frequency of k Hz lands exactly on range-FFT bin k. With the
// default range_scale of 1 Hz/m, range bin == round(range_m).
// ---------------------------------------------------------------------------

struct StaticTarget {
    double amplitude = 1.0;
    double range_m = 0.0;
    double azimuth_deg = 0.0;  // in [-90, 90]
};

struct StaticSceneSpec {
    std::vector<StaticTarget> targets;
    std::size_t rx_channels = 3;
    double element_spacing_wavelengths = 0.5;
    std::size_t chirps = 0;
    std::size_t samples_per_chirp = 0;
    double noise_power = 0.0;
    double range_scale_hz_per_m = 1.0;
    std::uint64_t rng_seed = 0;
};

IQFrameCube simulate_static_scene(const StaticSceneSpec& spec);

// ---------------------------------------------------------------------------
// Blob fields: RA-map frames with known centroids, the oracle data for the
// cleanliness scorer and the tracker.
// ---------------------------------------------------------------------------

struct GaussBlob {
    PixelF centroid;
    double sigma_px = 1.0;
    double amplitude = 1.0;
};

struct BlobFieldSpec {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t frames = 1;
    std::vector<GaussBlob> blobs;    // blobs[0] is the primary target
    std::vector<GaussBlob> clutter;  // stationary
    PixelF trajectory_px_per_frame{0.0, 0.0};  // applied to all target blobs
    std::set<std::size_t> dropout_frames;      // primary blob amplitude -> 0
    double noise_sigma = 0.0;                  // half-normal floor
    std::uint64_t rng_seed = 0;
};

struct BlobSequence {
    std::vector<RAMap> frames;
    std::vector<PixelF> primary_centroids;  // ground truth, one per frame
};

BlobSequence synth_blob_sequence(const BlobFieldSpec& spec);

// Scene specs are also accepted as JSON documents (schema in the README).
DynamicSceneSpec dynamic_scene_from_json(const std::string& text);
StaticSceneSpec static_scene_from_json(const std::string& text);
BlobFieldSpec blob_field_from_json(const std::string& text);

}  // namespace radhar::synth
