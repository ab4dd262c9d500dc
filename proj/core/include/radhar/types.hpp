#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "radhar/mat.hpp"

namespace radhar {

/// Fractional pixel position (row, col).
struct PixelF {
    double row = 0.0;
    double col = 0.0;
};

/// Inclusive pixel bounding box.
struct BBox {
    int row_min = 0;
    int col_min = 0;
    int row_max = -1;  // row_max < row_min means empty
    int col_max = -1;

    bool empty() const { return row_max < row_min || col_max < col_min; }
    int height() const { return empty() ? 0 : row_max - row_min + 1; }
    int width() const { return empty() ? 0 : col_max - col_min + 1; }
};

/// Raw complex baseband record, indexed (channel, chirp, fast-time sample).
struct IQFrameCube {
    std::size_t channels = 0;
    std::size_t chirps = 0;
    std::size_t samples_per_chirp = 0;
    std::vector<std::complex<double>> data;  // row-major (channel, chirp, sample)

    IQFrameCube() = default;
    IQFrameCube(std::size_t nch, std::size_t nchirp, std::size_t nsamp)
        : channels(nch), chirps(nchirp), samples_per_chirp(nsamp),
          data(nch * nchirp * nsamp) {}

    std::complex<double>& at(std::size_t ch, std::size_t chirp, std::size_t s) {
        return data[(ch * chirps + chirp) * samples_per_chirp + s];
    }
    const std::complex<double>& at(std::size_t ch, std::size_t chirp, std::size_t s) const {
        return data[(ch * chirps + chirp) * samples_per_chirp + s];
    }
    bool empty() const { return data.empty(); }
};

/// Range x angle power map produced by beamforming (or synthesized directly).
struct RAMap {
    Mat<double> power;                   // range_bins x angle_bins, >= 0
    std::vector<double> range_axis_m;    // size == power.rows()
    std::vector<double> angle_grid_deg;  // size == power.cols()
    int frame_index = 0;
};

}  // namespace radhar
