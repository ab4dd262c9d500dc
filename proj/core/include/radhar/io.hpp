#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "radhar/errors.hpp"
#include "radhar/mat.hpp"

namespace radhar::io {

/// Element type of the RDT1 tensor container. C64 stores two f32 (re, im).
enum class Dtype : std::uint8_t { F32 = 0, C64 = 1 };

/// The value carried by an RDT1 file: up to 4 dimensions, little-endian f32
/// payload (interleaved re/im for C64), CRC32 trailer. Row-major, last axis
/// fastest.
struct Tensor {
    Dtype dtype = Dtype::F32;
    std::vector<std::uint32_t> dims;
    std::vector<float> data;  // element_count() floats for F32, 2x for C64

    std::uint64_t element_count() const;
    std::size_t float_count() const;

    static Tensor from_matrix(const Mat<double>& m);
    static Tensor from_matrix(const Mat<std::complex<double>>& m);
    /// Stack of equally shaped matrices as a (frames, rows, cols) tensor.
    static Tensor from_frames(const std::vector<Mat<double>>& frames);

    Mat<double> to_matrix() const;  // requires F32 and ndim == 2
};

/// Atomic write (temp file + rename). Throws std::invalid_argument on a
/// malformed tensor, io::IoError on filesystem failure.
void write_tensor(const std::filesystem::path& path, const Tensor& tensor);

/// Throws FormatError / UnsupportedVersionError / TruncationError /
/// CorruptionError; any flipped byte in a well-formed file is detected.
Tensor read_tensor(const std::filesystem::path& path);

/// Binary PGM (P5), maxval 255. Header is exactly "P5\n<w> <h>\n255\n".
void write_pgm(const std::filesystem::path& path, const Mat<std::uint8_t>& pixels);
Mat<std::uint8_t> read_pgm(const std::filesystem::path& path);

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};
using RgbImage = Mat<Rgb>;

/// Binary PPM (P6), maxval 255; used for the red/blue tracking overlays.
void write_ppm(const std::filesystem::path& path, const RgbImage& image);

/// Write text through the same atomic temp-file + rename path.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

/// Canonical number formatting for CSV outputs: shortest round-trip-ish
/// "%.9g", with infinities serialized as "inf"/"-inf".
std::string format_number(double v);

}  // namespace radhar::io
