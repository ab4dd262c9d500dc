#include "radhar/io.hpp"

#include <unistd.h>
#include <zlib.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace radhar::io {

namespace {

constexpr char kMagic[4] = {'R', 'D', 'T', '1'};
constexpr std::uint16_t kVersion = 1;
constexpr std::uint64_t kMaxPayloadBytes = 1ull << 40;

void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint16_t get_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint32_t crc32_of(const unsigned char* data, std::size_t len) {
    uLong crc = ::crc32(0L, Z_NULL, 0);
    while (len > 0) {
        const auto chunk = static_cast<uInt>(std::min<std::size_t>(len, 1u << 30));
        crc = ::crc32(crc, data, chunk);
        data += chunk;
        len -= chunk;
    }
    return static_cast<std::uint32_t>(crc);
}

void atomic_write_bytes(const std::filesystem::path& path, const std::string& bytes) {
    namespace fs = std::filesystem;
    const fs::path dir = path.parent_path().empty() ? fs::path(".") : path.parent_path();
    std::error_code ec;
    fs::create_directories(dir, ec);

    static std::atomic<std::uint64_t> counter{0};
    const fs::path tmp =
        dir / (path.filename().string() + ".tmp" + std::to_string(::getpid()) + "-" +
               std::to_string(counter.fetch_add(1)));
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot open temp file for " + path.string());
        f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        f.flush();
        if (!f) {
            fs::remove(tmp, ec);
            throw IoError("write failed for " + path.string());
        }
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("rename failed for " + path.string());
    }
}

std::string read_all(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return bytes;
}

}  // namespace

std::uint64_t Tensor::element_count() const {
    std::uint64_t n = 1;
    for (auto d : dims) n *= d;
    return dims.empty() ? 0 : n;
}

std::size_t Tensor::float_count() const {
    return static_cast<std::size_t>(element_count()) * (dtype == Dtype::C64 ? 2 : 1);
}

Tensor Tensor::from_matrix(const Mat<double>& m) {
    Tensor t;
    t.dtype = Dtype::F32;
    t.dims = {static_cast<std::uint32_t>(m.rows()), static_cast<std::uint32_t>(m.cols())};
    t.data.reserve(m.size());
    for (double v : m.storage()) t.data.push_back(static_cast<float>(v));
    return t;
}

Tensor Tensor::from_matrix(const Mat<std::complex<double>>& m) {
    Tensor t;
    t.dtype = Dtype::C64;
    t.dims = {static_cast<std::uint32_t>(m.rows()), static_cast<std::uint32_t>(m.cols())};
    t.data.reserve(m.size() * 2);
    for (const auto& v : m.storage()) {
        t.data.push_back(static_cast<float>(v.real()));
        t.data.push_back(static_cast<float>(v.imag()));
    }
    return t;
}

Tensor Tensor::from_frames(const std::vector<Mat<double>>& frames) {
    if (frames.empty()) throw std::invalid_argument("Tensor::from_frames: no frames");
    Tensor t;
    t.dtype = Dtype::F32;
    t.dims = {static_cast<std::uint32_t>(frames.size()),
              static_cast<std::uint32_t>(frames.front().rows()),
              static_cast<std::uint32_t>(frames.front().cols())};
    t.data.reserve(frames.size() * frames.front().size());
    for (const auto& f : frames) {
        if (f.rows() != frames.front().rows() || f.cols() != frames.front().cols())
            throw std::invalid_argument("Tensor::from_frames: inconsistent frame shapes");
        for (double v : f.storage()) t.data.push_back(static_cast<float>(v));
    }
    return t;
}

Mat<double> Tensor::to_matrix() const {
    if (dtype != Dtype::F32 || dims.size() != 2)
        throw std::invalid_argument("Tensor::to_matrix: need 2-D f32 tensor");
    Mat<double> m(dims[0], dims[1]);
    for (std::size_t i = 0; i < data.size(); ++i) m.storage()[i] = data[i];
    return m;
}

void write_tensor(const std::filesystem::path& path, const Tensor& tensor) {
    if (tensor.dims.empty() || tensor.dims.size() > 4)
        throw std::invalid_argument("write_tensor: ndim must be 1..4");
    for (auto d : tensor.dims)
        if (d == 0) throw std::invalid_argument("write_tensor: zero-sized dimension");
    if (tensor.dtype != Dtype::F32 && tensor.dtype != Dtype::C64)
        throw std::invalid_argument("write_tensor: unsupported dtype");
    if (tensor.data.size() != tensor.float_count())
        throw std::invalid_argument("write_tensor: payload size does not match dims");
    const std::uint64_t payload_bytes = static_cast<std::uint64_t>(tensor.data.size()) * 4;
    if (payload_bytes > kMaxPayloadBytes)
        throw std::invalid_argument("write_tensor: payload too large");

    std::string bytes;
    bytes.reserve(8 + tensor.dims.size() * 4 + payload_bytes + 4);
    bytes.append(kMagic, 4);
    put_u16(bytes, kVersion);
    bytes.push_back(static_cast<char>(tensor.dtype));
    bytes.push_back(static_cast<char>(tensor.dims.size()));
    for (auto d : tensor.dims) put_u32(bytes, d);

    const std::size_t payload_off = bytes.size();
    for (float v : tensor.data) put_u32(bytes, std::bit_cast<std::uint32_t>(v));

    const auto crc = crc32_of(reinterpret_cast<const unsigned char*>(bytes.data()) + payload_off,
                              bytes.size() - payload_off);
    put_u32(bytes, crc);
    atomic_write_bytes(path, bytes);
}

Tensor read_tensor(const std::filesystem::path& path) {
    const std::string bytes = read_all(path);
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
    const std::size_t n = bytes.size();

    if (n < 8) throw TruncationError("tensor file shorter than fixed header: " + path.string());
    if (std::memcmp(p, kMagic, 4) != 0)
        throw FormatError("bad magic in " + path.string());
    const std::uint16_t version = get_u16(p + 4);
    if (version != kVersion)
        throw UnsupportedVersionError("unsupported tensor version " + std::to_string(version));
    const std::uint8_t dtype_raw = p[6];
    if (dtype_raw > 1) throw FormatError("unknown dtype in " + path.string());
    const std::uint8_t ndim = p[7];
    if (ndim == 0 || ndim > 4) throw FormatError("ndim out of range in " + path.string());

    const std::size_t header_len = 8 + static_cast<std::size_t>(ndim) * 4;
    if (n < header_len) throw TruncationError("tensor header truncated: " + path.string());

    Tensor t;
    t.dtype = static_cast<Dtype>(dtype_raw);
    std::uint64_t elems = 1;
    for (std::uint8_t i = 0; i < ndim; ++i) {
        const std::uint32_t d = get_u32(p + 8 + i * 4);
        if (d == 0) throw FormatError("zero-sized dimension in " + path.string());
        t.dims.push_back(d);
        elems *= d;
        if (elems > kMaxPayloadBytes / 4)
            throw FormatError("declared tensor too large in " + path.string());
    }
    const std::uint64_t payload_bytes = elems * 4 * (t.dtype == Dtype::C64 ? 2 : 1);
    if (n != header_len + payload_bytes + 4)
        throw TruncationError("tensor length mismatch in " + path.string());

    const std::uint32_t expected = get_u32(p + header_len + payload_bytes);
    const std::uint32_t actual = crc32_of(p + header_len, payload_bytes);
    if (expected != actual)
        throw CorruptionError("payload CRC mismatch in " + path.string());

    t.data.resize(static_cast<std::size_t>(payload_bytes / 4));
    for (std::size_t i = 0; i < t.data.size(); ++i)
        t.data[i] = std::bit_cast<float>(get_u32(p + header_len + i * 4));
    return t;
}

void write_pgm(const std::filesystem::path& path, const Mat<std::uint8_t>& pixels) {
    if (pixels.empty()) throw std::invalid_argument("write_pgm: empty image");
    std::string bytes = "P5\n" + std::to_string(pixels.cols()) + " " +
                        std::to_string(pixels.rows()) + "\n255\n";
    bytes.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
    atomic_write_bytes(path, bytes);
}

Mat<std::uint8_t> read_pgm(const std::filesystem::path& path) {
    const std::string bytes = read_all(path);
    std::size_t pos = 0;
    auto next_token = [&]() -> std::string {
        while (pos < bytes.size()) {
            if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
                ++pos;
            } else if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
        const std::size_t start = pos;
        while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
        return bytes.substr(start, pos - start);
    };

    if (next_token() != "P5") throw FormatError("not a binary PGM: " + path.string());
    const unsigned long w = std::stoul(next_token());
    const unsigned long h = std::stoul(next_token());
    const unsigned long maxval = std::stoul(next_token());
    if (maxval != 255) throw FormatError("unsupported PGM maxval in " + path.string());
    ++pos;  // single whitespace after maxval
    if (bytes.size() - pos < w * h) throw TruncationError("PGM payload truncated: " + path.string());

    Mat<std::uint8_t> img(h, w);
    std::memcpy(img.data(), bytes.data() + pos, w * h);
    return img;
}

void write_ppm(const std::filesystem::path& path, const RgbImage& image) {
    if (image.empty()) throw std::invalid_argument("write_ppm: empty image");
    std::string bytes = "P6\n" + std::to_string(image.cols()) + " " +
                        std::to_string(image.rows()) + "\n255\n";
    bytes.reserve(bytes.size() + image.size() * 3);
    for (const auto& px : image.storage()) {
        bytes.push_back(static_cast<char>(px.r));
        bytes.push_back(static_cast<char>(px.g));
        bytes.push_back(static_cast<char>(px.b));
    }
    atomic_write_bytes(path, bytes);
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
    atomic_write_bytes(path, text);
}

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace radhar::io
