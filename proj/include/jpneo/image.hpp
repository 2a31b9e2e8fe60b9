#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jpneo/common.hpp"

namespace jpneo {

// Interleaved 8-bit image, row-major, `channels` samples per pixel.
struct ImageU8 {
    int h = 0, w = 0, channels = 0;
    std::vector<uint8_t> data;

    ImageU8() = default;
    ImageU8(int h, int w, int channels)
        : h(h), w(w), channels(channels), data(size_t(h) * w * channels, 0) {}

    uint8_t& at(int y, int x, int c) { return data[(size_t(y) * w + x) * channels + c]; }
    uint8_t at(int y, int x, int c) const { return data[(size_t(y) * w + x) * channels + c]; }
};

// Real-valued single plane, row-major.
struct Plane {
    int h = 0, w = 0;
    std::vector<double> v;

    Plane() = default;
    Plane(int h, int w) : h(h), w(w), v(size_t(h) * w, 0.0) {}
    Plane(int h, int w, double fill) : h(h), w(w), v(size_t(h) * w, fill) {}

    double& at(int y, int x) { return v[size_t(y) * w + x]; }
    double at(int y, int x) const { return v[size_t(y) * w + x]; }
};

enum class ChromaMode { YCC444, YCC422, YCC420 };

inline const char* mode_name(ChromaMode m) {
    switch (m) {
        case ChromaMode::YCC444: return "4:4:4";
        case ChromaMode::YCC422: return "4:2:2";
        default: return "4:2:0";
    }
}

// (r1, r2) = height/width ratio of the chroma planes relative to luma.
inline void mode_ratios(ChromaMode m, int& r1_den, int& r2_den) {
    // denominators: chroma dim = luma dim / r_den
    r1_den = (m == ChromaMode::YCC420) ? 2 : 1;
    r2_den = (m == ChromaMode::YCC444) ? 1 : 2;
}

// Y/Cb/Cr planes with an explicit subsampling mode. Plane dimensions are
// padded to multiples of 16; orig_h/orig_w remember the displayed size so
// outputs can be cropped back.
struct PlanarImage {
    Plane y, cb, cr;
    ChromaMode mode = ChromaMode::YCC444;
    int orig_h = 0, orig_w = 0;

    void check_dims() const {
        int r1, r2;
        mode_ratios(mode, r1, r2);
        if (cb.h != y.h / r1 || cb.w != y.w / r2 || cr.h != cb.h || cr.w != cb.w)
            throw InvalidInput("plane dimensions do not match subsampling mode");
    }
};

// PPM (P6, maxval 255) I/O -- the raw-image interchange format of the tools.
ImageU8 read_ppm(const std::string& path);
void write_ppm(const std::string& path, const ImageU8& img);

// Edge-replication padding to multiples of `mult` in both axes.
ImageU8 pad_to_multiple(const ImageU8& img, int mult);

}  // namespace jpneo
