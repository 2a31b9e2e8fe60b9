#pragma once

#include "jpneo/image.hpp"

namespace jpneo {

// ITU-R BT.601 full-range conversion. The encoder-side transform clamps to
// [0,255] (Cb/Cr can reach 255.5 on saturated colors); the decoder-side
// inverse does not clamp -- callers clamp only when materializing 8-bit
// output, which keeps the analysis path exact.

inline void rgb_to_ycbcr_px(double r, double g, double b, double& y, double& cb, double& cr) {
    y = 0.299 * r + 0.587 * g + 0.114 * b;
    cb = -0.168735892 * r - 0.331264108 * g + 0.5 * b + 128.0;
    cr = 0.5 * r - 0.418687589 * g - 0.081312411 * b + 128.0;
    y = clamp(y, 0.0, 255.0);
    cb = clamp(cb, 0.0, 255.0);
    cr = clamp(cr, 0.0, 255.0);
}

inline void ycbcr_to_rgb_px(double y, double cb, double cr, double& r, double& g, double& b) {
    double u = cb - 128.0, v = cr - 128.0;
    r = y + 1.402 * v;
    g = y - 0.344136286 * u - 0.714136286 * v;
    b = y + 1.772 * u;
}

// 3-channel 8-bit RGB -> full-resolution Y/Cb/Cr planes (mode 4:4:4).
PlanarImage rgb_to_ycbcr(const ImageU8& img);

// Inverse of rgb_to_ycbcr; requires mode 4:4:4. Real-valued output planes
// packed as interleaved doubles (h*w*3), unclamped.
std::vector<double> ycbcr_to_rgb(const PlanarImage& img);

// Convenience: clamp + round a real RGB buffer into an 8-bit image.
ImageU8 quantize_rgb(const std::vector<double>& rgb, int h, int w);

}  // namespace jpneo
