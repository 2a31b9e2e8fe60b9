#include "jpneo/color.hpp"

namespace jpneo {

PlanarImage rgb_to_ycbcr(const ImageU8& img) {
    if (img.channels != 3) throw InvalidInput("rgb_to_ycbcr: need a 3-channel image");
    PlanarImage out;
    out.mode = ChromaMode::YCC444;
    out.orig_h = img.h;
    out.orig_w = img.w;
    out.y = Plane(img.h, img.w);
    out.cb = Plane(img.h, img.w);
    out.cr = Plane(img.h, img.w);
    for (int y = 0; y < img.h; ++y)
        for (int x = 0; x < img.w; ++x) {
            double yy, cb, cr;
            rgb_to_ycbcr_px(img.at(y, x, 0), img.at(y, x, 1), img.at(y, x, 2), yy, cb, cr);
            out.y.at(y, x) = yy;
            out.cb.at(y, x) = cb;
            out.cr.at(y, x) = cr;
        }
    return out;
}

std::vector<double> ycbcr_to_rgb(const PlanarImage& img) {
    if (img.mode != ChromaMode::YCC444) throw InvalidInput("ycbcr_to_rgb: planes must be 4:4:4");
    std::vector<double> rgb(size_t(img.y.h) * img.y.w * 3);
    for (int y = 0; y < img.y.h; ++y)
        for (int x = 0; x < img.y.w; ++x) {
            double r, g, b;
            ycbcr_to_rgb_px(img.y.at(y, x), img.cb.at(y, x), img.cr.at(y, x), r, g, b);
            size_t i = (size_t(y) * img.y.w + x) * 3;
            rgb[i] = r;
            rgb[i + 1] = g;
            rgb[i + 2] = b;
        }
    return rgb;
}

ImageU8 quantize_rgb(const std::vector<double>& rgb, int h, int w) {
    if (rgb.size() != size_t(h) * w * 3) throw InvalidInput("quantize_rgb: size mismatch");
    ImageU8 out(h, w, 3);
    for (size_t i = 0; i < rgb.size(); ++i) out.data[i] = to_u8(rgb[i]);
    return out;
}

}  // namespace jpneo
