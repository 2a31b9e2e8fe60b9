#include "jpneo/resample.hpp"

#include <cmath>

namespace jpneo {

Plane subsample_plane_nearest(const Plane& p, int fy, int fx) {
    Plane out(p.h / fy, p.w / fx);
    for (int y = 0; y < out.h; ++y)
        for (int x = 0; x < out.w; ++x) out.at(y, x) = p.at(y * fy, x * fx);
    return out;
}

Plane upsample_plane_bilinear(const Plane& p, int dst_h, int dst_w) {
    if (p.h == dst_h && p.w == dst_w) return p;
    Plane out(dst_h, dst_w);
    const double sy = double(p.h) / dst_h;
    const double sx = double(p.w) / dst_w;
    for (int y = 0; y < dst_h; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        int y0 = int(std::floor(fy));
        double wy = fy - y0;
        int ya = clamp(y0, 0, p.h - 1), yb = clamp(y0 + 1, 0, p.h - 1);
        for (int x = 0; x < dst_w; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            int x0 = int(std::floor(fx));
            double wx = fx - x0;
            int xa = clamp(x0, 0, p.w - 1), xb = clamp(x0 + 1, 0, p.w - 1);
            out.at(y, x) = (1 - wy) * ((1 - wx) * p.at(ya, xa) + wx * p.at(ya, xb)) +
                           wy * ((1 - wx) * p.at(yb, xa) + wx * p.at(yb, xb));
        }
    }
    return out;
}

PlanarImage subsample_chroma(const PlanarImage& img, ChromaMode mode) {
    int r1, r2;
    mode_ratios(mode, r1, r2);
    PlanarImage out;
    out.mode = mode;
    out.orig_h = img.orig_h;
    out.orig_w = img.orig_w;
    out.y = img.y;
    if (img.mode != ChromaMode::YCC444) throw InvalidInput("subsample_chroma: input must be 4:4:4");
    out.cb = subsample_plane_nearest(img.cb, r1, r2);
    out.cr = subsample_plane_nearest(img.cr, r1, r2);
    return out;
}

PlanarImage upsample_chroma(const PlanarImage& img) {
    PlanarImage out;
    out.mode = ChromaMode::YCC444;
    out.orig_h = img.orig_h;
    out.orig_w = img.orig_w;
    out.y = img.y;
    out.cb = upsample_plane_bilinear(img.cb, img.y.h, img.y.w);
    out.cr = upsample_plane_bilinear(img.cr, img.y.h, img.y.w);
    return out;
}

}  // namespace jpneo
