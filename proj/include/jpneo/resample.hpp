#pragma once

#include "jpneo/image.hpp"

namespace jpneo {

// Nearest-neighbor decimation, top-left sample of each group.
Plane subsample_plane_nearest(const Plane& p, int fy, int fx);

// Bilinear with pixel-center alignment; source edges are clamped.
Plane upsample_plane_bilinear(const Plane& p, int dst_h, int dst_w);

// Chroma resampling at the image level. Luma is never touched.
PlanarImage subsample_chroma(const PlanarImage& img, ChromaMode mode);
PlanarImage upsample_chroma(const PlanarImage& img);  // -> 4:4:4

}  // namespace jpneo
