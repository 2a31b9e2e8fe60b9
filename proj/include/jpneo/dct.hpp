#pragma once

#include <array>
#include <vector>

#include "jpneo/image.hpp"

namespace jpneo {

// Orthonormal type-II 2D DCT. With this scaling an 8x8 block of constant
// value v (level-shifted by -128) has DC = 8*(v-128) and zero AC, which is
// the convention the quantization tables are defined against.

// Basis matrix C[u][x] = c_u * cos((2x+1) u pi / 2N), c_0 = sqrt(1/N),
// c_u = sqrt(2/N). Cached per N.
const std::vector<double>& dct_basis(int n);

// Pure linear transforms on an n*n block (row-major), no level shift.
void dctn_forward(int n, const double* in, double* out);
void dctn_inverse(int n, const double* in, double* out);

// JPEG block transforms: level shift by -128 before the forward DCT,
// undo it after the inverse.
void dct8_forward_block(const double in[64], double out[64]);
void dct8_inverse_block(const double in[64], double out[64]);

// Blocked per-plane transforms. The plane must already be padded to a
// multiple of 8; blocks are stored block-major, 64 coefficients each.
struct CoeffPlane {
    int blocks_h = 0, blocks_w = 0;
    std::vector<double> c;  // (blocks_h*blocks_w) * 64

    double* block(int by, int bx) { return c.data() + (size_t(by) * blocks_w + bx) * 64; }
    const double* block(int by, int bx) const {
        return c.data() + (size_t(by) * blocks_w + bx) * 64;
    }
};

CoeffPlane forward_dct8(const Plane& plane);
Plane inverse_dct8(const CoeffPlane& coeffs);

// zigzag[i] = raster index of the i-th coefficient in zigzag order
extern const int kZigzag[64];

}  // namespace jpneo
