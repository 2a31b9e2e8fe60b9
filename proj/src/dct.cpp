#include "jpneo/dct.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace jpneo {

const int kZigzag[64] = {
    0,  1,  8,  16, 9,  2,  3,  10, 17, 24, 32, 25, 18, 11, 4,  5,   //
    12, 19, 26, 33, 40, 48, 41, 34, 27, 20, 13, 6,  7,  14, 21, 28,  //
    35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23, 30, 37, 44, 51,  //
    58, 59, 52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63};

const std::vector<double>& dct_basis(int n) {
    static std::map<int, std::vector<double>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<double> c(size_t(n) * n);
    const double pi = 3.14159265358979323846;
    for (int u = 0; u < n; ++u) {
        double cu = (u == 0) ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
        for (int x = 0; x < n; ++x) c[size_t(u) * n + x] = cu * std::cos((2 * x + 1) * u * pi / (2 * n));
    }
    return cache.emplace(n, std::move(c)).first->second;
}

// out = C * in * C^T (fixed ascending-k loops so both codec paths share
// bit-identical arithmetic)
void dctn_forward(int n, const double* in, double* out) {
    const double* C = dct_basis(n).data();
    std::vector<double> tmp(size_t(n) * n);
    for (int u = 0; u < n; ++u)
        for (int x = 0; x < n; ++x) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += C[u * n + k] * in[k * n + x];
            tmp[u * n + x] = s;
        }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += tmp[u * n + k] * C[v * n + k];
            out[u * n + v] = s;
        }
}

// out = C^T * in * C
void dctn_inverse(int n, const double* in, double* out) {
    const double* C = dct_basis(n).data();
    std::vector<double> tmp(size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int v = 0; v < n; ++v) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += C[k * n + x] * in[k * n + v];
            tmp[x * n + v] = s;
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += tmp[x * n + k] * C[k * n + y];
            out[x * n + y] = s;
        }
}

void dct8_forward_block(const double in[64], double out[64]) {
    double shifted[64];
    for (int i = 0; i < 64; ++i) shifted[i] = in[i] - 128.0;
    dctn_forward(8, shifted, out);
}

void dct8_inverse_block(const double in[64], double out[64]) {
    dctn_inverse(8, in, out);
    for (int i = 0; i < 64; ++i) out[i] += 128.0;
}

CoeffPlane forward_dct8(const Plane& plane) {
    if (plane.h % 8 != 0 || plane.w % 8 != 0)
        throw InvalidInput("forward_dct8: plane dims must be multiples of 8");
    CoeffPlane out;
    out.blocks_h = plane.h / 8;
    out.blocks_w = plane.w / 8;
    out.c.resize(size_t(out.blocks_h) * out.blocks_w * 64);
    double block[64];
    for (int by = 0; by < out.blocks_h; ++by)
        for (int bx = 0; bx < out.blocks_w; ++bx) {
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) block[i * 8 + j] = plane.at(by * 8 + i, bx * 8 + j);
            dct8_forward_block(block, out.block(by, bx));
        }
    return out;
}

Plane inverse_dct8(const CoeffPlane& coeffs) {
    Plane out(coeffs.blocks_h * 8, coeffs.blocks_w * 8);
    double block[64];
    for (int by = 0; by < coeffs.blocks_h; ++by)
        for (int bx = 0; bx < coeffs.blocks_w; ++bx) {
            dct8_inverse_block(coeffs.block(by, bx), block);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) out.at(by * 8 + i, bx * 8 + j) = block[i * 8 + j];
        }
    return out;
}

}  // namespace jpneo
