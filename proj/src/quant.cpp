#include "jpneo/quant.hpp"

namespace jpneo {

const std::array<int, 64>& standard_luma_table() {
    static const std::array<int, 64> t = {
        16, 11, 10, 16, 24,  40,  51,  61,   //
        12, 12, 14, 19, 26,  58,  60,  55,   //
        14, 13, 16, 24, 40,  57,  69,  56,   //
        14, 17, 22, 29, 51,  87,  80,  62,   //
        18, 22, 37, 56, 68,  109, 103, 77,   //
        24, 35, 55, 64, 81,  104, 113, 92,   //
        49, 64, 78, 87, 103, 121, 120, 101,  //
        72, 92, 95, 98, 112, 100, 103, 99};
    return t;
}

const std::array<int, 64>& standard_chroma_table() {
    static const std::array<int, 64> t = {
        17, 18, 24, 47, 99, 99, 99, 99,  //
        18, 21, 26, 66, 99, 99, 99, 99,  //
        24, 26, 56, 99, 99, 99, 99, 99,  //
        47, 66, 99, 99, 99, 99, 99, 99,  //
        99, 99, 99, 99, 99, 99, 99, 99,  //
        99, 99, 99, 99, 99, 99, 99, 99,  //
        99, 99, 99, 99, 99, 99, 99, 99,  //
        99, 99, 99, 99, 99, 99, 99, 99};
    return t;
}

QuantTablePair quality_to_qtables(int q) {
    if (q < 0 || q > 100) throw InvalidInput("quality must be in [0,100]");
    int qq = q == 0 ? 1 : q;  // the scaling formula is undefined at 0
    int scale = qq < 50 ? 5000 / qq : 200 - 2 * qq;
    QuantTablePair out;
    out.origin = QuantTablePair::Origin::Standard;
    out.quality = q;
    for (int i = 0; i < 64; ++i) {
        out.luma[i] = clamp((standard_luma_table()[i] * scale + 50) / 100, 1, 255);
        out.chroma[i] = clamp((standard_chroma_table()[i] * scale + 50) / 100, 1, 255);
    }
    return out;
}

namespace {

CoeffPlane quantize_plane(const CoeffPlane& in, const std::array<int, 64>& table) {
    CoeffPlane out = in;
    size_t nblocks = size_t(in.blocks_h) * in.blocks_w;
    for (size_t b = 0; b < nblocks; ++b)
        for (int i = 0; i < 64; ++i)
            out.c[b * 64 + i] = round_half_away(in.c[b * 64 + i] / table[i]);
    return out;
}

CoeffPlane dequantize_plane(const CoeffPlane& in, const std::array<int, 64>& table) {
    CoeffPlane out = in;
    size_t nblocks = size_t(in.blocks_h) * in.blocks_w;
    for (size_t b = 0; b < nblocks; ++b)
        for (int i = 0; i < 64; ++i) out.c[b * 64 + i] = in.c[b * 64 + i] * table[i];
    return out;
}

}  // namespace

BlockSpectrum quantize(const CoeffPlane& y, const CoeffPlane& cb, const CoeffPlane& cr,
                       const QuantTablePair& tables, ChromaMode mode) {
    tables.validate();
    BlockSpectrum out;
    out.kind = BlockSpectrum::Kind::Quantized;
    out.mode = mode;
    out.tables = tables;
    out.y = quantize_plane(y, tables.luma);
    out.cb = quantize_plane(cb, tables.chroma);
    out.cr = quantize_plane(cr, tables.chroma);
    return out;
}

BlockSpectrum dequantize(const BlockSpectrum& spec) {
    if (spec.kind != BlockSpectrum::Kind::Quantized)
        throw InvalidInput("dequantize: spectrum is already dequantized");
    BlockSpectrum out = spec;
    out.kind = BlockSpectrum::Kind::Dequantized;
    out.y = dequantize_plane(spec.y, spec.tables.luma);
    out.cb = dequantize_plane(spec.cb, spec.tables.chroma);
    out.cr = dequantize_plane(spec.cr, spec.tables.chroma);
    return out;
}

double bits_per_pixel(size_t byte_count, int h, int w) {
    if (h <= 0 || w <= 0) throw InvalidInput("bits_per_pixel: zero-area image");
    return 8.0 * double(byte_count) / (double(h) * double(w));
}

}  // namespace jpneo
