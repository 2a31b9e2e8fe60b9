#pragma once

#include <array>
#include <cstdint>

#include "jpneo/dct.hpp"
#include "jpneo/image.hpp"

namespace jpneo {

// Luma + chroma 8x8 quantization tables, raster order, entries in [1,255].
struct QuantTablePair {
    enum class Origin { Standard, Learned };

    std::array<int, 64> luma{};
    std::array<int, 64> chroma{};
    Origin origin = Origin::Standard;
    int quality = 0;        // valid when origin == Standard
    double lambda = 0.0;    // valid when origin == Learned

    void validate() const {
        for (int i = 0; i < 64; ++i)
            if (luma[i] < 1 || luma[i] > 255 || chroma[i] < 1 || chroma[i] > 255)
                throw InvalidInput("quantization table entry outside [1,255]");
    }
    bool operator==(const QuantTablePair& o) const { return luma == o.luma && chroma == o.chroma; }
};

// The standard's example tables (quality 50 baseline).
const std::array<int, 64>& standard_luma_table();
const std::array<int, 64>& standard_chroma_table();

// IJG quality scaling. q in [0,100]; q=0 is treated as q=1.
QuantTablePair quality_to_qtables(int q);

// Per-plane 8x8 coefficient blocks, either integer symbols or the exact
// dequantized reals (symbol * step).
struct BlockSpectrum {
    enum class Kind { Quantized, Dequantized };

    Kind kind = Kind::Quantized;
    ChromaMode mode = ChromaMode::YCC444;
    CoeffPlane y, cb, cr;
    QuantTablePair tables;
};

// symbol = round(coeff / step), half away from zero
BlockSpectrum quantize(const CoeffPlane& y, const CoeffPlane& cb, const CoeffPlane& cr,
                       const QuantTablePair& tables, ChromaMode mode);
BlockSpectrum dequantize(const BlockSpectrum& spec);

// 8 * |bytes| / (H*W)
double bits_per_pixel(size_t byte_count, int h, int w);

}  // namespace jpneo
