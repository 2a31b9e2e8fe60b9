#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jpneo/color.hpp"
#include "jpneo/quant.hpp"
#include "jpneo/resample.hpp"

namespace jpneo {

// Baseline sequential JFIF: SOI, APP0, DQT, SOF0, DHT, SOS, EOI, with the
// standard's typical Huffman tables and no restart markers. Sampling factors
// in SOF0 carry the chroma mode; SOF0 dimensions carry the crop size.

struct DecodeResult {
    ImageU8 rgb;             // cropped to SOF dims, clamped
    BlockSpectrum spectrum;  // integer symbols, MCU-grid sized, plus tables
    ChromaMode mode = ChromaMode::YCC444;
    int height = 0, width = 0;
};

// In-memory encoder pipeline up to the symbols: pad, color-convert,
// subsample, DCT, quantize. Grids are cropped to the MCU grid implied by the
// image size, exactly matching what the bitstream carries.
BlockSpectrum spectral_path(const ImageU8& rgb, const QuantTablePair& tables, ChromaMode mode);
BlockSpectrum spectral_path_planar(const PlanarImage& sub, const QuantTablePair& tables);

// In-memory decoder pipeline: dequantize, IDCT, upsample chroma, color
// convert, crop, clamp.
ImageU8 reconstruct_rgb(const BlockSpectrum& spec, int out_h, int out_w);

std::vector<uint8_t> encode_jfif(const ImageU8& rgb, const QuantTablePair& tables, ChromaMode mode);
// Entry point for encoder-side planes that did not come from an 8-bit image
// (the learned encoder path). `sub` must be subsampled and padded.
std::vector<uint8_t> encode_planar_jfif(const PlanarImage& sub, const QuantTablePair& tables);

DecodeResult decode_jfif(const std::vector<uint8_t>& bytes);

std::vector<uint8_t> read_binary_file(const std::string& path);
void write_binary_file(const std::string& path, const std::vector<uint8_t>& bytes);

}  // namespace jpneo
