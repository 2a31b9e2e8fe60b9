#include "jpneo/jfif.hpp"

#include <cstring>
#include <fstream>

namespace jpneo {

namespace {

// ---------------------------------------------------------------- tables --

struct HuffSpec {
    uint8_t counts[17];  // counts[1..16]
    std::vector<uint8_t> values;
};

const HuffSpec& dc_luma_spec() {
    static const HuffSpec s = {{0, 0, 1, 5, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0},
                               {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
    return s;
}

const HuffSpec& dc_chroma_spec() {
    static const HuffSpec s = {{0, 0, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
                               {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
    return s;
}

const HuffSpec& ac_luma_spec() {
    static const HuffSpec s = {
        {0, 0, 2, 1, 3, 3, 2, 4, 3, 5, 5, 4, 4, 0, 0, 1, 0x7d},
        {0x01, 0x02, 0x03, 0x00, 0x04, 0x11, 0x05, 0x12, 0x21, 0x31, 0x41, 0x06, 0x13, 0x51,
         0x61, 0x07, 0x22, 0x71, 0x14, 0x32, 0x81, 0x91, 0xa1, 0x08, 0x23, 0x42, 0xb1, 0xc1,
         0x15, 0x52, 0xd1, 0xf0, 0x24, 0x33, 0x62, 0x72, 0x82, 0x09, 0x0a, 0x16, 0x17, 0x18,
         0x19, 0x1a, 0x25, 0x26, 0x27, 0x28, 0x29, 0x2a, 0x34, 0x35, 0x36, 0x37, 0x38, 0x39,
         0x3a, 0x43, 0x44, 0x45, 0x46, 0x47, 0x48, 0x49, 0x4a, 0x53, 0x54, 0x55, 0x56, 0x57,
         0x58, 0x59, 0x5a, 0x63, 0x64, 0x65, 0x66, 0x67, 0x68, 0x69, 0x6a, 0x73, 0x74, 0x75,
         0x76, 0x77, 0x78, 0x79, 0x7a, 0x83, 0x84, 0x85, 0x86, 0x87, 0x88, 0x89, 0x8a, 0x92,
         0x93, 0x94, 0x95, 0x96, 0x97, 0x98, 0x99, 0x9a, 0xa2, 0xa3, 0xa4, 0xa5, 0xa6, 0xa7,
         0xa8, 0xa9, 0xaa, 0xb2, 0xb3, 0xb4, 0xb5, 0xb6, 0xb7, 0xb8, 0xb9, 0xba, 0xc2, 0xc3,
         0xc4, 0xc5, 0xc6, 0xc7, 0xc8, 0xc9, 0xca, 0xd2, 0xd3, 0xd4, 0xd5, 0xd6, 0xd7, 0xd8,
         0xd9, 0xda, 0xe1, 0xe2, 0xe3, 0xe4, 0xe5, 0xe6, 0xe7, 0xe8, 0xe9, 0xea, 0xf1, 0xf2,
         0xf3, 0xf4, 0xf5, 0xf6, 0xf7, 0xf8, 0xf9, 0xfa}};
    return s;
}

const HuffSpec& ac_chroma_spec() {
    static const HuffSpec s = {
        {0, 0, 2, 1, 2, 4, 4, 3, 4, 7, 5, 4, 4, 0, 1, 2, 0x77},
        {0x00, 0x01, 0x02, 0x03, 0x11, 0x04, 0x05, 0x21, 0x31, 0x06, 0x12, 0x41, 0x51, 0x07,
         0x61, 0x71, 0x13, 0x22, 0x32, 0x81, 0x08, 0x14, 0x42, 0x91, 0xa1, 0xb1, 0xc1, 0x09,
         0x23, 0x33, 0x52, 0xf0, 0x15, 0x62, 0x72, 0xd1, 0x0a, 0x16, 0x24, 0x34, 0xe1, 0x25,
         0xf1, 0x17, 0x18, 0x19, 0x1a, 0x26, 0x27, 0x28, 0x29, 0x2a, 0x35, 0x36, 0x37, 0x38,
         0x39, 0x3a, 0x43, 0x44, 0x45, 0x46, 0x47, 0x48, 0x49, 0x4a, 0x53, 0x54, 0x55, 0x56,
         0x57, 0x58, 0x59, 0x5a, 0x63, 0x64, 0x65, 0x66, 0x67, 0x68, 0x69, 0x6a, 0x73, 0x74,
         0x75, 0x76, 0x77, 0x78, 0x79, 0x7a, 0x82, 0x83, 0x84, 0x85, 0x86, 0x87, 0x88, 0x89,
         0x8a, 0x92, 0x93, 0x94, 0x95, 0x96, 0x97, 0x98, 0x99, 0x9a, 0xa2, 0xa3, 0xa4, 0xa5,
         0xa6, 0xa7, 0xa8, 0xa9, 0xaa, 0xb2, 0xb3, 0xb4, 0xb5, 0xb6, 0xb7, 0xb8, 0xb9, 0xba,
         0xc2, 0xc3, 0xc4, 0xc5, 0xc6, 0xc7, 0xc8, 0xc9, 0xca, 0xd2, 0xd3, 0xd4, 0xd5, 0xd6,
         0xd7, 0xd8, 0xd9, 0xda, 0xe2, 0xe3, 0xe4, 0xe5, 0xe6, 0xe7, 0xe8, 0xe9, 0xea, 0xf2,
         0xf3, 0xf4, 0xf5, 0xf6, 0xf7, 0xf8, 0xf9, 0xfa}};
    return s;
}

// Canonical code assignment shared by encoder and decoder.
struct HuffCodes {
    uint16_t code[256];
    uint8_t length[256];  // 0 = symbol absent
};

HuffCodes build_codes(const HuffSpec& spec) {
    HuffCodes t{};
    std::memset(t.length, 0, sizeof(t.length));
    uint32_t code = 0;
    size_t k = 0;
    for (int len = 1; len <= 16; ++len) {
        for (int i = 0; i < spec.counts[len]; ++i, ++k) {
            uint8_t sym = spec.values[k];
            t.code[sym] = uint16_t(code);
            t.length[sym] = uint8_t(len);
            ++code;
        }
        code <<= 1;
    }
    return t;
}

int bit_size(int v) {
    int a = v < 0 ? -v : v;
    int n = 0;
    while (a) {
        ++n;
        a >>= 1;
    }
    return n;
}

// ------------------------------------------------------------- bit writer --

class BitWriter {
public:
    explicit BitWriter(std::vector<uint8_t>& out) : out_(out) {}

    void put(uint32_t bits, int n) {
        acc_ = (acc_ << n) | (bits & ((1u << n) - 1));
        nbits_ += n;
        while (nbits_ >= 8) {
            uint8_t b = uint8_t(acc_ >> (nbits_ - 8));
            out_.push_back(b);
            if (b == 0xff) out_.push_back(0x00);  // byte stuffing
            nbits_ -= 8;
        }
    }

    void flush() {
        if (nbits_ > 0) put(0x7f, 7 - ((nbits_ + 7) % 8));  // pad with 1s to a byte
    }

private:
    std::vector<uint8_t>& out_;
    uint64_t acc_ = 0;
    int nbits_ = 0;
};

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(uint8_t(v >> 8));
    out.push_back(uint8_t(v & 0xff));
}

void put_marker(std::vector<uint8_t>& out, uint8_t id) {
    out.push_back(0xff);
    out.push_back(id);
}

// --------------------------------------------------------------- geometry --

struct McuLayout {
    int mcu_h = 8, mcu_w = 8;       // pixels per MCU, luma grid
    int comp_h[3] = {1, 1, 1};      // horizontal sampling factors
    int comp_v[3] = {1, 1, 1};
    int mcu_rows = 0, mcu_cols = 0;
};

McuLayout layout_for(ChromaMode mode, int h, int w) {
    McuLayout l;
    switch (mode) {
        case ChromaMode::YCC444: l = {8, 8, {1, 1, 1}, {1, 1, 1}, 0, 0}; break;
        case ChromaMode::YCC422: l = {8, 16, {2, 1, 1}, {1, 1, 1}, 0, 0}; break;
        case ChromaMode::YCC420: l = {16, 16, {2, 1, 1}, {2, 1, 1}, 0, 0}; break;
    }
    l.mcu_rows = (h + l.mcu_h - 1) / l.mcu_h;
    l.mcu_cols = (w + l.mcu_w - 1) / l.mcu_w;
    return l;
}

CoeffPlane crop_blocks(const CoeffPlane& in, int bh, int bw) {
    if (in.blocks_h == bh && in.blocks_w == bw) return in;
    if (in.blocks_h < bh || in.blocks_w < bw)
        throw InvalidInput("coefficient grid smaller than MCU grid");
    CoeffPlane out;
    out.blocks_h = bh;
    out.blocks_w = bw;
    out.c.resize(size_t(bh) * bw * 64);
    for (int by = 0; by < bh; ++by)
        for (int bx = 0; bx < bw; ++bx)
            std::memcpy(out.block(by, bx), in.block(by, bx), 64 * sizeof(double));
    return out;
}

}  // namespace

// ----------------------------------------------------------------- encode --

BlockSpectrum spectral_path_planar(const PlanarImage& sub, const QuantTablePair& tables) {
    sub.check_dims();
    McuLayout l = layout_for(sub.mode, sub.orig_h, sub.orig_w);
    CoeffPlane y = forward_dct8(sub.y);
    CoeffPlane cb = forward_dct8(sub.cb);
    CoeffPlane cr = forward_dct8(sub.cr);
    y = crop_blocks(y, l.mcu_rows * l.comp_v[0], l.mcu_cols * l.comp_h[0]);
    cb = crop_blocks(cb, l.mcu_rows, l.mcu_cols);
    cr = crop_blocks(cr, l.mcu_rows, l.mcu_cols);
    return quantize(y, cb, cr, tables, sub.mode);
}

BlockSpectrum spectral_path(const ImageU8& rgb, const QuantTablePair& tables, ChromaMode mode) {
    ImageU8 padded = pad_to_multiple(rgb, 16);
    PlanarImage full = rgb_to_ycbcr(padded);
    full.orig_h = rgb.h;
    full.orig_w = rgb.w;
    PlanarImage sub = subsample_chroma(full, mode);
    return spectral_path_planar(sub, tables);
}

ImageU8 reconstruct_rgb(const BlockSpectrum& spec, int out_h, int out_w) {
    const BlockSpectrum* deq = &spec;
    BlockSpectrum storage;
    if (spec.kind == BlockSpectrum::Kind::Quantized) {
        storage = dequantize(spec);
        deq = &storage;
    }
    PlanarImage rec;
    rec.mode = ChromaMode::YCC444;
    rec.orig_h = out_h;
    rec.orig_w = out_w;
    rec.y = inverse_dct8(deq->y);
    rec.cb = upsample_plane_bilinear(inverse_dct8(deq->cb), rec.y.h, rec.y.w);
    rec.cr = upsample_plane_bilinear(inverse_dct8(deq->cr), rec.y.h, rec.y.w);
    std::vector<double> rgb = ycbcr_to_rgb(rec);
    ImageU8 out(out_h, out_w, 3);
    for (int y = 0; y < out_h; ++y)
        for (int x = 0; x < out_w; ++x)
            for (int c = 0; c < 3; ++c)
                out.at(y, x, c) = to_u8(rgb[(size_t(y) * rec.y.w + x) * 3 + c]);
    return out;
}

namespace {

void write_headers(std::vector<uint8_t>& out, const QuantTablePair& tables, ChromaMode mode,
                   int h, int w) {
    McuLayout l = layout_for(mode, h, w);

    put_marker(out, 0xd8);  // SOI

    put_marker(out, 0xe0);  // APP0 / JFIF
    put_u16(out, 16);
    const char jfif[5] = {'J', 'F', 'I', 'F', 0};
    out.insert(out.end(), jfif, jfif + 5);
    out.push_back(1);  // version 1.01
    out.push_back(1);
    out.push_back(0);  // aspect-ratio units
    put_u16(out, 1);
    put_u16(out, 1);
    out.push_back(0);  // no thumbnail
    out.push_back(0);

    put_marker(out, 0xdb);  // DQT, both tables in one segment, zigzag order
    put_u16(out, 2 + 2 * 65);
    out.push_back(0x00);
    for (int i = 0; i < 64; ++i) out.push_back(uint8_t(tables.luma[kZigzag[i]]));
    out.push_back(0x01);
    for (int i = 0; i < 64; ++i) out.push_back(uint8_t(tables.chroma[kZigzag[i]]));

    put_marker(out, 0xc0);  // SOF0, baseline sequential
    put_u16(out, 8 + 3 * 3);
    out.push_back(8);  // precision
    put_u16(out, uint16_t(h));
    put_u16(out, uint16_t(w));
    out.push_back(3);
    for (int c = 0; c < 3; ++c) {
        out.push_back(uint8_t(c + 1));
        out.push_back(uint8_t((l.comp_h[c] << 4) | l.comp_v[c]));
        out.push_back(c == 0 ? 0 : 1);
    }

    // DHT: all four typical tables in one segment
    const HuffSpec* specs[4] = {&dc_luma_spec(), &ac_luma_spec(), &dc_chroma_spec(),
                                &ac_chroma_spec()};
    const uint8_t ids[4] = {0x00, 0x10, 0x01, 0x11};
    size_t len = 2;
    for (auto* s : specs) len += 1 + 16 + s->values.size();
    put_marker(out, 0xc4);
    put_u16(out, uint16_t(len));
    for (int t = 0; t < 4; ++t) {
        out.push_back(ids[t]);
        for (int i = 1; i <= 16; ++i) out.push_back(specs[t]->counts[i]);
        out.insert(out.end(), specs[t]->values.begin(), specs[t]->values.end());
    }

    put_marker(out, 0xda);  // SOS
    put_u16(out, 12);
    out.push_back(3);
    for (int c = 0; c < 3; ++c) {
        out.push_back(uint8_t(c + 1));
        out.push_back(c == 0 ? 0x00 : 0x11);
    }
    out.push_back(0);   // Ss
    out.push_back(63);  // Se
    out.push_back(0);   // Ah/Al
}

void encode_block(BitWriter& bw, const double* block, int& pred, const HuffCodes& dc,
                  const HuffCodes& ac) {
    int coef[64];
    for (int i = 0; i < 64; ++i) {
        // baseline symbols must fit the typical tables' 10-bit AC / 11-bit DC
        // amplitude range; only adversarial inputs at unit steps exceed it
        coef[i] = int(clamp(block[kZigzag[i]], -1023.0, 1023.0));
    }

    int diff = coef[0] - pred;
    pred = coef[0];
    int s = bit_size(diff);
    bw.put(dc.code[s], dc.length[s]);
    if (s) bw.put(uint32_t(diff < 0 ? diff - 1 : diff), s);

    int run = 0;
    for (int i = 1; i < 64; ++i) {
        if (coef[i] == 0) {
            ++run;
            continue;
        }
        while (run >= 16) {
            bw.put(ac.code[0xf0], ac.length[0xf0]);  // ZRL
            run -= 16;
        }
        int sz = bit_size(coef[i]);
        uint8_t sym = uint8_t((run << 4) | sz);
        bw.put(ac.code[sym], ac.length[sym]);
        bw.put(uint32_t(coef[i] < 0 ? coef[i] - 1 : coef[i]), sz);
        run = 0;
    }
    if (run > 0) bw.put(ac.code[0x00], ac.length[0x00]);  // EOB
}

}  // namespace

std::vector<uint8_t> encode_planar_jfif(const PlanarImage& sub, const QuantTablePair& tables) {
    BlockSpectrum spec = spectral_path_planar(sub, tables);
    McuLayout l = layout_for(sub.mode, sub.orig_h, sub.orig_w);

    std::vector<uint8_t> out;
    write_headers(out, tables, sub.mode, sub.orig_h, sub.orig_w);

    HuffCodes dcl = build_codes(dc_luma_spec()), acl = build_codes(ac_luma_spec());
    HuffCodes dcc = build_codes(dc_chroma_spec()), acc = build_codes(ac_chroma_spec());

    BitWriter bw(out);
    int pred[3] = {0, 0, 0};
    const CoeffPlane* planes[3] = {&spec.y, &spec.cb, &spec.cr};
    for (int my = 0; my < l.mcu_rows; ++my)
        for (int mx = 0; mx < l.mcu_cols; ++mx)
            for (int c = 0; c < 3; ++c)
                for (int v = 0; v < l.comp_v[c]; ++v)
                    for (int hh = 0; hh < l.comp_h[c]; ++hh) {
                        const double* blk =
                            planes[c]->block(my * l.comp_v[c] + v, mx * l.comp_h[c] + hh);
                        encode_block(bw, blk, pred[c], c == 0 ? dcl : dcc, c == 0 ? acl : acc);
                    }
    bw.flush();
    put_marker(out, 0xd9);  // EOI
    return out;
}

std::vector<uint8_t> encode_jfif(const ImageU8& rgb, const QuantTablePair& tables,
                                 ChromaMode mode) {
    if (rgb.channels != 3) throw InvalidInput("encode_jfif: need a 3-channel image");
    ImageU8 padded = pad_to_multiple(rgb, 16);
    PlanarImage full = rgb_to_ycbcr(padded);
    full.orig_h = rgb.h;
    full.orig_w = rgb.w;
    PlanarImage sub = subsample_chroma(full, mode);
    return encode_planar_jfif(sub, tables);
}

// ----------------------------------------------------------------- decode --

namespace {

struct HuffDecoder {
    int mincode[17], maxcode[17], valptr[17];
    std::vector<uint8_t> values;
    bool ready = false;

    void build(const uint8_t counts[17], std::vector<uint8_t> vals) {
        values = std::move(vals);
        int code = 0, k = 0;
        for (int len = 1; len <= 16; ++len) {
            if (counts[len]) {
                valptr[len] = k;
                mincode[len] = code;
                code += counts[len];
                k += counts[len];
                maxcode[len] = code - 1;
            } else {
                maxcode[len] = -1;
            }
            code <<= 1;
        }
        ready = true;
    }
};

class BitReader {
public:
    BitReader(const std::vector<uint8_t>& data, size_t pos) : data_(data), pos_(pos) {}

    int next_bit() {
        if (nbits_ == 0) refill();
        --nbits_;
        return int((acc_ >> nbits_) & 1);
    }

    int receive(int n) {
        int v = 0;
        for (int i = 0; i < n; ++i) v = (v << 1) | next_bit();
        return v;
    }

    // align to byte boundary and consume an expected RSTn marker
    void sync_restart(size_t& offset_out) {
        nbits_ = 0;
        acc_ = 0;
        if (pos_ + 1 >= data_.size() || data_[pos_] != 0xff || data_[pos_ + 1] < 0xd0 ||
            data_[pos_ + 1] > 0xd7)
            throw ParseError("expected restart marker in entropy data", pos_);
        offset_out = pos_;
        pos_ += 2;
    }

    size_t pos() const { return pos_; }

private:
    void refill() {
        if (pos_ >= data_.size()) throw ParseError("truncated entropy segment", pos_);
        uint8_t b = data_[pos_++];
        if (b == 0xff) {
            if (pos_ >= data_.size()) throw ParseError("truncated entropy segment", pos_);
            uint8_t m = data_[pos_];
            if (m == 0x00) {
                ++pos_;  // stuffed 0xff
            } else if (m == 0xd9) {
                // hit EOI mid-block: let the caller's error surface
                throw ParseError("entropy data ended at EOI before scan completed", pos_ - 1);
            } else {
                throw ParseError("unexpected marker inside entropy data", pos_ - 1);
            }
        }
        acc_ = b;
        nbits_ = 8;
    }

    const std::vector<uint8_t>& data_;
    size_t pos_;
    uint32_t acc_ = 0;
    int nbits_ = 0;
};

int huff_decode(BitReader& br, const HuffDecoder& t) {
    int code = br.next_bit();
    int len = 1;
    while (code > t.maxcode[len]) {
        if (++len > 16) throw ParseError("invalid huffman code", br.pos());
        code = (code << 1) | br.next_bit();
    }
    return t.values[size_t(t.valptr[len] + code - t.mincode[len])];
}

int extend(int v, int t) { return (t && v < (1 << (t - 1))) ? v - (1 << t) + 1 : v; }

struct Parser {
    const std::vector<uint8_t>& d;
    size_t p = 0;

    explicit Parser(const std::vector<uint8_t>& data) : d(data) {}

    uint8_t u8() {
        if (p >= d.size()) throw ParseError("unexpected end of stream", p);
        return d[p++];
    }
    uint16_t u16() {
        uint16_t hi = u8();
        return uint16_t((hi << 8) | u8());
    }
};

}  // namespace

DecodeResult decode_jfif(const std::vector<uint8_t>& bytes) {
    Parser ps(bytes);
    if (ps.u8() != 0xff || ps.u8() != 0xd8) throw ParseError("missing SOI marker", 0);

    std::array<int, 64> qtab[4];
    bool have_q[4] = {false, false, false, false};
    HuffDecoder dc_tab[4], ac_tab[4];
    int restart_interval = 0;

    int height = 0, width = 0;
    struct Comp {
        int id, h, v, tq, td, ta;
    };
    std::vector<Comp> comps;
    bool have_sof = false;

    while (true) {
        size_t marker_at = ps.p;
        uint8_t ff = ps.u8();
        if (ff != 0xff) throw ParseError("expected marker byte 0xff", marker_at);
        uint8_t m = ps.u8();
        while (m == 0xff) m = ps.u8();  // fill bytes are legal

        if (m == 0xd9) throw ParseError("EOI before SOS", marker_at);
        if (m == 0x01 || (m >= 0xd0 && m <= 0xd7)) continue;  // TEM/RSTn: no payload

        size_t seg_at = ps.p;
        uint16_t seg_len = ps.u16();
        if (seg_len < 2) throw ParseError("segment length too small", seg_at);
        size_t seg_end = seg_at + seg_len;
        if (seg_end > bytes.size()) throw ParseError("segment extends past end of stream", seg_at);

        if (m == 0xdb) {  // DQT
            while (ps.p < seg_end) {
                uint8_t pq_tq = ps.u8();
                int pq = pq_tq >> 4, tq = pq_tq & 15;
                if (tq > 3) throw ParseError("DQT: bad table id", ps.p - 1);
                for (int i = 0; i < 64; ++i) {
                    int v = pq ? ps.u16() : ps.u8();
                    if (v < 1 || v > 255)
                        throw ParseError("DQT: entry outside baseline range [1,255]", ps.p - 1);
                    qtab[tq][kZigzag[i]] = v;
                }
                have_q[tq] = true;
            }
        } else if (m == 0xc4) {  // DHT
            while (ps.p < seg_end) {
                uint8_t tc_th = ps.u8();
                int tc = tc_th >> 4, th = tc_th & 15;
                if (tc > 1 || th > 3) throw ParseError("DHT: bad table class/id", ps.p - 1);
                uint8_t counts[17] = {0};
                int total = 0;
                for (int i = 1; i <= 16; ++i) {
                    counts[i] = ps.u8();
                    total += counts[i];
                }
                std::vector<uint8_t> vals(size_t(total));
                for (int i = 0; i < total; ++i) vals[size_t(i)] = ps.u8();
                (tc == 0 ? dc_tab[th] : ac_tab[th]).build(counts, std::move(vals));
            }
        } else if (m == 0xc0 || m == 0xc1) {  // SOF0 / SOF1 (baseline-compatible)
            if (ps.u8() != 8) throw ParseError("SOF: only 8-bit precision supported", ps.p - 1);
            height = ps.u16();
            width = ps.u16();
            int nf = ps.u8();
            if (nf != 3) throw ParseError("SOF: only 3-component YCbCr supported", ps.p - 1);
            for (int c = 0; c < nf; ++c) {
                Comp comp{};
                comp.id = ps.u8();
                uint8_t hv = ps.u8();
                comp.h = hv >> 4;
                comp.v = hv & 15;
                comp.tq = ps.u8();
                comps.push_back(comp);
            }
            have_sof = true;
        } else if (m == 0xc2) {
            throw ParseError("progressive mode (SOF2) not supported", marker_at);
        } else if ((m >= 0xc3 && m <= 0xcf) && m != 0xc4 && m != 0xc8 && m != 0xcc) {
            throw ParseError("unsupported SOF marker", marker_at);
        } else if (m == 0xdd) {  // DRI
            restart_interval = ps.u16();
        } else if (m == 0xda) {  // SOS
            if (!have_sof) throw ParseError("SOS before SOF", marker_at);
            int ns = ps.u8();
            if (ns != int(comps.size())) throw ParseError("SOS: component count mismatch", ps.p - 1);
            for (int s = 0; s < ns; ++s) {
                int cs = ps.u8();
                uint8_t tdta = ps.u8();
                bool found = false;
                for (auto& c : comps)
                    if (c.id == cs) {
                        c.td = tdta >> 4;
                        c.ta = tdta & 15;
                        found = true;
                    }
                if (!found) throw ParseError("SOS: unknown component id", ps.p - 2);
            }
            ps.p += 3;  // Ss, Se, Ah/Al (fixed in baseline)
            break;
        } else if (m == 0xd8) {
            throw ParseError("unexpected SOI inside stream", marker_at);
        } else {
            ps.p = seg_end;  // APPn, COM, DNL etc.: skip payload
        }
        if (ps.p != seg_end && m != 0xda) ps.p = seg_end;
    }

    // sampling factors -> chroma mode
    if (comps[1].h != 1 || comps[1].v != 1 || comps[2].h != 1 || comps[2].v != 1)
        throw ParseError("unsupported chroma sampling factors", 0);
    ChromaMode mode;
    if (comps[0].h == 1 && comps[0].v == 1) mode = ChromaMode::YCC444;
    else if (comps[0].h == 2 && comps[0].v == 1) mode = ChromaMode::YCC422;
    else if (comps[0].h == 2 && comps[0].v == 2) mode = ChromaMode::YCC420;
    else throw ParseError("unsupported luma sampling factors", 0);

    for (const auto& c : comps) {
        if (!have_q[c.tq]) throw ParseError("missing quantization table", ps.p);
        if (!dc_tab[c.td].ready || !ac_tab[c.ta].ready)
            throw ParseError("missing huffman table", ps.p);
    }

    McuLayout l = layout_for(mode, height, width);
    CoeffPlane planes[3];
    for (int c = 0; c < 3; ++c) {
        planes[c].blocks_h = l.mcu_rows * l.comp_v[c];
        planes[c].blocks_w = l.mcu_cols * l.comp_h[c];
        planes[c].c.assign(size_t(planes[c].blocks_h) * planes[c].blocks_w * 64, 0.0);
    }

    BitReader br(bytes, ps.p);
    int pred[3] = {0, 0, 0};
    int mcus_done = 0;
    for (int my = 0; my < l.mcu_rows; ++my)
        for (int mx = 0; mx < l.mcu_cols; ++mx) {
            if (restart_interval && mcus_done && mcus_done % restart_interval == 0) {
                size_t at;
                br.sync_restart(at);
                pred[0] = pred[1] = pred[2] = 0;
            }
            for (int c = 0; c < 3; ++c)
                for (int v = 0; v < l.comp_v[c]; ++v)
                    for (int hh = 0; hh < l.comp_h[c]; ++hh) {
                        double* blk = planes[c].block(my * l.comp_v[c] + v, mx * l.comp_h[c] + hh);
                        int t = huff_decode(br, dc_tab[comps[c].td]);
                        int diff = extend(br.receive(t), t);
                        pred[c] += diff;
                        blk[0] = pred[c];
                        for (int k = 1; k < 64;) {
                            int rs = huff_decode(br, ac_tab[comps[c].ta]);
                            int r = rs >> 4, s = rs & 15;
                            if (s == 0) {
                                if (r == 15) {
                                    k += 16;  // ZRL
                                    continue;
                                }
                                break;  // EOB
                            }
                            k += r;
                            if (k > 63) throw ParseError("AC run past end of block", br.pos());
                            blk[kZigzag[k]] = extend(br.receive(s), s);
                            ++k;
                        }
                    }
            ++mcus_done;
        }

    DecodeResult res;
    res.height = height;
    res.width = width;
    res.mode = mode;
    res.spectrum.kind = BlockSpectrum::Kind::Quantized;
    res.spectrum.mode = mode;
    res.spectrum.y = std::move(planes[0]);
    res.spectrum.cb = std::move(planes[1]);
    res.spectrum.cr = std::move(planes[2]);
    res.spectrum.tables.luma = qtab[comps[0].tq];
    res.spectrum.tables.chroma = qtab[comps[1].tq];
    res.spectrum.tables.origin = QuantTablePair::Origin::Standard;
    res.rgb = reconstruct_rgb(res.spectrum, height, width);
    return res;
}

std::vector<uint8_t> read_binary_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path);
    return std::vector<uint8_t>((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
}

void write_binary_file(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
}

}  // namespace jpneo
