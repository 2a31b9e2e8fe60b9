#include "jpneo/image.hpp"

#include <cstdio>
#include <fstream>

namespace jpneo {

namespace {

int read_ppm_token(std::istream& in) {
    // skips whitespace and '#' comments
    int c = in.get();
    for (;;) {
        while (c != EOF && std::isspace(c)) c = in.get();
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
            continue;
        }
        break;
    }
    int value = 0;
    bool any = false;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        any = true;
        c = in.get();
    }
    if (!any) throw InvalidInput("ppm: expected integer token");
    return value;
}

}  // namespace

ImageU8 read_ppm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path);
    char magic[2];
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || magic[1] != '6') throw InvalidInput(path + ": not a P6 ppm");
    int w = read_ppm_token(in);
    int h = read_ppm_token(in);
    int maxval = read_ppm_token(in);
    if (maxval != 255) throw InvalidInput(path + ": only maxval 255 supported");
    ImageU8 img(h, w, 3);
    in.read(reinterpret_cast<char*>(img.data.data()), std::streamsize(img.data.size()));
    if (!in) throw InvalidInput(path + ": truncated pixel data");
    return img;
}

void write_ppm(const std::string& path, const ImageU8& img) {
    if (img.channels != 3) throw InvalidInput("write_ppm: need 3 channels");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path);
    out << "P6\n" << img.w << " " << img.h << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()), std::streamsize(img.data.size()));
}

ImageU8 pad_to_multiple(const ImageU8& img, int mult) {
    int ph = (img.h + mult - 1) / mult * mult;
    int pw = (img.w + mult - 1) / mult * mult;
    if (ph == img.h && pw == img.w) return img;
    ImageU8 out(ph, pw, img.channels);
    for (int y = 0; y < ph; ++y) {
        int sy = y < img.h ? y : img.h - 1;
        for (int x = 0; x < pw; ++x) {
            int sx = x < img.w ? x : img.w - 1;
            for (int c = 0; c < img.channels; ++c) out.at(y, x, c) = img.at(sy, sx, c);
        }
    }
    return out;
}

}  // namespace jpneo
