#include "psi/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <vector>

namespace psi {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

// --- netpbm ---------------------------------------------------------------

int pnm_token(std::istream& in) {
    // skips whitespace and '#' comment lines
    for (;;) {
        const int c = in.peek();
        if (c == EOF) return -1;
        if (std::isspace(c)) {
            in.get();
            continue;
        }
        if (c == '#') {
            std::string line;
            std::getline(in, line);
            continue;
        }
        int v = 0;
        if (!(in >> v)) return -1;
        return v;
    }
}

Image load_pnm(const std::string& path, std::ifstream& in, bool color) {
    const int w = pnm_token(in);
    const int h = pnm_token(in);
    const int maxval = pnm_token(in);
    if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 65535) fail(path, "bad PNM header");
    in.get();  // single whitespace before raster
    const int channels = color ? 3 : 1;
    const bool wide = maxval > 255;
    const size_t n = static_cast<size_t>(w) * static_cast<size_t>(h) *
                     static_cast<size_t>(channels) * (wide ? 2 : 1);
    std::vector<unsigned char> raw(n);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in.gcount()) != n) fail(path, "truncated PNM raster");

    Image img;
    for (int c = 0; c < channels; ++c) img.planes.emplace_back(Planed(h, w));
    const double scale = 1.0 / maxval;
    size_t pos = 0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < channels; ++c) {
                unsigned v = raw[pos++];
                if (wide) v = (v << 8) | raw[pos++];  // Netpbm 16-bit samples are big-endian
                img.planes[static_cast<size_t>(c)](y, x) = v * scale;
            }
    return img;
}

void save_pnm(const std::string& path, const Image& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open for writing");
    const bool color = img.channels() == 3;
    out << (color ? "P6" : "P5") << "\n" << img.width() << " " << img.height() << "\n255\n";
    std::vector<unsigned char> row(static_cast<size_t>(img.width()) * (color ? 3 : 1));
    for (Eigen::Index y = 0; y < img.height(); ++y) {
        size_t pos = 0;
        for (Eigen::Index x = 0; x < img.width(); ++x)
            for (int c = 0; c < img.channels(); ++c) {
                const double v = img.planes[static_cast<size_t>(c)](y, x);
                row[pos++] = static_cast<unsigned char>(
                    std::lround(255.0 * std::min(1.0, std::max(0.0, v))));
            }
        out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(pos));
    }
    if (!out) fail(path, "write failed");
}

// --- png ------------------------------------------------------------------

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};

Image load_png(const std::string& path) {
    std::unique_ptr<std::FILE, FileCloser> fp(std::fopen(path.c_str(), "rb"));
    if (!fp) fail(path, "cannot open");
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "libpng init failed");
    }
    std::vector<png_bytep> rows;
    std::vector<unsigned char> data;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "PNG decode error");
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const int color_type = png_get_color_type(png, info);
    const int bit_depth = png_get_bit_depth(png, info);

    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    const int channels = png_get_channels(png, info);
    const int depth = png_get_bit_depth(png, info);
    if ((channels != 1 && channels != 3) || (depth != 8 && depth != 16)) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(path, "unsupported PNG layout");
    }
    const size_t stride = png_get_rowbytes(png, info);
    data.resize(stride * h);
    rows.resize(h);
    for (png_uint_32 y = 0; y < h; ++y) rows[y] = data.data() + y * stride;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    Image img;
    for (int c = 0; c < channels; ++c)
        img.planes.emplace_back(Planed(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(w)));
    const double scale = depth == 16 ? 1.0 / 65535.0 : 1.0 / 255.0;
    for (png_uint_32 y = 0; y < h; ++y) {
        const unsigned char* row = data.data() + y * stride;
        size_t pos = 0;
        for (png_uint_32 x = 0; x < w; ++x)
            for (int c = 0; c < channels; ++c) {
                unsigned v = row[pos++];
                if (depth == 16) v = (v << 8) | row[pos++];  // PNG is big-endian
                img.planes[static_cast<size_t>(c)](static_cast<Eigen::Index>(y),
                                                   static_cast<Eigen::Index>(x)) = v * scale;
            }
    }
    return img;
}

void save_png(const std::string& path, const Image& img) {
    std::unique_ptr<std::FILE, FileCloser> fp(std::fopen(path.c_str(), "wb"));
    if (!fp) fail(path, "cannot open for writing");
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        fail(path, "libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail(path, "PNG encode error");
    }
    png_init_io(png, fp.get());
    const bool color = img.channels() == 3;
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()),
                 static_cast<png_uint_32>(img.height()), 8,
                 color ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<unsigned char> row(static_cast<size_t>(img.width()) * (color ? 3 : 1));
    for (Eigen::Index y = 0; y < img.height(); ++y) {
        size_t pos = 0;
        for (Eigen::Index x = 0; x < img.width(); ++x)
            for (int c = 0; c < img.channels(); ++c) {
                const double v = img.planes[static_cast<size_t>(c)](y, x);
                row[pos++] = static_cast<unsigned char>(
                    std::lround(255.0 * std::min(1.0, std::max(0.0, v))));
            }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

bool has_suffix(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

}  // namespace

Image load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (!in) fail(path, "empty or unreadable file");
    Image img;
    if (magic[0] == 'P' && (magic[1] == '5' || magic[1] == '6')) {
        img = load_pnm(path, in, magic[1] == '6');
    } else if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') {
        in.close();
        img = load_png(path);
    } else {
        fail(path, "unrecognized image format (PNG, P5 PGM or P6 PPM expected)");
    }
    img.validate();
    return img;
}

void save_image(const std::string& path, const Image& img) {
    img.validate();
    if (has_suffix(path, ".png")) {
        save_png(path, img);
    } else if (has_suffix(path, ".pgm")) {
        require(img.channels() == 1, "PGM holds a single channel; use .ppm or .png");
        save_pnm(path, img);
    } else if (has_suffix(path, ".ppm")) {
        require(img.channels() == 3, "PPM holds three channels; use .pgm or .png");
        save_pnm(path, img);
    } else {
        fail(path, "unsupported output extension (.png, .pgm or .ppm)");
    }
}

}  // namespace psi
