#include "lpc/image.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "lpc/errors.hpp"

namespace lpc {

namespace {

// PNM token scan: whitespace separates tokens, '#' starts a comment that
// runs to end of line.
int next_header_value(std::istream& in, const char* what) {
    int ch = in.get();
    while (ch != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') ch = in.get();
            ch = in.get();
        } else if (std::isspace(ch)) {
            ch = in.get();
        } else {
            break;
        }
    }
    if (ch == EOF || !std::isdigit(ch))
        throw FormatError(std::string("pgm: bad header: expected ") + what);
    long v = 0;
    while (ch != EOF && std::isdigit(ch)) {
        v = v * 10 + (ch - '0');
        if (v > std::numeric_limits<int>::max())
            throw FormatError(std::string("pgm: bad header: ") + what + " out of range");
        ch = in.get();
    }
    if (ch != EOF) in.unget();
    return static_cast<int>(v);
}

}  // namespace

Image8 load_pgm(std::istream& in) {
    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (!in || m0 != 'P' || m1 != '5')
        throw FormatError("pgm: bad magic, expected P5");

    int width = next_header_value(in, "width");
    int height = next_header_value(in, "height");
    int maxval = next_header_value(in, "maxval");
    if (width <= 0 || height <= 0)
        throw FormatError("pgm: bad header: non-positive dimensions");
    if (maxval != 255)
        throw FormatError("pgm: unsupported maxval, expected 255");

    // single whitespace byte between header and raster
    int sep = in.get();
    if (sep == EOF || !std::isspace(sep))
        throw FormatError("pgm: bad header: missing raster separator");

    Image8 img(height, width);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (static_cast<size_t>(in.gcount()) != img.pixels.size())
        throw FormatError("pgm: truncated raster");
    return img;
}

Image8 load_pgm(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FormatError("pgm: cannot open " + path.string());
    return load_pgm(f);
}

void save_pgm(const Image8& img, std::ostream& out) {
    out << "P5\n" << img.cols << ' ' << img.rows << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
}

void save_pgm(const Image8& img, const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw FormatError("pgm: cannot open " + path.string() + " for writing");
    save_pgm(img, f);
    f.flush();
    if (!f) throw FormatError("pgm: write failed for " + path.string());
}

}  // namespace lpc
