#include "gesture/pgm.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gesture/errors.hpp"

namespace gesture::vision {

namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

    int next_int() {
        skip_space_and_comments();
        if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            throw Error("pgm: malformed header");
        }
        long v = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            v = v * 10 + (bytes_[pos_++] - '0');
            if (v > 1'000'000) throw Error("pgm: header value too large");
        }
        return static_cast<int>(v);
    }

    // Exactly one whitespace byte separates maxval from the raster.
    std::size_t raster_offset() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw Error("pgm: missing separator before raster");
        }
        return pos_ + 1;
    }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view bytes_;
    std::size_t pos_ = 2;
};

std::string header(int w, int h) {
    return "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
}

}  // namespace

GrayFrame parse_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
        throw Error("pgm: expected P5 magic");
    }
    HeaderReader reader(bytes);
    const int w = reader.next_int();
    const int h = reader.next_int();
    const int maxval = reader.next_int();
    if (maxval != 255) throw Error("pgm: only maxval 255 is supported");
    const std::size_t off = reader.raster_offset();
    const std::size_t n = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    if (w < 1 || h < 1 || bytes.size() - off < n) throw Error("pgm: truncated raster");

    std::vector<std::uint8_t> px(n);
    for (std::size_t i = 0; i < n; ++i) px[i] = static_cast<std::uint8_t>(bytes[off + i]);
    return GrayFrame(w, h, std::move(px));
}

std::string write_pgm(const GrayFrame& f) {
    std::string out = header(f.width, f.height);
    out.append(f.pixels.begin(), f.pixels.end());
    return out;
}

std::string write_pgm(const BinaryMask& m) {
    std::string out = header(m.width, m.height);
    for (auto b : m.bits) out.push_back(b ? static_cast<char>(255) : '\0');
    return out;
}

GrayFrame read_pgm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_pgm(ss.str());
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed for " + path.string());
}

}  // namespace gesture::vision
