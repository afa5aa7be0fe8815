#include "frieze/image.hpp"

#include <cctype>
#include <fstream>
#include <iterator>

#include "frieze/error.hpp"

namespace frieze {

Image::Image(int w, int h, std::uint8_t fill)
    : width(w), height(h), pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

namespace {

class HeaderReader {
public:
    HeaderReader(std::span<const std::uint8_t> bytes, Image& img) : bytes_(bytes), img_(img) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            auto c = bytes_[pos_];
            if (c == '#') {
                std::size_t start = ++pos_;
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
                std::string text(bytes_.begin() + start, bytes_.begin() + pos_);
                if (!text.empty() && text.front() == ' ') text.erase(0, 1);
                img_.comments.push_back(std::move(text));
            } else if (std::isspace(c)) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    int number(const char* what) {
        skip_space_and_comments();
        long v = 0;
        std::size_t start = pos_;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            v = v * 10 + (bytes_[pos_] - '0');
            if (v > 1'000'000'000) throw MalformedPgm(std::string(what) + " too large");
            ++pos_;
        }
        if (pos_ == start) throw MalformedPgm(std::string("expected ") + what);
        return static_cast<int>(v);
    }

    std::size_t pos() const { return pos_; }
    void advance() { ++pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    Image& img_;
    std::size_t pos_ = 0;
};

}  // namespace

Image read_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P') throw MalformedPgm("missing magic number");
    if (bytes[1] != '5') throw MalformedPgm("only binary P5 is supported");
    Image img;
    HeaderReader rd(bytes.subspan(2), img);
    img.width = rd.number("width");
    img.height = rd.number("height");
    img.maxval = rd.number("maxval");
    if (img.width <= 0 || img.height <= 0) throw MalformedPgm("empty image");
    if (img.maxval <= 0 || img.maxval > 255) throw MalformedPgm("maxval must be in 1..255");
    std::size_t header = 2 + rd.pos();
    if (header >= bytes.size() || !std::isspace(bytes[header])) {
        throw MalformedPgm("missing whitespace after maxval");
    }
    ++header;
    std::size_t n = static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height);
    if (bytes.size() - header < n) throw MalformedPgm("truncated raster");
    if (bytes.size() - header > n) throw MalformedPgm("trailing data after raster");
    img.pixels.assign(bytes.begin() + header, bytes.end());
    for (auto p : img.pixels) {
        if (p > img.maxval) throw MalformedPgm("sample exceeds maxval");
    }
    return img;
}

Image read_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedPgm("cannot open " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return read_pgm(bytes);
}

std::vector<std::uint8_t> write_pgm(const Image& img) {
    std::string header = "P5\n";
    for (const auto& c : img.comments) header += "# " + c + "\n";
    header += std::to_string(img.width) + " " + std::to_string(img.height) + "\n" +
              std::to_string(img.maxval) + "\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

void write_pgm_file(const Image& img, const std::string& path) {
    auto bytes = write_pgm(img);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace frieze
