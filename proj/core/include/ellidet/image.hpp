#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ellidet {

// Decoded raster, 1 (gray) or 3 (RGB) channels, row-major, 8 bit.
struct RasterImage {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> data;
};

// Pixel coordinates are 1-based throughout: x in [1, width], y in [1, height].
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // width * height, row-major

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t at(int x, int y) const {
    return data[static_cast<std::size_t>(y - 1) * width + (x - 1)];
  }
  std::uint8_t& at(int x, int y) {
    return data[static_cast<std::size_t>(y - 1) * width + (x - 1)];
  }
};

struct BinaryEdgeMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;  // 0 or 1, row-major; 1 = edge

  BinaryEdgeMap() = default;
  BinaryEdgeMap(int w, int h)
      : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {}

  bool inside(int x, int y) const {
    return x >= 1 && x <= width && y >= 1 && y <= height;
  }
  // Out-of-range queries read as non-edge.
  bool edge(int x, int y) const {
    return inside(x, y) &&
           bits[static_cast<std::size_t>(y - 1) * width + (x - 1)] != 0;
  }
  void set(int x, int y, bool v) {
    bits[static_cast<std::size_t>(y - 1) * width + (x - 1)] = v ? 1 : 0;
  }
  int count() const {
    int n = 0;
    for (std::uint8_t b : bits) n += b;
    return n;
  }
};

// PGM (P2/P5) and PBM (P1/P4). Throws std::runtime_error on malformed input.
GrayImage read_pgm(const std::string& path);
void write_pgm(const GrayImage& img, const std::string& path);
BinaryEdgeMap read_pbm(const std::string& path);
void write_pbm(const BinaryEdgeMap& map, const std::string& path);

// Dispatches on the file's magic bytes: PNG, PGM. (PBM inputs are edge maps,
// not rasters; use read_pbm.)
RasterImage load_raster(const std::string& path);

// True if the file starts with a PBM magic ("P1"/"P4").
bool is_pbm_file(const std::string& path);

}  // namespace ellidet
