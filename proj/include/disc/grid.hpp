#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace disc {

/// Square grid of cell activities in [0,1], row-major.
struct Pattern {
  int size = 0;
  std::vector<float> cells;

  Pattern() = default;
  explicit Pattern(int n) : size(n), cells(static_cast<std::size_t>(n) * n, 0.0f) {}

  int width() const { return size; }
  int height() const { return size; }
  std::size_t numel() const { return cells.size(); }

  float& at(int y, int x) { return cells[static_cast<std::size_t>(y) * size + x]; }
  float at(int y, int x) const { return cells[static_cast<std::size_t>(y) * size + x]; }

  static Pattern zeros(int n) { return Pattern(n); }
  static Pattern filled(int n, float v) {
    Pattern p(n);
    std::fill(p.cells.begin(), p.cells.end(), v);
    return p;
  }

  bool operator==(const Pattern&) const = default;
};

// Toroidal shift: output cell (y, x) takes the value of input ((y-dy) mod L, (x-dx) mod L),
// i.e. the content moves by (+dy, +dx).
Pattern shift_torus(const Pattern& p, int dy, int dx);

// ---- persistence -----------------------------------------------------------
//
// LPAT: magic "LPAT", u16 version (1), u32 width, u32 height (little-endian),
// then width*height little-endian 32-bit floats, row-major.

void write_lpat(const std::filesystem::path& path, const Pattern& p);
Pattern read_lpat(const std::filesystem::path& path);

// 16-bit grayscale PGM (P5, maxval 65535) for gallery export.
void write_pgm16(const std::filesystem::path& path, const Pattern& p);

}  // namespace disc
