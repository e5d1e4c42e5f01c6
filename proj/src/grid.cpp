#include "disc/grid.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace disc {

Pattern shift_torus(const Pattern& p, int dy, int dx) {
  const int n = p.size;
  Pattern out(n);
  if (n == 0) return out;
  const int sy = ((dy % n) + n) % n;
  const int sx = ((dx % n) + n) % n;
  for (int y = 0; y < n; ++y) {
    const int src_y = (y - sy + n) % n;
    for (int x = 0; x < n; ++x) {
      const int src_x = (x - sx + n) % n;
      out.at(y, x) = p.at(src_y, src_x);
    }
  }
  return out;
}

namespace {

void put_u16le(std::ostream& os, std::uint16_t v) {
  const unsigned char b[2] = {static_cast<unsigned char>(v & 0xff),
                              static_cast<unsigned char>(v >> 8)};
  os.write(reinterpret_cast<const char*>(b), 2);
}

void put_u32le(std::ostream& os, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint16_t get_u16le(std::istream& is) {
  unsigned char b[2];
  is.read(reinterpret_cast<char*>(b), 2);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

std::uint32_t get_u32le(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f32le(std::ostream& os, float f) {
  std::uint32_t v = 0;
  std::memcpy(&v, &f, 4);
  put_u32le(os, v);
}

float get_f32le(std::istream& is) {
  const std::uint32_t v = get_u32le(is);
  float f = 0.0f;
  std::memcpy(&f, &v, 4);
  return f;
}

}  // namespace

void write_lpat(const std::filesystem::path& path, const Pattern& p) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  os.write("LPAT", 4);
  put_u16le(os, 1);
  put_u32le(os, static_cast<std::uint32_t>(p.width()));
  put_u32le(os, static_cast<std::uint32_t>(p.height()));
  for (float f : p.cells) put_f32le(os, f);
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

Pattern read_lpat(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open: " + path.string());
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "LPAT", 4) != 0)
    throw std::runtime_error("not an LPAT file: " + path.string());
  const std::uint16_t version = get_u16le(is);
  if (version != 1) throw std::runtime_error("unsupported LPAT version: " + path.string());
  const std::uint32_t w = get_u32le(is);
  const std::uint32_t h = get_u32le(is);
  if (w != h) throw std::runtime_error("LPAT grid is not square: " + path.string());
  Pattern p(static_cast<int>(w));
  for (auto& f : p.cells) f = get_f32le(is);
  if (!is) throw std::runtime_error("truncated LPAT file: " + path.string());
  return p;
}

void write_pgm16(const std::filesystem::path& path, const Pattern& p) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  os << "P5\n" << p.width() << " " << p.height() << "\n65535\n";
  for (float f : p.cells) {
    const float clamped = std::clamp(f, 0.0f, 1.0f);
    const auto v = static_cast<std::uint16_t>(std::lround(clamped * 65535.0f));
    // PGM multi-byte samples are big-endian
    const unsigned char b[2] = {static_cast<unsigned char>(v >> 8),
                                static_cast<unsigned char>(v & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 2);
  }
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace disc
