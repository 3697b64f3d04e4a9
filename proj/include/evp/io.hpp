#ifndef EVP_IO_HPP
#define EVP_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "evp/types.hpp"

namespace evp {

// ---- numeric tensor files ----
// Layout: magic "EVPTENS1", uint32 rank, uint32 dims[rank], then the values as
// little-endian 32-bit floats in row-major order.

struct TensorFile {
  std::vector<uint32_t> dims;
  std::vector<float> values;
};

void write_tensor(const std::string& path, const std::vector<uint32_t>& dims,
                  const std::vector<float>& values);
TensorFile read_tensor(const std::string& path);

void write_matrix(const std::string& path, const Mat& m);
Mat read_matrix(const std::string& path);

// ---- WAV ----

struct Waveform {
  std::vector<double> samples;  // in [-1, 1]
  int sample_rate = 0;
};

// 16-bit PCM only; stereo is mixed down by averaging the channels.
// Throws if the file is not 16 kHz, naming the required rate.
Waveform read_wav(const std::string& path);
void write_wav(const std::string& path, const Waveform& w);

// ---- rasters ----

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> pixels;  // row-major, height*width

  uint8_t at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
  uint8_t& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
};

struct BitImage {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> bits;  // row-major, one byte per pixel, 0 or 1

  uint8_t at(int x, int y) const { return bits[static_cast<size_t>(y) * width + x]; }
  uint8_t& at(int x, int y) { return bits[static_cast<size_t>(y) * width + x]; }
};

void write_pgm(const std::string& path, const GrayImage& img);   // binary P5
GrayImage read_pgm(const std::string& path);
void write_pbm(const std::string& path, const BitImage& img);    // binary P4, 1 = set
BitImage read_pbm(const std::string& path);

// ---- landmark CSV ----
// Header "frame,x0,y0,...,x67,y67", one row per frame.

void write_landmark_csv(const std::string& path, const std::vector<Landmarks>& traj);
std::vector<Landmarks> read_landmark_csv(const std::string& path);

// ---- small helpers ----

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace evp

#endif  // EVP_IO_HPP
