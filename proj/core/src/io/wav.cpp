#include "auris/io/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "auris/common/error.hpp"

namespace auris::io {

namespace {

void put_u16(std::vector<std::uint8_t>& b, std::uint16_t v) {
  b.push_back(v & 0xff);
  b.push_back((v >> 8) & 0xff);
}

void put_u32(std::vector<std::uint8_t>& b, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back((v >> (8 * i)) & 0xff);
}

void put_tag(std::vector<std::uint8_t>& b, const char* tag) {
  b.insert(b.end(), tag, tag + 4);
}

std::uint16_t get_u16(const std::uint8_t* p) { return static_cast<std::uint16_t>(p[0] | (p[1] << 8)); }

std::uint32_t get_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

}  // namespace

void write_wav(const std::filesystem::path& path, const sim::MultiChannelClip& clip, WavEncoding encoding) {
  const std::uint32_t frames = static_cast<std::uint32_t>(clip.frames());
  const std::uint16_t channels = 4;
  const std::uint16_t bits = encoding == WavEncoding::kPcm16 ? 16 : 32;
  const std::uint16_t fmt = encoding == WavEncoding::kPcm16 ? 1 : 3;  // PCM / IEEE float
  const std::uint32_t sr = static_cast<std::uint32_t>(std::llround(clip.sample_rate));
  const std::uint16_t block_align = channels * bits / 8;
  const std::uint32_t data_size = frames * block_align;

  std::vector<std::uint8_t> buf;
  buf.reserve(44 + data_size);
  put_tag(buf, "RIFF");
  put_u32(buf, 36 + data_size);
  put_tag(buf, "WAVE");
  put_tag(buf, "fmt ");
  put_u32(buf, 16);
  put_u16(buf, fmt);
  put_u16(buf, channels);
  put_u32(buf, sr);
  put_u32(buf, sr * block_align);
  put_u16(buf, block_align);
  put_u16(buf, bits);
  put_tag(buf, "data");
  put_u32(buf, data_size);

  for (std::uint32_t i = 0; i < frames; ++i) {
    for (int c = 0; c < channels; ++c) {
      const double v = std::clamp(clip.channels[c][i], -1.0, 1.0);
      if (encoding == WavEncoding::kPcm16) {
        const auto s = static_cast<std::int16_t>(std::lround(v * 32767.0));
        put_u16(buf, static_cast<std::uint16_t>(s));
      } else {
        const float f = static_cast<float>(v);
        std::uint32_t u;
        std::memcpy(&u, &f, 4);
        put_u32(buf, u);
      }
    }
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("io", "write_wav", "cannot open for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw DomainError("io", "write_wav", "write failed: " + path.string());
}

sim::MultiChannelClip read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("io", "read_wav", "cannot open: " + path.string());
  std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  if (buf.size() < 12 || std::memcmp(buf.data(), "RIFF", 4) != 0 || std::memcmp(buf.data() + 8, "WAVE", 4) != 0) {
    throw DomainError("io", "read_wav", "not a RIFF/WAVE file: " + path.string());
  }

  std::uint16_t fmt = 0, channels = 0, bits = 0;
  std::uint32_t sr = 0;
  const std::uint8_t* data = nullptr;
  std::uint32_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= buf.size()) {
    const char* tag = reinterpret_cast<const char*>(buf.data() + pos);
    const std::uint32_t size = get_u32(buf.data() + pos + 4);
    if (pos + 8 + size > buf.size()) {
      throw DomainError("io", "read_wav", "truncated chunk in " + path.string());
    }
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (size < 16) throw DomainError("io", "read_wav", "bad fmt chunk in " + path.string());
      const std::uint8_t* p = buf.data() + pos + 8;
      fmt = get_u16(p);
      channels = get_u16(p + 2);
      sr = get_u32(p + 4);
      bits = get_u16(p + 14);
    } else if (std::memcmp(tag, "data", 4) == 0) {
      data = buf.data() + pos + 8;
      data_size = size;
    }
    pos += 8 + size + (size % 2);  // chunks are word-aligned
  }

  if (!data) throw DomainError("io", "read_wav", "no data chunk in " + path.string());
  if (channels != 4) {
    throw DomainError("io", "read_wav",
                      "expected 4 channels, got " + std::to_string(channels) + " in " + path.string());
  }
  const bool pcm16 = fmt == 1 && bits == 16;
  const bool f32 = fmt == 3 && bits == 32;
  if (!pcm16 && !f32) {
    throw DomainError("io", "read_wav", "unsupported encoding (need PCM16 or float32) in " + path.string());
  }

  const std::uint32_t block = channels * bits / 8;
  const std::uint32_t frames = data_size / block;

  sim::MultiChannelClip clip;
  clip.sample_rate = sr;
  clip.duration_s = static_cast<double>(frames) / sr;
  for (auto& ch : clip.channels) ch.resize(frames);

  for (std::uint32_t i = 0; i < frames; ++i) {
    for (int c = 0; c < 4; ++c) {
      const std::uint8_t* p = data + i * block + c * bits / 8;
      if (pcm16) {
        const auto s = static_cast<std::int16_t>(get_u16(p));
        clip.channels[c][i] = static_cast<double>(s) / 32767.0;
      } else {
        const std::uint32_t u = get_u32(p);
        float f;
        std::memcpy(&f, &u, 4);
        clip.channels[c][i] = f;
      }
    }
  }
  return clip;
}

}  // namespace auris::io
