// Copyright 2026 The toucan-prep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "toucan_prep/audio.h"
#include "toucan_prep/errors.h"

namespace toucan_prep {

namespace {

uint32_t U32(const std::string& b, size_t at) {
  return static_cast<uint32_t>(static_cast<unsigned char>(b[at])) |
         static_cast<uint32_t>(static_cast<unsigned char>(b[at + 1])) << 8 |
         static_cast<uint32_t>(static_cast<unsigned char>(b[at + 2])) << 16 |
         static_cast<uint32_t>(static_cast<unsigned char>(b[at + 3])) << 24;
}

uint16_t U16(const std::string& b, size_t at) {
  return static_cast<uint16_t>(static_cast<unsigned char>(b[at]) |
                               static_cast<unsigned char>(b[at + 1]) << 8);
}

void Put32(std::string& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void Put16(std::string& out, uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>(v >> 8));
}

std::string Header(uint16_t format, uint16_t bits, int sample_rate,
                   size_t data_bytes) {
  std::string out = "RIFF";
  Put32(out, static_cast<uint32_t>(36 + data_bytes));
  out += "WAVEfmt ";
  Put32(out, 16);
  Put16(out, format);
  Put16(out, 1);
  Put32(out, static_cast<uint32_t>(sample_rate));
  Put32(out, static_cast<uint32_t>(sample_rate * bits / 8));
  Put16(out, bits / 8);
  Put16(out, bits);
  out += "data";
  Put32(out, static_cast<uint32_t>(data_bytes));
  return out;
}

void WriteBytes(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path);
}

}  // namespace

int16_t ToPcm16(double sample) {
  const double scaled = std::clamp(sample, -1.0, 1.0) * 32767.0;
  return static_cast<int16_t>(std::lround(scaled));
}

Audio DecodeWav(const std::string& bytes, const std::string& source) {
  auto fail = [&](const std::string& what) {
    return Error(ErrorCode::kFormatError, source + ": " + what);
  };
  if (bytes.size() < 12 || bytes.compare(0, 4, "RIFF") != 0 ||
      bytes.compare(8, 4, "WAVE") != 0) {
    throw fail("not a RIFF/WAVE file");
  }
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  bool have_fmt = false;
  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::string id = bytes.substr(pos, 4);
    const uint32_t size = U32(bytes, pos + 4);
    const size_t body = pos + 8;
    if (body + size > bytes.size()) throw fail("truncated chunk " + id);
    if (id == "fmt ") {
      if (size < 16) throw fail("short fmt chunk");
      format = U16(bytes, body);
      channels = U16(bytes, body + 2);
      rate = U32(bytes, body + 4);
      bits = U16(bytes, body + 14);
      if (format == 0xFFFE && size >= 26) format = U16(bytes, body + 24);
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) throw fail("data chunk before fmt chunk");
      if (channels != 1) throw fail("only mono audio is supported");
      Audio audio;
      audio.sample_rate = static_cast<int>(rate);
      if (format == 1 && bits == 16) {
        audio.samples.resize(size / 2);
        for (size_t i = 0; i < audio.samples.size(); ++i) {
          audio.samples[i] =
              static_cast<int16_t>(U16(bytes, body + 2 * i)) / 32768.0;
        }
      } else if (format == 3 && bits == 32) {
        audio.samples.resize(size / 4);
        for (size_t i = 0; i < audio.samples.size(); ++i) {
          audio.samples[i] = std::bit_cast<float>(U32(bytes, body + 4 * i));
        }
      } else {
        throw fail("unsupported sample format " + std::to_string(format) +
                   "/" + std::to_string(bits) + " bit");
      }
      return audio;
    }
    pos = body + size + (size & 1);
  }
  throw fail("no data chunk");
}

Audio ReadWav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return DecodeWav(buffer.str(), path);
}

std::string EncodeWavPcm16(std::span<const int16_t> samples, int sample_rate) {
  std::string out = Header(1, 16, sample_rate, samples.size() * 2);
  for (int16_t s : samples) Put16(out, static_cast<uint16_t>(s));
  return out;
}

void WriteWavPcm16(const std::string& path, std::span<const int16_t> samples,
                   int sample_rate) {
  WriteBytes(path, EncodeWavPcm16(samples, sample_rate));
}

void WriteWavPcm16(const std::string& path, const Audio& audio) {
  std::vector<int16_t> pcm(audio.samples.size());
  for (size_t i = 0; i < pcm.size(); ++i) pcm[i] = ToPcm16(audio.samples[i]);
  WriteWavPcm16(path, pcm, audio.sample_rate);
}

void WriteWavFloat32(const std::string& path, const Audio& audio) {
  std::string out = Header(3, 32, audio.sample_rate, audio.samples.size() * 4);
  for (double s : audio.samples) {
    Put32(out, std::bit_cast<uint32_t>(static_cast<float>(s)));
  }
  WriteBytes(path, out);
}

}  // namespace toucan_prep
