#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqhuff/codebook.hpp"

namespace eqhuff {

class CodecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// MSB-first bits, zero-padded to a byte boundary.
struct Bitstream {
  std::vector<std::uint8_t> payload;
  std::size_t bit_count = 0;

  bool bit(std::size_t i) const { return (payload[i / 8] >> (7 - i % 8)) & 1U; }
  std::string to_string() const;
};

class BitWriter {
 public:
  void put(bool bit);
  void put(std::string_view bits);
  Bitstream finish() &&;

 private:
  Bitstream out_;
};

Bitstream encode(const Codebook& codebook, const std::vector<std::string>& ids);

// Decodes exactly `count` symbols; trailing padding is ignored.
std::vector<std::string> decode(const Codebook& codebook, const Bitstream& stream,
                                std::size_t count);

// Stream file: 8-byte little-endian symbol count, then the payload bytes.
void write_stream(std::ostream& os, const Bitstream& stream, std::uint64_t count);

struct StreamFile {
  std::uint64_t count = 0;
  Bitstream stream;
};

StreamFile read_stream(std::istream& is);

}  // namespace eqhuff
