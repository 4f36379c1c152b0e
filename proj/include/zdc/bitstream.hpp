#pragma once

#include "zdc/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zdc {

// A finite sequence over {0,1}.
class BitString {
public:
  BitString() = default;
  explicit BitString(std::vector<bool> bits) : bits_(std::move(bits)) {}

  // Parses a literal such as "11001"; any other character is rejected.
  static BitString from_string(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i]; }

  void push_back(bool bit) { bits_.push_back(bit); }
  void append(const BitString& other);

  bool is_prefix_of(const BitString& other) const;
  std::string to_string() const;

  const std::vector<bool>& bits() const noexcept { return bits_; }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend BitString operator+(BitString lhs, const BitString& rhs) {
    lhs.append(rhs);
    return lhs;
  }

private:
  std::vector<bool> bits_;
};

// Accumulates bits MSB-first into bytes. The last byte is zero-padded by finish().
class BitWriter {
public:
  void write_bit(bool bit);
  void write_bits(const BitString& bits);
  void write_uint(std::uint64_t value, unsigned width);
  // Writes the low `width` bits of a nonnegative big integer, most significant first.
  void write_big(const BigNat& value, std::uint64_t width);

  std::uint64_t bit_count() const noexcept { return bit_count_; }
  std::vector<std::uint8_t> finish() &&;
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t bit_count_ = 0;
};

// Reads MSB-first bits from a byte buffer, never past `bit_limit`.
class BitReader {
public:
  explicit BitReader(std::span<const std::uint8_t> bytes);
  BitReader(std::span<const std::uint8_t> bytes, std::uint64_t bit_limit);
  explicit BitReader(const BitString& bits);

  BitReader(const BitReader&) = delete;
  BitReader& operator=(const BitReader&) = delete;
  BitReader(BitReader&&) = default;
  BitReader& operator=(BitReader&&) = default;

  bool read_bit();
  std::uint64_t read_uint(unsigned width);
  BigNat read_big(std::uint64_t width);

  std::uint64_t position() const noexcept { return pos_; }
  std::uint64_t remaining() const noexcept { return limit_ - pos_; }
  bool at_end() const noexcept { return pos_ == limit_; }
  // The unread suffix as a BitString.
  BitString rest() const;

private:
  std::vector<std::uint8_t> owned_;
  std::span<const std::uint8_t> bytes_;
  std::uint64_t limit_ = 0;
  std::uint64_t pos_ = 0;
};

}  // namespace zdc
