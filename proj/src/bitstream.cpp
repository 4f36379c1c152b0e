#include "zdc/bitstream.hpp"

#include "zdc/error.hpp"

#include <cmath>

namespace zdc {

double big_log2(const BigNat& v) {
  if (sgn(v) <= 0)
    throw Error(Errc::out_of_range, "log2 of a nonpositive integer");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

BitString BitString::from_string(std::string_view text) {
  BitString out;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw Error(Errc::invalid_argument, "bit literal may only contain 0 and 1");
    out.push_back(c == '1');
  }
  return out;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

bool BitString::is_prefix_of(const BitString& other) const {
  if (size() > other.size())
    return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (bits_[i] != other.bits_[i])
      return false;
  return true;
}

std::string BitString::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_)
    s.push_back(b ? '1' : '0');
  return s;
}

void BitWriter::write_bit(bool bit) {
  if (bit_count_ % 8 == 0)
    bytes_.push_back(0);
  if (bit)
    bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bit_count_ % 8));
  ++bit_count_;
}

void BitWriter::write_bits(const BitString& bits) {
  for (bool b : bits.bits())
    write_bit(b);
}

void BitWriter::write_uint(std::uint64_t value, unsigned width) {
  for (unsigned i = width; i-- > 0;)
    write_bit((value >> i) & 1u);
}

void BitWriter::write_big(const BigNat& value, std::uint64_t width) {
  if (bit_length(value) > width)
    throw Error(Errc::out_of_range, "value does not fit the field width");
  for (std::uint64_t i = width; i-- > 0;)
    write_bit(mpz_tstbit(value.get_mpz_t(), i) != 0);
}

std::vector<std::uint8_t> BitWriter::finish() && {
  return std::move(bytes_);
}

BitReader::BitReader(std::span<const std::uint8_t> bytes)
    : bytes_(bytes), limit_(static_cast<std::uint64_t>(bytes.size()) * 8) {}

BitReader::BitReader(std::span<const std::uint8_t> bytes, std::uint64_t bit_limit)
    : bytes_(bytes), limit_(bit_limit) {
  if (bit_limit > static_cast<std::uint64_t>(bytes.size()) * 8)
    throw Error(Errc::truncated, "bit limit exceeds the buffer");
}

BitReader::BitReader(const BitString& bits) {
  BitWriter w;
  w.write_bits(bits);
  limit_ = w.bit_count();
  owned_ = std::move(w).finish();
  bytes_ = owned_;
}

bool BitReader::read_bit() {
  if (pos_ >= limit_)
    throw Error(Errc::malformed_stream, "read past the end of the bit stream");
  bool bit = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
  ++pos_;
  return bit;
}

std::uint64_t BitReader::read_uint(unsigned width) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i)
    v = (v << 1) | (read_bit() ? 1u : 0u);
  return v;
}

BigNat BitReader::read_big(std::uint64_t width) {
  if (width > remaining())
    throw Error(Errc::malformed_stream, "field runs past the end of the bit stream");
  BigNat v = 0;
  for (std::uint64_t i = width; i-- > 0;)
    if (read_bit())
      mpz_setbit(v.get_mpz_t(), i);
  return v;
}

BitString BitReader::rest() const {
  BitString out;
  for (std::uint64_t p = pos_; p < limit_; ++p)
    out.push_back((bytes_[p / 8] >> (7 - p % 8)) & 1u);
  return out;
}

}  // namespace zdc
