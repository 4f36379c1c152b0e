#pragma once

#include "zdc/bigint.hpp"
#include "zdc/bitstream.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace zdc {

using SymbolString = std::vector<std::uint8_t>;

// Bijection from strings over {0,...,max_symbol} onto the naturals, ordered
// by length and then lexicographically: the empty string maps to 0.
BigNat str_to_nat(std::span<const std::uint8_t> symbols, unsigned max_symbol);
SymbolString nat_to_str(const BigNat& value, unsigned max_symbol);

// Signed variant: str_to_nat followed by the zigzag map 0,1,-1,2,-2,...
BigInt str_to_int(std::span<const std::uint8_t> symbols, unsigned max_symbol);
SymbolString int_to_str(const BigInt& value, unsigned max_symbol);

BigInt zigzag(const BigNat& n);
BigNat unzigzag(const BigInt& z);

// Self-delimiting code 1^l(x) 0 x, of length 2 l(x) + 1.
BitString bar(const BitString& x);
constexpr std::uint64_t bar_length(std::uint64_t payload_length) {
  return 2 * payload_length + 1;
}
BitString read_bar(BitReader& in);
// Splits a stream whose head is a bar code into (payload, unconsumed suffix).
std::pair<BitString, BitString> unbar(const BitString& stream);

// Self-delimiting code of a natural number: bar applied to its binary string.
BitString encode_nat(const BigNat& value);
void write_nat(BitWriter& out, const BigNat& value);
BigNat read_nat(BitReader& in);
BigNat decode_nat(const BitString& code);
std::uint64_t encode_nat_length(const BigNat& value);

// Sum of 2^-l(bar(x)) over all binary strings x with l(x) <= max_length.
Rational kraft_sum(std::uint64_t max_length);

}  // namespace zdc
