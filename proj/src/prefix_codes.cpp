#include "zdc/prefix_codes.hpp"

#include "zdc/error.hpp"

namespace zdc {

namespace {

void check_symbols(std::span<const std::uint8_t> symbols, unsigned max_symbol) {
  for (auto s : symbols)
    if (s > max_symbol)
      throw Error(Errc::symbol_out_of_range, "symbol exceeds the alphabet");
}

// Number of strings shorter than `length`: sum_{k<length} base^k.
BigNat strings_shorter_than(std::uint64_t length, unsigned base) {
  if (base == 1)
    return big_from_u64(length);
  BigNat p = big_pow(base, length);
  return (p - 1) / (base - 1);
}

// Binary string of v: v+1 in binary with its leading one removed.
SymbolString nat_to_binary_str(const BigNat& value) {
  BigNat w = value + 1;
  std::uint64_t len = bit_length(w) - 1;
  SymbolString out(len);
  for (std::uint64_t i = 0; i < len; ++i)
    out[i] = mpz_tstbit(w.get_mpz_t(), len - 1 - i) ? 1 : 0;
  return out;
}

}  // namespace

BigNat str_to_nat(std::span<const std::uint8_t> symbols, unsigned max_symbol) {
  check_symbols(symbols, max_symbol);
  const unsigned base = max_symbol + 1;
  BigNat value = 0;
  if (base > 1)
    for (auto s : symbols) {
      value *= base;
      value += s;
    }
  return strings_shorter_than(symbols.size(), base) + value;
}

SymbolString nat_to_str(const BigNat& value, unsigned max_symbol) {
  if (sgn(value) < 0)
    throw Error(Errc::out_of_range, "negative natural");
  const unsigned base = max_symbol + 1;
  if (base == 2)
    return nat_to_binary_str(value);
  if (base == 1)
    return SymbolString(big_to_u64(value), 0);

  // Length l satisfies (base^l - 1)/(base - 1) <= value < (base^(l+1) - 1)/(base - 1).
  BigNat scaled = value * (base - 1) + 1;
  std::uint64_t len = mpz_sizeinbase(scaled.get_mpz_t(), base);
  while (len > 0 && big_pow(base, len) > scaled)
    --len;
  while (big_pow(base, len + 1) <= scaled)
    ++len;

  BigNat rest = value - strings_shorter_than(len, base);
  SymbolString out(len);
  for (std::uint64_t i = len; i-- > 0;) {
    out[i] = static_cast<std::uint8_t>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), base));
  }
  return out;
}

BigInt zigzag(const BigNat& n) {
  // (-1)^(n+1) floor((n+1)/2)
  BigInt half = (n + 1) / 2;
  return mpz_odd_p(n.get_mpz_t()) ? half : BigInt(-half);
}

BigNat unzigzag(const BigInt& z) {
  if (sgn(z) > 0)
    return 2 * z - 1;
  return -2 * z;
}

BigInt str_to_int(std::span<const std::uint8_t> symbols, unsigned max_symbol) {
  return zigzag(str_to_nat(symbols, max_symbol));
}

SymbolString int_to_str(const BigInt& value, unsigned max_symbol) {
  return nat_to_str(unzigzag(value), max_symbol);
}

BitString bar(const BitString& x) {
  BitString out;
  for (std::size_t i = 0; i < x.size(); ++i)
    out.push_back(true);
  out.push_back(false);
  out.append(x);
  return out;
}

BitString read_bar(BitReader& in) {
  std::uint64_t ones = 0;
  for (;;) {
    if (in.at_end())
      throw Error(Errc::malformed_stream, "bar code without terminating zero");
    if (!in.read_bit())
      break;
    ++ones;
  }
  if (ones > in.remaining())
    throw Error(Errc::malformed_stream, "bar code payload truncated");
  BitString payload;
  for (std::uint64_t i = 0; i < ones; ++i)
    payload.push_back(in.read_bit());
  return payload;
}

std::pair<BitString, BitString> unbar(const BitString& stream) {
  BitReader in(stream);
  BitString payload = read_bar(in);
  return {std::move(payload), in.rest()};
}

std::uint64_t encode_nat_length(const BigNat& value) {
  return bar_length(bit_length(value + 1) - 1);
}

void write_nat(BitWriter& out, const BigNat& value) {
  if (sgn(value) < 0)
    throw Error(Errc::out_of_range, "negative natural");
  BigNat w = value + 1;
  std::uint64_t len = bit_length(w) - 1;
  for (std::uint64_t i = 0; i < len; ++i)
    out.write_bit(true);
  out.write_bit(false);
  out.write_big(w - big_pow(2, len), len);
}

BitString encode_nat(const BigNat& value) {
  SymbolString s = nat_to_str(value, 1);
  BitString bits;
  for (auto b : s)
    bits.push_back(b != 0);
  return bar(bits);
}

BigNat read_nat(BitReader& in) {
  std::uint64_t len = 0;
  for (;;) {
    if (in.at_end())
      throw Error(Errc::malformed_stream, "bar code without terminating zero");
    if (!in.read_bit())
      break;
    ++len;
  }
  BigNat low = in.read_big(len);
  return big_pow(2, len) + low - 1;
}

BigNat decode_nat(const BitString& code) {
  BitReader in(code);
  return read_nat(in);
}

Rational kraft_sum(std::uint64_t max_length) {
  Rational sum = 0;
  for (std::uint64_t t = 0; t <= max_length; ++t) {
    // 2^t strings of length t, each coded in bar_length(t) bits.
    Rational term(big_pow(2, t), big_pow(2, bar_length(t)));
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

}  // namespace zdc
