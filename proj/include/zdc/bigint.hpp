#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace zdc {

using BigNat = mpz_class;
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigNat big_from_u64(std::uint64_t v) {
  BigNat r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

// Caller guarantees 0 <= v < 2^64.
inline std::uint64_t big_to_u64(const BigNat& v) {
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, 1, sizeof(r), 0, 0, v.get_mpz_t());
  return r;
}

inline bool big_fits_u64(const BigNat& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

// Number of bits needed to write v in binary; 0 for v == 0.
inline std::uint64_t bit_length(const BigNat& v) {
  return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline BigNat big_pow(std::uint64_t base, std::uint64_t exp) {
  BigNat r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

double big_log2(const BigNat& v);

}  // namespace zdc
