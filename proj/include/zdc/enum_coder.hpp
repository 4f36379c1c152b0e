#pragma once

#include "zdc/bigint.hpp"
#include "zdc/lattice.hpp"
#include "zdc/pattern.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace zdc {

// Lexicographic numbering of the |Sigma|^|Lambda_m| block patterns: a block's
// index is the base-|Sigma| value of its scan-order string.
class BlockIndexOrder {
public:
  BlockIndexOrder(LatticeSpec spec, std::uint64_t m, unsigned alphabet_size);

  const BigNat& count() const noexcept { return count_; }
  std::uint64_t block_size() const noexcept { return block_size_; }

  BigNat index(const Block& block) const;
  BigNat index(std::span<const std::uint8_t> linearized) const;
  Block block(const BigNat& index) const;

private:
  LatticeSpec spec_;
  std::uint64_t m_;
  unsigned alphabet_size_;
  std::uint64_t block_size_;
  BigNat count_;
};

// Block indices of p read at the tiling origins, in origin order.
std::vector<BigNat> block_sequence(const Pattern& p, std::uint64_t m);

struct FrequencyVector {
  std::map<BigNat, std::uint64_t> counts;  // only positive counts are stored
  std::uint64_t total = 0;

  std::uint64_t count_of(const BigNat& index) const;
  friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;
};

FrequencyVector frequency_vector(std::span<const BigNat> seq);

// Multinomial total! / prod(count!).
BigNat class_size(const FrequencyVector& x);
BigNat class_size(std::span<const std::uint64_t> counts);

// Number of sequences with the same histogram that are lexicographically smaller.
BigNat rank(std::span<const BigNat> seq);
std::vector<BigNat> unrank(const FrequencyVector& x, const BigNat& rank);

enum class XMode : std::uint8_t { dense = 0, sparse = 1 };
const char* xmode_name(XMode mode) noexcept;

// Dense x-fields are written for every one of the M block types, so they are
// only allowed while M stays at or below this limit.
inline constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 16;

struct EncodeOptions {
  std::optional<XMode> mode;  // unset: dense when M <= dense_threshold
  std::uint64_t dense_threshold = kDenseLimit;
};

// Container: "BRDC" | 0x01 | kind | d | n (u32 LE) | |Sigma| (u16 LE) | m (u16 LE)
//            | mode | payload bit length (u64 LE) | payload bytes.
inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::uint64_t kContainerHeaderBytes = 24;
inline constexpr std::uint64_t kContainerHeaderBits = 8 * kContainerHeaderBytes;

struct ContainerHeader {
  LatticeSpec spec;
  std::uint64_t n = 0;
  unsigned alphabet_size = 0;
  std::uint64_t m = 0;
  XMode mode = XMode::dense;
  std::uint64_t payload_bits = 0;

  friend bool operator==(const ContainerHeader&, const ContainerHeader&) = default;
};

struct LengthReport {
  std::uint64_t bits_header = 0;
  std::uint64_t bits_x = 0;
  std::uint64_t bits_y = 0;
  std::uint64_t bits_z = 0;
  std::uint64_t total = 0;
  // Header + x-field bound + (log2 class + 1) + (boundary log2|Sigma| + 1).
  double bound_rhs = 0;
  double log2_class_size = 0;
  std::uint64_t block_count = 0;
  std::uint64_t boundary_count = 0;
  std::uint64_t distinct_blocks = 0;
};

struct EncodedPattern {
  ContainerHeader header;
  std::vector<std::uint8_t> payload;
  LengthReport report;
};

// Payload: x-fields (dense: one self-delimiting count per block type; sparse:
// #distinct then (index, count) pairs in increasing index), then the rank y in
// exactly bit_length(class_size - 1) bits, then the boundary symbols z as one
// base-|Sigma| number in exactly bit_length(|Sigma|^B - 1) bits.
EncodedPattern encode(const Pattern& p, std::uint64_t m, const EncodeOptions& options = {});
Pattern decode(const EncodedPattern& e);

std::vector<std::uint8_t> write_container(const EncodedPattern& e);
// Parses the header and slices the payload; bytes after the payload are ignored.
EncodedPattern read_container(std::span<const std::uint8_t> bytes);
Pattern decode_container(std::span<const std::uint8_t> bytes);

LengthReport code_length_report(const Pattern& p, std::uint64_t m, const EncodeOptions& options = {});

}  // namespace zdc
