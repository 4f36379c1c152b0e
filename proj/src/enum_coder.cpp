#include "zdc/enum_coder.hpp"

#include "zdc/error.hpp"
#include "zdc/prefix_codes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <iterator>

namespace zdc {

namespace {

constexpr char kMagic[4] = {'B', 'R', 'D', 'C'};

class Fenwick {
public:
  explicit Fenwick(std::span<const std::uint64_t> counts) : tree_(counts.size() + 1, 0) {
    for (std::size_t i = 0; i < counts.size(); ++i)
      add(i, static_cast<std::int64_t>(counts[i]));
    top_ = 1;
    while (top_ * 2 <= counts.size())
      top_ *= 2;
  }

  void add(std::size_t i, std::int64_t delta) {
    for (++i; i < tree_.size(); i += i & (~i + 1))
      tree_[i] = static_cast<std::uint64_t>(static_cast<std::int64_t>(tree_[i]) + delta);
  }

  // Sum of entries [0, i).
  std::uint64_t prefix(std::size_t i) const {
    std::uint64_t s = 0;
    for (; i > 0; i -= i & (~i + 1))
      s += tree_[i];
    return s;
  }

  // Smallest i with prefix(i + 1) > target.
  std::size_t find(std::uint64_t target) const {
    std::size_t pos = 0;
    for (std::size_t step = top_; step > 0; step /= 2) {
      if (pos + step < tree_.size() && tree_[pos + step] <= target) {
        pos += step;
        target -= tree_[pos];
      }
    }
    return pos;
  }

private:
  std::vector<std::uint64_t> tree_;
  std::size_t top_ = 1;
};

// Lexicographic multiset-permutation rank of a sequence of dense ids.
// Walking left to right, the sequences that branch below the current id a
// number class * (sum of counts below a) / remaining.
BigNat rank_ids(std::span<const std::uint32_t> ids, std::vector<std::uint64_t> counts,
                BigNat mult) {
  Fenwick fw(counts);
  BigNat r = 0;
  BigNat tmp;
  std::uint64_t remaining = ids.size();
  for (auto a : ids) {
    const std::uint64_t below = fw.prefix(a);
    if (below > 0) {
      mpz_mul_ui(tmp.get_mpz_t(), mult.get_mpz_t(), below);
      mpz_divexact_ui(tmp.get_mpz_t(), tmp.get_mpz_t(), remaining);
      r += tmp;
    }
    mpz_mul_ui(mult.get_mpz_t(), mult.get_mpz_t(), counts[a]);
    mpz_divexact_ui(mult.get_mpz_t(), mult.get_mpz_t(), remaining);
    --counts[a];
    fw.add(a, -1);
    --remaining;
  }
  return r;
}

std::vector<std::uint32_t> unrank_ids(std::vector<std::uint64_t> counts, BigNat r, BigNat mult) {
  std::uint64_t remaining = 0;
  for (auto c : counts)
    remaining += c;
  if (sgn(r) < 0 || r >= mult)
    throw Error(Errc::out_of_range, "rank outside the class");
  Fenwick fw(counts);
  std::vector<std::uint32_t> ids;
  ids.reserve(remaining);
  BigNat q, tmp;
  while (remaining > 0) {
    mpz_mul_ui(q.get_mpz_t(), r.get_mpz_t(), remaining);
    mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), mult.get_mpz_t());
    const std::uint64_t target = big_to_u64(q);
    const auto a = static_cast<std::uint32_t>(fw.find(target));
    const std::uint64_t below = fw.prefix(a);
    if (below > 0) {
      mpz_mul_ui(tmp.get_mpz_t(), mult.get_mpz_t(), below);
      mpz_divexact_ui(tmp.get_mpz_t(), tmp.get_mpz_t(), remaining);
      r -= tmp;
    }
    mpz_mul_ui(mult.get_mpz_t(), mult.get_mpz_t(), counts[a]);
    mpz_divexact_ui(mult.get_mpz_t(), mult.get_mpz_t(), remaining);
    --counts[a];
    fw.add(a, -1);
    --remaining;
    ids.push_back(a);
  }
  return ids;
}

struct Histogram {
  std::vector<BigNat> keys;           // ascending
  std::vector<std::uint64_t> counts;  // aligned with keys
  std::vector<std::uint32_t> ids;     // sequence as positions in keys
};

Histogram histogram_of(std::span<const BigNat> seq) {
  Histogram h;
  h.keys.assign(seq.begin(), seq.end());
  std::sort(h.keys.begin(), h.keys.end());
  h.keys.erase(std::unique(h.keys.begin(), h.keys.end()), h.keys.end());
  h.counts.assign(h.keys.size(), 0);
  h.ids.reserve(seq.size());
  for (const auto& v : seq) {
    auto id = static_cast<std::uint32_t>(std::lower_bound(h.keys.begin(), h.keys.end(), v) - h.keys.begin());
    ++h.counts[id];
    h.ids.push_back(id);
  }
  return h;
}

void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i)
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t at, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i)
    v |= std::uint64_t{in[at + i]} << (8 * i);
  return v;
}

void check_header(const ContainerHeader& h) {
  if (h.alphabet_size < 2 || h.alphabet_size > 256)
    throw Error(Errc::malformed_stream, "alphabet size outside [2, 256]");
  if (h.m < 1 || h.m >= h.n)
    throw Error(Errc::malformed_stream, "block parameter must satisfy 1 <= m < n");
  if (h.n > 0xFFFFFFFFull || h.m > 0xFFFF)
    throw Error(Errc::malformed_stream, "header field overflow");
  window_size(h.spec, h.n);
}

double log2_plus_one(std::uint64_t v) {
  return std::log2(static_cast<double>(v) + 1.0);
}

struct PayloadParts {
  std::uint64_t bits_x = 0, bits_y = 0, bits_z = 0;
};

}  // namespace

BlockIndexOrder::BlockIndexOrder(LatticeSpec spec, std::uint64_t m, unsigned alphabet_size)
    : spec_(spec), m_(m), alphabet_size_(alphabet_size), block_size_(window_size(spec, m)),
      count_(big_pow(alphabet_size, block_size_)) {
  if (m < 1)
    throw Error(Errc::invalid_argument, "block parameter must be positive");
  if (alphabet_size < 2 || alphabet_size > 256)
    throw Error(Errc::invalid_argument, "alphabet size must be in [2, 256]");
}

BigNat BlockIndexOrder::index(std::span<const std::uint8_t> linearized) const {
  if (linearized.size() != block_size_)
    throw Error(Errc::invalid_argument, "block has the wrong number of sites");
  BigNat v = 0;
  for (auto s : linearized) {
    if (s >= alphabet_size_)
      throw Error(Errc::symbol_out_of_range, "block symbol outside the alphabet");
    v *= alphabet_size_;
    v += s;
  }
  return v;
}

BigNat BlockIndexOrder::index(const Block& block) const {
  if (block.spec() != spec_ || block.n() != m_ || block.alphabet_size() != alphabet_size_)
    throw Error(Errc::invalid_argument, "block does not match the index order");
  return index(block.symbols());
}

Block BlockIndexOrder::block(const BigNat& index) const {
  if (sgn(index) < 0 || index >= count_)
    throw Error(Errc::out_of_range, "block index outside [0, M)");
  std::vector<std::uint8_t> symbols(block_size_);
  BigNat rest = index;
  for (std::uint64_t i = block_size_; i-- > 0;)
    symbols[i] = static_cast<std::uint8_t>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), alphabet_size_));
  return Block(Window(spec_, m_), alphabet_size_, std::move(symbols));
}

std::vector<BigNat> block_sequence(const Pattern& p, std::uint64_t m) {
  const Tiling tiling = make_tiling(p.spec(), p.n(), m);
  const std::vector<Site> offsets = Window(p.spec(), m).sites();
  const unsigned base = p.alphabet_size();
  const bool small = static_cast<double>(offsets.size()) * std::log2(base) < 63.0;

  std::vector<BigNat> seq;
  seq.reserve(tiling.block_count());
  Site at(p.spec().d);
  for (std::uint64_t j = 0; j < tiling.block_count(); ++j) {
    const Site origin = tiling.origin(j);
    std::uint64_t word = 0;
    BigNat big = 0;
    for (const auto& h : offsets) {
      for (unsigned i = 0; i < at.size(); ++i)
        at[i] = origin[i] + h[i];
      const std::uint8_t s = p.symbols()[scan_index(p.spec(), at)];
      if (small) {
        word = word * base + s;
      } else {
        big *= base;
        big += s;
      }
    }
    seq.push_back(small ? big_from_u64(word) : big);
  }
  return seq;
}

std::uint64_t FrequencyVector::count_of(const BigNat& index) const {
  auto it = counts.find(index);
  return it == counts.end() ? 0 : it->second;
}

FrequencyVector frequency_vector(std::span<const BigNat> seq) {
  FrequencyVector x;
  for (const auto& v : seq)
    ++x.counts[v];
  x.total = seq.size();
  return x;
}

BigNat class_size(std::span<const std::uint64_t> counts) {
  std::uint64_t total = 0;
  for (auto c : counts)
    total += c;
  BigNat result, f;
  mpz_fac_ui(result.get_mpz_t(), total);
  for (auto c : counts) {
    if (c < 2)
      continue;
    mpz_fac_ui(f.get_mpz_t(), c);
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), f.get_mpz_t());
  }
  return result;
}

BigNat class_size(const FrequencyVector& x) {
  std::vector<std::uint64_t> counts;
  counts.reserve(x.counts.size());
  for (const auto& [_, c] : x.counts)
    counts.push_back(c);
  return class_size(counts);
}

BigNat rank(std::span<const BigNat> seq) {
  Histogram h = histogram_of(seq);
  BigNat size = class_size(h.counts);
  return rank_ids(h.ids, std::move(h.counts), std::move(size));
}

std::vector<BigNat> unrank(const FrequencyVector& x, const BigNat& r) {
  std::vector<BigNat> keys;
  std::vector<std::uint64_t> counts;
  for (const auto& [k, c] : x.counts) {
    if (c == 0)
      continue;
    keys.push_back(k);
    counts.push_back(c);
  }
  BigNat size = class_size(counts);
  std::vector<BigNat> seq;
  for (auto id : unrank_ids(std::move(counts), r, std::move(size)))
    seq.push_back(keys[id]);
  return seq;
}

const char* xmode_name(XMode mode) noexcept {
  return mode == XMode::dense ? "dense" : "sparse";
}

EncodedPattern encode(const Pattern& p, std::uint64_t m, const EncodeOptions& options) {
  const Tiling tiling = make_tiling(p.spec(), p.n(), m);
  const BlockIndexOrder order(p.spec(), m, p.alphabet_size());
  if (options.dense_threshold > kDenseLimit)
    throw Error(Errc::invalid_argument, "dense threshold above the format limit 2^16");
  const XMode mode = options.mode.value_or(order.count() <= big_from_u64(options.dense_threshold)
                                               ? XMode::dense
                                               : XMode::sparse);
  if (mode == XMode::dense && order.count() > big_from_u64(kDenseLimit))
    throw Error(Errc::invalid_argument, "dense mode needs at most 2^16 block types");
  if (p.n() > 0xFFFFFFFFull || m > 0xFFFF)
    throw Error(Errc::invalid_argument, "n or m too large for the container header");

  const std::vector<BigNat> seq = block_sequence(p, m);
  Histogram h = histogram_of(seq);
  const BigNat size = class_size(h.counts);
  const BigNat y = rank_ids(h.ids, h.counts, size);

  BitWriter out;
  LengthReport report;
  double x_bound = 0;
  if (mode == XMode::dense) {
    const std::uint64_t total_types = big_to_u64(order.count());
    std::size_t next = 0;
    for (std::uint64_t j = 0; j < total_types; ++j) {
      std::uint64_t c = 0;
      if (next < h.keys.size() && h.keys[next] == big_from_u64(j))
        c = h.counts[next++];
      write_nat(out, big_from_u64(c));
      x_bound += 2 * log2_plus_one(c) + 1;
    }
  } else {
    write_nat(out, big_from_u64(h.keys.size()));
    x_bound += 2 * log2_plus_one(h.keys.size()) + 1;
    for (std::size_t i = 0; i < h.keys.size(); ++i) {
      write_nat(out, h.keys[i]);
      write_nat(out, big_from_u64(h.counts[i]));
      x_bound += 2 * big_log2(h.keys[i] + 1) + 1 + 2 * log2_plus_one(h.counts[i]) + 1;
    }
  }
  report.bits_x = out.bit_count();

  out.write_big(y, bit_length(size - 1));
  report.bits_y = out.bit_count() - report.bits_x;

  const std::uint64_t boundary = tiling.boundary_size();
  BigNat z = 0;
  for (std::uint64_t j = tiling.covered_size(); j < p.size(); ++j) {
    z *= p.alphabet_size();
    z += p.symbols()[j];
  }
  out.write_big(z, bit_length(big_pow(p.alphabet_size(), boundary) - 1));
  report.bits_z = out.bit_count() - report.bits_x - report.bits_y;

  EncodedPattern e;
  e.header = ContainerHeader{p.spec(), p.n(), p.alphabet_size(), m, mode, out.bit_count()};
  report.bits_header = kContainerHeaderBits;
  report.total = report.bits_header + out.bit_count();
  report.log2_class_size = big_log2(size);
  report.block_count = tiling.block_count();
  report.boundary_count = boundary;
  report.distinct_blocks = h.keys.size();
  report.bound_rhs = static_cast<double>(report.bits_header) + x_bound + report.log2_class_size + 1 +
                     static_cast<double>(boundary) * std::log2(p.alphabet_size()) + 1;
  e.report = report;
  e.payload = std::move(out).finish();
  return e;
}

Pattern decode(const EncodedPattern& e) {
  const ContainerHeader& hdr = e.header;
  check_header(hdr);
  if (e.payload.size() * 8 < hdr.payload_bits)
    throw Error(Errc::truncated, "payload shorter than its declared bit length");

  const Tiling tiling = make_tiling(hdr.spec, hdr.n, hdr.m);
  const BlockIndexOrder order(hdr.spec, hdr.m, hdr.alphabet_size);
  const std::uint64_t blocks = tiling.block_count();
  BitReader in(e.payload, hdr.payload_bits);

  std::vector<BigNat> keys;
  std::vector<std::uint64_t> counts;
  std::uint64_t sum = 0;
  auto take_count = [&](const BigNat& c) {
    if (!big_fits_u64(c) || big_to_u64(c) > blocks - sum)
      throw Error(Errc::malformed_stream, "block counts exceed the number of tiles");
    sum += big_to_u64(c);
    return big_to_u64(c);
  };
  if (hdr.mode == XMode::dense) {
    if (order.count() > big_from_u64(kDenseLimit))
      throw Error(Errc::malformed_stream, "dense x-fields with more than 2^16 block types");
    const std::uint64_t total_types = big_to_u64(order.count());
    for (std::uint64_t j = 0; j < total_types; ++j) {
      const std::uint64_t c = take_count(read_nat(in));
      if (c > 0) {
        keys.push_back(big_from_u64(j));
        counts.push_back(c);
      }
    }
  } else {
    const BigNat distinct = read_nat(in);
    if (sgn(distinct) == 0 || distinct > big_from_u64(blocks) || distinct > order.count())
      throw Error(Errc::malformed_stream, "bad number of distinct blocks");
    const std::uint64_t dcount = big_to_u64(distinct);
    for (std::uint64_t i = 0; i < dcount; ++i) {
      BigNat index = read_nat(in);
      if (index >= order.count() || (!keys.empty() && index <= keys.back()))
        throw Error(Errc::malformed_stream, "sparse block indices must increase and stay below M");
      const std::uint64_t c = take_count(read_nat(in));
      if (c == 0)
        throw Error(Errc::malformed_stream, "sparse entry with zero count");
      keys.push_back(std::move(index));
      counts.push_back(c);
    }
  }
  if (sum != blocks)
    throw Error(Errc::malformed_stream, "block counts do not sum to the number of tiles");

  const BigNat size = class_size(counts);
  const BigNat y = in.read_big(bit_length(size - 1));
  if (y >= size)
    throw Error(Errc::out_of_range, "rank field is not below the class size");

  const std::uint64_t boundary = tiling.boundary_size();
  const BigNat z_limit = big_pow(hdr.alphabet_size, boundary);
  BigNat z = in.read_big(bit_length(z_limit - 1));
  if (z >= z_limit)
    throw Error(Errc::out_of_range, "boundary field exceeds |Sigma|^B");

  if (!in.at_end())
    throw Error(Errc::malformed_stream, "payload length disagrees with its fields");
  for (std::uint64_t b = hdr.payload_bits; b < e.payload.size() * 8; ++b)
    if ((e.payload[b / 8] >> (7 - b % 8)) & 1u)
      throw Error(Errc::malformed_stream, "nonzero padding bits");
  if (e.payload.size() != (hdr.payload_bits + 7) / 8)
    throw Error(Errc::malformed_stream, "payload byte count disagrees with its bit length");

  const Window window(hdr.spec, hdr.n);
  std::vector<std::uint8_t> symbols(window.size(), 0);
  const std::vector<Site> offsets = Window(hdr.spec, hdr.m).sites();
  const std::vector<std::uint32_t> ids = unrank_ids(counts, y, size);
  Site at(hdr.spec.d);
  for (std::uint64_t j = 0; j < blocks; ++j) {
    const Block b = order.block(keys[ids[j]]);
    const Site origin = tiling.origin(j);
    for (std::size_t o = 0; o < offsets.size(); ++o) {
      for (unsigned i = 0; i < at.size(); ++i)
        at[i] = origin[i] + offsets[o][i];
      symbols[scan_index(hdr.spec, at)] = b.symbols()[o];
    }
  }
  for (std::uint64_t j = symbols.size(); j-- > tiling.covered_size();)
    symbols[j] = static_cast<std::uint8_t>(mpz_fdiv_q_ui(z.get_mpz_t(), z.get_mpz_t(), hdr.alphabet_size));
  return Pattern(window, hdr.alphabet_size, std::move(symbols));
}

std::vector<std::uint8_t> write_container(const EncodedPattern& e) {
  const ContainerHeader& h = e.header;
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  out.push_back(kContainerVersion);
  out.push_back(static_cast<std::uint8_t>(h.spec.kind));
  out.push_back(static_cast<std::uint8_t>(h.spec.d));
  put_le(out, h.n, 4);
  put_le(out, h.alphabet_size, 2);
  put_le(out, h.m, 2);
  out.push_back(static_cast<std::uint8_t>(h.mode));
  put_le(out, h.payload_bits, 8);
  out.insert(out.end(), e.payload.begin(), e.payload.end());
  return out;
}

EncodedPattern read_container(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw Error(Errc::bad_magic, "not a compressed container");
  if (bytes.size() < kContainerHeaderBytes)
    throw Error(Errc::truncated, "container header truncated");
  if (bytes[4] != kContainerVersion)
    throw Error(Errc::version_mismatch, "unsupported container version " + std::to_string(bytes[4]));
  if (bytes[5] > 1)
    throw Error(Errc::malformed_stream, "unknown lattice kind byte");
  if (bytes[6] == 0)
    throw Error(Errc::malformed_stream, "zero dimension");
  if (bytes[15] > 1)
    throw Error(Errc::malformed_stream, "unknown x-field mode");

  EncodedPattern e;
  ContainerHeader& h = e.header;
  h.spec = LatticeSpec(bytes[6], static_cast<Kind>(bytes[5]));
  h.n = get_le(bytes, 7, 4);
  h.alphabet_size = static_cast<unsigned>(get_le(bytes, 11, 2));
  h.m = get_le(bytes, 13, 2);
  h.mode = static_cast<XMode>(bytes[15]);
  h.payload_bits = get_le(bytes, 16, 8);
  check_header(h);

  const std::uint64_t payload_bytes = (h.payload_bits + 7) / 8;
  if (h.payload_bits > (std::uint64_t{1} << 60) || bytes.size() - kContainerHeaderBytes < payload_bytes)
    throw Error(Errc::truncated, "container payload truncated");
  auto first = bytes.begin() + kContainerHeaderBytes;
  e.payload.assign(first, first + static_cast<std::ptrdiff_t>(payload_bytes));
  e.report.bits_header = kContainerHeaderBits;
  e.report.total = kContainerHeaderBits + h.payload_bits;
  return e;
}

Pattern decode_container(std::span<const std::uint8_t> bytes) {
  return decode(read_container(bytes));
}

LengthReport code_length_report(const Pattern& p, std::uint64_t m, const EncodeOptions& options) {
  return encode(p, m, options).report;
}

}  // namespace zdc
