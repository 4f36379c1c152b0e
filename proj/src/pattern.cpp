#include "zdc/pattern.hpp"

#include "zdc/error.hpp"

#include <cstring>
#include <fstream>
#include <iterator>

namespace zdc {

namespace {

constexpr char kMagic[4] = {'Z', 'D', 'S', 'H'};
constexpr std::size_t kHeaderSize = 13;

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

}  // namespace

Pattern::Pattern(Window window, unsigned alphabet_size, std::vector<std::uint8_t> symbols)
    : window_(window), alphabet_size_(alphabet_size), symbols_(std::move(symbols)) {
  if (alphabet_size < 2 || alphabet_size > 256)
    throw Error(Errc::invalid_argument, "alphabet size must be in [2, 256]");
  if (symbols_.size() != window_.size())
    throw Error(Errc::invalid_argument, "symbol count does not match the window size");
  for (auto s : symbols_)
    if (s >= alphabet_size)
      throw Error(Errc::symbol_out_of_range, "symbol " + std::to_string(s) + " outside the alphabet");
}

Pattern Pattern::from_sites(Window window, unsigned alphabet_size,
                            const std::function<std::uint8_t(const Site&)>& value) {
  std::vector<std::uint8_t> symbols(window.size());
  for (std::uint64_t j = 0; j < symbols.size(); ++j)
    symbols[j] = value(scan_site(window.spec, j));
  return Pattern(window, alphabet_size, std::move(symbols));
}

Pattern Pattern::constant(Window window, unsigned alphabet_size, std::uint8_t symbol) {
  return Pattern(window, alphabet_size, std::vector<std::uint8_t>(window.size(), symbol));
}

std::uint8_t Pattern::at(const Site& site) const {
  if (!window_.contains(site))
    throw Error(Errc::out_of_range, "site " + format_site(site) + " outside the window");
  return symbols_[scan_index(window_.spec, site)];
}

std::vector<std::uint8_t> linearize(const Pattern& p) {
  return {p.symbols().begin(), p.symbols().end()};
}

Block extract_block(const Pattern& p, const Site& origin, std::uint64_t m) {
  const Window block_window(p.spec(), m);
  const std::uint64_t count = block_window.size();
  std::vector<std::uint8_t> symbols(count);
  Site at(p.spec().d);
  for (std::uint64_t j = 0; j < count; ++j) {
    Site h = scan_site(p.spec(), j);
    for (unsigned i = 0; i < at.size(); ++i)
      at[i] = origin[i] + h[i];
    if (!p.window().contains(at))
      throw Error(Errc::out_of_range, "block at " + format_site(origin) + " exceeds the window");
    symbols[j] = p.symbols()[scan_index(p.spec(), at)];
  }
  return Block(block_window, p.alphabet_size(), std::move(symbols));
}

Pattern restrict(const Pattern& p, std::uint64_t n) {
  if (n > p.n())
    throw Error(Errc::out_of_range, "restriction to a larger window");
  const Window w(p.spec(), n);
  auto first = p.symbols().begin();
  return Pattern(w, p.alphabet_size(), std::vector<std::uint8_t>(first, first + w.size()));
}

std::vector<std::uint8_t> write_pattern(const Pattern& p) {
  if (p.n() > 0xFFFFFFFFull)
    throw Error(Errc::window_too_large, "n does not fit the file header");
  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  out.push_back(kPatternVersion);
  out.push_back(static_cast<std::uint8_t>(p.spec().kind));
  out.push_back(static_cast<std::uint8_t>(p.spec().d));
  put_le(out, p.n(), 4);
  put_le(out, p.alphabet_size(), 2);
  out.insert(out.end(), p.symbols().begin(), p.symbols().end());
  return out;
}

Pattern read_pattern(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw Error(Errc::bad_magic, "not a pattern file");
  if (bytes.size() < kHeaderSize)
    throw Error(Errc::truncated, "pattern header truncated");
  if (bytes[4] != kPatternVersion)
    throw Error(Errc::version_mismatch, "unsupported pattern version " + std::to_string(bytes[4]));
  if (bytes[5] > 1)
    throw Error(Errc::invalid_argument, "unknown lattice kind byte");
  const LatticeSpec spec(bytes[6], static_cast<Kind>(bytes[5]));
  const Window window(spec, get_le(bytes, 7, 4));
  const auto alphabet = static_cast<unsigned>(get_le(bytes, 11, 2));
  const std::uint64_t count = window.size();
  if (bytes.size() - kHeaderSize < count)
    throw Error(Errc::truncated, "pattern payload truncated");
  auto first = bytes.begin() + kHeaderSize;
  return Pattern(window, alphabet, std::vector<std::uint8_t>(first, first + static_cast<std::ptrdiff_t>(count)));
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::io_error, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error(Errc::io_error, "cannot write '" + path + "'");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace zdc
