#pragma once

#include "zdc/lattice.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace zdc {

// A symbol array on a window, stored in scan order.
class Pattern {
public:
  Pattern(Window window, unsigned alphabet_size, std::vector<std::uint8_t> symbols);

  static Pattern from_sites(Window window, unsigned alphabet_size,
                            const std::function<std::uint8_t(const Site&)>& value);
  static Pattern constant(Window window, unsigned alphabet_size, std::uint8_t symbol);

  const Window& window() const noexcept { return window_; }
  const LatticeSpec& spec() const noexcept { return window_.spec; }
  std::uint64_t n() const noexcept { return window_.n; }
  unsigned alphabet_size() const noexcept { return alphabet_size_; }
  std::uint64_t size() const noexcept { return symbols_.size(); }

  std::span<const std::uint8_t> symbols() const noexcept { return symbols_; }
  std::uint8_t at(const Site& site) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

private:
  Window window_;
  unsigned alphabet_size_;
  std::vector<std::uint8_t> symbols_;
};

// Pattern values on Lambda_m read relative to an origin.
using Block = Pattern;

// The pattern read along the scan order.
std::vector<std::uint8_t> linearize(const Pattern& p);

Block extract_block(const Pattern& p, const Site& origin, std::uint64_t m);
Pattern restrict(const Pattern& p, std::uint64_t n);

// File format: "ZDSH" | version 0x01 | kind | d | n (u32 LE) | |Sigma| (u16 LE) | symbols.
inline constexpr std::uint8_t kPatternVersion = 1;
std::vector<std::uint8_t> write_pattern(const Pattern& p);
Pattern read_pattern(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace zdc
