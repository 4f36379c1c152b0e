#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zdc {

// onesided: G = Z_+^d, windows [0, n)^d.  twosided: G = Z^d, windows (-n, n)^d.
enum class Kind : std::uint8_t { onesided = 0, twosided = 1 };

const char* kind_name(Kind kind) noexcept;
Kind parse_kind(const std::string& text);

struct LatticeSpec {
  unsigned d = 1;
  Kind kind = Kind::onesided;

  LatticeSpec() = default;
  LatticeSpec(unsigned dim, Kind k);

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

using Site = std::vector<std::int64_t>;

std::string format_site(const Site& site);

inline constexpr std::uint64_t kMaxWindowParameter = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMaxWindowSize = std::uint64_t{1} << 36;

// |Lambda_n|: n^d (onesided) or (2n-1)^d (twosided); zero for n == 0.
std::uint64_t window_size(const LatticeSpec& spec, std::uint64_t n);

// Shell-then-lexicographic enumeration of G: shell t holds the sites of
// Lambda_{t+1} \ Lambda_t, and each shell is listed in lexicographic order.
// Every window Lambda_n is therefore the index range [0, |Lambda_n|).
std::uint64_t scan_index(const LatticeSpec& spec, const Site& site);
Site scan_site(const LatticeSpec& spec, std::uint64_t index);

// Smallest n with site in Lambda_n.
std::uint64_t shell_of(const LatticeSpec& spec, const Site& site);

struct Window {
  LatticeSpec spec;
  std::uint64_t n = 1;

  Window() = default;
  Window(LatticeSpec s, std::uint64_t n_);

  std::uint64_t size() const { return window_size(spec, n); }
  bool contains(const Site& site) const;
  // All sites in scan order.
  std::vector<Site> sites() const;

  friend bool operator==(const Window&, const Window&) = default;
};

// Lambda_n covered by the translates L_m g + Lambda_m, g in Lambda_k, where k is
// the unique integer with  U_{g in Lambda_k} (...)  strictly inside Lambda_n and
// Lambda_n inside U_{g in Lambda_{k+1}} (...).  The covered part is itself the
// window Lambda_{covered_n}, so its sites are the scan prefix of Lambda_n.
struct Tiling {
  LatticeSpec spec;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t k = 0;
  std::uint64_t side = 0;        // L_m
  std::uint64_t covered_n = 0;   // covered region equals Lambda_{covered_n}

  std::uint64_t block_count() const { return window_size(spec, k); }
  std::uint64_t block_size() const { return window_size(spec, m); }
  std::uint64_t covered_size() const { return window_size(spec, covered_n); }
  std::uint64_t boundary_size() const { return window_size(spec, n) - covered_size(); }

  // Origin L_m g of the j-th block, g = scan_site(j).
  Site origin(std::uint64_t j) const;
  std::vector<Site> block_origins() const;
  std::vector<Site> boundary_sites() const;
};

// Side length of Lambda_m: m (onesided) or 2m - 1 (twosided).
std::uint64_t side_length(Kind kind, std::uint64_t m);
// n-parameter of the cube covered by the blocks over Lambda_k.
std::uint64_t covered_extent(Kind kind, std::uint64_t m, std::uint64_t k);

Tiling make_tiling(const LatticeSpec& spec, std::uint64_t n, std::uint64_t m);

}  // namespace zdc
