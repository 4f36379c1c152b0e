#include "zdc/lattice.hpp"

#include "zdc/error.hpp"

#include <cmath>
#include <cstdlib>

namespace zdc {

namespace {

// base^exp, throwing once the result passes kMaxWindowSize.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > kMaxWindowSize / base)
      throw Error(Errc::window_too_large, "window exceeds 2^36 sites");
    r *= base;
  }
  return r;
}

// Largest r with r^d <= x.
std::uint64_t integer_root(std::uint64_t x, unsigned d) {
  if (d == 1 || x < 2)
    return x;
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<double>(x), 1.0 / d));
  auto pow_le = [&](std::uint64_t c) {
    std::uint64_t p = 1;
    for (unsigned i = 0; i < d; ++i) {
      if (c != 0 && p > x / c)
        return false;
      p *= c;
    }
    return true;
  };
  while (r > 0 && !pow_le(r))
    --r;
  while (pow_le(r + 1))
    ++r;
  return r;
}

}  // namespace

const char* kind_name(Kind kind) noexcept {
  return kind == Kind::onesided ? "onesided" : "twosided";
}

Kind parse_kind(const std::string& text) {
  if (text == "onesided")
    return Kind::onesided;
  if (text == "twosided")
    return Kind::twosided;
  throw Error(Errc::invalid_argument, "lattice kind must be onesided or twosided, got '" + text + "'");
}

LatticeSpec::LatticeSpec(unsigned dim, Kind k) : d(dim), kind(k) {
  if (dim < 1 || dim > 255)
    throw Error(Errc::invalid_argument, "dimension must be in [1, 255]");
}

std::string format_site(const Site& site) {
  std::string s = "(";
  for (std::size_t i = 0; i < site.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(site[i]);
  }
  return s + ")";
}

std::uint64_t window_size(const LatticeSpec& spec, std::uint64_t n) {
  if (n == 0)
    return 0;
  if (n > kMaxWindowParameter)
    throw Error(Errc::window_too_large, "window parameter exceeds 2^20");
  return checked_pow(spec.kind == Kind::onesided ? n : 2 * n - 1, spec.d);
}

std::uint64_t shell_of(const LatticeSpec& spec, const Site& site) {
  if (site.size() != spec.d)
    throw Error(Errc::invalid_argument, "site dimension does not match the lattice");
  std::uint64_t t = 0;
  for (auto c : site) {
    if (spec.kind == Kind::onesided && c < 0)
      throw Error(Errc::site_outside_lattice, "negative coordinate on a one-sided lattice");
    t = std::max<std::uint64_t>(t, static_cast<std::uint64_t>(std::llabs(c)));
  }
  return t + 1;
}

std::uint64_t scan_index(const LatticeSpec& spec, const Site& site) {
  const std::uint64_t t = shell_of(spec, site) - 1;
  const std::uint64_t before = window_size(spec, t);
  window_size(spec, t + 1);  // range guard
  if (t == 0)
    return 0;

  const bool two = spec.kind == Kind::twosided;
  const std::int64_t lo = two ? -static_cast<std::int64_t>(t) : 0;
  const std::uint64_t full = two ? 2 * t + 1 : t + 1;
  const std::uint64_t inner = two ? 2 * t - 1 : t;
  auto is_max = [&](std::int64_t v) { return static_cast<std::uint64_t>(std::llabs(v)) == t; };

  std::uint64_t rank = 0;
  bool hit = false;
  for (unsigned i = 0; i < spec.d; ++i) {
    const unsigned r = spec.d - 1 - i;
    const std::uint64_t wfull = checked_pow(full, r);
    const std::uint64_t winner = wfull - checked_pow(inner, r);
    const std::int64_t g = site[i];
    const auto less_all = static_cast<std::uint64_t>(g - lo);
    const std::uint64_t less_max = (two && g > lo) ? 1 : 0;
    if (hit)
      rank += less_all * wfull;
    else
      rank += less_max * wfull + (less_all - less_max) * winner;
    hit = hit || is_max(g);
  }
  return before + rank;
}

Site scan_site(const LatticeSpec& spec, std::uint64_t index) {
  Site site(spec.d, 0);
  if (index == 0)
    return site;
  const bool two = spec.kind == Kind::twosided;
  const std::uint64_t root = integer_root(index, spec.d);
  const std::uint64_t t = two ? (root + 1) / 2 : root;
  std::uint64_t rho = index - window_size(spec, t);
  if (rho >= window_size(spec, t + 1) - window_size(spec, t))
    throw Error(Errc::out_of_range, "scan index inversion failed");

  const auto st = static_cast<std::int64_t>(t);
  const std::uint64_t full = two ? 2 * t + 1 : t + 1;
  const std::uint64_t inner = two ? 2 * t - 1 : t;
  bool hit = false;
  for (unsigned i = 0; i < spec.d; ++i) {
    const unsigned r = spec.d - 1 - i;
    const std::uint64_t wfull = checked_pow(full, r);
    const std::uint64_t winner = wfull - checked_pow(inner, r);
    if (hit) {
      site[i] = (two ? -st : 0) + static_cast<std::int64_t>(rho / wfull);
      rho %= wfull;
      continue;
    }
    if (two) {
      if (rho < wfull) {
        site[i] = -st;
        hit = true;
        continue;
      }
      rho -= wfull;
    }
    if (winner > 0 && rho < winner * inner) {
      site[i] = (two ? -st + 1 : 0) + static_cast<std::int64_t>(rho / winner);
      rho %= winner;
    } else {
      rho -= winner * inner;
      site[i] = st;
      hit = true;
    }
  }
  return site;
}

Window::Window(LatticeSpec s, std::uint64_t n_) : spec(s), n(n_) {
  if (n_ < 1)
    throw Error(Errc::invalid_argument, "window parameter must be positive");
  window_size(spec, n);
}

bool Window::contains(const Site& site) const {
  if (site.size() != spec.d)
    return false;
  for (auto c : site) {
    if (spec.kind == Kind::onesided ? (c < 0 || static_cast<std::uint64_t>(c) >= n)
                                    : static_cast<std::uint64_t>(std::llabs(c)) >= n)
      return false;
  }
  return true;
}

std::vector<Site> Window::sites() const {
  std::vector<Site> out;
  const std::uint64_t total = size();
  out.reserve(total);
  for (std::uint64_t j = 0; j < total; ++j)
    out.push_back(scan_site(spec, j));
  return out;
}

std::uint64_t side_length(Kind kind, std::uint64_t m) {
  return kind == Kind::onesided ? m : 2 * m - 1;
}

std::uint64_t covered_extent(Kind kind, std::uint64_t m, std::uint64_t k) {
  if (k == 0)
    return 0;
  return kind == Kind::onesided ? m * k : side_length(kind, m) * (k - 1) + m;
}

Site Tiling::origin(std::uint64_t j) const {
  Site g = scan_site(spec, j);
  for (auto& c : g)
    c *= static_cast<std::int64_t>(side);
  return g;
}

std::vector<Site> Tiling::block_origins() const {
  std::vector<Site> out;
  const std::uint64_t count = block_count();
  out.reserve(count);
  for (std::uint64_t j = 0; j < count; ++j)
    out.push_back(origin(j));
  return out;
}

std::vector<Site> Tiling::boundary_sites() const {
  std::vector<Site> out;
  const std::uint64_t end = window_size(spec, n);
  for (std::uint64_t j = covered_size(); j < end; ++j)
    out.push_back(scan_site(spec, j));
  return out;
}

Tiling make_tiling(const LatticeSpec& spec, std::uint64_t n, std::uint64_t m) {
  if (m < 1 || m >= n)
    throw Error(Errc::invalid_argument, "tiling needs 1 <= m < n");
  window_size(spec, n);

  Tiling t;
  t.spec = spec;
  t.n = n;
  t.m = m;
  t.side = side_length(spec.kind, m);
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (covered_extent(spec.kind, m, k) < n && covered_extent(spec.kind, m, k + 1) >= n) {
      t.k = k;
      break;
    }
  }
  if (t.k == 0)
    throw Error(Errc::invalid_argument, "no tiling parameter k found");
  t.covered_n = covered_extent(spec.kind, m, t.k);
  return t;
}

}  // namespace zdc
