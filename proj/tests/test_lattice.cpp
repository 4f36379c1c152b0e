#include "oracles.hpp"

#include "zdc/error.hpp"
#include "zdc/lattice.hpp"

#include <doctest.h>

#include <set>

using namespace zdc;

TEST_CASE("window sizes") {
  CHECK(window_size(LatticeSpec(2, Kind::twosided), 3) == 25);
  CHECK(window_size(LatticeSpec(2, Kind::onesided), 3) == 9);
  for (unsigned d = 1; d <= 6; ++d)
    CHECK(window_size(LatticeSpec(d, Kind::onesided), 1) == 1);
  for (unsigned d = 1; d <= 3; ++d)
    for (int n = 1; n <= 6; ++n)
      for (Kind kind : {Kind::onesided, Kind::twosided})
        CHECK(window_size(LatticeSpec(d, kind), n) == oracle::box_sites(d, kind, n).size());
  CHECK_THROWS_AS(window_size(LatticeSpec(1, Kind::onesided), kMaxWindowParameter + 1), Error);
  CHECK_THROWS_AS(window_size(LatticeSpec(9, Kind::twosided), 1000), Error);
}

TEST_CASE("scan index examples") {
  const LatticeSpec one2(2, Kind::onesided), two2(2, Kind::twosided);
  CHECK(scan_index(one2, {0, 0}) == 0);
  CHECK(scan_index(one2, {0, 1}) == 1);
  CHECK(scan_index(one2, {1, 0}) == 2);
  CHECK(scan_index(one2, {1, 1}) == 3);
  CHECK(scan_index(two2, {1, 1}) == 8);
  CHECK(scan_index(two2, {-1, -1}) == 1);
}

TEST_CASE("scan index rejects sites outside the lattice") {
  try {
    scan_index(LatticeSpec(2, Kind::onesided), {0, -1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::site_outside_lattice);
  }
  CHECK_THROWS_AS(scan_index(LatticeSpec(2, Kind::onesided), {0, 0, 0}), Error);
}

TEST_CASE("scan order equals the shell-then-lex oracle") {
  for (unsigned d = 1; d <= 3; ++d)
    for (Kind kind : {Kind::onesided, Kind::twosided}) {
      const LatticeSpec spec(d, kind);
      const int n = d == 3 ? 9 : 14;
      const auto order = oracle::scan_order(d, kind, n);
      for (std::size_t j = 0; j < order.size(); ++j) {
        REQUIRE(scan_index(spec, order[j]) == j);
        REQUIRE(scan_site(spec, j) == order[j]);
      }
    }
}

TEST_CASE("scan inverse on larger indices") {
  for (unsigned d = 1; d <= 4; ++d)
    for (Kind kind : {Kind::onesided, Kind::twosided}) {
      const LatticeSpec spec(d, kind);
      const std::uint64_t top = window_size(spec, d == 1 ? 5000 : (d == 2 ? 300 : 40));
      for (std::uint64_t j = 0; j < top; j += 1 + j / 50)
        REQUIRE(scan_index(spec, scan_site(spec, j)) == j);
    }
}

TEST_CASE("windows and sites") {
  const Window w(LatticeSpec(2, Kind::twosided), 2);
  CHECK(w.size() == 9);
  CHECK(w.contains({1, -1}));
  CHECK_FALSE(w.contains({2, 0}));
  CHECK(w.sites().front() == Site{0, 0});
  CHECK(format_site({-1, 3}) == "(-1,3)");
  CHECK_THROWS_AS(Window(LatticeSpec(1, Kind::onesided), 0), Error);
}

TEST_CASE("tiling examples") {
  const Tiling a = make_tiling(LatticeSpec(1, Kind::onesided), 5, 2);
  CHECK(a.k == 2);
  CHECK(a.covered_size() == 4);
  CHECK(a.boundary_sites() == std::vector<Site>{{4}});
  CHECK(a.block_origins() == std::vector<Site>{{0}, {2}});

  const Tiling b = make_tiling(LatticeSpec(1, Kind::onesided), 4, 2);
  CHECK(b.k == 1);
  CHECK(b.covered_size() == 2);
  CHECK(b.boundary_sites() == std::vector<Site>{{2}, {3}});

  const Tiling c = make_tiling(LatticeSpec(1, Kind::twosided), 5, 2);
  CHECK(c.k == 1);
  CHECK(c.side == 3);
  CHECK(c.covered_size() == 3);
  // scan order of the boundary: shell 2 then 3 then 4, each lex
  CHECK(c.boundary_sites() == std::vector<Site>{{-2}, {2}, {-3}, {3}, {-4}, {4}});

  CHECK_THROWS_AS(make_tiling(LatticeSpec(1, Kind::onesided), 3, 3), Error);
}

TEST_CASE("tiling properties against block-union oracle") {
  for (unsigned d = 1; d <= 2; ++d)
    for (Kind kind : {Kind::onesided, Kind::twosided})
      for (std::int64_t n = 2; n <= (d == 1 ? 32 : 12); ++n)
        for (std::int64_t m = 1; m < n; ++m) {
          const LatticeSpec spec(d, kind);
          const Tiling t = make_tiling(spec, n, m);
          const auto window = oracle::box_sites(d, kind, n);
          const std::set<Site> win(window.begin(), window.end());
          auto strictly_inside = [&](std::int64_t k) {
            std::set<Site> u;
            if (!oracle::block_union(d, kind, m, k, u))
              return false;
            for (const auto& s : u)
              if (!win.count(s))
                return false;
            return u.size() < win.size();
          };
          auto covers = [&](std::int64_t k) {
            std::set<Site> u;
            oracle::block_union(d, kind, m, k, u);
            for (const auto& s : win)
              if (!u.count(s))
                return false;
            return true;
          };
          const auto k = static_cast<std::int64_t>(t.k);
          REQUIRE(strictly_inside(k));
          REQUIRE(covers(k + 1));
          REQUIRE_FALSE(strictly_inside(k + 1));
          REQUIRE((k == 1 || !covers(k)));
          REQUIRE(t.covered_size() == t.block_size() * t.block_count());
          REQUIRE(t.boundary_size() == win.size() - t.covered_size());

          // covered part is the scan prefix
          std::set<Site> u;
          oracle::block_union(d, kind, m, k, u);
          const auto order = oracle::scan_order(d, kind, n);
          for (std::size_t j = 0; j < order.size(); ++j)
            REQUIRE(u.count(order[j]) == (j < t.covered_size() ? 1u : 0u));
        }
}

TEST_CASE("covered fraction approaches one") {
  for (unsigned d = 1; d <= 3; ++d)
    for (Kind kind : {Kind::onesided, Kind::twosided})
      for (std::uint64_t m = 1; m <= 3; ++m) {
        const LatticeSpec spec(d, kind);
        for (std::uint64_t n = m + 1; n <= 64; ++n) {
          const Tiling t = make_tiling(spec, n, m);
          const double gap = 1.0 - double(t.covered_size()) / double(window_size(spec, n));
          // the boundary is at most one tile layer thick on each open side
          const double w = double(side_length(kind, n));
          const double sides = kind == Kind::onesided ? 1 : 2;
          const double layer = 1.0 - std::pow((w - sides * double(t.side)) / w, d);
          REQUIRE(gap > 0);
          REQUIRE(gap <= layer + 1e-12);
        }
        const Tiling far = make_tiling(spec, 4096 >> (2 * (d - 1)), m);
        CHECK(double(far.covered_size()) / double(window_size(spec, far.n)) > 0.95);
      }
}
