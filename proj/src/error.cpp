#include "zdc/error.hpp"

namespace zdc {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::out_of_range: return "out of range";
    case Errc::window_too_large: return "window too large";
    case Errc::site_outside_lattice: return "site outside lattice";
    case Errc::malformed_stream: return "malformed stream";
    case Errc::bad_magic: return "bad magic";
    case Errc::version_mismatch: return "version mismatch";
    case Errc::symbol_out_of_range: return "symbol out of range";
    case Errc::truncated: return "truncated";
    case Errc::bad_probabilities: return "bad probabilities";
    case Errc::reducible_chain: return "reducible chain";
    case Errc::no_convergence: return "no convergence";
    case Errc::zero_probability: return "zero probability";
    case Errc::universe_too_large: return "universe too large";
    case Errc::io_error: return "i/o error";
  }
  return "error";
}

}  // namespace zdc
