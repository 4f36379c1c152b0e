#pragma once

#include <stdexcept>
#include <string>

namespace zdc {

enum class Errc {
  invalid_argument,
  out_of_range,
  window_too_large,
  site_outside_lattice,
  malformed_stream,
  bad_magic,
  version_mismatch,
  symbol_out_of_range,
  truncated,
  bad_probabilities,
  reducible_chain,
  no_convergence,
  zero_probability,
  universe_too_large,
  io_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace zdc
