#pragma once

#include <stdexcept>
#include <string>

namespace queens {

// Failure kinds surfaced by library operations.
enum class errc {
  invalid_input,
  value_out_of_range,
  not_a_permutation,
  no_solution_exists,
  size_mismatch,
  no_witness,
  limit_exceeded,
  attacking_prefix,
};

inline const char* to_string(errc c) noexcept {
  switch (c) {
    case errc::invalid_input: return "invalid input";
    case errc::value_out_of_range: return "value out of range";
    case errc::not_a_permutation: return "not a permutation";
    case errc::no_solution_exists: return "no solution exists";
    case errc::size_mismatch: return "size mismatch";
    case errc::no_witness: return "no witness";
    case errc::limit_exceeded: return "limit exceeded";
    case errc::attacking_prefix: return "attacking prefix";
  }
  return "unknown error";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace queens
