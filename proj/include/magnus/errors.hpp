#pragma once

#include <stdexcept>
#include <string>

namespace magnus {

enum class errc {
  no_identity,
  not_latin_square,
  non_associative,
  closure_cap_exceeded,
  order_cap_exceeded,
  subgroup_count_cap_exceeded,
  lattice_cap_exceeded,
  unknown_atom,
  bad_parameter,
  not_prime_power,
  not_monolithic,
  not_normal,
  not_subgroup,
  not_solvable,
  syntax_error,
  arity_error,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::no_identity: return "no-identity";
    case errc::not_latin_square: return "not-latin-square";
    case errc::non_associative: return "non-associative";
    case errc::closure_cap_exceeded: return "closure-cap-exceeded";
    case errc::order_cap_exceeded: return "order-cap-exceeded";
    case errc::subgroup_count_cap_exceeded: return "subgroup-count-cap-exceeded";
    case errc::lattice_cap_exceeded: return "lattice-cap-exceeded";
    case errc::unknown_atom: return "unknown-atom";
    case errc::bad_parameter: return "bad-parameter";
    case errc::not_prime_power: return "not-prime-power";
    case errc::not_monolithic: return "not-monolithic";
    case errc::not_normal: return "not-normal";
    case errc::not_subgroup: return "not-subgroup";
    case errc::not_solvable: return "not-solvable";
    case errc::syntax_error: return "syntax-error";
    case errc::arity_error: return "arity-error";
    case errc::io_error: return "io-error";
  }
  return "unknown-error";
}

// All engine failures are thrown as magnus::error. resource_cap() errors map to
// "inconclusive" in verification reports (CLI exit 3), never to "pass".
class error : public std::runtime_error {
 public:
  error(errc code, std::string msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const { return code_; }

  bool resource_cap() const {
    switch (code_) {
      case errc::closure_cap_exceeded:
      case errc::order_cap_exceeded:
      case errc::subgroup_count_cap_exceeded:
      case errc::lattice_cap_exceeded:
        return true;
      default:
        return false;
    }
  }

 private:
  errc code_;
};

}  // namespace magnus
