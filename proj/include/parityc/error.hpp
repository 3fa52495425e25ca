#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parityc {

// Every failure the library can diagnose.  The CLI maps these onto its exit
// codes; tests match on the code rather than on message text.
enum class errc {
  not_closed,
  not_associative,
  no_identity,
  no_inverse,
  order_bound_exceeded,
  degree_out_of_range,
  degree_mismatch,
  fiber_mismatch,
  not_an_action,
  not_abelian,
  not_normalized,
  witness_invalid,
  target_mismatch,
  no_splitting_found,
  budget_exceeded,
  not_integrable,
  not_natural,
  bad_input,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_closed: return "not_closed";
    case errc::not_associative: return "not_associative";
    case errc::no_identity: return "no_identity";
    case errc::no_inverse: return "no_inverse";
    case errc::order_bound_exceeded: return "order_bound_exceeded";
    case errc::degree_out_of_range: return "degree_out_of_range";
    case errc::degree_mismatch: return "degree_mismatch";
    case errc::fiber_mismatch: return "fiber_mismatch";
    case errc::not_an_action: return "not_an_action";
    case errc::not_abelian: return "not_abelian";
    case errc::not_normalized: return "not_normalized";
    case errc::witness_invalid: return "witness_invalid";
    case errc::target_mismatch: return "target_mismatch";
    case errc::no_splitting_found: return "no_splitting_found";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::not_integrable: return "not_integrable";
    case errc::not_natural: return "not_natural";
    case errc::bad_input: return "bad_input";
  }
  return "unknown";
}

// witness carries the offending indices (element ids, argument tuples, ...)
// so callers can point at the exact failing instance.
struct error : std::runtime_error {
  errc code;
  std::vector<long long> witness;

  error(errc c, const std::string& msg, std::vector<long long> w = {})
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg),
        code(c),
        witness(std::move(w)) {}
};

[[noreturn]] inline void fail(errc c, const std::string& msg,
                              std::vector<long long> w = {}) {
  throw error(c, msg, std::move(w));
}

}  // namespace parityc
