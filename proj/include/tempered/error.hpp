#pragma once

#include <stdexcept>
#include <string>

namespace tempered {

enum class errc {
  pole,              // gamma/digamma/zeta evaluated at a pole
  domain,            // argument outside the covered region
  origin,            // pointwise evaluation at x = 0
  near_integer,      // order inside the integer guard band of a formula that cannot handle it
  integer_order,     // non-integer formula asked for an integer order
  slow_convergence,  // series hit its term cap
  out_of_range,      // table index beyond the stored range
  quadrature,        // adaptive quadrature did not converge
  non_integrable,    // singularity too strong for direct integration
  invalid_argument,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::pole: return "pole";
    case errc::domain: return "domain";
    case errc::origin: return "origin";
    case errc::near_integer: return "near_integer";
    case errc::integer_order: return "integer_order";
    case errc::slow_convergence: return "slow_convergence";
    case errc::out_of_range: return "out_of_range";
    case errc::quadrature: return "quadrature";
    case errc::non_integrable: return "non_integrable";
    case errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace tempered
