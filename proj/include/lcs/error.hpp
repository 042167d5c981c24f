#ifndef LCS_ERROR_HPP
#define LCS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lcs {

// Failure kinds surfaced by the library. Grouped by how the CLI maps them
// to exit codes: input errors (64), domain errors (2), numerical errors (3).
enum class errc {
  // input
  bad_file,
  invalid_surface,
  // domain
  degenerate_pair,
  spherical_undefined,
  not_elliptic,
  outside_chart,
  invalid_triangle,
  non_cyclic,
  not_convex_spherical,
  flip_not_embeddable,
  not_in_tstar,
  combinatorics_mismatch,
  invalid_polygon,
  open_loop,
  degenerate_input,
  insufficient_depth,
  incompatible_curvature,
  domain_error,
  // numerical
  iteration_cap_exceeded,
  no_convergence,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

} // namespace lcs

#endif
