#ifndef FRACFLUX_ERRORS_H
#define FRACFLUX_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracflux {

/// Invalid run configuration: unknown scenario, inconsistent Dirichlet data,
/// malformed config file, bad snapshot times.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The explicit update produced a non-finite or runaway value.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(const std::string& what, std::size_t step, double t)
      : std::runtime_error(what), step_(step), t_(t) {}

  std::size_t step() const noexcept { return step_; }
  double time() const noexcept { return t_; }

 private:
  std::size_t step_;
  double t_;
};

}  // namespace fracflux

#endif  // FRACFLUX_ERRORS_H
