#ifndef FRACFLUX_FLUX_H
#define FRACFLUX_FLUX_H

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracflux/weights.h"

namespace fracflux {

enum class FluxLaw { Fourier, RiemannLiouville, Caputo, Parsimonious };

/// CLI spelling: fourier | rl | caputo | parsimonious.
std::string_view to_string(FluxLaw law);
/// Throws std::invalid_argument on an unknown name.
FluxLaw parse_flux_law(std::string_view name);

/// Fluxes at the n interior faces x = (i + 1/2) dx, i = 0..n-1.
///
/// Sign convention: q is the flux itself (q = -du/dx for Fourier), so a
/// positive value moves the conserved quantity to the right.
///
/// The RL weighted form additionally fills the split
///   q[i] = diffusive[i] + advective[i],  advective[i] = -(W_{i+1}/dx) u_0.
/// For every other evaluation the two split vectors are left empty.
struct FaceFluxes {
  std::vector<double> q;
  std::vector<double> diffusive;
  std::vector<double> advective;

  bool has_decomposition() const noexcept { return !advective.empty(); }
};

/// Central difference (u_i - u_{i+1}) / dx. Needs at least two nodes.
FaceFluxes fourier_faces(std::span<const double> u, double dx);

/// Direct shifted-Grunwald sum -dx^-alpha * sum_{j=0}^{i+1} g_j u_{i+1-j}.
FaceFluxes rl_faces_grunwald(std::span<const double> u,
                             const GrunwaldTable& table);

/// Weighted-gradient RL form with the diffusive/advective split.
FaceFluxes rl_faces_weighted(std::span<const double> u,
                             const GrunwaldTable& table);

/// Weighted sum of the Fourier fluxes at and to the left of each face.
FaceFluxes caputo_faces(std::span<const double> u,
                        const GrunwaldTable& table);

/// RL weighted form applied to u - u_0.
FaceFluxes parsimonious_faces(std::span<const double> u,
                              const GrunwaldTable& table);

/// Dispatches to the evaluator for `law`. RiemannLiouville uses the
/// weighted form so the decomposition is available. Every face value is
/// multiplied by `diffusivity`.
FaceFluxes evaluate_faces(FluxLaw law, std::span<const double> u,
                          const GrunwaldTable& table,
                          double diffusivity = 1.0);

/// Allocation-free face evaluation for the time-stepping loop. Produces the
/// same numbers as evaluate_faces (same summation order) without the
/// decomposition.
class FaceFluxKernel {
 public:
  FaceFluxKernel(FluxLaw law, const GrunwaldTable& table,
                 double diffusivity = 1.0);

  /// u has n + 1 entries, q receives n entries.
  void operator()(std::span<const double> u, std::span<double> q);

  FluxLaw law() const noexcept { return law_; }

 private:
  FluxLaw law_;
  const GrunwaldTable* table_;
  double diffusivity_;
  std::vector<double> gradient_;
};

}  // namespace fracflux

#endif  // FRACFLUX_FLUX_H
