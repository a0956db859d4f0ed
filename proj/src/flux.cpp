#include "fracflux/flux.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracflux {

namespace {

void check_field(std::span<const double> u) {
  if (u.size() < 2) {
    throw std::domain_error("face flux evaluation needs at least two nodes");
  }
}

void check_sizes(std::span<const double> u, const GrunwaldTable& table) {
  check_field(u);
  if (u.size() != table.n() + 1) {
    throw std::domain_error("field has " + std::to_string(u.size()) +
                            " nodes but weight table expects " +
                            std::to_string(table.n() + 1));
  }
}

// Fourier flux on each face, (u_i - u_{i+1}) / dx.
void face_gradients(std::span<const double> u, double dx,
                    std::span<double> out) {
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    out[i] = (u[i] - u[i + 1]) / dx;
  }
}

// q_i = sum_{j=0}^{i} W_j f_{i-j}, summed left to right in j.
void weighted_sums(std::span<const double> w, std::span<const double> f,
                   std::span<double> out) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= i; ++j) {
      acc += w[j] * f[i - j];
    }
    out[i] = acc;
  }
}

}  // namespace

std::string_view to_string(FluxLaw law) {
  switch (law) {
    case FluxLaw::Fourier: return "fourier";
    case FluxLaw::RiemannLiouville: return "rl";
    case FluxLaw::Caputo: return "caputo";
    case FluxLaw::Parsimonious: return "parsimonious";
  }
  return "unknown";
}

FluxLaw parse_flux_law(std::string_view name) {
  if (name == "fourier") return FluxLaw::Fourier;
  if (name == "rl") return FluxLaw::RiemannLiouville;
  if (name == "caputo") return FluxLaw::Caputo;
  if (name == "parsimonious") return FluxLaw::Parsimonious;
  throw std::invalid_argument("unknown flux law '" + std::string(name) +
                              "' (expected fourier|rl|caputo|parsimonious)");
}

FaceFluxes fourier_faces(std::span<const double> u, double dx) {
  check_field(u);
  FaceFluxes out;
  out.q.resize(u.size() - 1);
  face_gradients(u, dx, out.q);
  return out;
}

FaceFluxes rl_faces_grunwald(std::span<const double> u,
                             const GrunwaldTable& table) {
  check_sizes(u, table);
  const std::size_t n = table.n();
  const auto g = table.g();
  const double scale = std::pow(table.dx(), -table.alpha());
  FaceFluxes out;
  out.q.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= i + 1; ++j) {
      acc += g[j] * u[i + 1 - j];
    }
    out.q[i] = -scale * acc;
  }
  return out;
}

FaceFluxes rl_faces_weighted(std::span<const double> u,
                             const GrunwaldTable& table) {
  check_sizes(u, table);
  const std::size_t n = table.n();
  const auto w = table.w();
  const double dx = table.dx();

  std::vector<double> f(n);
  face_gradients(u, dx, f);

  FaceFluxes out;
  out.diffusive.resize(n);
  out.advective.resize(n);
  out.q.resize(n);
  weighted_sums(w, f, out.diffusive);
  for (std::size_t i = 0; i < n; ++i) {
    out.advective[i] = -(w[i + 1] / dx) * u[0];
    out.q[i] = out.diffusive[i] + out.advective[i];
  }
  return out;
}

FaceFluxes caputo_faces(std::span<const double> u,
                        const GrunwaldTable& table) {
  check_sizes(u, table);
  const std::size_t n = table.n();
  std::vector<double> f(n);
  face_gradients(u, table.dx(), f);
  FaceFluxes out;
  out.q.resize(n);
  weighted_sums(table.w(), f, out.q);
  return out;
}

FaceFluxes parsimonious_faces(std::span<const double> u,
                              const GrunwaldTable& table) {
  check_sizes(u, table);
  std::vector<double> shifted(u.begin(), u.end());
  const double left = u[0];
  for (double& v : shifted) v -= left;
  FaceFluxes rl = rl_faces_weighted(shifted, table);
  return FaceFluxes{std::move(rl.q), {}, {}};
}

FaceFluxes evaluate_faces(FluxLaw law, std::span<const double> u,
                          const GrunwaldTable& table, double diffusivity) {
  FaceFluxes out;
  switch (law) {
    case FluxLaw::Fourier:
      check_sizes(u, table);
      out = fourier_faces(u, table.dx());
      break;
    case FluxLaw::RiemannLiouville:
      out = rl_faces_weighted(u, table);
      break;
    case FluxLaw::Caputo:
      out = caputo_faces(u, table);
      break;
    case FluxLaw::Parsimonious:
      out = parsimonious_faces(u, table);
      break;
  }
  if (diffusivity != 1.0) {
    for (double& v : out.q) v *= diffusivity;
    for (double& v : out.diffusive) v *= diffusivity;
    for (double& v : out.advective) v *= diffusivity;
  }
  return out;
}

FaceFluxKernel::FaceFluxKernel(FluxLaw law, const GrunwaldTable& table,
                               double diffusivity)
    : law_(law), table_(&table), diffusivity_(diffusivity),
      gradient_(table.n() + 1) {}

void FaceFluxKernel::operator()(std::span<const double> u,
                                std::span<double> q) {
  const std::size_t n = table_->n();
  const double dx = table_->dx();
  const auto w = table_->w();

  if (law_ == FluxLaw::Parsimonious) {
    // Same rounding as parsimonious_faces: difference the shifted field.
    const double left = u[0];
    for (std::size_t i = 0; i < n; ++i) {
      gradient_[i] = ((u[i] - left) - (u[i + 1] - left)) / dx;
    }
  } else {
    face_gradients(u, dx, std::span<double>(gradient_).first(n));
  }

  const std::span<const double> f(gradient_.data(), n);
  switch (law_) {
    case FluxLaw::Fourier:
      for (std::size_t i = 0; i < n; ++i) q[i] = f[i];
      break;
    case FluxLaw::Caputo:
    case FluxLaw::Parsimonious:
      // The shifted field has u*_0 = 0, so no advective term.
      weighted_sums(w, f, q);
      break;
    case FluxLaw::RiemannLiouville:
      weighted_sums(w, f, q);
      for (std::size_t i = 0; i < n; ++i) q[i] += -(w[i + 1] / dx) * u[0];
      break;
  }
  if (diffusivity_ != 1.0) {
    for (std::size_t i = 0; i < n; ++i) q[i] *= diffusivity_;
  }
}

}  // namespace fracflux
