#pragma once

#include "qlm/geometry/surface.hpp"
#include "qlm/lorentz.hpp"
#include "qlm/spinor.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qlm::mass {

struct MassOptions {
  geometry::FdOptions fd;
  /// Relative tolerance on the pointwise metric mismatch between F and F0.
  double iso_tol = 1e-8;
  /// When false, H <= 0 is tolerated (the caller records it); the integrand
  /// stays finite as long as H != 0.
  bool require_positive_h = true;
  bool require_isometry = true;
};

/// Everything the boundary integrals need, per quadrature node: the common
/// area weight, H of F in the ambient, H0 and X of F0 in H^3.
struct BoundaryData {
  std::vector<double> weights;
  std::vector<double> h;
  std::vector<double> h0;
  std::vector<LorentzVector> position;  // X on the hyperboloid
  std::vector<Vec3> ball;               // F0 in ball coordinates
  double k = 1.0;
  double isometry_mismatch = 0.0;       // relative
  std::size_t min_h_node = 0;
};

/// MissingEmbedding, IsometryViolation, NonPositiveMeanCurvature (first node
/// in node order) per the options.
BoundaryData boundary_data(const geometry::SurfaceData& surface,
                           const geometry::MetricField& ambient,
                           const MassOptions& options = {});

/// E = int ((H0^2 - H^2) / H) X dSigma
LorentzVector energy_momentum(const BoundaryData& data);
LorentzVector energy_momentum(const geometry::SurfaceData& surface,
                              const geometry::MetricField& ambient,
                              const MassOptions& options = {});

/// coth R1 + (1/sinh R1) sqrt(sinh^2 R2 / sinh^2 R1 - 1); DomainError unless
/// 0 < R1 <= R2.
double shi_tam_alpha(double r1, double r2);

/// M_alpha = int (H0 - H) (x1, x2, x3, alpha t) dSigma; DomainError if
/// alpha < 1.
LorentzVector shi_tam_vector(const BoundaryData& data, double alpha);
LorentzVector shi_tam_vector(const geometry::SurfaceData& surface,
                             const geometry::MetricField& ambient,
                             double alpha, const MassOptions& options = {});

/// Upsilon in its conventional layout: the scalar slot int tr h dS first,
/// then the first moments int tr h x dS.
struct UpsilonDisplay {
  double scalar = 0.0;
  Vec3 moment = Vec3::Zero();
};

/// Upsilon as a Lorentz vector: spatial = moments, time = scalar slot.
LorentzVector wang_mass(const geometry::AHTensor& h,
                        const geometry::QuadratureGrid& grid);
LorentzVector from_display(const UpsilonDisplay& u);
UpsilonDisplay to_display(const LorentzVector& v);

/// int ((H0^2 - H^2) / H) |psi_a|^2 dSigma with psi evaluated along F0.
/// DomainError unless k = 1.
double killing_weighted_mass(const BoundaryData& data,
                             const spinor::SpinorValue& a,
                             spinor::Branch branch,
                             const spinor::CliffordRep& rep =
                                 spinor::clifford_rep());
double killing_weighted_mass(const geometry::SurfaceData& surface,
                             const geometry::MetricField& ambient,
                             const spinor::SpinorValue& a,
                             spinor::Branch branch,
                             const MassOptions& options = {});

struct HypothesisChecks {
  double min_h = 0.0;
  std::size_t min_h_node = 0;
  double min_gauss_plus_k2 = 0.0;   // min over nodes of K + k^2
  double min_scalar_plus_6k2 = 0.0; // min over sampled points of R + 6k^2
  std::size_t scalar_samples = 0;
  double isometry_mismatch = 0.0;   // relative; 0 when there is no F0
  double curvature_tol = 1e-6;
  double iso_tol = 1e-8;

  bool h_positive() const { return min_h > 0.0; }
  bool gauss_ok() const { return min_gauss_plus_k2 > 0.0; }
  bool scalar_ok() const { return min_scalar_plus_6k2 >= -curvature_tol; }
  bool isometric() const { return isometry_mismatch <= iso_tol; }
  bool all_ok() const {
    return h_positive() && gauss_ok() && scalar_ok() && isometric();
  }
};

/// H > 0 and K > -k^2 at every node, R >= -6k^2 (up to curvature_tol, since R
/// is itself a finite-difference estimate) at up to `max_scalar_samples`
/// evenly strided nodes, and the isometry mismatch when F0 is present. Never
/// throws on a violated hypothesis; only on numeric failure.
HypothesisChecks check_hypotheses(const geometry::SurfaceData& surface,
                                  const geometry::MetricField& ambient,
                                  const geometry::FdOptions& fd = {},
                                  double curvature_tol = 1e-6,
                                  double iso_tol = 1e-8,
                                  std::size_t max_scalar_samples = 256);

struct MassReport {
  LorentzVector E;
  CausalClass causal_class = CausalClass::ZeroVector;
  std::optional<LorentzVector> m_alpha;
  std::optional<double> alpha;
  std::optional<LorentzVector> upsilon;
  HypothesisChecks checks;
  std::size_t n_theta = 0;
  std::size_t n_phi = 0;
  PairingRange null_pairings;
};

}  // namespace qlm::mass
