#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <functional>
#include <iosfwd>

#include "tlfnoise/bath.hpp"

namespace tlfnoise::superop {

using Mat4 = Eigen::Matrix4cd;
using Mat16 = Eigen::Matrix<std::complex<double>, 16, 16>;
using Vec16 = Eigen::Vector<std::complex<double>, 16>;
using Mat2 = Eigen::Matrix2cd;

// Fluctuator operator coupled to the probe qubit.
enum class PhiSelector { sigma_z, sigma_x };

enum class BasisTag { bare_product, hs_eigen };

// Generator of the qubit (x) TLF master equation, d|rho)/dt = matrix |rho).
// Vectorization: the 4x4 density matrix in the bare product basis ordered
// {e1, e0, g1, g0} is stacked row-major, v[4*i + j] = rho(i, j).
struct Superoperator {
    Mat16 matrix;
    BasisTag basis = BasisTag::bare_product;
    const char* vectorization = "row-major {e1,e0,g1,g0}";
};

// H = -1/2 wq tau_z + kappa tau_x phi - 1/2 wt sigma_z on the ordered product
// basis above; e and 1 are the excited qubit/TLF states.
Mat4 build_hs(const TlfParams& tlf, double omega_q, double kappa, PhiSelector phi);

// Full 16x16 generator: coherent part -i[H, .] plus the non-secular
// dissipator summed over eigenprojectors of H with coefficients
// gamma(-(E_i - E_j))/2 and system coupling operator sigma_x.
Superoperator build_lambda(const TlfParams& tlf, double omega_q, double kappa,
                           PhiSelector phi, const BathSpec& bath, const Temperature& temp);

// The kappa = 0 generator assembled from its closed-form block structure
// (expressed in the bare-product vectorization).
Superoperator lambda0_analytic(const RateSet& rates, double omega_q, double omega_t);

// The same generator arranged block-diagonally: pairs of population/coherence
// components ordered so that each 2x2 block is one of the four closed-form
// rate matrices plus its phase offset.
Mat16 block_diagonal_form(const RateSet& rates, double omega_q, double omega_t);

// Signed permutation w_k = sign[k] * v[index[k]] mapping the bare-product
// vectorization onto the block arrangement above: S L S^T is block diagonal.
struct SignedPermutation {
    std::array<int, 16> index;
    std::array<double, 16> sign;
    Mat16 matrix() const;
};

SignedPermutation block_basis_permutation();

// Zero modes of the uncoupled generator: right modes rho_g/rho_e put the
// qubit in g/e with the TLF in equilibrium; left modes phi_g/phi_e are the
// qubit-population covectors. Normalized biorthonormal, (phi_a|rho_a) = 1.
struct DegenerateSubspace {
    Vec16 rho_g, rho_e;
    Vec16 phi_g, phi_e;  // rows, stored as vectors
    Mat16 projector;
};

DegenerateSubspace degenerate_subspace(const RateSet& rates);

// Covector extracting Tr(rho); annihilates every generator.
Vec16 trace_covector();

// Central-difference expansion L = L0 + kappa L1 + kappa^2 L2 + O(kappa^3).
struct LambdaExpansion {
    Mat16 lambda0, lambda1, lambda2;
    double kappa0;
};

LambdaExpansion expand_lambda(const std::function<Mat16(double)>& build, double kappa0);

// Second-order effective generator on the degenerate pair,
//   Lm = P L2 P - P L1 (1-P) L0^{-1} (1-P) L1 P,
// with L0 inverted on the complement by SVD (relative threshold 1e-12).
struct EffectiveGenerator {
    Mat2 two_state;  // rows/cols ordered {g, e}: two_state(a,b) = (phi_a| Lm |rho_b)
    Mat16 full;
    double sigma_min_retained;
};

EffectiveGenerator effective_lambda_m(const LambdaExpansion& exp, const DegenerateSubspace& sub);

struct RatePair {
    double up;    // per kappa^2
    double down;  // per kappa^2
};

enum class OracleStatus { ok, reduced_accuracy_near_resonance };

struct PtResult {
    RatePair rates;
    OracleStatus status = OracleStatus::ok;
    double sigma_min_retained = 0.0;
    double kappa0 = 0.0;
};

// Full perturbative pipeline; kappa0 <= 0 selects the default 1e-4 * omega_q.
// Within |omega_q - omega_t| <= 10 kappa0 the small-kappa expansion loses
// accuracy to hybridization and the result is flagged, not silently degraded.
PtResult rates_from_pt(const TlfParams& tlf, double omega_q, PhiSelector phi,
                       const BathSpec& bath, const Temperature& temp, double kappa0 = 0.0);

struct EigenRatesResult {
    RatePair rates;  // per kappa^2
    std::complex<double> chi1;
    double mode_separation;  // |chi_2| / |chi_1|
};

// Rate extraction from the eigendecomposition of the coupled generator: the
// depolarization mode is the slowest nonzero eigenvalue, and
// Gamma_down = (phi_g|rho_1)(varphi_1|rho_e) chi_1 with biorthonormal pairs.
// Throws EigensolverError when the mode separation is below min_separation.
EigenRatesResult rates_from_eigen(const Superoperator& lambda, const DegenerateSubspace& sub,
                                  double kappa, double min_separation = 10.0);

struct OdeFitResult {
    RatePair rates;  // per kappa^2
    double total_rate;
    double ground_population_eq;
    double rms_residual;
    double stationary_drift;  // control run from rho_g
};

// Propagates d|rho)/dt = L|rho) from rho_e, samples the qubit ground
// population on a uniform grid up to t_max and fits a single exponential
// approach; both rates follow from the fitted rate and asymptote.
OdeFitResult rates_from_ode(const Superoperator& lambda, const DegenerateSubspace& sub,
                            double kappa, double t_max, int samples = 400);

// Text dump, row-major "re,im" entries at 17 significant digits.
void write_matrix_dump(std::ostream& os, const Mat16& m);
Mat16 read_matrix_dump(std::istream& is);

}  // namespace tlfnoise::superop
