#pragma once

/**
 * @file rncsolver.hpp
 * @brief Numerical constructor-verifier for degree-n rational normal curves
 *        through a prescribed point, meeting each of n+2 hyperplanes in
 *        general position in a single point of maximal contact.
 *
 * After standardizing the arrangement, the curve is P(t) = (b_j (t+a_j)^n)_j
 * with b_j the standardized point coordinates; the unknowns reduce to
 * y_j = a_0/a_j solving u_j = Psi_j(y) with u the point's coordinate ratios.
 * The system is solved by predictor-corrector homotopy in u-space with
 * Newton correction on the analytic Jacobian, seeded in the hierarchical
 * region where the scaled log-derivative matrix tends to a triangular one
 * of determinant n!.
 */

#include <orb/core.hpp>

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace orb {

using cdouble = std::complex<double>;

struct SolverConfig {
    double newton_tolerance = 1e-12;  // max-norm residual of u - Psi(y), relative
    int max_newton_iters = 50;
    int homotopy_steps = 64;          // initial step 1/steps, halving to 2^-20
    double seed_scale = 1e3;          // hierarchical scale M
    int max_restarts = 20;
    std::uint64_t rng_seed = 0;
};

struct RncSolution {
    // standardized data: a_0 = 1, contact with the last hyperplane at t = 0
    std::vector<cdouble> a;  // n+1 entries, pairwise distinct, nonzero
    std::vector<cdouble> b;  // n+1 entries, the standardized point coordinates

    // coefficient lists of b_j (t + a_j)^n, ascending degree
    std::vector<std::vector<cdouble>> coordinate_polynomials;
    // the same curve mapped back through the inverse homography
    std::vector<std::vector<cdouble>> input_coordinate_polynomials;

    // max low-order coefficient of sum_j b_j (t+a_j)^n over max coefficient
    double residual_report = 0.0;
    // all a_j simultaneously rotatable onto the real axis within 1e-9
    bool real_curve = false;

    int restarts_used = 0;
    int newton_iterations = 0;
};

/// Psi_j(y) = -y_j^n prod_{h>0, h!=j} (1 - y_h)/(y_j - y_h), with y_0 = 1.
/// Throws SingularInput when a denominator magnitude falls below 1e-300.
std::vector<cdouble> phi_map(std::span<const cdouble> y);

/// The plain Jacobian d u_j / d y_k of phi_map.
Eigen::MatrixXcd phi_jacobian(std::span<const cdouble> y);

/// Scaled log-derivatives S_jk = (y_k / u_j) du_j/dy_k; in the hierarchical
/// region S tends to the lower-triangular matrix with diagonal n, n-1, ..., 1,
/// so det(S) -> n!. det(S) equals det of the log-derivative Jacobian times
/// y_1 ... y_n.
Eigen::MatrixXcd phi_scaled_log_jacobian(std::span<const cdouble> y);

/// y_j = M^(j-n-1) e^(i theta_j) with deterministic distinct phases:
/// |y_n| = 1/M and consecutive ratios exactly M.
std::vector<cdouble> hierarchical_seed(int n, double scale);

/// Constructs a verified rational normal curve through `point` for an
/// (n+2)-hyperplane arrangement in general position. The point must lie on
/// none of the hyperplanes (exactly, in rational arithmetic).
RncSolution solve_rnc(const ArrangementOrbifold& arr, const RatVec& point,
                      const SolverConfig& cfg = {});

struct VerifyCheck {
    std::string name;
    bool pass;
    double value;  // measured
    double bound;  // allowed
};

struct VerifyReport {
    bool pass = false;
    std::vector<VerifyCheck> checks;
};

/// Independent verification: low-order coefficients of sum b_j (t+a_j)^n
/// vanish relative to tol, the leading coefficient stays away from zero,
/// each coordinate polynomial is exactly b_j (t+a_j)^n with b_j nonzero,
/// and the t -> infinity limit matches the requested point projectively.
VerifyReport verify_rnc(const RncSolution& s, const ArrangementOrbifold& arr,
                        const RatVec& point, double tol);

} // namespace orb
