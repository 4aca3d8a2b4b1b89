#include <orb/rncsolver.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace orb {

namespace {

constexpr double kSingularFloor = 1e-300;

void check_inputs(std::span<const cdouble> y) {
    const std::size_t n = y.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(y[j]) < kSingularFloor || std::abs(1.0 - y[j]) < kSingularFloor)
            fail("SingularInput", "y touches {0, 1}");
        for (std::size_t h = j + 1; h < n; ++h)
            if (std::abs(y[j] - y[h]) < kSingularFloor)
                fail("SingularInput", "coincident y values");
    }
}

cdouble int_pow(cdouble base, int e) {
    cdouble r(1.0, 0.0);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

double max_abs(const std::vector<cdouble>& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

} // namespace

std::vector<cdouble> phi_map(std::span<const cdouble> y) {
    check_inputs(y);
    const int n = static_cast<int>(y.size());
    std::vector<cdouble> u(n);
    for (int j = 0; j < n; ++j) {
        cdouble prod(1.0, 0.0);
        for (int h = 0; h < n; ++h) {
            if (h == j) continue;
            prod *= (1.0 - y[h]) / (y[j] - y[h]);
        }
        u[j] = -int_pow(y[j], n) * prod;
    }
    return u;
}

Eigen::MatrixXcd phi_scaled_log_jacobian(std::span<const cdouble> y) {
    check_inputs(y);
    const int n = static_cast<int>(y.size());
    Eigen::MatrixXcd s(n, n);
    for (int j = 0; j < n; ++j) {
        cdouble diag(static_cast<double>(n), 0.0);
        for (int h = 0; h < n; ++h) {
            if (h == j) continue;
            diag -= 1.0 / (1.0 - y[h] / y[j]);
            s(j, h) = y[h] * (1.0 - y[j]) / ((1.0 - y[h]) * (y[j] - y[h]));
        }
        s(j, j) = diag;
    }
    return s;
}

Eigen::MatrixXcd phi_jacobian(std::span<const cdouble> y) {
    const std::vector<cdouble> u = phi_map(y);
    const Eigen::MatrixXcd s = phi_scaled_log_jacobian(y);
    const int n = static_cast<int>(y.size());
    Eigen::MatrixXcd jac(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            jac(j, k) = u[j] * s(j, k) / y[k];
    return jac;
}

std::vector<cdouble> hierarchical_seed(int n, double scale) {
    if (n < 1) fail("InvalidArgument", "n must be >= 1");
    if (scale <= 1.0) fail("InvalidArgument", "hierarchical scale must exceed 1");
    std::vector<cdouble> y(n);
    for (int j = 1; j <= n; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / (n + 1);
        y[j - 1] = std::pow(scale, j - n - 1) * std::polar(1.0, theta);
    }
    return y;
}

namespace {

std::vector<cdouble> to_complex(const RatVec& v) {
    std::vector<cdouble> out;
    out.reserve(v.size());
    for (const auto& r : v) out.emplace_back(r.to_double(), 0.0);
    return out;
}

struct NewtonOutcome {
    bool converged = false;
    int iterations = 0;
};

// Newton correction of Psi(y) = target in place; false on stall/singularity.
NewtonOutcome newton_correct(std::vector<cdouble>& y, const std::vector<cdouble>& target,
                             double tol, int max_iters) {
    const int n = static_cast<int>(y.size());
    const double scale = 1.0 + max_abs(target);
    NewtonOutcome out;
    for (int it = 0; it < max_iters; ++it) {
        std::vector<cdouble> u;
        try {
            u = phi_map(y);
        } catch (const DomainError&) {
            return out;
        }
        double res = 0.0;
        Eigen::VectorXcd rhs(n);
        for (int j = 0; j < n; ++j) {
            rhs(j) = u[j] - target[j];
            res = std::max(res, std::abs(rhs(j)));
        }
        if (res <= tol * scale) {
            out.converged = true;
            return out;
        }
        Eigen::MatrixXcd jac;
        try {
            jac = phi_jacobian(y);
        } catch (const DomainError&) {
            return out;
        }
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(jac);
        if (!lu.isInvertible()) return out;
        const Eigen::VectorXcd delta = lu.solve(rhs);
        if (!delta.allFinite()) return out;
        for (int j = 0; j < n; ++j) y[j] -= delta(j);
        ++out.iterations;
    }
    return out;
}

std::vector<cdouble> random_seed(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> radius(0.05, 0.95);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int tries = 0; tries < 256; ++tries) {
        std::vector<cdouble> y(n);
        for (int j = 0; j < n; ++j) y[j] = std::polar(radius(rng), angle(rng));
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            if (std::abs(y[j] - 1.0) < 1e-3) ok = false;
            for (int h = j + 1; h < n && ok; ++h)
                if (std::abs(y[j] - y[h]) < 1e-3) ok = false;
        }
        if (ok) return y;
    }
    fail("NoConvergence", "could not draw a nondegenerate random seed");
}

struct HomotopyOutcome {
    bool success = false;
    int newton_iterations = 0;
};

// Tracks Psi(y) = (1-s) u0 + s u1 from s = 0 to 1 with Euler prediction and
// Newton correction, halving the step on failure down to 2^-20.
HomotopyOutcome track_path(std::vector<cdouble>& y, const std::vector<cdouble>& u0,
                           const std::vector<cdouble>& u1, const SolverConfig& cfg) {
    const int n = static_cast<int>(y.size());
    const double ds_init = 1.0 / cfg.homotopy_steps;
    constexpr double kMinStep = 9.5367431640625e-7;  // 2^-20
    // along the path a looser corrector tolerance is enough; the final
    // polish at s = 1 runs at the configured tolerance
    const double path_tol = std::max(cfg.newton_tolerance, 1e-10);

    std::vector<cdouble> dir(n);
    for (int j = 0; j < n; ++j) dir[j] = u1[j] - u0[j];

    HomotopyOutcome out;
    double s = 0.0;
    double ds = ds_init;
    long steps_taken = 0;
    while (s < 1.0) {
        if (++steps_taken > 200000) return out;
        ds = std::min(ds, 1.0 - s);
        std::vector<cdouble> target(n);
        for (int j = 0; j < n; ++j) target[j] = u0[j] + (s + ds) * dir[j];

        std::vector<cdouble> trial = y;
        bool predicted = false;
        try {
            Eigen::MatrixXcd jac = phi_jacobian(trial);
            Eigen::FullPivLU<Eigen::MatrixXcd> lu(jac);
            if (lu.isInvertible()) {
                Eigen::VectorXcd du(n);
                for (int j = 0; j < n; ++j) du(j) = ds * dir[j];
                const Eigen::VectorXcd dy = lu.solve(du);
                if (dy.allFinite()) {
                    for (int j = 0; j < n; ++j) trial[j] += dy(j);
                    predicted = true;
                }
            }
        } catch (const DomainError&) {
        }
        if (!predicted) trial = y;

        const NewtonOutcome corr =
            newton_correct(trial, target, path_tol, cfg.max_newton_iters);
        out.newton_iterations += corr.iterations;
        if (corr.converged) {
            y = std::move(trial);
            s += ds;
            ds = std::min(ds * 2.0, ds_init);
        } else {
            ds *= 0.5;
            if (ds < kMinStep) return out;
        }
    }

    const NewtonOutcome polish =
        newton_correct(y, u1, cfg.newton_tolerance, cfg.max_newton_iters);
    out.newton_iterations += polish.iterations;
    out.success = polish.converged;
    return out;
}

std::vector<cdouble> expand_power(cdouble b, cdouble root_shift, int n) {
    // coefficients of b (t + root_shift)^n, ascending
    std::vector<cdouble> coeffs(n + 1);
    double binom = 1.0;
    for (int i = 0; i <= n; ++i) {
        // C(n, i) built incrementally
        if (i > 0) binom = binom * (n - i + 1) / i;
        coeffs[i] = b * binom * int_pow(root_shift, n - i);
    }
    return coeffs;
}

bool rotatable_to_real(const std::vector<cdouble>& a, double tol) {
    double biggest = 0.0;
    std::size_t pivot = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (std::abs(a[j]) > biggest) {
            biggest = std::abs(a[j]);
            pivot = j;
        }
    if (biggest == 0.0) return false;
    const cdouble rot = std::conj(a[pivot]) / std::abs(a[pivot]);
    for (const auto& v : a)
        if (std::abs(std::imag(v * rot)) > tol * biggest) return false;
    return true;
}

} // namespace

RncSolution solve_rnc(const ArrangementOrbifold& arr, const RatVec& point,
                      const SolverConfig& cfg) {
    const int n = arr.dimension();
    if (point.size() != static_cast<std::size_t>(n + 1))
        fail("InvalidArgument", "point needs n+1 homogeneous coordinates");
    if (!(cfg.newton_tolerance > 0.0 && cfg.newton_tolerance < 1.0) ||
        cfg.max_newton_iters < 1 || cfg.homotopy_steps < 1 || cfg.seed_scale <= 1.0 ||
        cfg.max_restarts < 0)
        fail("InvalidArgument", "bad solver configuration");

    const Standardization std_form = standardize(arr);  // validates count/position

    // exact incidence test against every hyperplane, including the last
    for (const auto& h : arr.hyperplanes()) {
        Rational pairing(0);
        for (int c = 0; c <= n; ++c) pairing += h[c] * point[c];
        if (pairing.is_zero())
            fail("PointOnArrangement", "point lies on an arrangement hyperplane");
    }

    const RatVec p_std = std_form.map.apply_point(point);
    const std::vector<cdouble> p = to_complex(p_std);

    std::vector<cdouble> u_target(n);
    for (int j = 0; j < n; ++j) u_target[j] = p[j + 1] / p[0];

    std::mt19937_64 rng(cfg.rng_seed);
    RncSolution sol;
    bool solved = false;
    std::vector<cdouble> y;

    for (int attempt = 0; attempt <= cfg.max_restarts; ++attempt) {
        std::vector<cdouble> seed =
            attempt == 0 ? hierarchical_seed(n, cfg.seed_scale) : random_seed(n, rng);
        std::vector<cdouble> u0;
        try {
            u0 = phi_map(seed);
        } catch (const DomainError&) {
            continue;
        }
        std::vector<cdouble> y_try = seed;
        const HomotopyOutcome run = track_path(y_try, u0, u_target, cfg);
        sol.newton_iterations += run.newton_iterations;
        if (!run.success) continue;

        // reject branches that degenerate under reconstruction a_j = 1/y_j
        bool usable = true;
        for (int j = 0; j < n && usable; ++j)
            if (std::abs(y_try[j]) < 1e-8) usable = false;
        if (usable) {
            std::vector<cdouble> a(n + 1);
            a[0] = 1.0;
            for (int j = 0; j < n; ++j) a[j + 1] = 1.0 / y_try[j];
            for (int i = 0; i <= n && usable; ++i)
                for (int j = i + 1; j <= n && usable; ++j)
                    if (std::abs(a[i] - a[j]) < 1e-9 * std::max(std::abs(a[i]), 1.0))
                        usable = false;
        }
        if (!usable) continue;

        y = std::move(y_try);
        sol.restarts_used = attempt;
        solved = true;
        break;
    }
    if (!solved) fail("NoConvergence", "homotopy failed from all seeds");

    sol.a.assign(n + 1, cdouble(1.0, 0.0));
    for (int j = 0; j < n; ++j) sol.a[j + 1] = 1.0 / y[j];
    sol.b = p;

    sol.coordinate_polynomials.reserve(n + 1);
    for (int j = 0; j <= n; ++j)
        sol.coordinate_polynomials.push_back(expand_power(sol.b[j], sol.a[j], n));

    // back through the inverse homography to the input coordinates
    const RatMat& t_inv = std_form.map.inverse_matrix();
    sol.input_coordinate_polynomials.assign(n + 1, std::vector<cdouble>(n + 1, 0.0));
    for (int r = 0; r <= n; ++r)
        for (int j = 0; j <= n; ++j) {
            const double w = t_inv[r][j].to_double();
            for (int i = 0; i <= n; ++i)
                sol.input_coordinate_polynomials[r][i] += w * sol.coordinate_polynomials[j][i];
        }

    std::vector<cdouble> q(n + 1, cdouble(0.0, 0.0));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) q[i] += sol.coordinate_polynomials[j][i];
    const double q_max = max_abs(q);
    double low = 0.0;
    for (int i = 0; i < n; ++i) low = std::max(low, std::abs(q[i]));
    sol.residual_report = q_max > 0.0 ? low / q_max : 1.0;

    sol.real_curve = rotatable_to_real(sol.a, 1e-9);
    return sol;
}

VerifyReport verify_rnc(const RncSolution& s, const ArrangementOrbifold& arr,
                        const RatVec& point, double tol) {
    VerifyReport report;
    const int n = arr.dimension();
    const std::size_t width = static_cast<std::size_t>(n) + 1;
    if (s.a.size() != width || s.b.size() != width ||
        s.coordinate_polynomials.size() != width) {
        report.checks.push_back({"shape", false, 0.0, 0.0});
        return report;
    }

    // (i) low-order coefficients of Q(t) = sum_j b_j (t+a_j)^n vanish
    std::vector<cdouble> q(width, cdouble(0.0, 0.0));
    for (std::size_t j = 0; j < width; ++j) {
        const auto& poly = s.coordinate_polynomials[j];
        if (poly.size() != width) {
            report.checks.push_back({"shape", false, 0.0, 0.0});
            return report;
        }
        for (std::size_t i = 0; i < width; ++i) q[i] += poly[i];
    }
    const double q_max = max_abs(q);
    double low = 0.0;
    for (int i = 0; i < n; ++i) low = std::max(low, std::abs(q[i]));
    report.checks.push_back(
        {"low_order_coefficients", q_max > 0.0 && low <= tol * q_max,
         q_max > 0.0 ? low / q_max : 1.0, tol});

    // (ii) leading coefficient sum b_j stays away from zero
    cdouble b_sum(0.0, 0.0);
    double b_max = 0.0;
    for (const auto& b : s.b) {
        b_sum += b;
        b_max = std::max(b_max, std::abs(b));
    }
    report.checks.push_back({"leading_coefficient", std::abs(b_sum) > tol * b_max,
                             b_max > 0.0 ? std::abs(b_sum) / b_max : 0.0, tol});

    // (iii) each coordinate polynomial is exactly b_j (t+a_j)^n, b_j != 0,
    // so it vanishes to order exactly n at t = -a_j
    double worst_structural = 0.0;
    bool b_nonzero = true;
    for (std::size_t j = 0; j < width; ++j) {
        if (!(std::abs(s.b[j]) > tol * b_max)) b_nonzero = false;
        const auto expected = expand_power(s.b[j], s.a[j], n);
        const double scale = std::max(max_abs(expected), 1e-300);
        for (std::size_t i = 0; i < width; ++i)
            worst_structural = std::max(
                worst_structural, std::abs(s.coordinate_polynomials[j][i] - expected[i]) / scale);
    }
    report.checks.push_back({"factored_form", b_nonzero && worst_structural <= tol,
                             worst_structural, tol});

    // (iv) limit point at t -> infinity matches `point` projectively
    const Standardization std_form = standardize(arr);
    const std::vector<cdouble> p = to_complex(std_form.map.apply_point(point));
    double p_max = max_abs(p);
    double cross = 0.0;
    for (std::size_t i = 0; i < width; ++i)
        for (std::size_t j = i + 1; j < width; ++j)
            cross = std::max(cross, std::abs(s.b[i] * p[j] - s.b[j] * p[i]));
    const double cross_scale = std::max(b_max * p_max, 1e-300);
    report.checks.push_back(
        {"limit_point", cross <= tol * cross_scale, cross / cross_scale, tol});

    report.pass = true;
    for (const auto& c : report.checks) report.pass = report.pass && c.pass;
    return report;
}

} // namespace orb
