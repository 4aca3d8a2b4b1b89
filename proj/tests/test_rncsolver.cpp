#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orb/rncsolver.hpp>

#include <cmath>
#include <random>

using namespace orb;

namespace {

// random y away from {0, 1}, pairwise separated: the region where both the
// map and central differences are well conditioned
std::vector<cdouble> random_valid_y(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> radius(0.15, 1.8);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    while (true) {
        std::vector<cdouble> y(n);
        for (auto& v : y) v = std::polar(radius(rng), angle(rng));
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            if (std::abs(y[j] - 1.0) < 0.12) ok = false;
            for (int h = j + 1; h < n && ok; ++h)
                if (std::abs(y[j] - y[h]) < 0.12) ok = false;
        }
        if (ok) return y;
    }
}

Eigen::MatrixXcd finite_difference_jacobian(const std::vector<cdouble>& y) {
    const int n = static_cast<int>(y.size());
    Eigen::MatrixXcd fd(n, n);
    for (int k = 0; k < n; ++k) {
        const double h = 1e-7 * std::abs(y[k]);
        std::vector<cdouble> yp = y, ym = y;
        yp[k] += h;
        ym[k] -= h;
        const auto up = phi_map(yp);
        const auto um = phi_map(ym);
        for (int j = 0; j < n; ++j) fd(j, k) = (up[j] - um[j]) / (2.0 * h);
    }
    return fd;
}

// real roots so the forward image is a real rational point, the solver's
// input surface; the recovered branch may still be complex
std::vector<cdouble> random_instance_roots(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mag(0.3, 2.5);
    while (true) {
        std::vector<cdouble> a(n + 1);
        for (auto& v : a) v = cdouble(mag(rng) * (rng() % 2 ? 1.0 : -1.0), 0.0);
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i)
            for (std::size_t j = i + 1; j < a.size() && ok; ++j)
                if (std::abs(a[i] - a[j]) < 0.15) ok = false;
        if (ok) return a;
    }
}

// the forward map of the construction: p_j = prod_{h != j} a_h / (a_h - a_j)
std::vector<cdouble> forward_point(const std::vector<cdouble>& a) {
    const std::size_t k = a.size();
    std::vector<cdouble> p(k, cdouble(1.0, 0.0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t h = 0; h < k; ++h) {
            if (h == j) continue;
            p[j] *= a[h] / (a[h] - a[j]);
        }
    return p;
}

ArrangementOrbifold standard_arrangement(int n) {
    std::vector<RatVec> covectors;
    for (int j = 0; j <= n; ++j) {
        RatVec e(n + 1, Rational(0));
        e[j] = Rational(1);
        covectors.push_back(std::move(e));
    }
    covectors.emplace_back(n + 1, Rational(1));
    return ArrangementOrbifold(n, std::move(covectors),
                               std::vector<Multiplicity>(n + 2, Multiplicity(2)));
}

RatVec rational_approx(const std::vector<cdouble>& p) {
    // keep instances exactly representable: round to a fine rational grid
    RatVec out;
    const long long denom = 1LL << 40;
    for (const auto& v : p)
        out.emplace_back(static_cast<long long>(std::llround(v.real() * denom)), denom);
    return out;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

TEST_CASE("phi_map: n = 1 is u = -y") {
    for (double re : {0.3, -0.7, 2.0}) {
        const std::vector<cdouble> y{cdouble(re, 0.4)};
        const auto u = phi_map(y);
        CHECK(std::abs(u[0] + y[0]) < 1e-15);
    }
}

TEST_CASE("phi_map: n = 2 closed form") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 50; ++i) {
        const auto y = random_valid_y(2, rng);
        const auto u = phi_map(y);
        const cdouble expect1 = -y[0] * y[0] * (1.0 - y[1]) / (y[0] - y[1]);
        const cdouble expect2 = -y[1] * y[1] * (1.0 - y[0]) / (y[1] - y[0]);
        CHECK(std::abs(u[0] - expect1) <= 1e-12 * std::abs(expect1));
        CHECK(std::abs(u[1] - expect2) <= 1e-12 * std::abs(expect2));
    }
}

TEST_CASE("phi_map commutes with relabeling") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 30; ++i) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const auto y = random_valid_y(n, rng);
        const auto u = phi_map(y);

        std::vector<int> perm(n);
        for (int j = 0; j < n; ++j) perm[j] = j;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<cdouble> yp(n);
        for (int j = 0; j < n; ++j) yp[j] = y[perm[j]];
        const auto up = phi_map(yp);
        for (int j = 0; j < n; ++j)
            CHECK(std::abs(up[j] - u[perm[j]]) <= 1e-10 * (1.0 + std::abs(u[perm[j]])));
    }
}

TEST_CASE("phi_map rejects singular inputs") {
    CHECK_THROWS_AS(phi_map(std::vector<cdouble>{cdouble(0.0, 0.0)}), DomainError);
    CHECK_THROWS_AS(phi_map(std::vector<cdouble>{cdouble(1.0, 0.0), cdouble(0.5, 0.0)}),
                    DomainError);
    CHECK_THROWS_AS(phi_map(std::vector<cdouble>{cdouble(0.5, 0.1), cdouble(0.5, 0.1)}),
                    DomainError);
}

TEST_CASE("analytic Jacobian: n = 1 is the constant -1") {
    const std::vector<cdouble> y{cdouble(0.4, 0.2)};
    const auto jac = phi_jacobian(y);
    CHECK(std::abs(jac(0, 0) + 1.0) < 1e-14);
}

TEST_CASE("analytic Jacobian matches central finite differences") {
    std::mt19937_64 rng(107);
    for (int n = 2; n <= 5; ++n) {
        double worst = 0.0;
        for (int i = 0; i < 250; ++i) {
            const auto y = random_valid_y(n, rng);
            const auto jac = phi_jacobian(y);
            const auto fd = finite_difference_jacobian(y);
            const double scale = jac.cwiseAbs().maxCoeff();
            const double err = (jac - fd).cwiseAbs().maxCoeff() / scale;
            worst = std::max(worst, err);
        }
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("scaled log-Jacobian determinant approaches n! at the hierarchical seed") {
    for (int n = 1; n <= 5; ++n) {
        const auto y = hierarchical_seed(n, 1e3);
        const cdouble d = phi_scaled_log_jacobian(y).determinant();
        CHECK(std::abs(d - factorial(n)) / factorial(n) < 0.05);
    }
}

TEST_CASE("hierarchical seed magnitudes and validity") {
    const auto y = hierarchical_seed(2, 10.0);
    CHECK(std::abs(std::abs(y[0]) - 1e-2) < 1e-12);
    CHECK(std::abs(std::abs(y[1]) - 1e-1) < 1e-12);
    for (int n = 1; n <= 6; ++n) {
        const auto seed = hierarchical_seed(n, 1e3);
        CHECK_NOTHROW(phi_map(seed));  // seed satisfies the map preconditions
        for (int j = 1; j < n; ++j)
            CHECK(std::abs(seed[j]) > std::abs(seed[j - 1]));
        CHECK(1e3 * std::abs(seed[n - 1]) <= 1.0 + 1e-12);
    }
    CHECK_THROWS_AS(hierarchical_seed(2, 0.5), DomainError);
}

TEST_CASE("forward map is scale invariant, matching the y-variable reduction") {
    std::mt19937_64 rng(109);
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const auto a = random_instance_roots(n, rng);
        const auto p = forward_point(a);
        std::uniform_real_distribution<double> ld(0.3, 3.0);
        const cdouble lambda(ld(rng), ld(rng) - 1.5);
        std::vector<cdouble> scaled(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) scaled[j] = lambda * a[j];
        const auto ps = forward_point(scaled);
        for (std::size_t j = 0; j < p.size(); ++j)
            CHECK(std::abs(ps[j] - p[j]) <= 1e-12 * (1.0 + std::abs(p[j])));
    }
}

TEST_CASE("solve and verify: the n = 2 conic through (1:1:1)") {
    const ArrangementOrbifold arr = standard_arrangement(2);
    const RatVec p{Rational(1), Rational(1), Rational(1)};
    const RncSolution sol = solve_rnc(arr, p);
    CHECK(sol.residual_report < 1e-8);
    const VerifyReport report = verify_rnc(sol, arr, p, 1e-8);
    CHECK(report.pass);
    // leading coefficients sum to 3 = sum of p
    cdouble b_sum(0, 0);
    for (const auto& b : sol.b) b_sum += b;
    CHECK(std::abs(b_sum - cdouble(3.0, 0.0)) < 1e-9);
}

TEST_CASE("forward consistency: solver recovers verifiable curves") {
    std::mt19937_64 rng(113);
    for (int n : {2, 3, 4}) {
        const ArrangementOrbifold arr = standard_arrangement(n);
        for (int i = 0; i < 10; ++i) {
            const auto roots = random_instance_roots(n, rng);
            const RatVec p = rational_approx(forward_point(roots));
            SolverConfig cfg;
            cfg.rng_seed = 1000 + i;
            const RncSolution sol = solve_rnc(arr, p, cfg);
            CHECK(sol.residual_report < 1e-9);
            CHECK(verify_rnc(sol, arr, p, 1e-8).pass);
        }
    }
}

TEST_CASE("verification fails when a root is perturbed") {
    const ArrangementOrbifold arr = standard_arrangement(2);
    const RatVec p{Rational(1), Rational(1), Rational(1)};
    RncSolution sol = solve_rnc(arr, p);
    sol.a[1] += 1e-3;
    // re-expand the tampered coordinate polynomial so the structural check
    // still passes; the low-order coefficients now cannot vanish
    std::vector<cdouble> poly(3);
    const cdouble b = sol.b[1], a = sol.a[1];
    poly[0] = b * a * a;
    poly[1] = b * 2.0 * a;
    poly[2] = b;
    sol.coordinate_polynomials[1] = poly;
    const VerifyReport report = verify_rnc(sol, arr, p, 1e-8);
    CHECK(!report.pass);
    CHECK(!report.checks[0].pass);  // low_order_coefficients
}

TEST_CASE("exact symbolic instance n = 1: (t+1) + (t-1) = 2t") {
    const ArrangementOrbifold arr = standard_arrangement(1);
    RncSolution sol;
    sol.a = {cdouble(1, 0), cdouble(-1, 0)};
    sol.b = {cdouble(1, 0), cdouble(1, 0)};
    sol.coordinate_polynomials = {{cdouble(1, 0), cdouble(1, 0)},
                                  {cdouble(-1, 0), cdouble(1, 0)}};
    sol.input_coordinate_polynomials = sol.coordinate_polynomials;
    const RatVec p{Rational(1), Rational(1)};
    const VerifyReport report = verify_rnc(sol, arr, p, 1e-12);
    CHECK(report.pass);
}

TEST_CASE("points on the arrangement are rejected") {
    const ArrangementOrbifold arr = standard_arrangement(2);
    CHECK_THROWS_AS(solve_rnc(arr, RatVec{Rational(0), Rational(1), Rational(1)}),
                    DomainError);
    // on the last hyperplane: coordinates sum to zero
    CHECK_THROWS_AS(solve_rnc(arr, RatVec{Rational(1), Rational(1), Rational(-2)}),
                    DomainError);
}

TEST_CASE("fixed seed reproduces the solution bit for bit") {
    const ArrangementOrbifold arr = standard_arrangement(3);
    const RatVec p{Rational(1), Rational(2), Rational(3), Rational(5)};
    SolverConfig cfg;
    cfg.rng_seed = 424242;
    const RncSolution s1 = solve_rnc(arr, p, cfg);
    const RncSolution s2 = solve_rnc(arr, p, cfg);
    REQUIRE(s1.a.size() == s2.a.size());
    for (std::size_t j = 0; j < s1.a.size(); ++j) {
        CHECK(s1.a[j].real() == s2.a[j].real());
        CHECK(s1.a[j].imag() == s2.a[j].imag());
    }
    CHECK(s1.residual_report == s2.residual_report);
    CHECK(s1.restarts_used == s2.restarts_used);
}

TEST_CASE("real flag: real and complex branches are told apart") {
    // n = 1 solves in closed form on the real axis: a = (1, -p0/p1)
    const ArrangementOrbifold line = standard_arrangement(1);
    const RncSolution real_sol = solve_rnc(line, RatVec{Rational(1), Rational(2)});
    CHECK(real_sol.real_curve);
    CHECK(verify_rnc(real_sol, line, RatVec{Rational(1), Rational(2)}, 1e-10).pass);

    // the conic through (1:1:1) has roots at the cube roots of unity
    const ArrangementOrbifold plane = standard_arrangement(2);
    const RncSolution conic = solve_rnc(plane, RatVec{Rational(1), Rational(1), Rational(1)});
    CHECK(!conic.real_curve);
}

TEST_CASE("solver respects the configuration guardrails") {
    const ArrangementOrbifold arr = standard_arrangement(2);
    const RatVec p{Rational(1), Rational(1), Rational(1)};
    SolverConfig cfg;
    cfg.newton_tolerance = 2.0;
    CHECK_THROWS_AS(solve_rnc(arr, p, cfg), DomainError);
}
