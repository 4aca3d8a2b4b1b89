#include <orb/core.hpp>

#include <algorithm>
#include <numeric>

namespace orb {

// ---- exact linear algebra --------------------------------------------------

Rational det(RatMat m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail("InvalidArgument", "determinant of non-square matrix");
    Rational result(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            result = -result;
        }
        result *= m[col][col];
        const Rational inv_p = m[col][col].reciprocal();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rational f = m[r][col] * inv_p;
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    return result;
}

int rank(RatMat m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        const Rational inv_p = m[r][col].reciprocal();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            const Rational f = m[i][col] * inv_p;
            for (std::size_t c = col; c < cols; ++c)
                m[i][c] -= f * m[r][c];
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::optional<RatVec> solve(RatMat a, RatVec b) {
    const std::size_t n = a.size();
    if (b.size() != n) fail("InvalidArgument", "solve: dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const Rational inv_p = a[col][col].reciprocal();
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational f = a[r][col] * inv_p;
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

std::optional<RatMat> inverse(RatMat m) {
    const std::size_t n = m.size();
    RatMat inv(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational inv_p = m[col][col].reciprocal();
        for (std::size_t c = 0; c < n; ++c) {
            m[col][c] *= inv_p;
            inv[col][c] *= inv_p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Rational f = m[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
    RatVec out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) fail("InvalidArgument", "mat_vec: dimension mismatch");
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] += m[i][j] * v[j];
    }
    return out;
}

RatVec vec_mat(const RatVec& l, const RatMat& m) {
    if (m.size() != l.size()) fail("InvalidArgument", "vec_mat: dimension mismatch");
    if (m.empty()) return {};
    RatVec out(m[0].size(), Rational(0));
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] += l[i] * m[i][j];
    return out;
}

RatVec normalize_covector(const RatVec& l) {
    mpz_class den_lcm(1);
    bool all_zero = true;
    for (const auto& e : l) {
        if (!e.is_zero()) all_zero = false;
        mpz_class d = e.den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    if (all_zero) fail("ZeroCovector", "covector is identically zero");

    std::vector<mpz_class> ints;
    ints.reserve(l.size());
    mpz_class content(0);
    for (const auto& e : l) {
        mpz_class v = e.num() * (den_lcm / e.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    int lead_sign = 0;
    for (const auto& v : ints) {
        if (v != 0) { lead_sign = sgn(v); break; }
    }
    if (lead_sign < 0) content = -content;

    RatVec out;
    out.reserve(l.size());
    for (const auto& v : ints)
        out.emplace_back(mpz_class(v / content));
    return out;
}

// ---- orbifold types --------------------------------------------------------

const char* to_string(CanonicalClass c) {
    switch (c) {
        case CanonicalClass::Fano: return "Fano";
        case CanonicalClass::TrivialCanonical: return "TrivialCanonical";
        case CanonicalClass::GeneralType: return "GeneralType";
    }
    return "?";
}

OrbifoldType::OrbifoldType(int n, std::vector<Multiplicity> mults)
    : n_(n), mults_(std::move(mults)) {
    if (n_ < 1) fail("InvalidArgument", "projective dimension must be >= 1");
    std::sort(mults_.begin(), mults_.end());
}

OrbifoldType OrbifoldType::integral(int n, const std::vector<long long>& mults) {
    std::vector<Multiplicity> ms;
    ms.reserve(mults.size());
    for (long long m : mults) ms.emplace_back(m);
    return OrbifoldType(n, std::move(ms));
}

Rational OrbifoldType::reciprocal_sum() const {
    Rational s(0);
    for (const auto& m : mults_) s += m.reciprocal_or_zero();
    return s;
}

Rational canonical_degree(const OrbifoldType& t) {
    Rational s(-(static_cast<long long>(t.dimension()) + 1));
    for (const auto& m : t.mults()) s += m.coefficient();
    return s;
}

CanonicalClass classify(const OrbifoldType& t) {
    const int sign = canonical_degree(t).sign();
    if (sign < 0) return CanonicalClass::Fano;
    if (sign == 0) return CanonicalClass::TrivialCanonical;
    return CanonicalClass::GeneralType;
}

// ---- arrangements ----------------------------------------------------------

ArrangementOrbifold::ArrangementOrbifold(int n, std::vector<RatVec> hyperplanes,
                                         std::vector<Multiplicity> mults)
    : n_(n), mults_(std::move(mults)) {
    if (n_ < 1) fail("InvalidArgument", "projective dimension must be >= 1");
    if (hyperplanes.size() != mults_.size())
        fail("InvalidArgument", "hyperplane/multiplicity count mismatch");
    hyperplanes_.reserve(hyperplanes.size());
    for (auto& h : hyperplanes) {
        if (h.size() != static_cast<std::size_t>(n_ + 1))
            fail("InvalidArgument", "covector length must be n+1");
        hyperplanes_.push_back(normalize_covector(h));
    }
}

namespace {

bool every_subset_independent(const std::vector<RatVec>& rows, int take) {
    const int k = static_cast<int>(rows.size());
    std::vector<int> idx(take);
    for (int i = 0; i < take; ++i) idx[i] = i;
    while (true) {
        RatMat sub;
        sub.reserve(take);
        for (int i : idx) sub.push_back(rows[i]);
        if (rank(std::move(sub)) < take) return false;
        // next combination
        int i = take - 1;
        while (i >= 0 && idx[i] == k - take + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

} // namespace

bool is_general_position(const ArrangementOrbifold& a) {
    const int k = a.count();
    const int n = a.dimension();
    if (k <= n) return rank(RatMat(a.hyperplanes().begin(), a.hyperplanes().end())) == k;
    return every_subset_independent(a.hyperplanes(), n + 1);
}

Homography::Homography(RatMat m) : m_(std::move(m)) {
    const std::size_t n = m_.size();
    for (const auto& row : m_)
        if (row.size() != n) fail("InvalidArgument", "homography matrix must be square");
    auto inv = orb::inverse(m_);
    if (!inv) fail("SingularMatrix", "homography matrix is singular");
    inv_ = std::move(*inv);
}

RatVec Homography::apply_point(const RatVec& x) const { return mat_vec(m_, x); }

RatVec Homography::apply_covector(const RatVec& l) const {
    return normalize_covector(vec_mat(l, inv_));
}

ArrangementOrbifold Homography::apply(const ArrangementOrbifold& a) const {
    std::vector<RatVec> hs;
    hs.reserve(a.count());
    for (const auto& h : a.hyperplanes()) hs.push_back(apply_covector(h));
    return ArrangementOrbifold(a.dimension(), std::move(hs), a.mults());
}

Homography Homography::inverse() const { return Homography(inv_); }

Standardization standardize(const ArrangementOrbifold& a) {
    const int n = a.dimension();
    if (a.count() != n + 2)
        fail("WrongCount", "standardize needs exactly n+2 hyperplanes");
    if (!is_general_position(a))
        fail("NotGeneralPosition", "arrangement is not in general position");

    // lambda solving sum_j lambda_j l_j = l_{n+1} in the basis l_0..l_n
    RatMat basis_t(n + 1, RatVec(n + 1, Rational(0)));
    for (int j = 0; j <= n; ++j)
        for (int c = 0; c <= n; ++c)
            basis_t[c][j] = a.hyperplanes()[j][c];
    auto lambda = solve(std::move(basis_t), a.hyperplanes()[n + 1]);
    if (!lambda) fail("NotGeneralPosition", "first n+1 covectors are dependent");
    for (const auto& l : *lambda)
        if (l.is_zero()) fail("NotGeneralPosition", "degenerate arrangement: zero lambda");

    RatMat t(n + 1, RatVec(n + 1, Rational(0)));
    for (int j = 0; j <= n; ++j)
        for (int c = 0; c <= n; ++c)
            t[j][c] = (*lambda)[j] * a.hyperplanes()[j][c];

    std::vector<RatVec> std_covectors;
    std_covectors.reserve(n + 2);
    for (int j = 0; j <= n; ++j) {
        RatVec e(n + 1, Rational(0));
        e[j] = Rational(1);
        std_covectors.push_back(std::move(e));
    }
    std_covectors.emplace_back(n + 1, Rational(1));

    return Standardization{Homography(std::move(t)),
                           ArrangementOrbifold(n, std::move(std_covectors), a.mults())};
}

} // namespace orb
