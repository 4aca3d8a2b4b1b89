#pragma once

/**
 * @file core.hpp
 * @brief Orbifold types on projective space, hyperplane arrangements, sign
 *        classification, and exact projective standardization.
 *
 * An OrbifoldType is the combinatorial shadow of (P^n | Delta) with Delta
 * supported on k hyperplanes in general position: the dimension n plus a
 * sorted tuple of multiplicities. An ArrangementOrbifold carries the actual
 * covectors. Everything here is exact rational arithmetic; all values are
 * immutable and every operation is a pure function.
 */

#include <orb/rational.hpp>

#include <optional>
#include <vector>

namespace orb {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// ---- exact linear algebra (Gaussian elimination over Q) -------------------

Rational det(RatMat m);
int rank(RatMat m);
/// Solves A x = b for square A; empty when A is singular.
std::optional<RatVec> solve(RatMat a, RatVec b);
std::optional<RatMat> inverse(RatMat m);
RatVec mat_vec(const RatMat& m, const RatVec& v);
/// Row-covector times matrix: (l * m)_j = sum_i l_i m_ij.
RatVec vec_mat(const RatVec& l, const RatMat& m);

/// Canonical representative of a covector up to scale: integer entries with
/// content 1, first nonzero entry positive. Throws ZeroCovector on 0.
RatVec normalize_covector(const RatVec& l);

// ---- orbifold types --------------------------------------------------------

enum class CanonicalClass { Fano, TrivialCanonical, GeneralType };

const char* to_string(CanonicalClass c);

/// Dimension n plus a nondecreasing multiplicity tuple (inf sorts last).
/// The constructor sorts; multiplicity-1 entries are allowed and inert.
class OrbifoldType {
public:
    OrbifoldType(int n, std::vector<Multiplicity> mults);

    /// Integer multiplicities, the integral case of the examples.
    static OrbifoldType integral(int n, const std::vector<long long>& mults);

    int dimension() const { return n_; }
    const std::vector<Multiplicity>& mults() const { return mults_; }
    int count() const { return static_cast<int>(mults_.size()); }

    /// Sum of 1/m_j with 1/inf = 0.
    Rational reciprocal_sum() const;

private:
    int n_;
    std::vector<Multiplicity> mults_;
};

/// deg(K + Delta) in hyperplane units: -(n+1) + sum_j (1 - 1/m_j).
Rational canonical_degree(const OrbifoldType& t);

/// Fano iff canonical_degree < 0, TrivialCanonical iff = 0, else GeneralType.
CanonicalClass classify(const OrbifoldType& t);

// ---- arrangements ----------------------------------------------------------

/// k hyperplane covectors in n+1 homogeneous coordinates with aligned
/// multiplicities. Covectors are stored in canonical normalized form.
class ArrangementOrbifold {
public:
    ArrangementOrbifold(int n, std::vector<RatVec> hyperplanes,
                        std::vector<Multiplicity> mults);

    int dimension() const { return n_; }
    int count() const { return static_cast<int>(hyperplanes_.size()); }
    const std::vector<RatVec>& hyperplanes() const { return hyperplanes_; }
    const std::vector<Multiplicity>& mults() const { return mults_; }

    OrbifoldType type() const { return OrbifoldType(n_, mults_); }

private:
    int n_;
    std::vector<RatVec> hyperplanes_;
    std::vector<Multiplicity> mults_;
};

/// True iff every (n+1)-subset of covectors is linearly independent
/// (for k <= n: the covectors themselves are independent).
bool is_general_position(const ArrangementOrbifold& a);

/// Invertible projective change of coordinates, acting on points as x -> Mx
/// and on hyperplane covectors as l -> l M^{-1}.
class Homography {
public:
    explicit Homography(RatMat m);

    int size() const { return static_cast<int>(m_.size()); }
    const RatMat& matrix() const { return m_; }
    const RatMat& inverse_matrix() const { return inv_; }

    RatVec apply_point(const RatVec& x) const;
    RatVec apply_covector(const RatVec& l) const;
    ArrangementOrbifold apply(const ArrangementOrbifold& a) const;

    Homography inverse() const;

private:
    RatMat m_;
    RatMat inv_;
};

struct Standardization {
    Homography map;
    ArrangementOrbifold image;
};

/// For k = n+2 covectors in general position: the homography sending the
/// first n+1 hyperplanes to the coordinate hyperplanes X_j = 0 and the last
/// to X_0 + ... + X_n = 0, multiplicities carried along. Rows of the matrix
/// are lambda_j * l_j where sum_j lambda_j l_j = l_{n+1}.
Standardization standardize(const ArrangementOrbifold& a);

} // namespace orb
