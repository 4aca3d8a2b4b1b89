#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic and orbifold multiplicities.
 *
 * Rational wraps a GMP mpq_class: arbitrary precision, always in lowest
 * terms with positive denominator, no floating point anywhere. Multiplicity
 * is a rational >= 1 or +infinity; its boundary coefficient 1 - 1/m lies
 * in [0, 1], with coefficient(inf) = 1 (the logarithmic case).
 */

#include <orb/errors.hpp>

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

namespace orb {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(int n) : v_(n) {}

    Rational(long long num, long long den) {
        if (den == 0) fail("DivisionByZero", "rational with zero denominator");
        v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        v_.canonicalize();
    }

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) fail("DivisionByZero", "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(const mpz_class& n) : v_(n) {}

    // canonical by construction everywhere this is used
    explicit Rational(mpq_class q) : v_(std::move(q)) {}

    /// Parses "p", "-p" or "p/q". Throws ParseError on anything else.
    static Rational parse(const std::string& s) {
        if (s.empty()) fail("ParseError", "empty rational literal");
        std::size_t slash = s.find('/');
        const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
        const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        auto is_int = [](const std::string& t, bool allow_sign) {
            if (t.empty()) return false;
            std::size_t i = (allow_sign && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
            return true;
        };
        if (!is_int(num, true) || !is_int(den, false))
            fail("ParseError", "bad rational literal: " + s);
        mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den);
        if (d == 0) fail("ParseError", "zero denominator in: " + s);
        return Rational(n, d);
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail("DivisionByZero", "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    Rational reciprocal() const {
        if (is_zero()) fail("DivisionByZero", "reciprocal of zero");
        return Rational(v_.get_den(), v_.get_num());
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    mpz_class ceil() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    double to_double() const { return v_.get_d(); }

    /// "p" when integral, "p/q" otherwise.
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rational unit_fraction(const mpz_class& d) { return Rational(mpz_class(1), d); }

/// A rational extended with +infinity. Curve point weights live here: the
/// virtual calculus produces weights below 1, which Multiplicity forbids.
class ExtRational {
public:
    static ExtRational infinity() { ExtRational e; e.infinite_ = true; return e; }
    static ExtRational of(Rational v) { ExtRational e; e.value_ = std::move(v); return e; }

    bool is_infinite() const { return infinite_; }

    const Rational& value() const {
        if (infinite_) fail("InfiniteMultiplicity", "no finite value for infinity");
        return value_;
    }

    /// 1 - 1/x, with the convention 1 - 1/inf = 1. x must be nonzero.
    Rational coefficient_term() const {
        if (infinite_) return Rational(1);
        return Rational(1) - value_.reciprocal();
    }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }

    std::string str() const { return infinite_ ? "inf" : value_.str(); }

private:
    bool infinite_ = false;
    Rational value_ = Rational(0);
};

inline ExtRational max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }

/// The m of an orbifold divisor coefficient 1 - 1/m: a rational >= 1 or inf.
class Multiplicity {
public:
    explicit Multiplicity(Rational v) : v_(ExtRational::of(std::move(v))) {
        if (v_.value() < Rational(1))
            fail("InvalidMultiplicity", "multiplicity below 1: " + v_.value().str());
    }
    explicit Multiplicity(long long v) : Multiplicity(Rational(v)) {}

    static Multiplicity infinity() {
        Multiplicity m;
        m.v_ = ExtRational::infinity();
        return m;
    }

    /// "inf", "p/q" or "p".
    static Multiplicity parse(const std::string& s) {
        if (s == "inf" || s == "infinity") return infinity();
        return Multiplicity(Rational::parse(s));
    }

    bool is_infinite() const { return v_.is_infinite(); }
    const Rational& value() const { return v_.value(); }
    const ExtRational& ext() const { return v_; }

    bool is_integral() const { return !is_infinite() && value().is_integer(); }

    long long int_value() const {
        if (!is_integral()) fail("UnsupportedMultiplicity", "not an integer multiplicity: " + str());
        return value().num().get_si();
    }

    /// Boundary coefficient 1 - 1/m in [0, 1]; coefficient(inf) = 1.
    Rational coefficient() const { return v_.coefficient_term(); }

    /// 1/m with 1/inf = 0; the unit-fraction view used all over the Fano tests.
    Rational reciprocal_or_zero() const {
        return is_infinite() ? Rational(0) : value().reciprocal();
    }

    friend bool operator==(const Multiplicity& a, const Multiplicity& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Multiplicity& a, const Multiplicity& b) { return !(a == b); }
    friend bool operator<(const Multiplicity& a, const Multiplicity& b) { return a.v_ < b.v_; }

    std::string str() const { return v_.str(); }

private:
    Multiplicity() = default;
    ExtRational v_;
};

} // namespace orb
