#pragma once

#include <compare>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact integer polynomial, coefficients lowest degree first. The zero
/// polynomial has no coefficients.
struct IntPoly {
    std::vector<BigInt> coeffs;

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    const BigInt& leading() const { return coeffs.back(); }
    bool is_zero() const noexcept { return coeffs.empty(); }

    /// Drops high zero coefficients.
    IntPoly& trim();
    int sign_at(const Rational& x) const;
    double value_at(double x) const;
    std::string to_string() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly monomial(long coefficient, int power);
IntPoly derivative(const IntPoly& p);

/// Positive-leading primitive gcd over Q.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

/// Sturm chain of a polynomial: counts distinct real roots in half-open
/// intervals with exact rational evaluation.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);
    /// Distinct real roots in (x, +inf).
    int roots_above(const Rational& x) const;
    /// Distinct real roots in (lo, hi].
    int roots_in(const Rational& lo, const Rational& hi) const { return roots_above(lo) - roots_above(hi); }

private:
    std::vector<IntPoly> chain_;
};

/// The largest real root of a polynomial, known to lie in (lo, hi] and to be
/// the only root of `simple` (the squarefree part) in that interval.
class LargestRoot {
public:
    /// `p` must have at least one real root (true for any real-rooted
    /// characteristic polynomial of positive degree).
    explicit LargestRoot(const IntPoly& p);

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }
    Rational width() const { return hi_ - lo_; }
    const IntPoly& simple() const noexcept { return simple_; }
    double estimate() const;

    /// Halves the isolating interval.
    void bisect();
    void refine_to(const Rational& width);

private:
    IntPoly simple_;
    Rational lo_;
    Rational hi_;
};

/// Orders the largest real roots of a and b exactly. Equality is decided by
/// a common root of gcd(a, b) inside both isolating intervals; otherwise the
/// intervals are bisected until they separate.
std::strong_ordering compare_largest_roots(const IntPoly& a, const IntPoly& b);

Rational to_rational(double x);

}  // namespace spx
