#include "spx/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spx/error.hpp"

namespace spx {

namespace {

using RatPoly = std::vector<Rational>;

RatPoly to_rat(const IntPoly& p) { return RatPoly(p.coeffs.begin(), p.coeffs.end()); }

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Remainder of a / b over Q; b nonzero.
RatPoly remainder(RatPoly a, const RatPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

RatPoly quotient(RatPoly a, const RatPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {};
    RatPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return q;
}

/// Scales by a positive rational so that the coefficients are coprime
/// integers. The sign of the polynomial is preserved.
IntPoly clear_denominators(const RatPoly& p) {
    BigInt lcm = 1;
    for (const auto& c : p) {
        const BigInt d = boost::multiprecision::denominator(c);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    IntPoly out;
    BigInt g = 0;
    for (const auto& c : p) {
        out.coeffs.push_back(boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c)));
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(out.coeffs.back()));
    }
    if (g > 1) {
        for (auto& c : out.coeffs) c /= g;
    }
    return out.trim();
}

IntPoly positive_primitive(const RatPoly& p) {
    IntPoly out = clear_denominators(p);
    if (!out.is_zero() && out.leading() < 0) {
        for (auto& c : out.coeffs) c = -c;
    }
    return out;
}

}  // namespace

IntPoly& IntPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return *this;
}

int IntPoly::sign_at(const Rational& x) const {
    if (coeffs.empty()) return 0;
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    // Horner on the homogenized form: den^d * p(num / den), den > 0.
    BigInt acc = coeffs.back();
    BigInt den_pow = den;
    for (int i = degree() - 1; i >= 0; --i) {
        acc = acc * num + coeffs[static_cast<std::size_t>(i)] * den_pow;
        den_pow *= den;
    }
    return acc.sign();
}

double IntPoly::value_at(double x) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc;
}

std::string IntPoly::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const BigInt mag = boost::multiprecision::abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) out << mag;
        if (i >= 1) out << "x";
        if (i >= 2) out << "^" << i;
        first = false;
    }
    return out.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out.trim();
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out.trim();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPoly out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out.trim();
}

IntPoly monomial(long coefficient, int power) {
    IntPoly out;
    out.coeffs.assign(static_cast<std::size_t>(power) + 1, BigInt(0));
    out.coeffs.back() = coefficient;
    return out.trim();
}

IntPoly derivative(const IntPoly& p) {
    IntPoly out;
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) out.coeffs.push_back(p.coeffs[i] * static_cast<long>(i));
    return out.trim();
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    RatPoly x = to_rat(a);
    RatPoly y = to_rat(b);
    trim(x);
    trim(y);
    while (!y.empty()) {
        RatPoly r = remainder(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return positive_primitive(x);
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() <= 0) return positive_primitive(to_rat(p));
    const IntPoly g = poly_gcd(p, derivative(p));
    return positive_primitive(quotient(to_rat(p), to_rat(g)));
}

SturmChain::SturmChain(const IntPoly& p) {
    IntPoly first = p;
    first.trim();
    if (first.is_zero()) throw Error(ErrorKind::invalid_spec, "Sturm chain of the zero polynomial");
    // Squarefree input keeps the count exact when evaluated at a root.
    first = squarefree_part(first);
    chain_.push_back(first);
    IntPoly d = derivative(first);
    if (d.is_zero()) return;
    chain_.push_back(d);
    for (;;) {
        RatPoly r = remainder(to_rat(chain_[chain_.size() - 2]), to_rat(chain_.back()));
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain_.push_back(clear_denominators(r));
    }
}

int SturmChain::roots_above(const Rational& x) const {
    auto changes = [](auto&& signs) {
        int count = 0;
        int last = 0;
        for (int s : signs) {
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    std::vector<int> at_x;
    std::vector<int> at_inf;
    for (const auto& p : chain_) {
        at_x.push_back(p.sign_at(x));
        at_inf.push_back(p.leading().sign());
    }
    return changes(at_x) - changes(at_inf);
}

LargestRoot::LargestRoot(const IntPoly& p) : simple_(squarefree_part(p)) {
    if (simple_.degree() < 1) throw Error(ErrorKind::invalid_spec, "polynomial has no roots");
    // Cauchy bound: every root lies strictly inside (-bound, bound).
    BigInt top = 0;
    for (const auto& c : simple_.coeffs) top = std::max(top, BigInt(boost::multiprecision::abs(c)));
    const BigInt bound = 1 + top / boost::multiprecision::abs(simple_.leading()) + 1;
    lo_ = Rational(-bound);
    hi_ = Rational(bound);

    const SturmChain sturm(simple_);
    if (sturm.roots_above(lo_) < 1) throw Error(ErrorKind::invalid_spec, "polynomial has no real roots");
    while (sturm.roots_above(lo_) > 1) {
        const Rational mid = (lo_ + hi_) / 2;
        if (sturm.roots_above(mid) >= 1) {
            lo_ = mid;
        } else {
            hi_ = mid;
        }
    }
}

double LargestRoot::estimate() const { return Rational((lo_ + hi_) / 2).convert_to<double>(); }

void LargestRoot::bisect() {
    // simple_ has positive leading coefficient and no root above the target,
    // so it is positive above it and negative between lo_ and it.
    const Rational mid = (lo_ + hi_) / 2;
    const int s = simple_.sign_at(mid);
    if (s > 0) {
        hi_ = mid;
    } else if (s < 0) {
        lo_ = mid;
    } else {
        hi_ = mid;
        lo_ = (lo_ + mid) / 2;
    }
}

void LargestRoot::refine_to(const Rational& width) {
    while (hi_ - lo_ > width) bisect();
}

std::strong_ordering compare_largest_roots(const IntPoly& a, const IntPoly& b) {
    LargestRoot ra(a);
    LargestRoot rb(b);
    bool equality_checked = false;
    for (;;) {
        if (ra.hi() <= rb.lo()) return std::strong_ordering::less;
        if (rb.hi() <= ra.lo()) return std::strong_ordering::greater;
        if (!equality_checked) {
            equality_checked = true;
            const IntPoly g = poly_gcd(ra.simple(), rb.simple());
            if (g.degree() >= 1) {
                const Rational lo = std::max(ra.lo(), rb.lo());
                const Rational hi = std::min(ra.hi(), rb.hi());
                if (lo < hi && SturmChain(g).roots_in(lo, hi) >= 1) return std::strong_ordering::equal;
            }
        }
        if (ra.width() >= rb.width()) {
            ra.bisect();
        } else {
            rb.bisect();
        }
    }
}

Rational to_rational(double x) {
    if (!std::isfinite(x)) throw Error(ErrorKind::invalid_spec, "non-finite value has no rational form");
    int exp = 0;
    const double mant = std::frexp(x, &exp);
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    Rational out{BigInt(scaled)};
    const int shift = exp - 53;
    if (shift >= 0) {
        out *= Rational(BigInt(1) << shift);
    } else {
        out /= Rational(BigInt(1) << -shift);
    }
    return out;
}

}  // namespace spx
