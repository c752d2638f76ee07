#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace shadowline {

/// Element of Q_p with tracked absolute precision.
///
/// A nonzero value is p^v * u where u is a unit stored canonically with
/// 0 < u < p^(N-v); N is the absolute precision (an O(p^N) error bar).
/// "Zero known to O(p^N)" is a distinguished state.  Values are immutable.
class PadicNumber {
  public:
    PadicNumber() = default;

    static PadicNumber zero(long p, long abs_prec);
    static PadicNumber make(long p, long valuation, mpz_class unit, long abs_prec);
    static PadicNumber from_integer(long p, const mpz_class& z, long abs_prec);
    static PadicNumber from_rational(long p, const mpq_class& q, long abs_prec);

    long prime() const { return p_; }
    bool is_zero() const { return zero_; }
    /// Valuation of a nonzero value; throws on zero-at-precision.
    long valuation() const;
    /// Absolute precision N: the value is known modulo p^N.
    long precision() const { return prec_; }
    /// Unit part, canonical in (0, p^(N-v)).
    const mpz_class& unit() const;
    bool is_unit() const { return !zero_ && val_ == 0; }

    PadicNumber operator-() const;
    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const;
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber operator/(const PadicNumber& o) const;
    PadicNumber inverse() const;
    PadicNumber pow(long k) const;

    /// Truncate to a smaller absolute precision.
    PadicNumber capped(long abs_prec) const;
    /// Shift by p^k (exact).
    PadicNumber shifted(long k) const;

    /// Canonical equality: same prime, precision, valuation and unit.
    bool operator==(const PadicNumber& o) const;
    bool operator!=(const PadicNumber& o) const { return !(*this == o); }
    /// Agreement modulo p^k (both must know their value to that precision).
    bool congruent_to(const PadicNumber& o, long k) const;

    /// Digits d_v .. d_(N-1) of p^v*u (least significant first).
    std::vector<int> digits() const;
    /// Residue modulo p^k (k <= N); requires v >= 0 for a faithful answer.
    mpz_class residue(long k) const;

    std::string str() const;

  private:
    long p_ = 0;
    bool zero_ = true;
    long val_ = 0;      // for zero: undefined, kept at 0
    mpz_class unit_ = 0;
    long prec_ = 0;

    void canonicalize();
};

/// Iwasawa logarithm (branch log(p) = 0): log of the unit part via the
/// convergent series on u^(p-1), divided by p-1.
PadicNumber iwasawa_log(const PadicNumber& x);

/// Square root of a unit a with a specified branch residue r, r^2 = a (mod p).
PadicNumber hensel_sqrt(const PadicNumber& a, long branch_residue);

/// The (p-1)st root of unity congruent to the unit a mod p.
PadicNumber teichmuller(const PadicNumber& a);

/// Ascending-power rendering: "3 + 3*5 + 2*5^4 + O(5^10)"; zero digits are
/// omitted, unit coefficients suppressed, negative powers printed as p^-k.
std::string render(const PadicNumber& x);
/// Inverse of render on canonical strings.
PadicNumber parse_padic(long p, const std::string& s);

mpz_class pow_mpz(long base, long exp);

}  // namespace shadowline
