#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "shadowline/quadfield.hpp"

namespace shadowline {

/// Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
class WeierstrassCurve {
  public:
    WeierstrassCurve() = default;
    explicit WeierstrassCurve(std::vector<mpq_class> a_invariants, std::string label = "");

    const mpq_class& a1() const { return a_[0]; }
    const mpq_class& a2() const { return a_[1]; }
    const mpq_class& a3() const { return a_[2]; }
    const mpq_class& a4() const { return a_[3]; }
    const mpq_class& a6() const { return a_[4]; }
    const std::vector<mpq_class>& a_invariants() const { return a_; }
    const std::string& label() const { return label_; }

    const mpq_class& b2() const { return b2_; }
    const mpq_class& b4() const { return b4_; }
    const mpq_class& b6() const { return b6_; }
    const mpq_class& b8() const { return b8_; }
    const mpq_class& c4() const { return c4_; }
    const mpq_class& c6() const { return c6_; }
    const mpq_class& discriminant() const { return disc_; }

    bool is_integral() const;
    /// Cheap minimality screen: integral and no prime ell with ell^4 | c4 and
    /// ell^12 | disc.  Returns diagnostics; never transforms.
    std::vector<std::string> minimality_warnings() const;

    bool operator==(const WeierstrassCurve& o) const { return a_ == o.a_; }

  private:
    std::vector<mpq_class> a_;
    std::string label_;
    mpq_class b2_, b4_, b6_, b8_, c4_, c6_, disc_;
};

/// Affine point with coordinates in Q(sqrt d), or the point at infinity.
struct CurvePoint {
    bool infinity = true;
    QuadElement x, y;

    CurvePoint() = default;
    CurvePoint(QuadElement px, QuadElement py)
        : infinity(false), x(std::move(px)), y(std::move(py)) {}
    static CurvePoint at_infinity() { return CurvePoint(); }
    static CurvePoint rational(long d, const mpq_class& px, const mpq_class& py) {
        return {QuadElement::from_rational(d, px), QuadElement::from_rational(d, py)};
    }
    bool operator==(const CurvePoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
    std::string str() const;
};

bool on_curve(const WeierstrassCurve& E, const CurvePoint& P);
CurvePoint neg(const WeierstrassCurve& E, const CurvePoint& P);
CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint mul(const WeierstrassCurve& E, long k, const CurvePoint& P);
CurvePoint conj_point(const CurvePoint& P);

/// psi_n(P) by the standard recurrence (psi_2 = 2y + a1 x + a3).
QuadElement division_poly_eval(const WeierstrassCurve& E, long n, const CurvePoint& P);

/// Torsion test: k P = O for some k <= 18 (the element-order bound over
/// quadratic fields); additionally flags anomalous denominator behaviour.
bool is_torsion(const WeierstrassCurve& E, const CurvePoint& P);

struct ReductionData {
    long count;     // #E(F_p)
    long a_p;       // p + 1 - count
    bool ordinary;  // a_p != 0 mod p
};
ReductionData reduction_data(const WeierstrassCurve& E, long p);

struct LocalData {
    std::string kodaira;  // "I0", "I5", "III*", ...
    long tamagawa;
    long vdisc;
};
/// Tate's algorithm over Q_ell for an integral model.
LocalData tate_local_data(const WeierstrassCurve& E, long ell);
long tamagawa(const WeierstrassCurve& E, long ell);
/// lcm of Tamagawa numbers over the bad primes (with optional override table).
long tamagawa_lcm(const WeierstrassCurve& E,
                  const std::vector<std::pair<long, long>>& overrides = {});
std::vector<long> bad_primes(const WeierstrassCurve& E);

/// Standard substitution x = u^2 x' + r, y = u^3 y' + s u^2 x' + t carrying E
/// to E'; invertible for u != 0.
struct ModelMap {
    mpq_class u, r, s, t;
    CurvePoint forward(const CurvePoint& P) const;   // E -> E'
    CurvePoint backward(const CurvePoint& P) const;  // E' -> E
};

WeierstrassCurve transformed(const WeierstrassCurve& E, const ModelMap& m);

struct ShortModel {
    WeierstrassCurve curve;  // y^2 = x^3 - 27 c4 x - 54 c6
    ModelMap map;            // E -> short model
};
ShortModel short_model(const WeierstrassCurve& E);

/// Twist-model point (x0, y0) on y^2 = x^3 + A d^2 x + B d^3 (A, B the short
/// model coefficients of E) mapped into E(K) on the given minimal model.
CurvePoint twist_transfer(const WeierstrassCurve& E, long d_input, const mpq_class& x0,
                          const mpq_class& y0);
/// Inverse direction: x0 = d * x_short(S) for building search targets.
std::pair<mpq_class, mpq_class> twist_preimage(const WeierstrassCurve& E, long d_input,
                                               const CurvePoint& S);

/// All rational points (x, y), y > 0 representative, with x = m/e^2,
/// |m|, e <= bound on an integral short model y^2 = x^3 + Ax + B.
std::vector<std::pair<mpq_class, mpq_class>> naive_search(const mpz_class& A,
                                                          const mpz_class& B, long bound);

}  // namespace shadowline
