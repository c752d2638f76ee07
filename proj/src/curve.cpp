#include "shadowline/curve.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "shadowline/errors.hpp"

namespace shadowline {

WeierstrassCurve::WeierstrassCurve(std::vector<mpq_class> a, std::string label)
    : a_(std::move(a)), label_(std::move(label)) {
    if (a_.size() != 5) throw validation_error("expected five a-invariants");
    for (auto& q : a_) q.canonicalize();
    const mpq_class &a1 = a_[0], &a2 = a_[1], &a3 = a_[2], &a4 = a_[3], &a6 = a_[4];
    b2_ = a1 * a1 + 4 * a2;
    b4_ = 2 * a4 + a1 * a3;
    b6_ = a3 * a3 + 4 * a6;
    b8_ = (b2_ * b6_ - b4_ * b4_) / 4;
    c4_ = b2_ * b2_ - 24 * b4_;
    c6_ = -b2_ * b2_ * b2_ + 36 * b2_ * b4_ - 216 * b6_;
    disc_ = (c4_ * c4_ * c4_ - c6_ * c6_) / 1728;
    if (disc_ == 0) throw validation_error("singular Weierstrass model");
}

bool WeierstrassCurve::is_integral() const {
    for (auto& q : a_)
        if (q.get_den() != 1) return false;
    return true;
}

std::vector<std::string> WeierstrassCurve::minimality_warnings() const {
    std::vector<std::string> out;
    if (!is_integral()) {
        out.push_back("model is not integral");
        return out;
    }
    mpz_class c4z(c4_), dz(disc_);
    auto fac = factor_integer(mpz_class(disc_));
    for (auto& [q, e] : fac) {
        if (e < 12) continue;
        mpz_class q4 = q * q * q * q;
        if (c4_ == 0 || mpz_class(c4_) % q4 == 0)
            out.push_back("model may be non-minimal at " + q.get_str());
    }
    return out;
}

std::string CurvePoint::str() const {
    if (infinity) return "O";
    return "(" + x.str() + ", " + y.str() + ")";
}

bool on_curve(const WeierstrassCurve& E, const CurvePoint& P) {
    if (P.infinity) return true;
    long d = P.x.d();
    auto Q = [&](const mpq_class& q) { return QuadElement::from_rational(d, q); };
    QuadElement lhs = P.y * P.y + Q(E.a1()) * P.x * P.y + Q(E.a3()) * P.y;
    QuadElement rhs = P.x * P.x * P.x + Q(E.a2()) * P.x * P.x + Q(E.a4()) * P.x + Q(E.a6());
    return lhs == rhs;
}

CurvePoint neg(const WeierstrassCurve& E, const CurvePoint& P) {
    if (P.infinity) return P;
    long d = P.x.d();
    auto Q = [&](const mpq_class& q) { return QuadElement::from_rational(d, q); };
    return {P.x, -P.y - Q(E.a1()) * P.x - Q(E.a3())};
}

CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q0) {
    if (P.infinity) return Q0;
    if (Q0.infinity) return P;
    long d = P.x.d();
    if (Q0.x.d() != d) throw validation_error("points live over different fields");
    auto Q = [&](const mpq_class& q) { return QuadElement::from_rational(d, q); };
    QuadElement a1 = Q(E.a1()), a2 = Q(E.a2()), a3 = Q(E.a3()), a4 = Q(E.a4());
    QuadElement lam;
    if (P.x == Q0.x) {
        if ((P.y + Q0.y + a1 * Q0.x + a3).is_zero()) return CurvePoint::at_infinity();
        QuadElement three = Q(3), two = Q(2);
        lam = (three * P.x * P.x + two * a2 * P.x + a4 - a1 * P.y) /
              (two * P.y + a1 * P.x + a3);
    } else {
        lam = (Q0.y - P.y) / (Q0.x - P.x);
    }
    QuadElement x3 = lam * lam + a1 * lam - a2 - P.x - Q0.x;
    QuadElement y3 = lam * (P.x - x3) - P.y - a1 * x3 - a3;
    return {x3, y3};
}

CurvePoint mul(const WeierstrassCurve& E, long k, const CurvePoint& P) {
    if (k < 0) return mul(E, -k, neg(E, P));
    CurvePoint R = CurvePoint::at_infinity();
    CurvePoint B = P;
    while (k) {
        if (k & 1) R = add(E, R, B);
        B = add(E, B, B);
        k >>= 1;
    }
    return R;
}

CurvePoint conj_point(const CurvePoint& P) {
    if (P.infinity) return P;
    return {P.x.conj(), P.y.conj()};
}

QuadElement division_poly_eval(const WeierstrassCurve& E, long n, const CurvePoint& P) {
    if (P.infinity) throw validation_error("division polynomial at infinity");
    if (n < 1) throw validation_error("division polynomial index must be positive");
    long d = P.x.d();
    auto Q = [&](const mpq_class& q) { return QuadElement::from_rational(d, q); };
    const QuadElement x = P.x, y = P.y;
    QuadElement b2 = Q(E.b2()), b4 = Q(E.b4()), b6 = Q(E.b6()), b8 = Q(E.b8());
    std::map<long, QuadElement> memo;
    std::function<QuadElement(long)> psi = [&](long m) -> QuadElement {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        QuadElement r;
        if (m == 0) {
            r = Q(0);
        } else if (m == 1) {
            r = Q(1);
        } else if (m == 2) {
            r = Q(2) * y + Q(E.a1()) * x + Q(E.a3());
        } else if (m == 3) {
            r = Q(3) * x.pow(4) + b2 * x.pow(3) + Q(3) * b4 * x.pow(2) + Q(3) * b6 * x + b8;
        } else if (m == 4) {
            r = psi(2) * (Q(2) * x.pow(6) + b2 * x.pow(5) + Q(5) * b4 * x.pow(4) +
                          Q(10) * b6 * x.pow(3) + Q(10) * b8 * x.pow(2) +
                          (b2 * b8 - b4 * b6) * x + (b4 * b8 - b6 * b6));
        } else if (m % 2 == 1) {
            long k = (m - 1) / 2;
            r = psi(k + 2) * psi(k).pow(3) - psi(k - 1) * psi(k + 1).pow(3);
        } else {
            long k = m / 2;
            r = psi(k) * (psi(k + 2) * psi(k - 1).pow(2) - psi(k - 2) * psi(k + 1).pow(2)) /
                psi(2);
        }
        memo.emplace(m, r);
        return r;
    };
    return psi(n);
}

bool is_torsion(const WeierstrassCurve& E, const CurvePoint& P) {
    if (P.infinity) return true;
    // Element orders of torsion points over a quadratic field are at most 18.
    CurvePoint Q = P;
    for (int k = 2; k <= 19; ++k) {
        Q = add(E, Q, P);
        if (Q.infinity) return true;
    }
    return false;
}

// --------------------------------------------------------------------------

namespace {

long mod_residue(const mpq_class& q, long p) {
    mpz_class den = q.get_den();
    if (den % p == 0) throw validation_error("rational has a pole at p");
    mpz_class m(p);
    mpz_class num = q.get_num() % m;
    mpz_class dinv;
    mpz_class dd = den % m;
    mpz_invert(dinv.get_mpz_t(), dd.get_mpz_t(), m.get_mpz_t());
    mpz_class r = ((num * dinv) % m + m) % m;
    return static_cast<long>(r.get_si());
}

}  // namespace

ReductionData reduction_data(const WeierstrassCurve& E, long p) {
    mpz_class dz(E.discriminant());
    if (!E.is_integral() || dz % p == 0) throw validation_error("bad reduction at p");
    long a1 = mod_residue(E.a1(), p), a2 = mod_residue(E.a2(), p), a3 = mod_residue(E.a3(), p),
         a4 = mod_residue(E.a4(), p), a6 = mod_residue(E.a6(), p);
    long count = 1;
    for (long x = 0; x < p; ++x) {
        for (long y = 0; y < p; ++y) {
            long lhs = (y * y + a1 * x * y + a3 * y) % p;
            long rhs = (((x * x % p) * x) % p + a2 * x % p * x % p + a4 * x + a6) % p;
            if (((lhs - rhs) % p + p) % p == 0) ++count;
        }
    }
    long ap = p + 1 - count;
    return {count, ap, ap % p != 0};
}

// --------------------------------------------------------------------------
// Tate's algorithm

namespace {

struct IntModel {
    mpz_class a1, a2, a3, a4, a6;

    void transform(const mpz_class& r, const mpz_class& s, const mpz_class& t) {
        mpz_class A1 = a1 + 2 * s;
        mpz_class A2 = a2 - s * a1 + 3 * r - s * s;
        mpz_class A3 = a3 + r * a1 + 2 * t;
        mpz_class A4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
        mpz_class A6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
        a1 = A1, a2 = A2, a3 = A3, a4 = A4, a6 = A6;
    }
    void scale_down(long ell) {
        mpz_class u(ell);
        assert(a1 % u == 0 && a2 % (u * u) == 0 && a3 % (u * u * u) == 0);
        a1 /= u;
        a2 /= u * u;
        a3 /= u * u * u;
        a4 /= u * u * u * u;
        a6 /= u * u * u * u * u * u;
    }
    mpz_class b2() const { return a1 * a1 + 4 * a2; }
    mpz_class b4() const { return 2 * a4 + a1 * a3; }
    mpz_class b6() const { return a3 * a3 + 4 * a6; }
    mpz_class b8() const {
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    }
    mpz_class disc() const {
        mpz_class B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
    }
};

long vml(const mpz_class& z, long ell) {
    if (z == 0) return 1 << 20;  // effectively infinity
    mpz_class q = z;
    long v = 0;
    while (q % ell == 0) {
        q /= ell;
        ++v;
    }
    return v;
}

long lmod(const mpz_class& z, long ell) {
    mpz_class r = z % ell;
    if (r < 0) r += ell;
    return static_cast<long>(r.get_si());
}

long inv_mod_l(long a, long ell) {
    mpz_class r;
    mpz_class az(a), mz(ell);
    if (mpz_invert(r.get_mpz_t(), az.get_mpz_t(), mz.get_mpz_t()) == 0)
        throw validation_error("non-invertible residue");
    return static_cast<long>(r.get_si());
}

// number of distinct roots of a*T^2 + b*T + c over F_ell; sep set false when
// the polynomial is inseparable (double root)
long quadratic_roots(long a, long b, long c, long ell, bool& separable) {
    a %= ell, b %= ell, c %= ell;
    if (a % ell == 0) throw validation_error("degenerate quadratic");
    if (ell == 2) {
        separable = (b % 2 + 2) % 2 == 1;
        long cnt = 0;
        for (long t = 0; t < 2; ++t)
            if (((a * t * t + b * t + c) % 2 + 2) % 2 == 0) ++cnt;
        return cnt;
    }
    mpz_class disc = mpz_class(b) * b - 4 * mpz_class(a) * c;
    long dm = lmod(disc, ell);
    if (dm == 0) {
        separable = false;
        return 1;
    }
    separable = true;
    mpz_class dz(dm), lz(ell);
    return mpz_legendre(dz.get_mpz_t(), lz.get_mpz_t()) == 1 ? 2 : 0;
}

// double root of an inseparable quadratic a*T^2 + b*T + c mod ell
long quadratic_double_root(long a, long b, long c, long ell) {
    if (ell == 2) {
        // T^2 + c/a has root sqrt(c/a) = c/a in F_2
        return (lmod(c, 2) * inv_mod_l(lmod(a, 2), 2)) % 2;
    }
    return lmod(mpz_class(-b) * inv_mod_l(lmod(2 * a, ell), ell), ell);
}

}  // namespace

LocalData tate_local_data(const WeierstrassCurve& E, long ell) {
    if (!E.is_integral()) throw validation_error("Tate's algorithm requires an integral model");
    IntModel m{mpz_class(E.a1()), mpz_class(E.a2()), mpz_class(E.a3()), mpz_class(E.a4()),
               mpz_class(E.a6())};

    for (int pass = 0; pass < 64; ++pass) {
        mpz_class D = m.disc();
        long n = vml(D, ell);
        if (n == 0) return {"I0", 1, 0};

        // move the singular point of the reduction to the origin
        {
            bool found = false;
            long rx = 0, ty = 0;
            for (long x = 0; x < ell && !found; ++x) {
                // F_y = 2y + a1 x + a3 = 0
                if (ell == 2) {
                    for (long y = 0; y < 2 && !found; ++y) {
                        long fy = lmod(2 * y + m.a1 * x + m.a3, 2);
                        long f = lmod(mpz_class(y) * y + m.a1 * x * y + m.a3 * y - x * x * x -
                                          m.a2 * x * x - m.a4 * x - m.a6,
                                      2);
                        long fx = lmod(m.a1 * y - 3 * x * x - 2 * m.a2 * x - m.a4, 2);
                        if (fy == 0 && f == 0 && fx == 0) {
                            rx = x;
                            ty = y;
                            found = true;
                        }
                    }
                } else {
                    long y = lmod(mpz_class(-(m.a1 * x + m.a3)) * inv_mod_l(2, ell), ell);
                    long f = lmod(mpz_class(y) * y + m.a1 * x * y + m.a3 * y - x * x * x -
                                      m.a2 * x * x - m.a4 * x - m.a6,
                                  ell);
                    long fx = lmod(m.a1 * y - 3 * x * x - 2 * m.a2 * x - m.a4, ell);
                    if (f == 0 && fx == 0) {
                        rx = x;
                        ty = y;
                        found = true;
                    }
                }
            }
            if (!found) throw validation_error("singular point not found (internal)");
            m.transform(rx, 0, ty);
        }
        // now ell | a3, a4, a6
        if (vml(m.b2(), ell) == 0) {
            // multiplicative: I_n
            bool sep = true;
            long roots = quadratic_roots(1, lmod(m.a1, ell), lmod(-m.a2, ell), ell, sep);
            bool split = roots == 2;
            long c = split ? n : (n % 2 == 0 ? 2 : 1);
            return {"I" + std::to_string(n), c, n};
        }
        if (vml(m.a6, ell) < 2) return {"II", 1, n};
        if (vml(m.b8(), ell) < 3) return {"III", 2, n};
        if (vml(m.b6(), ell) < 3) {
            bool sep;
            long roots = quadratic_roots(1, lmod(m.a3 / ell, ell), lmod(-m.a6 / (ell * ell), ell),
                                         ell, sep);
            return {"IV", roots == 2 ? 3L : 1L, n};
        }
        // arrange ell | a1, a2; ell^2 | a3, a4; ell^3 | a6
        {
            long s = ell == 2 ? lmod(m.a2, 2)
                              : lmod(mpz_class(-m.a1) * inv_mod_l(2, ell), ell);
            m.transform(0, s, 0);
            long t = ell == 2 ? 2 * lmod(m.a6 / 4, 2)
                              : lmod(mpz_class(-(m.a3 / ell)) * inv_mod_l(2, ell), ell) * ell;
            m.transform(0, 0, t);
            assert(vml(m.a1, ell) >= 1 && vml(m.a2, ell) >= 1);
            assert(vml(m.a3, ell) >= 2 && vml(m.a4, ell) >= 2 && vml(m.a6, ell) >= 3);
        }
        // P(T) = T^3 + a2,1 T^2 + a4,2 T + a6,3 over F_ell
        long b = lmod(m.a2 / ell, ell);
        long cc = lmod(m.a4 / (ell * ell), ell);
        long dd = lmod(m.a6 / (ell * ell * ell), ell);
        // root structure of the cubic
        std::vector<long> roots;
        for (long t = 0; t < ell; ++t) {
            if (lmod(((mpz_class(t) * t % ell) * t + mpz_class(b) * t * t + mpz_class(cc) * t +
                      dd),
                     ell) == 0)
                roots.push_back(t);
        }
        // multiplicity of a root t: shift to P(T+t) = T^3 + (b+3t)T^2 + P'(t)T
        // (valid in every characteristic)
        auto mult_of = [&](long t) {
            long d1 = lmod(3 * mpz_class(t) * t + 2 * mpz_class(b) * t + cc, ell);
            if (d1 != 0) return 1;
            long nb = lmod(mpz_class(b) + 3 * t, ell);
            return nb != 0 ? 2 : 3;
        };
        long max_mult = 0;
        long which = -1;
        for (long t : roots) {
            long mt = mult_of(t);
            if (mt > max_mult) {
                max_mult = mt;
                which = t;
            }
        }
        if (roots.empty() || max_mult == 1) {
            // distinct roots: I0*
            return {"I0*", 1 + static_cast<long>(roots.size()), n};
        }
        if (max_mult == 2) {
            // I_nu* chain
            m.transform(ell * which, 0, 0);
            long q = 2;
            while (true) {
                // Y^2 + a3,q Y - a6,2q
                long alpha = lmod(m.a3 / pow_mpz(ell, q), ell);
                long gamma = lmod(-(m.a6 / pow_mpz(ell, 2 * q)), ell);
                bool sep;
                long r2 = quadratic_roots(1, alpha, gamma, ell, sep);
                if (sep) {
                    long nu = 2 * q - 3;
                    return {"I" + std::to_string(nu) + "*", r2 == 2 ? 4L : 2L, n};
                }
                long y0 = quadratic_double_root(1, alpha, gamma, ell);
                m.transform(0, 0, y0 * pow_mpz(ell, q).get_si());
                // a2,1 X^2 + a4,q+1 X + a6,2q+1
                long A = lmod(m.a2 / ell, ell);
                long B = lmod(m.a4 / pow_mpz(ell, q + 1), ell);
                long C = lmod(m.a6 / pow_mpz(ell, 2 * q + 1), ell);
                long r3 = quadratic_roots(A, B, C, ell, sep);
                if (sep) {
                    long nu = 2 * q - 2;
                    return {"I" + std::to_string(nu) + "*", r3 == 2 ? 4L : 2L, n};
                }
                long x0 = quadratic_double_root(A, B, C, ell);
                m.transform(x0 * pow_mpz(ell, q).get_si(), 0, 0);
                ++q;
                if (q > 40) throw validation_error("runaway I_n* chain");
            }
        }
        // triple root: move to origin
        m.transform(ell * which, 0, 0);
        // Y^2 + a3,2 Y - a6,4
        {
            long alpha = lmod(m.a3 / (ell * ell), ell);
            long gamma = lmod(-(m.a6 / pow_mpz(ell, 4)), ell);
            bool sep;
            long r2 = quadratic_roots(1, alpha, gamma, ell, sep);
            if (sep) return {"IV*", r2 == 2 ? 3L : 1L, n};
            long y0 = quadratic_double_root(1, alpha, gamma, ell);
            m.transform(0, 0, y0 * ell * ell);
        }
        if (vml(m.a4, ell) < 4) return {"III*", 2, n};
        if (vml(m.a6, ell) < 6) return {"II*", 1, n};
        // non-minimal: scale and restart
        m.scale_down(ell);
    }
    throw validation_error("Tate's algorithm did not terminate");
}

long tamagawa(const WeierstrassCurve& E, long ell) {
    mpz_class dz(E.discriminant());
    if (dz % ell != 0) return 1;
    return tate_local_data(E, ell).tamagawa;
}

std::vector<long> bad_primes(const WeierstrassCurve& E) {
    std::vector<long> out;
    for (auto& [q, e] : factor_integer(mpz_class(E.discriminant()))) {
        if (!q.fits_slong_p()) throw precision_error("bad prime too large: " + q.get_str());
        out.push_back(q.get_si());
    }
    return out;
}

long tamagawa_lcm(const WeierstrassCurve& E,
                  const std::vector<std::pair<long, long>>& overrides) {
    long m0 = 1;
    for (long ell : bad_primes(E)) {
        long c = 0;
        for (auto& [l, cv] : overrides)
            if (l == ell) c = cv;
        if (c == 0) c = tamagawa(E, ell);
        m0 = std::lcm(m0, c);
    }
    return m0;
}

// --------------------------------------------------------------------------
// model maps

CurvePoint ModelMap::forward(const CurvePoint& P) const {
    if (P.infinity) return P;
    long d = P.x.d();
    auto Q = [&](const mpq_class& q) { return QuadElement::from_rational(d, q); };
    QuadElement u2 = Q(u * u), u3 = Q(u * u * u);
    QuadElement xp = (P.x - Q(r)) / u2;
    QuadElement yp = (P.y - Q(s) * (P.x - Q(r)) - Q(t)) / u3;
    return {xp, yp};
}

CurvePoint ModelMap::backward(const CurvePoint& P) const {
    if (P.infinity) return P;
    long d = P.x.d();
    auto Q = [&](const mpq_class& q) { return QuadElement::from_rational(d, q); };
    QuadElement x = Q(u * u) * P.x + Q(r);
    QuadElement y = Q(u * u * u) * P.y + Q(s * u * u) * P.x + Q(t);
    return {x, y};
}

WeierstrassCurve transformed(const WeierstrassCurve& E, const ModelMap& m) {
    const mpq_class &u = m.u, &r = m.r, &s = m.s, &t = m.t;
    if (u == 0) throw validation_error("model map with u = 0");
    mpq_class a1 = (E.a1() + 2 * s) / u;
    mpq_class a2 = (E.a2() - s * E.a1() + 3 * r - s * s) / (u * u);
    mpq_class a3 = (E.a3() + r * E.a1() + 2 * t) / (u * u * u);
    mpq_class a4 = (E.a4() - s * E.a3() + 2 * r * E.a2() - (t + r * s) * E.a1() + 3 * r * r -
                    2 * s * t) /
                   (u * u * u * u);
    mpq_class a6 = (E.a6() + r * E.a4() + r * r * E.a2() + r * r * r - t * E.a3() - t * t -
                    r * t * E.a1()) /
                   (u * u * u * u * u * u);
    return WeierstrassCurve({a1, a2, a3, a4, a6});
}

ShortModel short_model(const WeierstrassCurve& E) {
    // x = u^2 x' + r, y = u^3 y' + s u^2 x' + t with u = 1/6 carries E to
    // y'^2 = x'^3 - 27 c4 x' - 54 c6
    ModelMap m{mpq_class(1, 6), -E.b2() / 12, -E.a1() / 2,
               E.a1() * E.b2() / 24 - E.a3() / 2};
    WeierstrassCurve sh = transformed(E, m);
    assert(sh.a1() == 0 && sh.a2() == 0 && sh.a3() == 0);
    assert(sh.a4() == -27 * E.c4() && sh.a6() == -54 * E.c6());
    return {sh, m};
}

CurvePoint twist_transfer(const WeierstrassCurve& E, long d_input, const mpq_class& x0,
                          const mpq_class& y0) {
    if (d_input >= 0) throw validation_error("twist requires d < 0");
    QuadField K(d_input);
    ShortModel sm = short_model(E);
    mpq_class A = sm.curve.a4(), B = sm.curve.a6();
    mpq_class dd(d_input);
    // y0^2 = x0^3 + A d^2 x0 + B d^3
    if (y0 * y0 != x0 * x0 * x0 + A * dd * dd * x0 + B * dd * dd * dd)
        throw validation_error("point is not on the twist model");
    long d = K.d();
    // (x0/d, y0 sqrt(d)/d^2) on the short model of E
    QuadElement X = QuadElement::from_rational(d, x0 / dd);
    QuadElement Y(d, 0, y0 * K.sqrt_scale() / (dd * dd));
    CurvePoint S_short{X, Y};
    if (!on_curve(sm.curve, S_short))
        throw validation_error("twist transfer landed off the curve (internal)");
    CurvePoint S = sm.map.backward(S_short);
    if (!on_curve(E, S)) throw validation_error("twist transfer landed off the curve (internal)");
    // minus eigenspace: conj(S) = -S exactly
    if (!(conj_point(S) == neg(E, S)))
        throw validation_error("twist point is not in the minus eigenspace");
    return S;
}

std::pair<mpq_class, mpq_class> twist_preimage(const WeierstrassCurve& E, long d_input,
                                               const CurvePoint& S) {
    QuadField K(d_input);
    ShortModel sm = short_model(E);
    CurvePoint Ssh = sm.map.forward(S);
    if (!Ssh.x.is_rational() || Ssh.y.a() != 0)
        throw validation_error("point is not in the minus eigenspace");
    mpq_class dd(d_input);
    mpq_class x0 = Ssh.x.a() * dd;
    mpq_class y0 = Ssh.y.b() * dd * dd / K.sqrt_scale();
    return {x0, y0};
}

std::vector<std::pair<mpq_class, mpq_class>> naive_search(const mpz_class& A,
                                                          const mpz_class& B, long bound) {
    std::vector<std::pair<mpq_class, mpq_class>> out;
    for (long e = 1; e <= bound; ++e) {
        mpz_class e2 = mpz_class(e) * e;
        mpz_class e4 = e2 * e2, e6 = e4 * e2, e3 = e2 * e;
        for (long mm = -bound; mm <= bound; ++mm) {
            if (std::gcd(std::abs(mm), e) != 1) continue;
            mpz_class m(mm);
            mpz_class t = m * m * m + A * m * e4 + B * e6;
            if (t < 0) continue;
            if (mpz_perfect_square_p(t.get_mpz_t())) {
                mpz_class y;
                mpz_sqrt(y.get_mpz_t(), t.get_mpz_t());
                out.emplace_back(mpq_class(m, e2), mpq_class(y, e3));
            }
        }
    }
    return out;
}

}  // namespace shadowline
