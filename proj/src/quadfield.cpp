#include "shadowline/quadfield.hpp"

#include <algorithm>
#include <numeric>
#include <cassert>
#include <sstream>

#include "shadowline/errors.hpp"

namespace shadowline {

namespace {

long squarefree_core(long n, long& scale) {
    scale = 1;
    long sign = n < 0 ? -1 : 1;
    long m = std::abs(n);
    for (long f = 2; f * f <= m; ++f) {
        while (m % (f * f) == 0) {
            m /= f * f;
            scale *= f;
        }
    }
    return sign * m;
}

mpz_class round_div(const mpz_class& num, const mpz_class& den) {
    // nearest integer to num/den, den > 0
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) ++q;
    return q;
}

}  // namespace

QuadField::QuadField(long d_input) : d_input_(d_input) {
    if (d_input >= 0) throw validation_error("field must be imaginary: d < 0");
    d_ = squarefree_core(d_input, scale_);
    disc_ = (d_ % 4 == -3) ? d_ : 4 * d_;
}

long QuadField::class_number() const { return shadowline::class_number(disc_); }

// --------------------------------------------------------------------------
// QuadElement

QuadElement::QuadElement(long d, mpq_class a, mpq_class b)
    : d_(d), a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
}

QuadElement QuadElement::from_rational(long d, const mpq_class& a) { return {d, a, 0}; }

QuadElement QuadElement::sqrt_d(long d) { return {d, 0, 1}; }

QuadElement QuadElement::from_omega_coords(long d, const mpz_class& x, const mpz_class& y) {
    if (d % 4 == -3) return {d, mpq_class(2 * x + y, 2), mpq_class(y, 2)};
    return {d, mpq_class(x), mpq_class(y)};
}

QuadElement QuadElement::operator+(const QuadElement& o) const {
    if (d_ != o.d_) throw validation_error("field mismatch");
    return {d_, a_ + o.a_, b_ + o.b_};
}

QuadElement QuadElement::operator-(const QuadElement& o) const { return *this + (-o); }

QuadElement QuadElement::operator-() const { return {d_, -a_, -b_}; }

QuadElement QuadElement::operator*(const QuadElement& o) const {
    if (d_ != o.d_) throw validation_error("field mismatch");
    return {d_, a_ * o.a_ + mpq_class(d_) * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
}

QuadElement QuadElement::inverse() const {
    if (is_zero()) throw validation_error("inverse of zero");
    mpq_class n = norm();
    return {d_, a_ / n, -b_ / n};
}

QuadElement QuadElement::operator/(const QuadElement& o) const { return *this * o.inverse(); }

QuadElement QuadElement::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    QuadElement r = from_rational(d_, 1);
    QuadElement base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool QuadElement::operator==(const QuadElement& o) const {
    return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
}

bool QuadElement::is_integral() const {
    if (d_ % 4 == -3) {
        if (a_.get_den() > 2 || b_.get_den() > 2) return false;
        mpq_class two_a = 2 * a_, two_b = 2 * b_;
        if (two_a.get_den() != 1 || two_b.get_den() != 1) return false;
        return (two_a.get_num() - two_b.get_num()) % 2 == 0;
    }
    return a_.get_den() == 1 && b_.get_den() == 1;
}

std::pair<mpz_class, mpz_class> QuadElement::omega_coords() const {
    if (!is_integral()) throw validation_error("omega coordinates of a non-integral element");
    if (d_ % 4 == -3) {
        mpz_class y = mpz_class(2 * b_);
        mpz_class x = mpz_class(a_ - b_);
        return {x, y};
    }
    return {mpz_class(a_), mpz_class(b_)};
}

mpz_class QuadElement::denominator() const {
    mpz_class da = a_.get_den(), db = b_.get_den();
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
    if (d_ % 4 == -3) {
        // the half-integer grid is integral; try dividing the lcm by 2
        if (l % 2 == 0) {
            QuadElement t{d_, a_ * (l / 2), b_ * (l / 2)};
            if (t.is_integral()) return l / 2;
        }
    }
    return l;
}

std::string QuadElement::str() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_;
        return os.str();
    }
    if (a_ != 0) os << a_ << " + ";
    if (b_ == 1)
        os << "sqrt(" << d_ << ")";
    else
        os << b_ << "*sqrt(" << d_ << ")";
    return os.str();
}

// --------------------------------------------------------------------------
// QuadIdeal

namespace {

// omega^2 = omega_sq_lin * omega + omega_sq_const
void omega_square(long d, mpz_class& lin, mpz_class& cst) {
    if (d % 4 == -3) {
        lin = 1;
        cst = mpz_class(d - 1) / 4;
    } else {
        lin = 0;
        cst = d;
    }
}

}  // namespace

QuadIdeal QuadIdeal::from_generators(long d, std::vector<std::pair<mpz_class, mpz_class>> gens) {
    // fold to HNF [a, b + c*omega]
    mpz_class c = 0, bx = 0;
    std::vector<mpz_class> xs;  // pure-integer parts collected along the way
    for (auto& [x, y] : gens) {
        if (y == 0) {
            if (x != 0) xs.push_back(x);
            continue;
        }
        if (c == 0) {
            c = y;
            bx = x;
            if (c < 0) {
                c = -c;
                bx = -bx;
            }
            continue;
        }
        mpz_class g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t(), y.get_mpz_t());
        // complementary combination has zero omega part
        mpz_class x0 = (y / g) * bx - (c / g) * x;
        if (x0 != 0) xs.push_back(x0);
        bx = u * bx + v * x;
        c = g;
    }
    if (c == 0) throw validation_error("ideal generators do not span a full-rank module");
    mpz_class a = 0;
    for (auto& x : xs) mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
    if (a == 0) throw validation_error("ideal generators do not span a full-rank module");
    if (a < 0) a = -a;
    mpz_class b;
    mpz_fdiv_r(b.get_mpz_t(), bx.get_mpz_t(), a.get_mpz_t());
    if (a % c != 0 || b % c != 0)
        throw validation_error("module is not an ideal (HNF constraint violated)");
    QuadIdeal I;
    I.d_ = d;
    I.a_ = a;
    I.b_ = b;
    I.c_ = c;
    return I;
}

QuadIdeal QuadIdeal::principal(const QuadElement& g) {
    if (g.is_zero()) throw validation_error("principal ideal of zero");
    if (!g.is_integral()) throw validation_error("principal ideal requires an integral element");
    long d = g.d();
    auto [x, y] = g.omega_coords();
    mpz_class lin, cst;
    omega_square(d, lin, cst);
    // g * omega = x*omega + y*omega^2 = y*cst + (x + y*lin)*omega
    return from_generators(d, {{x, y}, {y * cst, x + y * lin}});
}

QuadIdeal QuadIdeal::unit_ideal(long d) {
    QuadIdeal I;
    I.d_ = d;
    I.a_ = 1;
    I.b_ = 0;
    I.c_ = 1;
    return I;
}

QuadIdeal QuadIdeal::operator*(const QuadIdeal& o) const {
    if (d_ != o.d_) throw validation_error("field mismatch");
    mpz_class lin, cst;
    omega_square(d_, lin, cst);
    // products of the two Z-bases
    auto mul = [&](const mpz_class& x1, const mpz_class& y1, const mpz_class& x2,
                   const mpz_class& y2) -> std::pair<mpz_class, mpz_class> {
        mpz_class yy = y1 * y2;
        return {x1 * x2 + yy * cst, x1 * y2 + y1 * x2 + yy * lin};
    };
    std::vector<std::pair<mpz_class, mpz_class>> gens;
    gens.push_back(mul(a_, 0, o.a_, 0));
    gens.push_back(mul(a_, 0, o.b_, o.c_));
    gens.push_back(mul(b_, c_, o.a_, 0));
    gens.push_back(mul(b_, c_, o.b_, o.c_));
    return from_generators(d_, std::move(gens));
}

QuadIdeal QuadIdeal::conj() const {
    // conj(b + c*omega) = (b + c*tr(omega)) - c*omega with tr = 1 or 0
    mpz_class tr = (d_ % 4 == -3) ? 1 : 0;
    std::vector<std::pair<mpz_class, mpz_class>> gens{{a_, 0}, {b_ + c_ * tr, -c_}};
    return from_generators(d_, std::move(gens));
}

QuadIdeal QuadIdeal::pow(long k) const {
    if (k < 0) throw validation_error("negative ideal power");
    QuadIdeal r = unit_ideal(d_);
    QuadIdeal base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool QuadIdeal::operator==(const QuadIdeal& o) const {
    return d_ == o.d_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
}

bool QuadIdeal::contains(const QuadElement& z) const {
    if (!z.is_integral()) return false;
    auto [x, y] = z.omega_coords();
    if (y % c_ != 0) return false;
    return (x - (y / c_) * b_) % a_ == 0;
}

bool QuadIdeal::divides(const QuadIdeal& o) const {
    // this | o <=> o subset of this
    if (o.c_ % c_ != 0) return false;
    return contains(QuadElement::from_omega_coords(d_, o.a_, 0)) &&
           contains(QuadElement::from_omega_coords(d_, o.b_, o.c_));
}

QuadIdeal QuadIdeal::divide_exact(const QuadIdeal& q) const {
    QuadIdeal num = *this * q.conj();
    mpz_class n = q.norm();
    if (num.a_ % n != 0 || num.b_ % n != 0 || num.c_ % n != 0)
        throw validation_error("ideal division is not exact");
    QuadIdeal r;
    r.d_ = d_;
    r.a_ = num.a_ / n;
    r.b_ = num.b_ / n;
    r.c_ = num.c_ / n;
    return r;
}

long QuadIdeal::ord_at(const QuadIdeal& prime) const {
    QuadIdeal cur = *this;
    long v = 0;
    while (prime.divides(cur)) {
        cur = cur.divide_exact(prime);
        ++v;
    }
    return v;
}

std::string QuadIdeal::str() const {
    std::ostringstream os;
    os << "[" << a_ << ", " << b_ << " + " << c_ << "*w]";
    return os.str();
}

// --------------------------------------------------------------------------

PrimeSplitting split_prime(const QuadField& K, long ell) {
    long d = K.d();
    mpz_class disc(K.disc());
    int kr = mpz_kronecker_ui(disc.get_mpz_t(), static_cast<unsigned long>(ell));
    mpz_class lin, cst;
    omega_square(d, lin, cst);
    auto prime_for_root = [&](long r) {
        // (ell, omega - r): Z-span of ell, ell*omega, omega - r, (omega - r)*omega
        std::vector<std::pair<mpz_class, mpz_class>> gens{
            {ell, 0}, {0, ell}, {-r, 1}, {cst, lin - r}};
        return QuadIdeal::from_generators(d, std::move(gens));
    };
    // roots of the minimal polynomial of omega mod ell
    std::vector<long> roots;
    for (long r = 0; r < ell; ++r) {
        mpz_class val = mpz_class(r) * r - (lin * r + cst);
        if (val % ell == 0) roots.push_back(r);
    }
    PrimeSplitting out;
    if (kr == 1) {
        if (roots.size() != 2) throw validation_error("split prime without two roots");
        out.type = SplitType::split;
        out.primary = prime_for_root(roots[0]);
        out.conjugate = prime_for_root(roots[1]);
    } else if (kr == -1) {
        out.type = SplitType::inert;
        out.primary = QuadIdeal::principal(QuadElement::from_rational(d, ell));
    } else {
        if (roots.size() != 1) throw validation_error("ramified prime without a double root");
        out.type = SplitType::ramified;
        out.primary = prime_for_root(roots[0]);
    }
    return out;
}

long class_number(long disc) {
    if (disc >= 0 || (disc % 4 != 0 && ((disc % 4) + 4) % 4 != 1))
        throw validation_error("not an imaginary quadratic discriminant");
    long h = 0;
    long b = (disc % 2 == 0) ? 0 : 1;
    for (; b * b <= -disc / 3 + 1; b += 2) {
        if ((b * b - disc) % 4 != 0) continue;
        long m = (b * b - disc) / 4;
        for (long a = std::max(b, 1L); a * a <= m; ++a) {
            if (m % a != 0) continue;
            long c = m / a;
            if (c < a) continue;
            long g = std::gcd(std::gcd(a, b), c);
            if (g != 1) continue;
            ++h;
            if (0 < b && b < a && a < c) ++h;  // (a, -b, c)
        }
    }
    return h;
}

QuadIdeal denominator_ideal(const QuadElement& x) {
    if (x.is_zero()) throw validation_error("denominator ideal of zero");
    long d = x.d();
    mpz_class D = x.denominator();
    if (D == 1) return QuadIdeal::unit_ideal(d);
    QuadElement num = x * QuadElement::from_rational(d, mpq_class(D));
    auto [nx, ny] = num.omega_coords();
    mpz_class lin, cst;
    omega_square(d, lin, cst);
    // G = gcd ideal of (num) and (D)
    QuadIdeal G = QuadIdeal::from_generators(
        d, {{D, 0}, {0, D}, {nx, ny}, {ny * cst, nx + ny * lin}});
    QuadIdeal DD = QuadIdeal::principal(QuadElement::from_rational(d, mpq_class(D)));
    // B = (D) * G^-1
    QuadIdeal M = DD * G.conj();
    mpz_class n = G.norm();
    if (M.a() % n != 0 || M.b() % n != 0 || M.c() % n != 0)
        throw validation_error("denominator ideal division not exact");
    return QuadIdeal::from_generators(d, {{M.a() / n, 0}, {M.b() / n, M.c() / n}});
}

QuadElement principal_generator(const QuadIdeal& I) {
    long d = I.d();
    // lattice basis in omega coordinates
    mpz_class lin, cst;
    omega_square(d, lin, cst);
    auto norm_of = [&](const mpz_class& x, const mpz_class& y) -> mpz_class {
        QuadElement e = QuadElement::from_omega_coords(d, x, y);
        mpq_class n = e.norm();
        assert(n.get_den() == 1);
        return mpz_class(n);
    };
    mpz_class x1 = I.a(), y1 = 0, x2 = I.b(), y2 = I.c();
    mpz_class n1 = norm_of(x1, y1), n2 = norm_of(x2, y2);
    if (n1 > n2) {
        std::swap(x1, x2);
        std::swap(y1, y2);
        std::swap(n1, n2);
    }
    // Lagrange-Gauss reduction
    while (true) {
        // inner product 2*B(v1,v2) = N(v1+v2) - N(v1) - N(v2)
        mpz_class ip2 = norm_of(x1 + x2, y1 + y2) - n1 - n2;
        mpz_class mu = round_div(ip2, 2 * n1);
        x2 -= mu * x1;
        y2 -= mu * y1;
        n2 = norm_of(x2, y2);
        if (n2 >= n1) break;
        std::swap(x1, x2);
        std::swap(y1, y2);
        std::swap(n1, n2);
    }
    if (n1 != I.norm())
        throw validation_error("ideal is not principal (shortest vector norm " +
                               n1.get_str() + " exceeds ideal norm " + I.norm().get_str() + ")");
    QuadElement g = QuadElement::from_omega_coords(d, x1, y1);
    // normalization: positive sqrt(d) coefficient, else positive rational
    if (g.b() < 0 || (g.b() == 0 && g.a() < 0)) g = -g;
    return g;
}

std::map<mpz_class, long> factor_integer(mpz_class n) {
    std::map<mpz_class, long> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (long f = 2; f < 100000 && mpz_class(f) * f <= n; ++f) {
        while (n % f == 0) {
            ++out[f];
            n /= f;
        }
    }
    if (n == 1) return out;
    // Pollard rho (Brent) on the cofactor
    std::vector<mpz_class> stack{n};
    gmp_randclass rnd(gmp_randinit_default);
    rnd.seed(0x5eed);
    long budget = 2000000;
    while (!stack.empty()) {
        mpz_class m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (mpz_probab_prime_p(m.get_mpz_t(), 30)) {
            ++out[m];
            continue;
        }
        bool found = false;
        for (int attempt = 0; attempt < 32 && !found; ++attempt) {
            mpz_class c = rnd.get_z_range(m - 3) + 1;
            mpz_class x = rnd.get_z_range(m - 2) + 1, y = x, g = 1;
            long it = 0;
            while (g == 1 && it < budget) {
                x = (x * x + c) % m;
                y = (y * y + c) % m;
                y = (y * y + c) % m;
                mpz_class diff = x - y;
                if (diff == 0) break;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
                ++it;
            }
            if (g != 1 && g != m) {
                stack.push_back(g);
                stack.push_back(m / g);
                found = true;
            }
        }
        if (!found)
            throw precision_error("factorization timeout on " + m.get_str());
    }
    return out;
}

std::vector<std::pair<QuadIdeal, long>> factor_ideal(const QuadIdeal& I) {
    QuadField K(I.d() >= 0 ? -1 : I.d());
    std::vector<std::pair<QuadIdeal, long>> out;
    auto nf = factor_integer(I.norm());
    for (auto& [q, e] : nf) {
        if (!q.fits_slong_p())
            throw precision_error("prime factor too large for ideal splitting: " + q.get_str());
        long ell = q.get_si();
        PrimeSplitting sp = split_prime(K, ell);
        long v1 = I.ord_at(sp.primary);
        if (v1 > 0) out.emplace_back(sp.primary, v1);
        if (sp.conjugate) {
            long v2 = I.ord_at(*sp.conjugate);
            if (v2 > 0) out.emplace_back(*sp.conjugate, v2);
        }
    }
    return out;
}

QuadElement dh_element(const QuadIdeal& delta, long h) {
    if (delta.is_unit_ideal()) return QuadElement::from_rational(delta.d(), 1);
    auto fac = factor_ideal(delta);
    QuadIdeal J = QuadIdeal::unit_ideal(delta.d());
    for (auto& [q, e] : fac) {
        if (e % 2 != 0)
            throw validation_error("denominator ideal has an odd exponent at " + q.str());
        J = J * q.pow(h * (e / 2));
    }
    return principal_generator(J);
}

// --------------------------------------------------------------------------
// Embedding

Embedding::Embedding(const QuadField& K, long p, long branch_residue, long precision)
    : K_(K), p_(p), branch_(branch_residue), prec_(precision) {
    if (p < 3) throw validation_error("p must be an odd prime");
    PrimeSplitting sp = split_prime(K, p);
    if (sp.type != SplitType::split) throw validation_error("p does not split in K");
    theta_ = hensel_sqrt(PadicNumber::from_integer(p, K.d(), precision), branch_residue);
    // omega residue
    long r_omega;
    if (K.d() % 4 == -3) {
        mpz_class r = (1 + theta_.residue(1)) % p;
        r = r * ((p + 1) / 2) % p;  // divide by 2
        r_omega = static_cast<long>(r.get_si());
    } else {
        r_omega = static_cast<long>(theta_.residue(1).get_si());
    }
    // pick pi as the split prime containing omega - r_omega
    QuadElement om = QuadElement::from_omega_coords(K.d(), 0, 1);
    QuadElement shifted = om - QuadElement::from_rational(K.d(), r_omega);
    if (sp.primary.contains(shifted)) {
        pi_ = sp.primary;
        pi_conj_ = *sp.conjugate;
    } else if (sp.conjugate->contains(shifted)) {
        pi_ = *sp.conjugate;
        pi_conj_ = sp.primary;
    } else {
        throw validation_error("branch residue inconsistent with the splitting of p");
    }
}

PadicNumber Embedding::apply(const QuadElement& x, long precision) const {
    if (x.d() != K_.d()) throw validation_error("element is not in the embedding's field");
    mpz_class D = mpz_class(x.a().get_den() * x.b().get_den());
    long vd = 0;
    while (D % p_ == 0) {
        D /= p_;
        ++vd;
    }
    long W = precision + vd + 1;
    PadicNumber th = theta_;
    if (W > theta_.precision())
        th = hensel_sqrt(PadicNumber::from_integer(p_, K_.d(), W), branch_);
    else
        th = theta_.capped(W);
    PadicNumber va = PadicNumber::from_rational(p_, x.a(), W);
    PadicNumber vb = PadicNumber::from_rational(p_, x.b(), W);
    PadicNumber r = va + vb * th;
    return r.precision() > precision ? r.capped(precision) : r;
}

PadicNumber Embedding::operator()(const QuadElement& x) const { return apply(x, prec_); }

long Embedding::ord_pi(const QuadElement& x) const {
    if (x.is_zero()) throw validation_error("ord of zero");
    PadicNumber v = apply(x, prec_);
    if (v.is_zero())
        throw precision_error("ord_pi indistinguishable from infinity at precision");
    return v.valuation();
}

Embedding Embedding::swapped() const { return Embedding(K_, p_, p_ - branch_, prec_); }

}  // namespace shadowline
