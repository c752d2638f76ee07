#include "shadowline/padic.hpp"

#include <cassert>
#include <sstream>

#include "shadowline/errors.hpp"

namespace shadowline {

mpz_class pow_mpz(long base, long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

namespace {

long val_mpz(const mpz_class& z, long p) {
    assert(z != 0);
    mpz_class q = z;
    long v = 0;
    while (q % p == 0) {
        q /= p;
        ++v;
    }
    return v;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw precision_error("modular inverse does not exist");
    return r;
}

}  // namespace

void PadicNumber::canonicalize() {
    if (zero_) {
        val_ = 0;
        unit_ = 0;
        return;
    }
    if (val_ >= prec_) {
        zero_ = true;
        val_ = 0;
        unit_ = 0;
        return;
    }
    mpz_class m = pow_mpz(p_, prec_ - val_);
    unit_ = ((unit_ % m) + m) % m;
    if (unit_ == 0) {
        zero_ = true;
        val_ = 0;
        return;
    }
    if (unit_ % p_ == 0) {
        long extra = val_mpz(unit_, p_);
        val_ += extra;
        if (val_ >= prec_) {
            zero_ = true;
            val_ = 0;
            unit_ = 0;
            return;
        }
        mpz_class pe = pow_mpz(p_, extra);
        unit_ /= pe;
    }
}

PadicNumber PadicNumber::zero(long p, long abs_prec) {
    PadicNumber x;
    x.p_ = p;
    x.zero_ = true;
    x.prec_ = abs_prec;
    return x;
}

PadicNumber PadicNumber::make(long p, long valuation, mpz_class unit, long abs_prec) {
    PadicNumber x;
    x.p_ = p;
    x.zero_ = false;
    x.val_ = valuation;
    x.unit_ = std::move(unit);
    x.prec_ = abs_prec;
    x.canonicalize();
    return x;
}

PadicNumber PadicNumber::from_integer(long p, const mpz_class& z, long abs_prec) {
    if (z == 0) return zero(p, abs_prec);
    return make(p, 0, z, abs_prec);
}

PadicNumber PadicNumber::from_rational(long p, const mpq_class& q, long abs_prec) {
    if (q == 0) return zero(p, abs_prec);
    mpz_class num = q.get_num(), den = q.get_den();
    long vd = 0;
    while (den % p == 0) {
        den /= p;
        ++vd;
    }
    long vn = 0;
    while (num % p == 0) {
        num /= p;
        ++vn;
    }
    long v = vn - vd;
    mpz_class m = pow_mpz(p, abs_prec - v);
    mpz_class u = num % m * inv_mod(den, m) % m;
    return make(p, v, u, abs_prec);
}

long PadicNumber::valuation() const {
    if (zero_) throw precision_error("valuation of zero at O(p^" + std::to_string(prec_) + ")");
    return val_;
}

const mpz_class& PadicNumber::unit() const {
    if (zero_) throw precision_error("unit part of zero at tracked precision");
    return unit_;
}

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    return make(p_, val_, -unit_, prec_);
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    if (p_ != o.p_) throw validation_error("prime mismatch in p-adic arithmetic");
    long n = std::min(prec_, o.prec_);
    if (zero_ && o.zero_) return zero(p_, n);
    if (zero_) return o.capped(n);
    if (o.zero_) return capped(n);
    long v0 = std::min(val_, o.val_);
    mpz_class s = unit_ * pow_mpz(p_, val_ - v0) + o.unit_ * pow_mpz(p_, o.val_ - v0);
    return make(p_, v0, s, n);
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const { return *this + (-o); }

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    if (p_ != o.p_) throw validation_error("prime mismatch in p-adic arithmetic");
    if (zero_ && o.zero_) return zero(p_, prec_ + o.prec_);
    if (zero_) return zero(p_, prec_ + o.val_);
    if (o.zero_) return zero(p_, o.prec_ + val_);
    long n = std::min(prec_ + o.val_, o.prec_ + val_);
    return make(p_, val_ + o.val_, unit_ * o.unit_, n);
}

PadicNumber PadicNumber::inverse() const {
    if (zero_) throw precision_error("division by a value indistinguishable from zero");
    long unit_prec = prec_ - val_;
    mpz_class m = pow_mpz(p_, unit_prec);
    return make(p_, -val_, inv_mod(unit_, m), prec_ - 2 * val_);
}

PadicNumber PadicNumber::operator/(const PadicNumber& o) const {
    return *this * o.inverse();
}

PadicNumber PadicNumber::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    if (k == 0) return from_integer(p_, 1, zero_ ? prec_ : prec_ - val_);
    PadicNumber base = *this;
    PadicNumber r = base;
    --k;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

PadicNumber PadicNumber::capped(long abs_prec) const {
    if (abs_prec > prec_)
        throw precision_error("cannot raise absolute precision");
    if (zero_) return zero(p_, abs_prec);
    return make(p_, val_, unit_, abs_prec);
}

PadicNumber PadicNumber::shifted(long k) const {
    if (zero_) return zero(p_, prec_ + k);
    return make(p_, val_ + k, unit_, prec_ + k);
}

bool PadicNumber::operator==(const PadicNumber& o) const {
    if (p_ != o.p_ || prec_ != o.prec_ || zero_ != o.zero_) return false;
    if (zero_) return true;
    return val_ == o.val_ && unit_ == o.unit_;
}

bool PadicNumber::congruent_to(const PadicNumber& o, long k) const {
    if (p_ != o.p_) return false;
    if (prec_ < k || o.prec_ < k) return false;
    long v0 = 0;
    if (!zero_) v0 = std::min(v0, val_);
    if (!o.zero_) v0 = std::min(v0, o.val_);
    mpz_class a = zero_ ? mpz_class(0) : mpz_class(unit_ * pow_mpz(p_, val_ - v0));
    mpz_class b = o.zero_ ? mpz_class(0) : mpz_class(o.unit_ * pow_mpz(p_, o.val_ - v0));
    mpz_class m = pow_mpz(p_, k - v0);
    return (a - b) % m == 0;
}

std::vector<int> PadicNumber::digits() const {
    std::vector<int> out;
    if (zero_) return out;
    mpz_class x = unit_;
    for (long i = val_; i < prec_; ++i) {
        mpz_class d = x % p_;
        out.push_back(static_cast<int>(d.get_si()));
        x /= p_;
    }
    return out;
}

mpz_class PadicNumber::residue(long k) const {
    if (k > prec_) throw precision_error("residue beyond tracked precision");
    if (zero_) return 0;
    if (val_ < 0) throw precision_error("residue of a number with a pole");
    return unit_ * pow_mpz(p_, val_) % pow_mpz(p_, k);
}

std::string PadicNumber::str() const { return render(*this); }

// ---------------------------------------------------------------------------

PadicNumber iwasawa_log(const PadicNumber& x) {
    if (x.is_zero()) throw validation_error("log of zero");
    long p = x.prime();
    long K = x.precision() - x.valuation();  // unit precision
    if (K <= 0) throw precision_error("log input has no known unit digits");
    long guard = 2;
    for (long t = K; t > 0; t /= p) ++guard;
    long W = K + guard;
    mpz_class M = pow_mpz(p, W);
    mpz_class w;
    mpz_class u = x.unit() % M;
    mpz_powm_ui(w.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(p - 1), M.get_mpz_t());
    mpz_class z = (w - 1) % M;
    // sum (-1)^(k+1) z^k / k
    mpz_class total = 0, zk = 1;
    for (long k = 1; k <= W + 2; ++k) {
        zk = zk * z % M;
        if (zk == 0) break;
        mpz_class term = zk;
        long kk = k;
        while (kk % p == 0) {
            term /= p;  // v(z^k) >= k > v_p(k), exact by construction
            kk /= p;
        }
        term = term * inv_mod(kk, M) % M;
        if (k % 2 == 0) term = -term;
        total = (total + term) % M;
    }
    total = total * inv_mod(p - 1, M) % M;
    return PadicNumber::make(p, 0, total, K);
}

PadicNumber hensel_sqrt(const PadicNumber& a, long branch_residue) {
    if (a.is_zero()) throw validation_error("sqrt of zero at tracked precision");
    if (a.valuation() != 0) throw validation_error("hensel_sqrt requires a unit");
    long p = a.prime();
    long N = a.precision();
    long r = ((branch_residue % p) + p) % p;
    mpz_class a0 = a.unit() % p;
    if ((r * r - a0) % p != 0) {
        // distinguish non-residue from inconsistent branch
        bool residue = false;
        for (long t = 1; t < p; ++t)
            if ((t * t) % p == a0) residue = true;
        if (!residue)
            throw validation_error("not a quadratic residue mod p");
        throw validation_error("branch residue inconsistent with input");
    }
    if (r == 0) throw validation_error("branch residue must be a unit");
    mpz_class x = r;
    long k = 1;
    while (k < N) {
        k = std::min(2 * k, N);
        mpz_class m = pow_mpz(p, k);
        // x <- (x + a/x) / 2
        mpz_class ax = a.unit() % m * inv_mod(x % m, m) % m;
        x = (x + ax) % m * inv_mod(2, m) % m;
    }
    return PadicNumber::make(p, 0, x, N);
}

PadicNumber teichmuller(const PadicNumber& a) {
    if (a.is_zero() || a.valuation() != 0)
        throw validation_error("teichmuller requires a unit");
    long p = a.prime();
    long N = a.precision();
    mpz_class m = pow_mpz(p, N);
    mpz_class x = a.unit() % m;
    for (long i = 0; i <= N + 1; ++i) {
        mpz_class nx;
        mpz_powm_ui(nx.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), m.get_mpz_t());
        if (nx == x) break;
        x = nx;
    }
    return PadicNumber::make(p, 0, x, N);
}

std::string render(const PadicNumber& x) {
    long p = x.prime();
    std::ostringstream os;
    if (!x.is_zero()) {
        auto ds = x.digits();
        bool first = true;
        for (size_t i = 0; i < ds.size(); ++i) {
            long k = x.valuation() + static_cast<long>(i);
            int d = ds[i];
            if (d == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (k == 0) {
                os << d;
            } else {
                if (d != 1) os << d << "*";
                os << p;
                if (k != 1) os << "^" << k;
            }
        }
        if (!first) os << " + ";
    }
    os << "O(" << p << "^" << x.precision() << ")";
    return os.str();
}

PadicNumber parse_padic(long p, const std::string& s) {
    // terms separated by " + "; each is d, d*p^k, p^k, p, d*p, or O(p^N)
    long prec = 0;
    bool seen_prec = false;
    std::vector<std::pair<long, long>> terms;  // (power, digit)
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    while (i < s.size()) {
        skip_ws();
        if (s.compare(i, 2, "O(") == 0) {
            i += 2;
            size_t caret = s.find('^', i);
            size_t close = s.find(')', i);
            if (close == std::string::npos) throw validation_error("unterminated O()");
            long base = std::stol(s.substr(i, (caret == std::string::npos ? close : caret) - i));
            if (base != p) throw validation_error("prime mismatch in O() term");
            prec = caret != std::string::npos && caret < close
                       ? std::stol(s.substr(caret + 1, close - caret - 1))
                       : 1;
            seen_prec = true;
            i = close + 1;
            skip_ws();
            if (i < s.size()) throw validation_error("trailing content after O()");
            break;
        }
        size_t j = i;
        while (j < s.size() && s[j] != ' ') ++j;
        std::string tok = s.substr(i, j - i);
        i = j;
        skip_ws();
        if (i < s.size()) {
            if (s[i] != '+') throw validation_error("expected '+' in p-adic literal");
            ++i;
        }
        long digit = 1, power = 0;
        size_t star = tok.find('*');
        std::string ppart = tok;
        if (star != std::string::npos) {
            digit = std::stol(tok.substr(0, star));
            ppart = tok.substr(star + 1);
        }
        if (!ppart.empty() && ppart.find('^') == std::string::npos &&
            ppart != std::to_string(p)) {
            // bare digit term
            if (star != std::string::npos) throw validation_error("malformed term: " + tok);
            digit = std::stol(ppart);
            power = 0;
        } else {
            size_t caret = ppart.find('^');
            long base = std::stol(caret == std::string::npos ? ppart : ppart.substr(0, caret));
            if (base != p) throw validation_error("prime mismatch in term: " + tok);
            power = caret == std::string::npos ? 1 : std::stol(ppart.substr(caret + 1));
        }
        if (digit <= 0 || digit >= p) throw validation_error("digit out of range in: " + tok);
        terms.emplace_back(power, digit);
    }
    if (!seen_prec) throw validation_error("missing O(p^N) terminator");
    if (terms.empty()) return PadicNumber::zero(p, prec);
    long v = terms.front().first;
    for (auto& t : terms) v = std::min(v, t.first);
    mpz_class u = 0;
    for (auto& t : terms) u += t.second * pow_mpz(p, t.first - v);
    return PadicNumber::make(p, v, u, prec);
}

}  // namespace shadowline
