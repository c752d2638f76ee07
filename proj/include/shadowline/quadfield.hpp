#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shadowline/padic.hpp"

namespace shadowline {

/// Descriptor of K = Q(sqrt(d)).  Accepts any negative integer and reduces to
/// the squarefree core; the ring of integers is Z[omega] with
/// omega = (1+sqrt(d))/2 when d = 1 mod 4 and omega = sqrt(d) otherwise.
class QuadField {
  public:
    explicit QuadField(long d_input);

    long d_input() const { return d_input_; }
    long d() const { return d_; }          // squarefree core
    long disc() const { return disc_; }    // field discriminant
    bool omega_is_half() const { return d_ % 4 == -3; }  // d = 1 mod 4 for d < 0
    /// Multiplier s with sqrt(d_input) = s * sqrt(d).
    long sqrt_scale() const { return scale_; }

    long class_number() const;

  private:
    long d_input_, d_, disc_, scale_;
};

/// a + b*sqrt(d) with exact rational coordinates.
class QuadElement {
  public:
    QuadElement() = default;
    QuadElement(long d, mpq_class a, mpq_class b);
    static QuadElement from_rational(long d, const mpq_class& a);
    static QuadElement sqrt_d(long d);  // 0 + 1*sqrt(d)
    /// x + y*omega with integer (x, y): an integral basis element.
    static QuadElement from_omega_coords(long d, const mpz_class& x, const mpz_class& y);

    long d() const { return d_; }
    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadElement operator+(const QuadElement& o) const;
    QuadElement operator-(const QuadElement& o) const;
    QuadElement operator-() const;
    QuadElement operator*(const QuadElement& o) const;
    QuadElement operator/(const QuadElement& o) const;
    QuadElement inverse() const;
    QuadElement pow(long k) const;
    bool operator==(const QuadElement& o) const;
    bool operator!=(const QuadElement& o) const { return !(*this == o); }

    QuadElement conj() const { return {d_, a_, -b_}; }
    mpq_class norm() const { return a_ * a_ - mpq_class(d_) * b_ * b_; }
    mpq_class trace() const { return 2 * a_; }

    bool is_integral() const;
    /// (x, y) with *this = x + y*omega; requires integrality.
    std::pair<mpz_class, mpz_class> omega_coords() const;
    /// Smallest positive integer D with D * (*this) integral.
    mpz_class denominator() const;

    std::string str() const;

  private:
    long d_ = -1;
    mpq_class a_, b_;
};

/// Nonzero integral ideal in Hermite normal form [a, b + c*omega] with
/// c | a, c | b, 0 <= b < a; the norm is a*c.
class QuadIdeal {
  public:
    QuadIdeal() = default;
    /// Z-module spanned by x + y*omega columns; must have full rank.
    static QuadIdeal from_generators(long d, std::vector<std::pair<mpz_class, mpz_class>> gens);
    static QuadIdeal principal(const QuadElement& g);
    static QuadIdeal unit_ideal(long d);

    long d() const { return d_; }
    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const mpz_class& c() const { return c_; }
    mpz_class norm() const { return a_ * c_; }
    bool is_unit_ideal() const { return a_ == 1 && c_ == 1; }

    QuadIdeal operator*(const QuadIdeal& o) const;
    QuadIdeal conj() const;
    QuadIdeal pow(long k) const;
    bool operator==(const QuadIdeal& o) const;
    bool divides(const QuadIdeal& o) const;   // contains: this | o
    bool contains(const QuadElement& z) const;

    /// Exact quotient this / q for a prime q dividing this; throws otherwise.
    QuadIdeal divide_exact(const QuadIdeal& q) const;
    long ord_at(const QuadIdeal& prime) const;

    std::string str() const;

  private:
    long d_ = -1;
    mpz_class a_ = 1, b_ = 0, c_ = 1;
};

enum class SplitType { split, inert, ramified };

struct PrimeSplitting {
    SplitType type;
    QuadIdeal primary;                 // lambda
    std::optional<QuadIdeal> conjugate;  // lambda^c when split
};

/// Splitting of a rational prime by the Kronecker symbol of the discriminant.
PrimeSplitting split_prime(const QuadField& K, long ell);

/// Class number by enumeration of reduced primitive binary quadratic forms.
long class_number(long disc);

/// Denominator ideal: the smallest integral ideal B with x*B integral.
QuadIdeal denominator_ideal(const QuadElement& x);

/// Generator of a principal ideal via two-dimensional lattice reduction;
/// normalized so the sqrt(d) coefficient is positive (rational generators
/// positive).  Throws math-domain error when the ideal is not principal.
QuadElement principal_generator(const QuadIdeal& I);

/// Factorization of an integral ideal into prime ideals with exponents.
/// Factor search uses trial division then Pollard rho on the norm.
std::vector<std::pair<QuadIdeal, long>> factor_ideal(const QuadIdeal& I);

/// Generator of prod q^(h*ord_q(delta)/2) for the denominator ideal delta;
/// every exponent of delta must be even.
QuadElement dh_element(const QuadIdeal& delta, long h);

/// Integer factorization at desk scale (trial division + Pollard rho).
std::map<mpz_class, long> factor_integer(mpz_class n);

/// psi : K_pi -> Q_p for a split prime p, determined by a Hensel branch for
/// sqrt(d).  The distinguished prime pi is the one on which psi has positive
/// valuation.
class Embedding {
  public:
    Embedding(const QuadField& K, long p, long branch_residue, long precision);

    long p() const { return p_; }
    long precision() const { return prec_; }
    long branch_residue() const { return branch_; }
    const QuadField& field() const { return K_; }
    const PadicNumber& theta() const { return theta_; }  // psi(sqrt(d))
    const QuadIdeal& pi() const { return pi_; }
    const QuadIdeal& pi_conj() const { return pi_conj_; }

    PadicNumber operator()(const QuadElement& x) const;
    PadicNumber apply(const QuadElement& x, long precision) const;
    /// ord at the distinguished prime, computed through psi.
    long ord_pi(const QuadElement& x) const;
    Embedding swapped() const;  // the other branch

  private:
    QuadField K_;
    long p_, branch_, prec_;
    PadicNumber theta_;
    QuadIdeal pi_, pi_conj_;
};

}  // namespace shadowline
