#include "doctest.h"
#include "shadowline/curve.hpp"
#include "shadowline/errors.hpp"

using namespace shadowline;

namespace {

WeierstrassCurve e389() { return WeierstrassCurve({0, 1, 1, -2, 0}, "389.a1"); }

CurvePoint s11(const WeierstrassCurve& E) {
    return twist_transfer(E, -11, mpq_class(-231), mpq_class(3267));
}

}  // namespace

TEST_SUITE_BEGIN("curve");

TEST_CASE("invariants of 389.a1") {
    auto E = e389();
    CHECK(E.b2() == 4);
    CHECK(E.b4() == -4);
    CHECK(E.b6() == 1);
    CHECK(E.c4() == 112);
    CHECK(E.c6() == -856);
    CHECK(E.discriminant() == 389);
    CHECK(E.c4() * E.c4() * E.c4() - E.c6() * E.c6() == 1728 * E.discriminant());
    CHECK(E.is_integral());
    CHECK(E.minimality_warnings().empty());
}

TEST_CASE("group law reproduces the worked sums") {
    auto E = e389();
    long d = -11;
    auto P1 = CurvePoint::rational(d, -1, 1);
    auto P2 = CurvePoint::rational(d, 0, 0);
    auto S = s11(E);
    CHECK(on_curve(E, S));
    CHECK(S.x == QuadElement(d, mpq_class(1, 4), 0));
    CHECK(S.y == QuadElement(d, mpq_class(-1, 2), mpq_class(1, 8)));

    auto A2 = add(E, P2, S);
    CHECK(A2.x == QuadElement(d, 0, -2));
    CHECK(A2.y == QuadElement(d, -12, -4));
    auto A1 = add(E, P1, S);
    CHECK(A1.x == QuadElement(d, mpq_class(27, 25), mpq_class(-6, 25)));
    CHECK(A1.y == QuadElement(d, mpq_class(29, 125), mpq_class(-62, 125)));

    CHECK(add(E, P1, CurvePoint::at_infinity()) == P1);
    CHECK(add(E, A1, neg(E, A1)).infinity);

    // associativity and conjugation-compatibility spot checks
    std::vector<CurvePoint> pts{P1, P2, S, A1, A2, conj_point(A1), mul(E, 2, S)};
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            auto l = add(E, add(E, pts[i], pts[j]), pts[(i + j) % pts.size()]);
            auto r = add(E, pts[i], add(E, pts[j], pts[(i + j) % pts.size()]));
            CHECK(l == r);
            CHECK(conj_point(add(E, pts[i], pts[j])) ==
                  add(E, conj_point(pts[i]), conj_point(pts[j])));
        }
    // mul commutes with conj
    CHECK(conj_point(mul(E, 7, A1)) == mul(E, 7, conj_point(A1)));
}

TEST_CASE("division polynomial evaluation") {
    auto E = e389();
    auto P1 = CurvePoint::rational(-11, -1, 1);
    CHECK(division_poly_eval(E, 1, P1) == QuadElement::from_rational(-11, 1));
    CHECK(division_poly_eval(E, 2, P1) == QuadElement::from_rational(-11, 3));
    CHECK_THROWS_AS(division_poly_eval(E, 2, CurvePoint::at_infinity()), validation_error);

    // x(nP) denominator ideal = (psi_n(P))^2 for an integral point
    auto P2 = CurvePoint::rational(-11, 0, 0);
    for (long n = 2; n <= 5; ++n) {
        auto psi = division_poly_eval(E, n, P2);
        auto nP = mul(E, n, P2);
        auto del = denominator_ideal(nP.x);
        CHECK(del == QuadIdeal::principal(psi * psi));
    }
}

TEST_CASE("reduction data") {
    auto E = e389();
    auto rd = reduction_data(E, 5);
    CHECK(rd.count == 9);
    CHECK(rd.a_p == -3);
    CHECK(rd.ordinary);
    auto rd7 = reduction_data(E, 7);
    CHECK(rd7.ordinary);
    // Hasse bound over a spread of primes
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        auto r = reduction_data(E, p);
        CHECK(mpz_class(r.a_p) * r.a_p <= 4 * mpz_class(p));
    }
    CHECK_THROWS_AS(reduction_data(E, 389), validation_error);
    // Lagrange: #E(F_5) = 9 kills every reduced point; 9*P1 acquires a pole at 5
    auto nine = mul(E, 9, CurvePoint::rational(-11, -1, 1));
    CHECK(mpz_class(nine.x.a().get_den()) % 5 == 0);
}

TEST_CASE("tamagawa numbers") {
    CHECK(tamagawa(e389(), 389) == 1);
    CHECK(tamagawa(e389(), 7) == 1);  // good prime
    CHECK(tamagawa_lcm(e389()) == 1);
    CHECK(tate_local_data(e389(), 389).kodaira == "I1");

    WeierstrassCurve e37({0, 0, 1, -1, 0}, "37.a1");
    CHECK(tamagawa(e37, 37) == 1);
    WeierstrassCurve e5077({0, 0, 1, -7, 6}, "5077.a1");
    CHECK(tamagawa(e5077, 5077) == 1);
    WeierstrassCurve e11({0, -1, 1, -10, -20}, "11.a2");
    CHECK(tate_local_data(e11, 11).kodaira == "I5");
    CHECK(tamagawa(e11, 11) == 5);
    WeierstrassCurve e49({1, -1, 0, -2, -1}, "49.a1");
    auto ld49 = tate_local_data(e49, 7);
    CHECK(ld49.kodaira == "III");
    CHECK(ld49.tamagawa == 2);

    // override table short-circuits the computation
    CHECK(tamagawa_lcm(e389(), {{389, 1}}) == 1);
}

TEST_CASE("multiplicative tamagawa agrees with the -c6 square test") {
    // split multiplicative reduction at ell <=> -c6 is a square in F_ell
    std::vector<WeierstrassCurve> curves{
        WeierstrassCurve({0, -1, 1, -10, -20}, "11.a2"),
        WeierstrassCurve({1, 0, 1, 4, -6}, "14.a"),
        WeierstrassCurve({1, 1, 1, -10, -10}, "15.a"),
        WeierstrassCurve({0, 1, 0, 4, 4}, "20.a"),
        WeierstrassCurve({0, 0, 1, -1, 0}, "37.a1"),
        e389(),
    };
    for (auto& E : curves) {
        for (long ell : bad_primes(E)) {
            mpz_class c4z(E.c4());
            if (c4z % ell == 0) continue;  // additive
            long n = 0;
            mpz_class D(E.discriminant());
            while (D % ell == 0) {
                D /= ell;
                ++n;
            }
            mpz_class mc6 = -mpz_class(E.c6());
            bool split;
            if (ell == 2) {
                split = ((mc6 % 8) + 8) % 8 == 1;
            } else {
                mpz_class lz(ell);
                mpz_class r = ((mc6 % lz) + lz) % lz;
                split = r != 0 && mpz_legendre(r.get_mpz_t(), lz.get_mpz_t()) == 1;
            }
            long want = split ? n : (n % 2 == 0 ? 2 : 1);
            CHECK_MESSAGE(tamagawa(E, ell) == want, E.label(), " at ", ell);
        }
    }
}

TEST_CASE("tamagawa is invariant under model transformations") {
    // integral coordinate changes, including non-minimal rescalings that
    // force the restart branch
    auto E = e389();
    std::vector<ModelMap> maps{
        {mpq_class(1), 2, -1, 3},
        {mpq_class(1), -4, 2, 7},
        {mpq_class(1, 2), 0, 0, 0},   // scales a_i by 2^i
        {mpq_class(1, 3), 1, 1, 1},
        {mpq_class(1, 6), 0, 1, -2},
    };
    std::vector<WeierstrassCurve> curves{e389(), WeierstrassCurve({1, 0, 1, 4, -6}, "14.a"),
                                         WeierstrassCurve({0, 1, 0, 4, 4}, "20.a")};
    for (auto& E0 : curves) {
        for (auto& m : maps) {
            auto Et = transformed(E0, m);
            REQUIRE(Et.is_integral());
            for (long ell : {2L, 3L, 5L, 7L}) {
                mpz_class D0(E0.discriminant());
                CHECK(tamagawa(Et, ell) == tamagawa(E0, ell));
            }
        }
        (void)E;
    }
}

TEST_CASE("I0* twist") {
    // quadratic twist of 389.a1 by 5 on the scaled short model: additive at 5
    auto E = e389();
    mpq_class A = -27 * E.c4(), B = -54 * E.c6();
    long dt = 5;
    WeierstrassCurve tw({0, 0, 0, A * dt * dt, B * dt * dt * dt});
    auto ld = tate_local_data(tw, 5);
    CHECK(ld.kodaira == "I0*");
    // cubic T^3 + A T + B mod 5 has no roots -> c = 1
    CHECK(ld.tamagawa == 1);
}

TEST_CASE("model maps") {
    auto E = e389();
    auto sm = short_model(E);
    CHECK(sm.curve.a4() == -27 * E.c4());
    CHECK(sm.curve.a6() == -54 * E.c6());
    auto S = s11(E);
    for (auto& P : {CurvePoint::rational(-11, -1, 1), S, add(E, S, CurvePoint::rational(-11, 0, 0))}) {
        auto Q = sm.map.forward(P);
        CHECK(on_curve(sm.curve, Q));
        CHECK(sm.map.backward(Q) == P);
    }
}

TEST_CASE("twist transfer") {
    auto E = e389();
    auto S = s11(E);
    CHECK(S.x == QuadElement(-11, mpq_class(1, 4), 0));
    auto S24 = twist_transfer(E, -24, mpq_class(-720), mpq_class(15552));
    CHECK(S24.x == QuadElement(-6, mpq_class(1, 2), 0));
    CHECK(S24.y == QuadElement(-6, mpq_class(-1, 2), mpq_class(1, 4)));
    // minus eigenspace by construction
    CHECK(conj_point(S24) == neg(E, S24));
    CHECK_THROWS_AS(twist_transfer(E, -11, mpq_class(1), mpq_class(1)), validation_error);
    CHECK_THROWS_AS(twist_transfer(E, 1, mpq_class(-231), mpq_class(3267)), validation_error);
    // round trip through the preimage
    auto [x0, y0] = twist_preimage(E, -11, S);
    CHECK(x0 == -231);
    CHECK((y0 == 3267 || y0 == -3267));
}

TEST_CASE("naive search") {
    auto E = e389();
    mpz_class A(-27 * mpz_class(E.c4())), B(-54 * mpz_class(E.c6()));
    auto pts = naive_search(A, B, 25);
    // images of (0,0) and (-1,1) on the short model
    bool has12 = false, has24 = false;
    for (auto& [x, y] : pts) {
        if (x == 12) has12 = true;
        if (x == -24) has24 = true;
    }
    CHECK(has12);
    CHECK(has24);
    CHECK(naive_search(A, B, 0).empty());
    // preimage of the d = -11 twist point
    mpz_class A11 = A * 121, B11 = B * -1331;
    auto tw = naive_search(A11, B11, 240);
    bool found = false;
    for (auto& [x, y] : tw)
        if (x == -231 && y == 3267) found = true;
    CHECK(found);
}

TEST_CASE("torsion detection") {
    auto E = e389();
    CHECK(is_torsion(E, CurvePoint::at_infinity()));
    CHECK(!is_torsion(E, CurvePoint::rational(-11, 0, 0)));
    CHECK(!is_torsion(E, s11(E)));
    WeierstrassCurve e11({0, -1, 1, -10, -20}, "11.a2");
    CHECK(is_torsion(e11, CurvePoint::rational(-11, 5, 5)));
}

TEST_SUITE_END();
