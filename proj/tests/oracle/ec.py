"""Elliptic curve arithmetic over Q(sqrt d) with exact coordinates, plus
division polynomial evaluation.  Independent of the library under test."""

from fractions import Fraction
from qf import QF


class Curve:
    def __init__(self, a):
        self.a1, self.a2, self.a3, self.a4, self.a6 = [Fraction(x) for x in a]
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        self.b2 = a1 * a1 + 4 * a2
        self.b4 = 2 * a4 + a1 * a3
        self.b6 = a3 * a3 + 4 * a6
        self.b8 = (self.b2 * self.b6 - self.b4 * self.b4) / 4
        self.c4 = self.b2 * self.b2 - 24 * self.b4
        self.c6 = -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6
        self.disc = (self.c4 ** 3 - self.c6 ** 2) / 1728

    def a_list(self):
        return [self.a1, self.a2, self.a3, self.a4, self.a6]

    def on_curve(self, P):
        if P is None:
            return True
        x, y = P
        lhs = y * y + self.a1 * (x * y) + self.a3 * y
        rhs = x * x * x + self.a2 * (x * x) + self.a4 * x + self.a6
        return (lhs - rhs).is_zero()


def ec_neg(E, P):
    if P is None:
        return None
    x, y = P
    return (x, -y - E.a1 * x - E.a3)


def ec_add(E, P, Q):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    a1, a2, a3 = E.a1, E.a2, E.a3
    if (x1 - x2).is_zero():
        if (y1 + y2 + a1 * x2 + a3).is_zero():
            return None
        lam = (3 * (x1 * x1) + 2 * a2 * x1 + E.a4 - a1 * y1) / (2 * y1 + a1 * x1 + a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = lam * (x1 - x3) - y1 - a1 * x3 - a3
    return (x3, y3)


def ec_mul(E, k, P):
    if k < 0:
        return ec_mul(E, -k, ec_neg(E, P))
    R = None
    Q = P
    while k:
        if k & 1:
            R = ec_add(E, R, Q)
        Q = ec_add(E, Q, Q)
        k >>= 1
    return R


def ec_conj(P):
    if P is None:
        return None
    return (P[0].conj(), P[1].conj())


def divpoly_eval(E, n, P):
    """psi_n(P) for an affine point, standard recurrence."""
    x, y = P
    d = x.d
    one = QF(1, 0, d)
    b2, b4, b6, b8 = E.b2, E.b4, E.b6, E.b8
    memo = {}

    def psi(m):
        if m in memo:
            return memo[m]
        if m == 0:
            r = QF(0, 0, d)
        elif m == 1:
            r = one
        elif m == 2:
            r = 2 * y + E.a1 * x + E.a3
        elif m == 3:
            r = 3 * (x ** 4) + b2 * (x ** 3) + 3 * b4 * (x * x) + 3 * b6 * x + b8
        elif m == 4:
            r = psi(2) * (2 * (x ** 6) + b2 * (x ** 5) + 5 * b4 * (x ** 4)
                          + 10 * b6 * (x ** 3) + 10 * b8 * (x * x)
                          + (b2 * b8 - b4 * b6) * x + (b4 * b8 - b6 * b6))
        elif m % 2 == 1:
            k = (m - 1) // 2
            r = psi(k + 2) * psi(k) ** 3 - psi(k - 1) * psi(k + 1) ** 3
        else:
            k = m // 2
            r = psi(k) * (psi(k + 2) * psi(k - 1) ** 2 - psi(k - 2) * psi(k + 1) ** 2) / psi(2)
        memo[m] = r
        return r

    return psi(n)


# ---- reduction mod p and point orders over F_p ----

def fp_on_curve(E, p, P):
    if P is None:
        return True
    x, y = P
    a = [int(v) % p for v in (E.a1, E.a2, E.a3, E.a4, E.a6)]
    return (y * y + a[0] * x * y + a[2] * y - x ** 3 - a[1] * x * x - a[3] * x - a[4]) % p == 0


def fp_add(E, p, P, Q):
    a1, a2, a3, a4 = int(E.a1) % p, int(E.a2) % p, int(E.a3) % p, int(E.a4) % p
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if (x1 - x2) % p == 0:
        if (y1 + y2 + a1 * x2 + a3) % p == 0:
            return None
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) * pow(2 * y1 + a1 * x1 + a3, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam + a1 * lam - a2 - x1 - x2) % p
    y3 = (lam * (x1 - x3) - y1 - a1 * x3 - a3) % p
    return (x3, y3)


def fp_order(E, p, P):
    n = 1
    Q = P
    while Q is not None:
        Q = fp_add(E, p, Q, P)
        n += 1
        assert n <= 5 * p + 10
    return n


def fp_count(E, p):
    a = [int(v) % p for v in (E.a1, E.a2, E.a3, E.a4, E.a6)]
    cnt = 1
    for x in range(p):
        for y in range(p):
            if (y * y + a[0] * x * y + a[2] * y - x ** 3 - a[1] * x * x - a[3] * x - a[4]) % p == 0:
                cnt += 1
    return cnt
