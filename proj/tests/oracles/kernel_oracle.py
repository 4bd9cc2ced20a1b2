"""Independent high-precision reference values for the polynomial kernel and
the exact engine. Uses mpmath's own hypergeometric implementations and
quadrature, not the recurrences of the library. Run to regenerate the
constants frozen in tests/test_polykernel.cpp and tests/test_exact.cpp."""
import mpmath as mp

mp.mp.dps = 40


def hermite(n, x):
    return mp.hermite(n, x)


def laguerre(n, a, x):
    return mp.laguerre(n, a, x)


def jacobi(n, a, b, x):
    return mp.jacobi(n, a, b, x)


def gegenbauer(n, l, x):
    return mp.gegenbauer(n, l, x)


def show(label, v):
    print(f"{label:50s} {mp.nstr(v, 20)}")


show("H_10(1.3)", hermite(10, mp.mpf("1.3")))
show("L_7^(2.5)(3.1)", laguerre(7, mp.mpf("2.5"), mp.mpf("3.1")))
show("P_5^(2.5,1.5)(0.3)", jacobi(5, mp.mpf("2.5"), mp.mpf("1.5"), mp.mpf("0.3")))
show("C_6^(3.5)(0.7)", gegenbauer(6, mp.mpf("3.5"), mp.mpf("0.7")))
show("C_4^(-0.3)(0.45)", gegenbauer(4, mp.mpf("-0.3"), mp.mpf("0.45")))
show("dP_4^(1,2)(0.2)", mp.diff(lambda x: jacobi(4, 1, 2, x), mp.mpf("0.2")))
show("dL_5^(0.5)(2)", mp.diff(lambda x: laguerre(5, mp.mpf("0.5"), x), 2))
show("dC_3^(1.5)(0.4)", mp.diff(lambda x: gegenbauer(3, mp.mpf("1.5"), x), mp.mpf("0.4")))
show("ln|H_150(20)|", mp.log(abs(hermite(150, 20))))
show("ln|L_200^(1e4)(9000)|", mp.log(abs(laguerre(200, 10000, 9000))))
show("ln|C_50^(1e4)(0.3)|", mp.log(abs(gegenbauer(50, 10000, mp.mpf("0.3")))))


def kappa_quad(w, p, lo, hi):
    return mp.quad(lambda x: p(x) ** 2 * w(x), [lo, 0, hi] if lo < 0 < hi else [lo, hi])


show("kappa J(2.5,1.5) n=3",
     mp.quad(lambda x: jacobi(3, 2.5, 1.5, x) ** 2 * (1 - x) ** 2.5 * (1 + x) ** 1.5, [-1, 1]))
show("kappa J(-0.6,-0.7) n=0",
     mp.quad(lambda x: (1 - x) ** mp.mpf(-0.6) * (1 + x) ** mp.mpf(-0.7), [-1, 0, 1]))
show("kappa G(-0.3) n=2",
     mp.quad(lambda x: gegenbauer(2, mp.mpf(-0.3), x) ** 2 * (1 - x * x) ** mp.mpf(-0.8), [-1, 0, 1]))
show("kappa G(-0.3) n=0", mp.quad(lambda x: (1 - x * x) ** mp.mpf(-0.8), [-1, 0, 1]))


def jmom(a, b, t):
    return mp.quad(lambda x: x ** t * (1 - x) ** a * (1 + x) ** b, [-1, 0, 1])


show("mu_3 J(2.5,1.5)", jmom(mp.mpf(2.5), mp.mpf(1.5), 3))
show("mu_4 J(0.5,0.5)", jmom(mp.mpf(0.5), mp.mpf(0.5), 4))
show("mu_7 J(-0.5,0.25)", jmom(mp.mpf(-0.5), mp.mpf(0.25), 7))
show("mu_20 J(2.5,1.5)", jmom(mp.mpf(2.5), mp.mpf(1.5), 20))
show("2F1(-2.5,4;5.5;-1)", mp.hyp2f1(-2.5, 4, 5.5, -1))
show("2F1(0.3,0.2;0.9;-1)", mp.hyp2f1(0.3, 0.2, 0.9, -1))
show("2F1(-0.5,1;1.5;-1)", mp.hyp2f1(-0.5, 1, 1.5, -1))
show("digamma(3.7)", mp.digamma(3.7))


def unw(w, p, q, pts):
    return mp.quad(lambda x: abs(p(x)) ** q * w(x), pts)


zL = [0] + [mp.findroot(lambda x: laguerre(3, 0.5, x), g) for g in (0.6, 2.6, 6.3)] + [mp.inf]
show("N_2.7 L_3^(0.5)", unw(lambda x: x ** 0.5 * mp.exp(-x), lambda x: laguerre(3, 0.5, x), mp.mpf(2.7), zL))
zH = [-mp.inf, -mp.sqrt(1.5), 0, mp.sqrt(1.5), mp.inf]
show("N_0.5 H_3", unw(lambda x: mp.exp(-x * x), lambda x: hermite(3, x), mp.mpf(0.5), zH))
zJ = [-1] + [mp.findroot(lambda x: jacobi(2, -0.5, 0.7, x), g) for g in (-0.5, 0.6)] + [1]
show("N_1.3 P_2^(-0.5,0.7)", unw(lambda x: (1 - x) ** -0.5 * (1 + x) ** 0.7, lambda x: jacobi(2, -0.5, 0.7, x),
                                 mp.mpf(1.3), zJ))
show("W_3 H_2", mp.quad(lambda x: (hermite(2, x) ** 2 * mp.exp(-x * x)) ** 3,
                        [-mp.inf, -mp.sqrt(0.5), 0, mp.sqrt(0.5), mp.inf]))
show("W_0.6 L_2^(1.5)", mp.quad(lambda x: (laguerre(2, 1.5, x) ** 2 * x ** 1.5 * mp.exp(-x)) ** 0.6,
                                [0] + [mp.findroot(lambda x: laguerre(2, 1.5, x), g) for g in (1.5, 5.5)] + [mp.inf]))
zG = [-1, -mp.sqrt(mp.mpf(1) / 6), mp.sqrt(mp.mpf(1) / 6), 1]  # roots of C_2^(2): 24x^2 - 4 = 0 -> x^2 = 1/6
show("W_1.5 C_2^(2)", mp.quad(lambda x: (gegenbauer(2, 2, x) ** 2 * (1 - x * x) ** 1.5) ** 1.5, zG))
show("W_2 P_1^(-0.3,0.2) (q*alpha=-0.6)", mp.quad(lambda x: (jacobi(1, -0.3, 0.2, x) ** 2 * (1 - x) ** -0.3 * (1 + x) ** 0.2) ** 2,
                                                    [-1, mp.findroot(lambda x: jacobi(1, -0.3, 0.2, x), 0), 1]))
show("W_2 L_0^(500)", mp.quad(lambda x: (x ** 500 * mp.exp(-x)) ** 2, [0, 400, 500, 600, mp.inf]))

# Endpoint-singular cases recomputed with error estimates and higher degree;
# tanh-sinh handles algebraic endpoint singularities but needs more levels.
print("--- singular-endpoint refinements")
for label, fn, pts in [
    ("N_1.3 P_2^(-0.5,0.7)", lambda x: abs(jacobi(2, -0.5, 0.7, x)) ** 1.3 * (1 - x) ** -0.5 * (1 + x) ** 0.7, zJ),
    ("W_2 P_1^(-0.3,0.2)", lambda x: (jacobi(1, -0.3, 0.2, x) ** 2 * (1 - x) ** -0.3 * (1 + x) ** 0.2) ** 2,
     [-1, mp.findroot(lambda x: jacobi(1, -0.3, 0.2, x), 0), 1]),
    ("mu_7 J(-0.5,0.25)", lambda x: x ** 7 * (1 - x) ** -0.5 * (1 + x) ** 0.25, [-1, 0, 1]),
]:
    v, e = mp.quad(fn, pts, error=True, maxdegree=12)
    show(label + " (err %s)" % mp.nstr(e, 3), v)
show("mu_7 J(-0.5,0.25) via 2F1 oracle",
     mp.gamma(8) * (-mp.gamma(1.25) / mp.gamma(9.25) * mp.hyp2f1(0.5, 8, 9.25, -1)
                    + mp.gamma(0.5) / mp.gamma(8.5) * mp.hyp2f1(-0.25, 8, 8.5, -1)))
