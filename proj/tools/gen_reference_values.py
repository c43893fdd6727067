#!/usr/bin/env python3
"""Pre-build reference-value generator.

Evaluates the frozen constants used by the C++ test suite with mpmath at
60 significant digits (series/recursion evaluation, independent of the C++
implementation).  Run manually; paste the printed literals into the tests.

    python3 tools/gen_reference_values.py
"""

import mpmath as mp

mp.mp.dps = 60


def show(label, value):
    if isinstance(value, mp.mpc):
        print(f"{label}:")
        print(f"  re = {mp.nstr(value.real, 25)}")
        print(f"  im = {mp.nstr(value.imag, 25)}")
    else:
        print(f"{label} = {mp.nstr(value, 25)}")


print("== gamma engine spot values ==")
show("gamma(0.5+1.0i)", mp.gamma(mp.mpc("0.5", "1.0")))
show("loggamma(0.5+1.0i)", mp.loggamma(mp.mpc("0.5", "1.0")))
show("gamma(2+2i)", mp.gamma(mp.mpc(2, 2)))
show("gamma(3.75)", mp.gamma(mp.mpf("3.75")))
show("gamma(0.1)", mp.gamma(mp.mpf("0.1")))
show("gamma(-1.5)", mp.gamma(mp.mpf("-1.5")))
show("loggamma(12.3+40i)", mp.loggamma(mp.mpc("12.3", "40")))

print()
print("== weighted-square norm of the unit indicator on [-1,0], a=2 rho=1 ==")
I = mp.quad(lambda x: mp.e ** (2 * mp.e**x), [-1, 0])
show("int_{-1}^{0} exp(2 e^xi) dxi", I)
show("sqrt of it", mp.sqrt(I))

print()
print("== synthesis of the tent profile on [-2,0] at z = 1 + i*pi ==")
z = mp.mpc(1, mp.pi)
seg1 = mp.quad(lambda t: (t + 2) * mp.exp(z * t), [-2, -1])
seg2 = mp.quad(lambda t: (-t) * mp.exp(z * t), [-1, 0])
val = (seg1 + seg2) / mp.sqrt(2 * mp.pi)
show("(1/sqrt(2pi)) * integral", val)

print()
print("== indicator synthesis (1/sqrt(2pi))(1-e^-1) at z=1 ==")
show("value", (1 - mp.exp(-1)) / mp.sqrt(2 * mp.pi))

print()
print("== gamma magnitude lower bound: n-independent ratio constant ==")
# bound(n,u,rho,y,p) = e^{-pu/rho} e^{-p pi |y|/2} exp{(p(n-1)/2) log(n/2) - pn/2}
# ratio = bound / |Gamma(n/2 + u/rho + iy)|^p must stay below an n-independent cap.
u, rho = mp.mpf(1), mp.mpf(1)
for p in (2, 4):
    worst = mp.mpf(0)
    for n in range(1, 41):
        for y in (0, mp.mpf("0.5"), 1, 2, 5, 10):
            b = mp.exp(-p * u / rho) * mp.exp(-p * mp.pi * abs(y) / 2) * mp.exp(
                (p * (n - 1) / mp.mpf(2)) * mp.log(n / mp.mpf(2)) - p * n / mp.mpf(2)
            )
            g = abs(mp.gamma(n / mp.mpf(2) + u / rho + 1j * y)) ** p
            worst = max(worst, b / g)
    show(f"max ratio over n=1..40, y grid, p={p}", worst)

print()
print("== truncated squared norms of the oscillatory family h(kz) ==")
# On the line Re z = n/2 the modulus is 1/|1+k z|, so the truncated line integral
# int_{-Y}^{Y} dy / ((1+k n/2)^2 + k^2 y^2) = (2/(k(1+kn/2))) atan(kY/(1+kn/2)).
Y = mp.mpf(200)
for k in (1, 2, 4, 8, 16):
    total = mp.mpf(0)
    for n in range(0, 41):
        c = 1 + k * n / mp.mpf(2)
        total += (
            (mp.mpf(2) ** n / mp.factorial(n))
            * (2 / (k * c))
            * mp.atan(k * Y / c)
        )
    show(f"norm_sq k={k} (N=40, Y=200)", total)

print()
print("== projection series, n=0 term at w=1, a=2, rho=1, p=2 ==")
# (1/(2pi)) * int |K_1(iy)|^2 dy ; |K_1(iy)|^2 = (1/(4pi^2)) 4^{-1} |Gamma(1+iy)|^2
# and int |Gamma(1+iy)|^2 dy = int pi y / sinh(pi y) dy = pi/2  =>  1/(64 pi^2).
t0 = mp.quad(lambda y: mp.pi * y / mp.sinh(mp.pi * y), [-mp.inf, mp.inf])
show("int pi y/sinh(pi y) dy (expect pi/2)", t0)
show("term_0 = 1/(64 pi^2)", 1 / (64 * mp.pi**2))

print()
print("== kernel diagonal K(1,1), a=2 rho=1 (expect 1/(8 pi)) ==")
show("1/(8 pi)", 1 / (8 * mp.pi))
show("kernel at z=w=1+0.7i", (1 / (2 * mp.pi)) * mp.mpf(2) ** (-mp.mpc(2, 0)) * mp.gamma(mp.mpc(2, 0)))
zw = mp.mpc("1.3", "0.4") + mp.conj(mp.mpc("0.6", "-1.1"))
show("kernel_M(1.3+0.4i, 0.6-1.1i), a=2 rho=1",
     (1 / (2 * mp.pi)) * mp.exp(-zw * mp.log(2)) * mp.gamma(zw))
zw3 = (mp.mpc("2.0", "1.0") + mp.conj(mp.mpc("0.5", "0.25"))) / mp.mpf("1.5")
show("kernel_M(2+1i, 0.5+0.25i), a=0.7 rho=1.5",
     (1 / (2 * mp.pi * mp.mpf("1.5"))) * mp.exp(-zw3 * mp.log(mp.mpf("0.7"))) * mp.gamma(zw3))

print()
print("== harmonic ratio H_1000 / log 1000 ==")
H = mp.nsum(lambda j: 1 / j, [1, 1000])
show("H_1000/log(1000)", H / mp.log(1000))

print()
print("== Mellin transform of truncated e^{-t} (grid effects excluded) ==")
for zz in (1, 3):
    exact = mp.gamma(zz) / mp.sqrt(2 * mp.pi)
    trunc = mp.quad(lambda t: mp.exp(-t) * t ** (zz - 1), [mp.mpf("1e-6"), 40]) / mp.sqrt(2 * mp.pi)
    show(f"Gamma({zz})/sqrt(2pi)", exact)
    show(f"truncated integral z={zz}", trunc)
    show(f"  rel trunc err", abs(trunc - exact) / abs(exact))

print()
print("== zen weights ==")
show("log(2)/2 and its sqrt", mp.mpc(mp.log(2) / 2, 0))
show("sqrt(log(2)/2)", mp.sqrt(mp.log(2) / 2))
