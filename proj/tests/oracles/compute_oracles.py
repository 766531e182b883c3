"""High-precision reference values frozen into the C++ unit tests.

Run with `python3 tests/oracles/compute_oracles.py`. Uses mpmath at 50 digits,
independently of the library's double-precision code paths.
"""
import itertools

import mpmath as mp

mp.mp.dps = 50


def phi(j, xi):
    xi = mp.mpf(xi)
    if xi == 0:
        return 1 / mp.factorial(j)
    return mp.nsum(lambda k: (-1) ** k * xi ** (2 * k) / mp.factorial(2 * k + j), [0, mp.inf])


def sinc(x):
    x = mp.mpf(x)
    return mp.mpf(1) if x == 0 else mp.sin(x) / x


def show(name, value):
    print(f"{name:40s} {mp.nstr(value, 20)}")


show("phi(2, 1)", phi(2, 1))
show("1 - cos(1)", 1 - mp.cos(1))
show("sinc(0.7)", sinc(mp.mpf("0.7")))
show("ERKN2 bbar1(1)", mp.mpf(1) / 2 * mp.cos(mp.mpf(1) / 2) * sinc(1))
for xi in ["1e-3", "5e-3", "0.00999", "0.01", "0.5", "3", "7.5"]:
    for j in range(4):
        show(f"phi({j}, {xi})", phi(j, mp.mpf(xi)))

# ERKN3 order-2 ratio (b1 - phi1)/xi^2 -> 1/24
xi = mp.mpf("1e-3")
show("ERKN3 (b1-phi1)/xi^2 at 1e-3", (mp.cos(xi / 2) - sinc(xi)) / xi**2)

# Paper system energy at t = 0
eps = mp.mpf(1) / 70
lam = [0, 1, 1, mp.sqrt(2), 2]  # per component (block 1 has two components)
q0 = [1, mp.mpf("0.3") * eps, mp.mpf("0.8") * eps, mp.mpf("-1.1") * eps, mp.mpf("0.7") * eps]
p0 = [mp.mpf(x) for x in ["-0.75", "0.6", "0.7", "-0.9", "0.8"]]
s = mp.mpf("0.001") * q0[0] + sum(q0[1:])
U = s**4
H = sum(p**2 for p in p0) / 2 + sum((l / eps) ** 2 * q**2 for l, q in zip(lam, q0)) / 2 + U
show("paper U(q0)", U)
show("paper H0", H)
I1 = (p0[1] ** 2 + p0[2] ** 2 + (q0[1] ** 2 + q0[2] ** 2) / eps**2) / 2
I2 = (p0[3] ** 2 + 2 * q0[3] ** 2 / eps**2) / 2
I3 = (p0[4] ** 2 + 4 * q0[4] ** 2 / eps**2) / 2
show("paper I1", I1)
show("paper I2", I2)
show("paper I3", I3)

# Non-resonance margin, brute force over |k|_1 <= 2 for lambda=(1, sqrt2, 2)
lam3 = [mp.mpf(1), mp.sqrt(2), mp.mpf(2)]
h = mp.mpf("0.01")
best = None
for k in itertools.product(range(-2, 3), repeat=3):
    if sum(abs(x) for x in k) > 2 or all(x == 0 for x in k):
        continue
    dot = sum(a * b for a, b in zip(k, lam3))
    if abs(dot) < mp.mpf("1e-30"):
        continue
    v = abs(mp.sin(h / (2 * eps) * dot)) / mp.sqrt(h)
    if best is None or v < best[0]:
        best = (v, k)
show("margin N=2 h=0.01", best[0])
print("  argmin k", best[1])
show("k=(1,-1,0) term", abs(mp.sin(mp.mpf("0.35") * (1 - mp.sqrt(2)))) / mp.mpf("0.1"))

# ERKN2 sigma = sec^2(xi/2) at the paper's xi values
for l in lam3:
    x = h * l / eps
    show(f"ERKN2 sigma xi={mp.nstr(x, 8)}", 1 / mp.cos(x / 2) ** 2)
