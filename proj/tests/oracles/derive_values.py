"""Independent derivation of the frozen values used by the C++ tests.

Run with python3; every printed value is pasted into the tests with the
tolerance noted next to it. Uses only the standard library and mpmath so the
arithmetic shares no code with the library under test.
"""
import math

import mpmath as mp

mp.mp.dps = 40

# Heating oil property set (fuels.csv).
a_ho = mp.mpf("0.877e-7")
rho_ho, cp_ho, hv_ho, mu_ho, ts_ho = 820, 1900, 332119, 262, 533


def section(title):
    print(f"\n== {title}")


section("feedback fraction chi(K=1, D=0.15)")
D = mp.mpf("0.15")
bracket = (1 - mp.e ** (-D)) / mp.sqrt(D)
print("bracket", mp.nstr(bracket, 12), "chi", mp.nstr(bracket ** mp.mpf("0.61"), 12))

section("flame flux, default environment, D=0.15")
chi = bracket ** mp.mpf("0.61")
lead = 4 * chi / mp.pi * mp.mpf("1.2") * 1005 * mp.sqrt(D)
print("gravity_repaired", mp.nstr(lead * mp.sqrt(mp.mpf("9.81") * 293) * (1100 - 293), 12))
print("as_printed", mp.nstr(lead * mp.sqrt(293 * (1100 - 293)), 12))

section("groups: heating oil, y0=19mm, V_a=1e-5, F=2e4, T_inf=293")
y0, V, F = mp.mpf("0.019"), mp.mpf("1e-5"), mp.mpf("2e4")
lam = a_ho * rho_ho * cp_ho
dT = ts_ho - 293
q = rho_ho * hv_ho * V
phi = F - q
n_dhs = y0 * V / a_ho
n0 = F * y0 / (lam * dT)
print("lambda", mp.nstr(lam, 12))
print("N_DHS", mp.nstr(n_dhs, 15))
print("Ste", mp.nstr(cp_ho * dT / mp.mpf(hv_ho), 15))
print("Bu", mp.nstr(mu_ho * y0, 15))
print("N0", mp.nstr(n0, 15))
print("H_p", mp.nstr(F / q, 15))
print("B_F", mp.nstr(1 - F / phi, 15))
print("N_p", mp.nstr(n0 / n_dhs, 15))
print("pulse", mp.nstr(phi * a_ho / (lam * dT * V), 15))
print("t0", mp.nstr(y0 ** 2 / a_ho, 15), "tau0", mp.nstr(y0 / V, 15))
print("L0", mp.nstr(lam * dT / F, 15))

section("HBI depth")
a, V, B = mp.mpf("1e-7"), mp.mpf("1e-5"), 1
print("saturation", mp.nstr(mp.sqrt(2 * B) * a / V, 15))
t = mp.mpf(500)
print("delta(500 s)", mp.nstr(mp.sqrt(2 * (a / V) ** 2 * B * (1 - mp.e ** (-3 * V * V / a * t))), 15))

section("radiation unity, heating oil y0=2mm")
y0 = mp.mpf("0.002")
t0 = y0 ** 2 / a_ho
bu = mu_ho * y0
print("t0", mp.nstr(t0, 12), "Bu", mp.nstr(bu, 12), "t_B0", mp.nstr(t0 / bu, 12),
      "ratio", mp.nstr(90 / (t0 / bu), 12))
print("exact_084 prefactor", mp.nstr(mp.mpf("0.335") / mp.mpf("0.4"), 12))

section("conduction (tau0, N) pairs")
for tau0, n in [(1900, 1.9), (1700, 1.7), (1300, 1.5), (900, 1.3)]:
    print(tau0, n, mp.nstr(mp.mpf(tau0) * (1 - 1 / mp.mpf(str(n))), 12))

section("critical thickness a/V")
for name, a, v in [("heating_oil@0.23", "0.877e-7", "1.1e-5"), ("toluene", "1.03e-7", "1.35e-5"),
                   ("ethyl_benzene", "0.88e-7", "1.5e-5"), ("n_decane", "0.753e-7", "1.19e-5")]:
    print(name, mp.nstr(mp.mpf(a) / mp.mpf(v) * 1000, 12), "mm")

section("problem B small exponent")
print("exp(0.1)", mp.nstr(mp.e ** mp.mpf("0.1"), 12))

section("ln theta spot values")
print("ln 0.335", mp.nstr(mp.log(mp.mpf("0.335")), 12), "ln 0.432", mp.nstr(mp.log(mp.mpf("0.432")), 12))

section("semi-infinite constant-flux surface temperature")
# Theta_s = 2 g sqrt(a t / pi), g = Phi / (lambda dT)
g = mp.mpf(1000)
a = mp.mpf("1e-7")
for t in (10, 50, 100):
    print(t, mp.nstr(2 * g * mp.sqrt(a * t / mp.pi), 12))

section("Koseki wave 19 mm / 945 s")
print(mp.nstr(mp.mpf("0.019") / 945, 12), "m/s")

section("problem A with N_p-based B_B0 (theta=0.335, heating oil y0=4mm, V=1e-5, F=2e4)")
y0 = mp.mpf("0.004")
V = mp.mpf("1e-5")
F = mp.mpf("2e4")
n = y0 * V / a_ho
n_p = F * a_ho / (lam * dT * V)
A = mp.mpf("0.335") / (n_p * mp.e ** (-n))
fo = mp.log(A) / n ** 2
print("N", mp.nstr(n, 12), "N_p", mp.nstr(n_p, 12), "A", mp.nstr(A, 12), "Fo", mp.nstr(fo, 12),
      "t", mp.nstr(fo * y0 ** 2 / a_ho, 12))

section("Goodman internal generation, heating oil, t=100 s, h=10mm")
print("delta", mp.nstr(mp.sqrt(24 * a_ho * 100), 12), "t_h", mp.nstr(mp.mpf("1e-4") / a_ho / 24, 12))

if __name__ == "__main__":
    pass
