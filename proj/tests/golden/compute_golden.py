#!/usr/bin/env python3
"""Arbitrary-precision evaluation of the closed-form quantities used as
frozen expected values in the C++ tests.

Everything here is computed with mpmath at 60 significant digits and then
rounded to double, independently of the C++ implementation. Re-run with
`python3 compute_golden.py` to regenerate the table printed below.
"""

import mpmath as mp

mp.mp.dps = 60


def schedule(q, eps, gamma):
    q, eps, gamma = mp.mpf(q), mp.mpf(eps), mp.mpf(gamma)
    eps_p = mp.sin(mp.pi / (2 * (q + 2))) ** 2 / 2
    theta_p = mp.asin(mp.sqrt(2 * eps_p))        # == pi / (2 (q + 2))
    T = mp.log(q * q * theta_p / mp.asin(2 * eps), q)
    gamma_i = gamma / T
    shots = mp.ceil(mp.log(2 * T / gamma) / (2 * eps_p**2))
    eps_p_i = mp.sqrt(mp.log(2 / gamma_i) / (2 * shots))
    b1 = mp.sin(mp.pi / (2 * (q + 2))) / 2
    k_max = mp.ceil(theta_p / (2 * mp.asin(2 * eps)) - mp.mpf(1) / 2)
    return dict(eps_p=eps_p, T=T, gamma_i=gamma_i, shots=int(shots),
                eps_p_i=eps_p_i, b1=b1, k_max=int(k_max))


def oracle_call_bound(q, eps, gamma):
    q, eps, gamma = mp.mpf(q), mp.mpf(eps), mp.mpf(gamma)
    s = mp.sin(mp.pi / (2 * (q + 2)))
    halfpi_term = mp.pi / (2 * (q + 2) * mp.asin(2 * eps))
    log_term = mp.log(2 * mp.sqrt(mp.e) * mp.log(q * q * halfpi_term, q) / gamma)
    return (1 / s**4) * log_term * (halfpi_term + 2) * (1 + q / (q - 1))


def iqae_reference(eps, gamma):
    eps, gamma = mp.mpf(eps), mp.mpf(gamma)
    return (50 / eps) * mp.log((2 / gamma) * mp.log(mp.pi / (4 * eps), 2))


def dump(label, value):
    print(f"{label:34s} {mp.nstr(mp.mpf(value), 17)}")


if __name__ == "__main__":
    for q in (2, 10, 20):
        s = schedule(q, "0.001", "0.05")
        print(f"-- schedule q={q}, eps=1e-3, gamma=0.05")
        for k, v in s.items():
            dump(f"  {k}", v)

    print("-- degenerate T")
    for q, eps in ((2, "0.25"), (2, "0.4"), (2, "0.45")):
        T = mp.log(mp.mpf(q) ** 2 * (mp.pi / (2 * (q + 2))) / mp.asin(2 * mp.mpf(eps)), q)
        dump(f"  T(q={q}, eps={eps})", T)

    print("-- oracle call bound")
    for q, eps in ((2, "0.001"), (2, "0.01"), (2, "0.0001"), (20, "0.0001"), (2, "0.005")):
        dump(f"  bound(q={q}, eps={eps})", oracle_call_bound(q, eps, "0.05"))
    dump("  ratio bound(1e-3)/bound(1e-2)",
         oracle_call_bound(2, "0.001", "0.05") / oracle_call_bound(2, "0.01", "0.05"))

    print("-- iqae reference")
    dump("  iqae(1e-3, 0.05)", iqae_reference("0.001", "0.05"))

    print("-- misc trig")
    dump("  sin^2(3 asin(0.3))", mp.sin(3 * mp.asin(mp.mpf("0.3"))) ** 2)
    dump("  sin^2(7 asin(0.2))", mp.sin(7 * mp.asin(mp.mpf("0.2"))) ** 2)
    dump("  sin(pi/18) - 0.1", mp.sin(mp.pi / 18) - mp.mpf("0.1"))
    dump("  sin(pi/9) - 0.1", mp.sin(mp.pi / 9) - mp.mpf("0.1"))
    dump("  floor(pi/(4 asin(0.002)) - 1/2)",
         mp.floor(mp.pi / (4 * mp.asin(mp.mpf("0.002"))) - mp.mpf("0.5")))
    dump("  (a+b)^2, a=-0.3 b=0.1913417", (mp.mpf("-0.3") + mp.mpf("0.1913417")) ** 2)
    dump("  (a-b)^2, a=-0.3 b=0.1913417", (mp.mpf("-0.3") - mp.mpf("0.1913417")) ** 2)
    print("-- depth/iteration bounds")
    for q, eps in ((2, "0.25"), (20, "0.001"), (20, "0.0015"), (20, "0.002"),
                   (20, "0.005"), (20, "0.01"), (2, "0.01"), (2, "0.0001")):
        s = schedule(q, eps, "0.05")
        print(f"  q={q} eps={eps}: k_max={s['k_max']} T={mp.nstr(s['T'], 17)} "
              f"shots={s['shots']} eps_p_i/(2 b1)={mp.nstr(s['eps_p_i'] / (2 * s['b1']), 17)}")
