#!/usr/bin/env python3
"""Approach to the kick limit for the hydrogen 2s-2p pair.

A Gaussian pulse of area pi/2 is applied at t_k = 150 ps; as the width
shrinks against the 946 ps free-oscillation period, the time-ordered result
converges to full transfer while the two NTO pictures tell different
stories: the interaction picture depends only on dE*tau/2, the Schrodinger
picture is suppressed by free evolution inside the observation window.
"""

import math

from kickedqubit import delta_e_from_ev, kick_limit_scan, rabi_period

delta_e = delta_e_from_ev(4.37e-6)  # 2s-2p splitting, converted to 1/ps
period = rabi_period(delta_e)
print(f"splitting = {delta_e:.6e} / ps   Rabi period = {period:.1f} ps")

taus = [period / 2**k for k in range(3, 9)]  # period/8 down to period/256
rows = kick_limit_scan(delta_e, math.pi / 2, t_k=150.0, taus=taus)

print(f"\n{'tau/T':>8} {'tau [ps]':>10} {'P2 ordered':>12} {'NTO int.':>10} {'NTO Schrod.':>12}")
for r in rows:
    print(
        f"{r.tau / period:8.4f} {r.tau:10.2f} {r.p2_rk4_ordered:12.6f}"
        f" {r.p2_nto_interaction:10.6f} {r.p2_nto_schrodinger:12.6f}"
    )
print("\nordered column climbs to sin^2(pi/2) = 1 as the pulse sharpens")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    pass
else:
    x = [r.tau / period for r in rows]
    fig, ax = plt.subplots(figsize=(6.5, 4.2))
    ax.plot(x, [r.p2_rk4_ordered for r in rows], "o-", lw=2, label="time ordered (RK4)")
    ax.plot(x, [r.p2_nto_interaction for r in rows], "s:", label="NTO, interaction picture")
    ax.plot(x, [r.p2_nto_schrodinger for r in rows], "d--", label="NTO, Schrodinger picture")
    ax.set_xscale("log", base=2)
    ax.set_xlabel(r"pulse width $\tau / T_{\Delta E}$")
    ax.set_ylabel(r"final $P_2$")
    ax.set_title("2s-2p transfer vs pulse width (area $\\pi/2$)")
    ax.legend()
    fig.tight_layout()
    fig.savefig("pulse_width_ladder.png", dpi=150)
    print("wrote pulse_width_ladder.png")
