#!/usr/bin/env python3
"""Place pulses on the (splitting phase, strength phase) plane.

Two dimensionless angles fix how a simply pulsed two-level system behaves:
dE*tau/2, the phase the splitting winds up during the pulse, and the
integrated field strength. Small strength means perturbation theory; small
splitting phase means the pulse acts as a kick; both large is the adiabatic
regime.
"""

import numpy as np

from kickedqubit import classify_regime, integrated_strength, preset_2s2p, rabi_period

examples = [
    (0.01, 0.01),
    (0.01, 100.0),
    (100.0, 0.01),
    (100.0, 100.0),
    (6.28, 6.28),
]
for split, strength in examples:
    print(f"split phase {split:8.2f}  strength {strength:8.2f}  ->  {classify_regime(split, strength).value}")

# Where does the 2s-2p preset live? tau = period/100 makes the splitting
# phase tiny while the pi/2 area is a moderate kick strength.
s = preset_2s2p(9.46)
pulse = s.pulses[0]
split_phase = s.delta_e * pulse.tau / 2.0
strength = integrated_strength(pulse, -np.inf, np.inf)
print(
    f"\n2s-2p preset: dE*tau/2 = {split_phase:.4f}, area = {strength:.4f}"
    f"  ->  {classify_regime(split_phase, strength).value}"
)
print(f"(pulse width {pulse.tau} ps against a {rabi_period(s.delta_e):.0f} ps period)")
