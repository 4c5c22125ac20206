"""Truncation error of the A1hat linearity sum against the window N, and the
raw and extrapolated closure errors against the approach parameter m."""

import cmath
import math

from cy2stab.braids import normalize, parse_word
from cy2stab.stability import TypeACharge, linearity_check_a1hat
from cy2stab.suites import closure_sequence, stated_limits


def main() -> None:
    nf = normalize(parse_word("s[2]", "A1hat"))
    print("N, theta, error, tail bound, N * error")
    for th in (0.3, 0.5, 0.7):
        c = TypeACharge.make("A1hat", 1.0, cmath.exp(1j * math.pi * th))
        for n in (50, 200, 800, 3200):
            r = linearity_check_a1hat(c, nf, "P0", n)
            print(f"{n:5d} {th:.1f} {r.error:.3e} {r.tail_bound:.3e} {n * r.error:.4f}")
    print("\ntarget, m, gromov error, mass error (theta = pi/3, window 10)")
    for target in (0, 2, None):
        lim_x, lim_f = stated_limits(target, 10)
        ms = [100, 1000, 10_000]
        for m, (x, f) in zip(ms, closure_sequence(target, math.pi / 3, ms, 10)):
            gx = max(abs(a - b) for a, b in zip(x, lim_x))
            gf = max(abs(a - b) for a, b in zip(f, lim_f))
            print(f"{'inf' if target is None else target:>4} {m:6d} {gx:.3e} {gf:.3e}")


if __name__ == "__main__":
    main()
