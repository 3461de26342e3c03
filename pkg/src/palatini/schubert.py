"""Pieri arithmetic with sigma_1 in the cohomology of G(1,5).

Schubert classes of lines in P^5 are indexed by partitions (a, b) with
4 >= a >= b >= 0.  A cycle is a dict from partitions to integer
coefficients with no zero entries.
"""

from __future__ import annotations

from typing import Dict, Tuple

Partition = Tuple[int, int]
SchubertCycle = Dict[Partition, int]

BOX = 4  # n - k for lines (k = 2) in P^5 (n = 6)
POINT_CLASS: Partition = (BOX, BOX)

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def check_partition(lam: Partition) -> Partition:
    a, b = lam
    if not BOX >= a >= b >= 0:
        raise ValueError(f"{lam} does not fit in the 2 x {BOX} box")
    return (a, b)


def cycle(terms: Dict[Partition, int]) -> SchubertCycle:
    return {check_partition(k): v for k, v in terms.items() if v}


def pieri_sigma1(c: SchubertCycle) -> SchubertCycle:
    """sigma_1 * c, using sigma_1 sigma_ab = sigma_(a+1)b + sigma_a(b+1) inside the box."""
    out: SchubertCycle = {}
    for (a, b), coeff in c.items():
        for lam in ((a + 1, b), (a, b + 1)):
            if BOX >= lam[0] >= lam[1]:
                out[lam] = out.get(lam, 0) + coeff
    return {k: v for k, v in out.items() if v}


def sigma1_power(k: int) -> SchubertCycle:
    if k < 0:
        raise ValueError("negative power")
    c: SchubertCycle = {(0, 0): 1}
    for _ in range(k):
        c = pieri_sigma1(c)
    return c


def order(c: SchubertCycle) -> int:
    """Coefficient of sigma_4: the number of lines of a congruence through a general point."""
    return c.get((BOX, 0), 0)


def format_cycle(c: SchubertCycle) -> str:
    """Render as e.g. 'σ₄+3σ₃₁+2σ₂₂' (subscript b omitted when zero)."""
    if not c:
        return "0"
    parts = []
    for (a, b), coeff in sorted(c.items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
        label = f"{a}" if b == 0 else f"{a}{b}"
        sym = "σ" + label.translate(_SUBSCRIPTS)
        if coeff == 1:
            text = sym
        elif coeff == -1:
            text = "-" + sym
        else:
            text = f"{coeff}{sym}"
        if parts and not text.startswith("-"):
            text = "+" + text
        parts.append(text)
    return "".join(parts)


__all__ = [
    "BOX",
    "POINT_CLASS",
    "SchubertCycle",
    "Partition",
    "cycle",
    "pieri_sigma1",
    "sigma1_power",
    "order",
    "format_cycle",
]
