"""Batch audits of the structural facts over ranges of moduli.

These are observational: they report counterexamples instead of asserting,
so a failed expectation shows up in the payload rather than as an exception.
"""

from __future__ import annotations

from . import ring_core
from .ring_core import halidon_psi
from .rings import detect, is_primitive_root


def conjecture_audit(lo: int, hi: int) -> dict:
    """Compare the detected maximal index with the halidon function.

    Scans odd n in [lo, hi] and lists every n where detect(n) != psi(n).
    """
    mismatches = []
    checked = 0
    for n in range(max(lo, 3), hi + 1):
        if n % 2 == 0:
            continue
        checked += 1
        m, _ = detect(n)
        if m != halidon_psi(n):
            mismatches.append({"n": n, "m_max": m, "psi": halidon_psi(n)})
    return {"checked": checked, "counterexamples": mismatches}


def structural_audit(lo: int, hi: int) -> dict:
    """Cardinality, zero-divisor divisibility and divisor-closure checks.

    For every n in [lo, hi] with maximal index m and smallest root w:
      - nontrivial rings satisfy n = 1 (mod m);
      - m divides the number of nonzero zero divisors, n - 1 - phi(n);
      - for every divisor k > 1 of m, (n, k, w^(m/k)) is again a structure.
    """
    cardinality, zero_divisor, closure = [], [], []
    checked = 0
    for n in range(max(lo, 2), hi + 1):
        checked += 1
        m, roots = detect(n)
        if m == 1:
            continue
        if n % m != 1:
            cardinality.append(n)
        if (n - 1 - ring_core.euler_phi(n)) % m != 0:
            zero_divisor.append(n)
        w = roots[0]
        for k in ring_core.divisors(m):
            if k > 1 and not is_primitive_root(n, k, pow(w, m // k, n)):
                closure.append({"n": n, "k": k})
    return {
        "checked": checked,
        "cardinality_failures": cardinality,
        "zero_divisor_failures": zero_divisor,
        "divisor_closure_failures": closure,
    }
