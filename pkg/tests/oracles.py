"""Independent reference implementations used to freeze expected test values.

Everything here is deliberately naive: brute-force scans, single-swap
rewriting, direct evaluation. Production code must agree with these.
"""

import random

from gmpy2 import mpq

from weylbs.algebra import WeylElement
from weylbs.poly import Poly


def brute_force_shift_lines(b, s1="s1", s2="s2"):
    """Scan |l| <= deg * digit proxy testing whether (s1+s2+l) divides b."""
    digits = 1
    for c in b.terms.values():
        digits = max(digits, len(str(abs(int(c.numerator)))),
                     len(str(int(c.denominator))))
    bound = max(1, b.total_degree()) * (digits + 1) * 3
    t = Poly.variable(("t",), "t")
    out = []
    for ell in range(-bound, bound + 1):
        image = b.substitute({s1: t, s2: -t - ell}, ("t",))
        if image.is_zero():
            out.append(ell)
    return out


def slow_mono_product(sig, a, b):
    """Normally order x^a dx^b * x^c dx^d by single-swap rewriting dx*x = x*dx + 1."""
    # represent words as lists of variable indices; expand recursively
    word = []
    for i in sig.position_indices:
        word.extend([i] * a[i])
    for i in sig.derivation_indices:
        word.extend([i] * a[i])
    for i in sig.position_indices:
        word.extend([i] * b[i])
    for i in sig.derivation_indices:
        word.extend([i] * b[i])
    central = tuple(a[i] + b[i] for i in sig.central_indices)

    n = len(sig.weyl_pairs)
    acc = {}

    def emit(word, coeff):
        # word is normally ordered; bucket into exponent tuple
        mono = [0] * sig.nvars
        for i in word:
            mono[i] += 1
        for idx, e in zip(sig.central_indices, central):
            mono[idx] = e
        key = tuple(mono)
        acc[key] = acc.get(key, 0) + coeff

    def rec(word, coeff):
        for k in range(len(word) - 1):
            u, v = word[k], word[k + 1]
            if u >= n and v < n:  # a derivation directly left of a position
                if u - n == v:
                    rec(word[:k] + [v, u] + word[k + 2:], coeff)
                    rec(word[:k] + word[k + 2:], coeff)
                    return
                rec(word[:k] + [v, u] + word[k + 2:], coeff)
                return
        emit(word, coeff)

    rec(word, 1)
    return {m: c for m, c in acc.items() if c}


def random_poly(rng, variables, max_degree=3, max_terms=4, zero_ok=False):
    nv = len(variables)
    while True:
        terms = {}
        for _ in range(rng.randint(0 if zero_ok else 1, max_terms)):
            mono = [0] * nv
            budget = rng.randint(0, max_degree)
            for _ in range(budget):
                mono[rng.randrange(nv)] += 1
            terms[tuple(mono)] = mpq(rng.randint(-9, 9))
        p = Poly(variables, terms)
        if zero_ok or not p.is_zero():
            return p


def random_weyl(rng, sig, max_degree=3, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = [0] * sig.nvars
        budget = rng.randint(0, max_degree)
        for _ in range(budget):
            mono[rng.randrange(sig.nvars)] += 1
        c = rng.randint(-9, 9)
        if c:
            terms[tuple(mono)] = mpq(c)
    return WeylElement(sig, terms)
