"""Monomial orders as key functions over dense exponent tuples.

Every order maps a monomial to a flat tuple of ints such that a < b in the
order iff key(a) < key(b) lexicographically. Keys compose, so block orders
concatenate sub-keys and module orders prepend a component slot.
"""

from __future__ import annotations

from .errors import InvalidInputError


class MonomialOrder:
    """Base class; subclasses implement key(mono) -> tuple of ints."""

    indices = ()

    def key(self, mono):
        raise NotImplementedError

    def describe(self):
        raise NotImplementedError

    def __repr__(self):
        return self.describe()


class Lex(MonomialOrder):
    def __init__(self, indices):
        self.indices = tuple(indices)

    def key(self, mono):
        return tuple(mono[i] for i in self.indices)

    def describe(self):
        return f"lex{list(self.indices)}"


class DegRevLex(MonomialOrder):
    def __init__(self, indices):
        self.indices = tuple(indices)
        self._rev = tuple(reversed(self.indices))

    def key(self, mono):
        total = 0
        for i in self.indices:
            total += mono[i]
        return (total,) + tuple(-mono[i] for i in self._rev)

    def describe(self):
        return f"degrevlex{list(self.indices)}"


class WeightOrder(MonomialOrder):
    """Compare by integer weight rows first, then by a tiebreak order."""

    def __init__(self, rows, tiebreak):
        self.rows = tuple(tuple(r) for r in rows)
        self.tiebreak = tiebreak
        self.indices = tiebreak.indices

    def key(self, mono):
        head = tuple(sum(w * e for w, e in zip(row, mono)) for row in self.rows)
        return head + self.tiebreak.key(mono)

    def describe(self):
        return f"weight{list(self.rows)}>{self.tiebreak.describe()}"


class BlockOrder(MonomialOrder):
    """Earlier blocks dominate; keys concatenate."""

    def __init__(self, blocks):
        self.blocks = tuple(blocks)
        self.indices = tuple(i for b in self.blocks for i in b.indices)

    def key(self, mono):
        out = []
        for b in self.blocks:
            out.extend(b.key(mono))
        return tuple(out)

    def describe(self):
        return "block(" + ", ".join(b.describe() for b in self.blocks) + ")"


def compare(order, a, b):
    """-1, 0, or 1 as a <, =, > b under the order."""
    if len(a) != len(b):
        raise InvalidInputError("monomials over different signatures")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def monomial_divides(a, b):
    """True iff a divides b slotwise."""
    return all(ea <= eb for ea, eb in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(ea, eb) for ea, eb in zip(a, b))


def monomial_mul(a, b):
    return tuple(ea + eb for ea, eb in zip(a, b))


def monomial_sub(a, b):
    out = tuple(ea - eb for ea, eb in zip(a, b))
    if any(e < 0 for e in out):
        raise InvalidInputError(f"monomial {b} does not divide {a}")
    return out
