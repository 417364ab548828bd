"""Left Groebner bases over Weyl algebras with central variables.

One engine covers ideals and submodules of free modules: a term is a pair
(component, monomial) and ideals are the rank-1 case. The product criterion
is never applied (coprime leading monomials do not make S-pairs reduce to
zero here); pair pruning uses only chain-criterion instances, which remain
sound in this algebra class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush

from gmpy2 import mpq

from .algebra import (AlgebraSignature, WeylElement, convert_signature,
                      weyl_from_poly)
from .errors import InvalidInputError, ResourceLimitError
from .orders import monomial_divides, monomial_lcm, monomial_sub
from .poly import Poly, linear_factor_decomposition, univariate_gcd

_ONE = mpq(1)


@dataclass(frozen=True)
class GBConfig:
    """Computation budgets. Exhaustion raises ResourceLimitError, never a wrong answer."""

    max_pairs: int = 400_000          # S-pairs actually reduced
    max_basis: int = 40_000
    max_reduction_steps: int = 40_000_000
    max_saturation_rounds: int = 64
    selection: str = "sugar"          # or "normal"
    progress: object = None           # callback(pairs_done, basis, queued)
    progress_every: int = 500

    def check_pairs(self, n):
        if n > self.max_pairs:
            raise ResourceLimitError(f"S-pair budget exhausted ({self.max_pairs})")

    def check_basis(self, n):
        if n > self.max_basis:
            raise ResourceLimitError(f"basis size budget exhausted ({self.max_basis})")


DEFAULT_CONFIG = GBConfig()


@dataclass
class GroebnerBasis:
    """A (reduced) left Groebner basis plus the order it was computed under."""

    elements: tuple
    order: object
    rank: int = 1
    reduced: bool = True
    stats: dict = field(default_factory=dict)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


# ---------------------------------------------------------------------------
# engine over (component, monomial) terms


class _Engine:
    def __init__(self, sig, order, rank, config):
        self.sig = sig
        self.order = order
        self.rank = rank
        self.config = config
        base = order.key
        self.key = lambda t: (-t[0],) + base(t[1])
        self.negkey = lambda t: (t[0],) + tuple(-v for v in base(t[1]))
        self.steps = 0
        self.pairs_done = 0
        # rows are (lt, terms, sugar, rid, packed); rid keys the shifted-row
        # cache, packed is the leading monomial with 20 bits per exponent so
        # divisibility is one big-int subtract against the guard-bit mask
        self._rid = 0
        self._shift_cache = {}
        self._shift_load = 0
        self._nk_cache = {}
        self._shifts = tuple(21 * i for i in range(sig.nvars))
        self._guard = sum(1 << (s + 20) for s in self._shifts)

    def pack(self, mono):
        return sum(e << s for e, s in zip(mono, self._shifts) if e)

    def make_row(self, lt, terms, sugar):
        return (lt, terms, sugar, self.new_rid(), self.pack(lt[1]))

    def new_rid(self):
        self._rid += 1
        return self._rid

    # -- normal form ------------------------------------------------------

    def nf(self, terms, basis, hit=None, miss=None, top=False):
        """Left normal form of a term dict against monic basis rows.

        Full reduction by default; top=True stops at the first irreducible
        leading term and leaves the tail untouched (the Buchberger loop only
        needs top-reduced elements, final interreduction cleans the tails).

        hit/miss memoize reducer lookup per term. hit entries stay valid as
        long as every cached row remains in the basis; miss entries only as
        long as no row is added. Callers owning a growing basis pass both and
        clear miss on insert.
        """
        if not terms:
            return {}
        config = self.config
        mono_mul = self.sig.mono_mul
        negkey = self.negkey
        nk_cache = self._nk_cache
        guard = self._guard
        pack = self.pack
        work = dict(terms)
        work_get = work.get
        out = {}
        heap = []
        for t in work:
            e = nk_cache.get(t)
            if e is None:
                e = negkey(t) + (pack(t[1]) | guard, t)
                nk_cache[t] = e
            heap.append(e)
        heapify(heap)
        by_comp = basis if isinstance(basis, dict) else _bucket(basis)
        if hit is None:
            hit = {}
        if miss is None:
            miss = {}
        shift_cache = self._shift_cache
        while heap:
            entry = heappop(heap)
            t = entry[-1]
            c = work_get(t)
            if not c:
                continue
            red = hit.get(t)
            if red is None:
                # miss[t] = how many rows of t's bucket are known non-divisors,
                # so each (term, row) divisibility test runs at most once even
                # as the bucket grows
                bucket = by_comp.get(t[0])
                n = len(bucket) if bucket else 0
                pk = entry[-2]
                for k in range(miss.get(t, 0), n):
                    cand = bucket[k]
                    if (pk - cand[4]) & guard == guard:
                        red = cand
                        break
                if red is None:
                    miss[t] = n
                    if top:
                        return work
                    del work[t]
                    out[t] = c
                    continue
                hit[t] = red
            self.steps += 1
            if self.steps > config.max_reduction_steps:
                raise ResourceLimitError("reduction step budget exhausted")
            u = monomial_sub(t[1], red[0][1])
            ck = (red[3], u)
            prod = shift_cache.get(ck)
            if prod is None:
                acc = {}
                for (tc, tm), rc in red[1].items():
                    for m2, w in mono_mul(u, tm):
                        t2 = (tc, m2)
                        v = acc.get(t2, 0) + rc * w
                        if v:
                            acc[t2] = v
                        else:
                            del acc[t2]
                prod = tuple(acc.items())
                self._shift_load += len(prod)
                if self._shift_load > 2_000_000:
                    shift_cache.clear()
                    self._shift_load = len(prod)
                shift_cache[ck] = prod
            for t2, w in prod:
                acc2 = work_get(t2)
                if acc2 is None:
                    work[t2] = -c * w
                    e2 = nk_cache.get(t2)
                    if e2 is None:
                        e2 = negkey(t2) + (pack(t2[1]) | guard, t2)
                        if len(nk_cache) > 1_500_000:
                            nk_cache.clear()
                        nk_cache[t2] = e2
                    heappush(heap, e2)
                else:
                    acc2 = acc2 - c * w
                    if acc2:
                        work[t2] = acc2
                    else:
                        del work[t2]
        return out

    # -- buchberger --------------------------------------------------------

    def buchberger(self, gens_terms, interreduce=True, tracked=False):
        """GB over (comp, mono) terms.

        tracked mode treats comp 0 as the ideal and comps >= 1 as cofactor
        bookkeeping: rows whose comp-0 part vanished (syzygies) are dropped,
        so the run is an ordinary ideal Buchberger carrying division history.
        """
        config = self.config
        key = self.key
        basis = []      # list of (lt, terms, sugar, rid)
        by_comp = {}
        hit = {}
        miss = {}

        def insert(terms):
            lt = max(terms, key=key)
            if tracked and lt[0] != 0:
                return None
            lc = terms[lt]
            if lc != 1:
                inv = _ONE / lc
                terms = {t: c * inv for t, c in terms.items()}
            sugar = max(sum(t[1]) for t in terms)
            row = self.make_row(lt, terms, sugar)
            basis.append(row)
            by_comp.setdefault(lt[0], []).append(row)
            config.check_basis(len(basis))
            return len(basis) - 1

        alive = set()
        lcms = {}
        heap = []

        def push_pair(i, j):
            lt_i, lt_j = basis[i][0], basis[j][0]
            L = (lt_i[0], monomial_lcm(lt_i[1], lt_j[1]))
            lcms[(i, j)] = L
            alive.add((i, j))
            if config.selection == "sugar":
                sug = max(basis[i][2] + sum(L[1]) - sum(lt_i[1]),
                          basis[j][2] + sum(L[1]) - sum(lt_j[1]))
                sel = (sug,) + key(L) + (i, j)
            else:
                sel = key(L) + (i, j)
            heappush(heap, (sel, i, j))

        def update_pairs(t):
            lt_t = basis[t][0]
            # chain pruning of surviving old pairs
            for (i, j) in [p for p in alive]:
                L = lcms[(i, j)]
                if L[0] != lt_t[0] or not monomial_divides(lt_t[1], L[1]):
                    continue
                if monomial_lcm(basis[i][0][1], lt_t[1]) != L[1] \
                        and monomial_lcm(basis[j][0][1], lt_t[1]) != L[1]:
                    alive.discard((i, j))
            # new pairs, pruned by the lcm-divisibility (chain) criteria
            cands = {}
            for i in range(t):
                if basis[i][0][0] == lt_t[0]:
                    cands[i] = monomial_lcm(basis[i][0][1], lt_t[1])
            kept = []
            seen = {}
            for i, Li in sorted(cands.items()):
                dominated = False
                for j, Lj in cands.items():
                    if Lj != Li and monomial_divides(Lj, Li):
                        dominated = True
                        break
                if dominated:
                    continue
                if Li in seen:
                    continue  # one representative per lcm
                seen[Li] = i
                kept.append(i)
            for i in kept:
                push_pair(i, t)

        for terms in gens_terms:
            if not terms:
                continue
            r = self.nf(terms, by_comp, hit, miss)
            if r:
                t = insert(r)
                if t is not None:
                    update_pairs(t)

        while heap:
            _, i, j = heappop(heap)
            if (i, j) not in alive:
                continue
            alive.discard((i, j))
            self.pairs_done += 1
            config.check_pairs(self.pairs_done)
            if config.progress and self.pairs_done % config.progress_every == 0:
                config.progress(self.pairs_done, len(basis), len(alive))
            s = self.spoly(i, j, basis)
            r = self.nf(s, by_comp, hit, miss)
            if r:
                t = insert(r)
                if t is not None:
                    update_pairs(t)

        rows = self._minimalize(basis)
        if interreduce:
            rows = self._interreduce(rows)
        rows.sort(key=lambda row: self.key(row[0]), reverse=True)
        return [row[1] for row in rows]

    def spoly(self, i, j, basis):
        lt_i, terms_i = basis[i][0], basis[i][1]
        lt_j, terms_j = basis[j][0], basis[j][1]
        L = monomial_lcm(lt_i[1], lt_j[1])
        u_i = monomial_sub(L, lt_i[1])
        u_j = monomial_sub(L, lt_j[1])
        out = {}
        mono_mul = self.sig.mono_mul
        for (tc, tm), c in terms_i.items():
            for m2, w in mono_mul(u_i, tm):
                t2 = (tc, m2)
                acc = out.get(t2, 0) + c * w
                if acc:
                    out[t2] = acc
                else:
                    out.pop(t2, None)
        for (tc, tm), c in terms_j.items():
            for m2, w in mono_mul(u_j, tm):
                t2 = (tc, m2)
                acc = out.get(t2, 0) - c * w
                if acc:
                    out[t2] = acc
                else:
                    out.pop(t2, None)
        return out

    def _minimalize(self, basis):
        rows = sorted(basis, key=lambda row: self.key(row[0]))
        live = []
        for row in rows:
            lt = row[0]
            if any(l[0][0] == lt[0] and monomial_divides(l[0][1], lt[1])
                   for l in live):
                continue
            live.append(row)
        return live

    def _interreduce(self, rows):
        changed = True
        guard = 0
        while changed:
            changed = False
            guard += 1
            if guard > 50:
                raise ResourceLimitError("interreduction did not stabilize")
            new_rows = []
            for idx, row in enumerate(rows):
                others = rows[:idx] + rows[idx + 1:]
                r = self.nf(row[1], _bucket(others))
                if r == row[1]:
                    new_rows.append(row)
                    continue
                changed = True
                lt = max(r, key=self.key)
                lc = r[lt]
                if lc != 1:
                    inv = _ONE / lc
                    r = {t: c * inv for t, c in r.items()}
                new_rows.append(self.make_row(lt, r, row[2]))
            rows = new_rows
        return rows


def _bucket(rows):
    by_comp = {}
    for row in rows:
        by_comp.setdefault(row[0][0], []).append(row)
    return by_comp


# ---------------------------------------------------------------------------
# conversions between public values and engine terms


def _ideal_terms(el):
    return {(0, m): c for m, c in el.terms.items()}


def _vector_terms(vec):
    out = {}
    for comp, el in enumerate(vec):
        for m, c in el.terms.items():
            out[(comp, m)] = c
    return out


def _to_element(sig, terms):
    return WeylElement(sig, {m: c for (_, m), c in terms.items()})


def _to_vector(sig, terms, rank):
    comps = [dict() for _ in range(rank)]
    for (comp, m), c in terms.items():
        comps[comp][m] = c
    return tuple(WeylElement(sig, t) for t in comps)


def _common_sig(elements):
    sig = None
    for el in elements:
        if sig is None:
            sig = el.sig
        elif el.sig != sig:
            raise InvalidInputError("generators over different signatures")
    if sig is None:
        raise InvalidInputError("no generators given")
    return sig


def _rows_from_elements(engine, elements):
    rows = []
    for el in elements:
        if el.is_zero():
            continue
        terms = _ideal_terms(el)
        lt = max(terms, key=engine.key)
        lc = terms[lt]
        if lc != 1:
            inv = _ONE / lc
            terms = {t: c * inv for t, c in terms.items()}
        rows.append(engine.make_row(lt, terms, 0))
    return rows


# ---------------------------------------------------------------------------
# public operations


def left_normal_form(p, basis, order=None, config=None):
    """Full left normal form of p against a list of elements (ideally a GB)."""
    elements = list(basis.elements if isinstance(basis, GroebnerBasis) else basis)
    if order is None and isinstance(basis, GroebnerBasis):
        order = basis.order
    sig = p.sig
    if elements:
        _common_sig(elements + [p])
    if order is None:
        order = sig.order_ds_block()
    engine = _Engine(sig, order, 1, config or DEFAULT_CONFIG)
    rows = _rows_from_elements(engine, elements)
    return _to_element(sig, engine.nf(_ideal_terms(p), _bucket(rows)))


def buchberger(gens, order=None, config=None, reduced=True):
    """Reduced left Groebner basis of the ideal generated by gens."""
    gens = list(gens)
    sig = _common_sig(gens)
    if order is None:
        order = sig.order_ds_block()
    config = config or DEFAULT_CONFIG
    engine = _Engine(sig, order, 1, config)
    out = engine.buchberger([_ideal_terms(g) for g in gens if not g.is_zero()],
                            interreduce=reduced)
    elements = tuple(_to_element(sig, t) for t in out)
    stats = {"pairs": engine.pairs_done, "steps": engine.steps,
             "size": len(elements)}
    return GroebnerBasis(elements, order, 1, reduced, stats)


def module_buchberger(vectors, rank, base_order=None, config=None, reduced=True):
    """Reduced left GB of a submodule of D^rank under POT (component 0 dominant)."""
    vectors = list(vectors)
    if not vectors:
        raise InvalidInputError("no generators given")
    sig = _common_sig([el for vec in vectors for el in vec])
    if base_order is None:
        base_order = sig.order_ds_block()
    config = config or DEFAULT_CONFIG
    engine = _Engine(sig, base_order, rank, config)
    terms = [_vector_terms(v) for v in vectors]
    out = engine.buchberger([t for t in terms if t], interreduce=reduced)
    elements = tuple(_to_vector(sig, t, rank) for t in out)
    stats = {"pairs": engine.pairs_done, "steps": engine.steps,
             "size": len(elements)}
    return GroebnerBasis(elements, base_order, rank, reduced, stats)


def ideal_contains(gb, p):
    return left_normal_form(p, gb).is_zero()


def _as_reduced_elements(gens, lst, order, config):
    if isinstance(gens, GroebnerBasis) and gens.reduced and gens.order is order:
        return gens.elements
    if not lst:
        return ()
    return buchberger(lst, order, config).elements


def ideal_equal(gens_a, gens_b, order=None, config=None):
    """Exact ideal equality via canonical reduced GBs under one order."""
    a = list(gens_a.elements if isinstance(gens_a, GroebnerBasis) else gens_a)
    b = list(gens_b.elements if isinstance(gens_b, GroebnerBasis) else gens_b)
    if not a and not b:
        return True
    sig = _common_sig(a + b)
    if order is None:
        order = sig.order_ds_block()
    ea = _as_reduced_elements(gens_a, a, order, config)
    eb = _as_reduced_elements(gens_b, b, order, config)
    return [e.terms for e in ea] == [e.terms for e in eb]


def eliminate(gens, elim_names, config=None, rest_order=None):
    """Generators of <gens> intersected with the subalgebra without elim_names."""
    gens = list(gens)
    sig = _common_sig(gens)
    elim_names = tuple(elim_names)
    if not elim_names:
        return list(buchberger(gens, None, config).elements)
    order = sig.order_eliminating(elim_names, rest_order)
    config = config or DEFAULT_CONFIG
    engine = _Engine(sig, order, 1, config)
    rows_terms = engine.buchberger(
        [_ideal_terms(g) for g in gens if not g.is_zero()], interreduce=False)
    elim_idx = tuple(sig.index[n] for n in elim_names)
    # a minimal-GB row whose leading monomial avoids the eliminated block
    # cannot touch it in the tail either (the block dominates the order),
    # so only the surviving rows need interreduction
    survivors = []
    for terms in rows_terms:
        lt = max(terms, key=engine.key)
        if any(lt[1][i] for i in elim_idx):
            continue
        survivors.append(engine.make_row(lt, terms, 0))
    if not survivors:
        return []
    reduced = engine._interreduce(survivors)
    reduced.sort(key=lambda row: engine.key(row[0]), reverse=True)
    return [_to_element(sig, row[1]) for row in reduced]


def syzygy(gens, base_order=None, config=None):
    """Generators of { (A_0..A_r) : sum A_i g_i = 0 } for the given tuple."""
    gens = list(gens)
    sig = _common_sig(gens)
    for g in gens:
        if g.is_zero():
            raise InvalidInputError("syzygy of a zero generator")
    n = len(gens)
    rank = 1 + n
    zero = WeylElement.zero(sig)
    vectors = []
    for i, g in enumerate(gens):
        comps = [zero] * rank
        comps[0] = g
        comps[1 + i] = WeylElement.one(sig)
        vectors.append(tuple(comps))
    gb = module_buchberger(vectors, rank, base_order, config)
    out = []
    for vec in gb.elements:
        if vec[0].is_zero():
            out.append(tuple(vec[1:]))
    return out


def transporter(gens, h, config=None, base_order=None):
    """Generators of { A : A h in <gens> }: the projection of the syzygy
    module of (h, gens) onto the h-cofactor.

    Computed directly in rank 2 from (h, 1), (g_i, 0): basis vectors with
    zero first component are exactly (0, A) with A h in <gens>, so the
    unneeded g-cofactors are never carried along.
    """
    gens = list(gens)
    if h.is_zero():
        raise InvalidInputError("transporter by zero")
    sig = _common_sig(gens + [h])
    zero = WeylElement.zero(sig)
    one = WeylElement.one(sig)
    vectors = [(h, one)] + [(g, zero) for g in gens if not g.is_zero()]
    gb = module_buchberger(vectors, 2, base_order, config)
    return [vec[1] for vec in gb.elements
            if vec[0].is_zero() and not vec[1].is_zero()]


def nf_with_cofactors(p, gens, base_order=None, config=None):
    """(nf, cofactors): p = nf + sum cofactors[i] * gens[i].

    Runs an ideal Buchberger with cofactor tracking (comp 0 = ideal part,
    comp 1+i = coefficient of gens[i]), then reduces (p, 0) once.
    """
    gens = list(gens)
    sig = _common_sig(gens + [p])
    if base_order is None:
        base_order = sig.order_ds_block()
    config = config or DEFAULT_CONFIG
    rank = 1 + len(gens)
    engine = _Engine(sig, base_order, rank, config)
    vecs = []
    for i, g in enumerate(gens):
        if g.is_zero():
            raise InvalidInputError("zero generator")
        terms = {(0, m): c for m, c in g.terms.items()}
        terms[(1 + i, sig.zero_mono())] = _ONE
        vecs.append(terms)
    rows_terms = engine.buchberger(vecs, tracked=True)
    rows = []
    for terms in rows_terms:
        lt = max(terms, key=engine.key)
        rows.append(engine.make_row(lt, terms, 0))
    result = engine.nf({(0, m): c for m, c in p.terms.items()}, _bucket(rows))
    vec = _to_vector(sig, result, rank)
    return vec[0], [-c for c in vec[1:]]


def leading_coeff_in_params(g, order=None):
    """LC of g viewed over the rational function field in the params.

    Groups terms by (x, dx)-monomial, takes the <_D-largest group, and returns
    that group's coefficient as a polynomial in the central parameters.
    """
    sig = g.sig
    if g.is_zero():
        raise InvalidInputError("zero element")
    if g.uses_any(sig.aux_indices):
        raise InvalidInputError("element uses auxiliary variables")
    order = order or sig.order_weyl_degrevlex()
    wkey = order.key
    best_key = max(wkey(m) for m in g.terms)
    out = {}
    for m, c in g.terms.items():
        if wkey(m) == best_key:
            pm = tuple(m[i] for i in sig.param_indices)
            out[pm] = c
    return Poly(sig.central_params, out)


# ---------------------------------------------------------------------------
# central saturation (Algorithm: GB -> q(s) from leading coefficients -> I : q^inf)


@dataclass
class SaturationResult:
    generators: tuple
    q: Poly
    factors: tuple
    witnesses: tuple      # per generator: minimal power q^k with q^k * gen in I
    changed: bool
    basis: GroebnerBasis
    stats: dict = field(default_factory=dict)


def _univariate_lcm(polys):
    acc = None
    for p in polys:
        if p.is_zero():
            raise InvalidInputError("zero leading coefficient")
        p = p.monic()
        if p.is_constant():
            continue
        if acc is None:
            acc = p
            continue
        g = univariate_gcd(acc, p)
        acc = acc.exact_div(g) * p
    if acc is None:
        return None
    return acc.monic()


def _saturation_factors(q):
    """Monic factors of q, cheapest first: linear pieces then the residual."""
    name = q.vars[0]
    _, roots, residual = linear_factor_decomposition(q)
    factors = []
    s = Poly.variable((name,), name)
    for r, _mult in roots:
        factors.append(s - r)
    if not residual.is_constant():
        factors.append(residual)
    factors.sort(key=lambda f: (f.total_degree(), str(f)))
    return factors


def _witness_power(gen, q_embedded, base_gb, cap=64):
    acc = gen
    for k in range(cap + 1):
        if left_normal_form(acc, base_gb).is_zero():
            return k
        acc = q_embedded * acc
    raise ResourceLimitError("no saturation witness within power cap")


def central_saturation(gens, method="factors", config=None, order=None):
    """Sat over the central parameter ring of a left ideal in D[s].

    factors method: iterate transporters by the irreducible-over-Q pieces of
    q(s) (linear factors found exactly; any rootless residual is used whole)
    until the ideal stabilizes. rabinowitsch method: adjoin a central tag w
    and eliminate it from I + <1 - q w>.
    """
    gens = list(gens)
    sig = _common_sig(gens)
    if len(sig.central_params) != 1:
        raise InvalidInputError("central saturation needs exactly one parameter")
    config = config or DEFAULT_CONFIG
    order = order or sig.order_ds_block()
    base = buchberger(gens, order, config)
    if not base.elements:
        raise InvalidInputError("zero ideal")
    q = _univariate_lcm([leading_coeff_in_params(g) for g in base.elements])
    sname = sig.central_params[0]
    if q is None:
        one = Poly.constant((sname,), 1)
        return SaturationResult(base.elements, one, (),
                                tuple(one for _ in base.elements),
                                False, base, {"rounds": 0})
    factors = _saturation_factors(q)
    if method == "rabinowitsch":
        cur = _saturate_rabinowitsch(base, q, sig, order, config)
    elif method == "factors":
        cur = _saturate_factors(base, factors, sig, order, config)
    else:
        raise InvalidInputError(f"unknown saturation method {method!r}")
    changed = not ideal_equal(cur, base, order, config)
    q_emb = weyl_from_poly(sig, q)
    witnesses = []
    for g in cur.elements:
        k = _witness_power(g, q_emb, base)
        witnesses.append(q ** k)
    return SaturationResult(cur.elements, q, tuple(factors), tuple(witnesses),
                            changed, cur, {"rounds": None})


def _saturate_factors(base, factors, sig, order, config):
    cur = base
    rounds = 0
    while True:
        changed_pass = False
        for fac in factors:
            fac_emb = weyl_from_poly(sig, fac)
            while True:
                rounds += 1
                if rounds > config.max_saturation_rounds:
                    raise ResourceLimitError("saturation round budget exhausted")
                t = transporter(list(cur.elements), fac_emb, config, order)
                tgb = buchberger(t, order, config)
                if ideal_equal(tgb, cur, order, config):
                    break
                cur = tgb
                changed_pass = True
        if not changed_pass:
            return cur


def _saturate_rabinowitsch(base, q, sig, order, config):
    ext = AlgebraSignature(sig.weyl_pairs, sig.central_params,
                           sig.central_aux + ("w@sat",))
    gens_ext = [convert_signature(g, ext) for g in base.elements]
    w = WeylElement.variable(ext, "w@sat")
    tag = WeylElement.one(ext) - weyl_from_poly(ext, q) * w
    survivors = eliminate(gens_ext + [tag], ("w@sat",), config)
    back = [convert_signature(g, sig) for g in survivors]
    return buchberger(back, order, config)


def central_saturation_pair(gens, config=None, order=None):
    """Two-parameter saturation (validation variant).

    The lcm over C[s1,s2] is replaced by the product of the deduplicated
    leading-coefficient polynomials; any central multiple of the detected q
    yields the same saturation, so this stays exact.
    """
    gens = list(gens)
    sig = _common_sig(gens)
    config = config or DEFAULT_CONFIG
    order = order or sig.order_ds_block()
    base = buchberger(gens, order, config)
    if not base.elements:
        raise InvalidInputError("zero ideal")
    lcs = []
    for g in base.elements:
        lc = leading_coeff_in_params(g).monic()
        if not lc.is_constant() and all(lc != seen for seen in lcs):
            lcs.append(lc)
    factors = sorted(lcs, key=lambda f: (f.total_degree(), str(f)))
    cur = base
    rounds = 0
    while True:
        changed_pass = False
        for fac in factors:
            fac_emb = weyl_from_poly(sig, fac)
            while True:
                rounds += 1
                if rounds > config.max_saturation_rounds:
                    raise ResourceLimitError("saturation round budget exhausted")
                t = transporter(list(cur.elements), fac_emb, config, order)
                tgb = buchberger(t, order, config)
                if ideal_equal(tgb, cur, order, config):
                    break
                cur = tgb
                changed_pass = True
        if not changed_pass:
            break
    q = Poly.constant(sig.central_params, 1)
    for fac in factors:
        q = q * fac
    changed = not ideal_equal(cur, base, order, config)
    return SaturationResult(cur.elements, q, tuple(factors), (), changed, cur,
                            {"rounds": rounds})
