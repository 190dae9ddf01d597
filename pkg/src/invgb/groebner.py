"""Generic grlex Groebner bases in k[x,z] and position-over-term module bases.

This is a sparse, textbook implementation.  It does not share code with
the dense annihilator kernel, so it can check that kernel's output.
"""

from __future__ import annotations

from .bipoly import Form, Monomial, format_terms, grlex_key, parse_terms
from .errors import FieldMismatchError, UsageError


class Poly:
    """A (not necessarily homogeneous) polynomial in k[x,z], stored sparsely."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def from_form(cls, form):
        return cls(form.field, {(m.xdeg, m.zdeg): c for m, c in form.terms()})

    @classmethod
    def constant(cls, field, c=None):
        return cls(field, {(0, 0): field.one if c is None else c})

    @classmethod
    def parse(cls, text, field):
        return cls(field, parse_terms(text, field))

    def to_form(self):
        return Form.from_terms(self.field, self.terms)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def lm(self):
        if not self.terms:
            raise UsageError("leading monomial of the zero polynomial")
        return Monomial(*max(self.terms, key=grlex_key))

    @property
    def lc(self):
        return self.terms[self.lm]

    @property
    def degree(self):
        return max(a + b for a, b in self.terms) if self.terms else float("-inf")

    def is_homogeneous(self):
        return len({a + b for a, b in self.terms}) <= 1

    def homogeneous_components(self):
        parts = {}
        for (a, b), c in self.terms.items():
            parts.setdefault(a + b, {})[(a, b)] = c
        return [Poly(self.field, parts[d]) for d in sorted(parts, reverse=True)]

    def _check(self, other):
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")

    def __add__(self, other):
        other = as_poly(other)
        self._check(other)
        f = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = f.add(out.get(m, f.zero), c)
        return Poly(f, out)

    def __neg__(self):
        return Poly(self.field, {m: self.field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-as_poly(other))

    def scale(self, c):
        c = self.field.coerce(c)
        mul = self.field.mul
        return Poly(self.field, {m: mul(c, v) for m, v in self.terms.items()})

    def mul_term(self, mon, c):
        mul = self.field.mul
        a, b = mon
        return Poly(self.field, {(x + a, z + b): mul(c, v) for (x, z), v in self.terms.items()})

    def __mul__(self, other):
        other = as_poly(other)
        self._check(other)
        f = self.field
        out = {}
        for (a, b), c in self.terms.items():
            for (x, z), v in other.terms.items():
                key = (a + x, b + z)
                out[key] = f.add(out.get(key, f.zero), f.mul(c, v))
        return Poly(f, out)

    def monic(self):
        inv = self.field.inv(self.lc)
        return self.scale(self.field(inv))

    def is_monic(self):
        return bool(self.terms) and self.lc == self.field.one

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def __eq__(self, other):
        if isinstance(other, Form):
            other = Poly.from_form(other)
        if isinstance(other, Poly):
            return self.field == other.field and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, frozenset(self.terms.items())))

    def __str__(self):
        return format_terms(self.field, self.sorted_terms())

    def __repr__(self):
        return f"Poly({self}; {self.field.name})"


def as_poly(p):
    if isinstance(p, Poly):
        return p
    if isinstance(p, Form):
        return Poly.from_form(p)
    raise TypeError(f"cannot treat {type(p).__name__} as a polynomial")


def _lcm(m1, m2):
    return (max(m1[0], m2[0]), max(m1[1], m2[1]))


def _divides(m1, m2):
    return m1[0] <= m2[0] and m1[1] <= m2[1]


def spoly(g, h):
    """S-polynomial on the leading monomials.  Forms in, form out."""
    both_forms = isinstance(g, Form) and isinstance(h, Form)
    g, h = as_poly(g), as_poly(h)
    if not g or not h:
        raise UsageError("S-polynomial of the zero polynomial")
    f = g.field
    lg, lh = g.lm, h.lm
    L = _lcm(lg, lh)
    s = (g.mul_term((L[0] - lg[0], L[1] - lg[1]), f.inv(g.lc))
         - h.mul_term((L[0] - lh[0], L[1] - lh[1]), f.inv(h.lc)))
    return s.to_form() if both_forms else s


def divide(phi, G):
    """Multivariate division by the ordered list G.

    Returns (quotients, remainder).  The leading term of what is left is
    always cancelled by the first divisor whose leading monomial divides it.
    """
    phi = as_poly(phi)
    G = [as_poly(g) for g in G]
    f = phi.field
    divisors = []
    for g in G:
        if not g:
            raise UsageError("division by the zero polynomial")
        lm = g.lm
        divisors.append((lm, f.inv(g.terms[lm]), list(g.terms.items())))
    p = dict(phi.terms)
    rem = {}
    quots = [{} for _ in G]
    while p:
        mon = max(p, key=grlex_key)
        c = p[mon]
        for idx, (lm, inv_lc, gterms) in enumerate(divisors):
            if lm[0] <= mon[0] and lm[1] <= mon[1]:
                t = (mon[0] - lm[0], mon[1] - lm[1])
                coef = f.mul(c, inv_lc)
                quots[idx][t] = f.add(quots[idx].get(t, f.zero), coef)
                for (a, b), gc in gterms:
                    key = (a + t[0], b + t[1])
                    v = f.sub(p.get(key, f.zero), f.mul(coef, gc))
                    if f.is_zero(v):
                        p.pop(key, None)
                    else:
                        p[key] = v
                break
        else:
            rem[mon] = c
            del p[mon]
    return [Poly(f, q) for q in quots], Poly(f, rem)


def remainder(phi, G):
    return divide(phi, G)[1]


def buchberger(gens):
    """A monic grlex Groebner basis of the ideal generated by ``gens``.

    Normal selection strategy with the coprime-leader and chain criteria.
    """
    G = []
    for g in gens:
        g = as_poly(g)
        if g:
            g = g.monic()
            if g not in G:
                G.append(g)
    if not G:
        raise UsageError("buchberger needs a nonzero generator")
    lms = [g.lm for g in G]
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    while pairs:
        i, j = min(pairs, key=lambda p: (grlex_key(_lcm(lms[p[0]], lms[p[1]])), p))
        pairs.discard((i, j))
        li, lj = lms[i], lms[j]
        L = _lcm(li, lj)
        if li[0] + lj[0] == L[0] and li[1] + lj[1] == L[1]:
            continue
        if any(k not in (i, j) and _divides(lms[k], L)
               and (min(i, k), max(i, k)) not in pairs
               and (min(j, k), max(j, k)) not in pairs
               for k in range(len(G))):
            continue
        h = remainder(spoly(G[i], G[j]), G)
        if h:
            h = h.monic()
            n = len(G)
            G.append(h)
            lms.append(h.lm)
            pairs.update((k, n) for k in range(n))
    return G


def is_groebner(G) -> bool:
    """Buchberger's criterion with remainders taken in the stored order."""
    G = [as_poly(g) for g in G]
    for j in range(len(G)):
        for i in range(j):
            if remainder(spoly(G[i], G[j]), G):
                return False
    return True


def minimalize(G):
    """Drop elements whose leader is a multiple of another leader; make monic."""
    G = [as_poly(g).monic() for g in G if as_poly(g)]
    keep = []
    for i, g in enumerate(G):
        lm = g.lm
        redundant = False
        for j, h in enumerate(G):
            if j == i:
                continue
            if _divides(h.lm, lm) and (h.lm != lm or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    return keep


def _sort_desc(G):
    return sorted(G, key=lambda g: grlex_key(g.lm), reverse=True)


def reduce_gb(G):
    """The reduced Groebner basis from any Groebner basis, by decreasing leader."""
    G = minimalize(G)
    out = []
    for i, g in enumerate(G):
        others = G[:i] + G[i + 1:]
        out.append(remainder(g, others).monic() if others else g)
    return _sort_desc(out)


def is_minimal(G) -> bool:
    G = [as_poly(g) for g in G]
    if not all(g.is_monic() for g in G):
        return False
    lms = [g.lm for g in G]
    return not any(i != j and _divides(lms[i], lms[j])
                   for i in range(len(G)) for j in range(len(G)))


def is_reduced(G) -> bool:
    G = [as_poly(g) for g in G]
    if not is_minimal(G):
        return False
    lms = [g.lm for g in G]
    for i, g in enumerate(G):
        for mon in g.terms:
            if any(j != i and _divides(lms[j], mon) for j in range(len(G))):
                return False
    return True


def same_ideal(A, B) -> bool:
    """Mutual membership through Groebner bases."""
    GA, GB = buchberger(A), buchberger(B)
    return (all(not remainder(a, GB) for a in A)
            and all(not remainder(b, GA) for b in B))


# modules over k[x,z] with position-over-term order

class PolyVector:
    """An element of R^e."""

    __slots__ = ("components",)

    def __init__(self, components):
        self.components = tuple(as_poly(c) if not isinstance(c, Poly) else c for c in components)

    @classmethod
    def of(cls, field, *items):
        comps = []
        for c in items:
            if isinstance(c, (Poly, Form)):
                comps.append(as_poly(c))
            elif isinstance(c, str):
                comps.append(Poly.parse(c, field))
            else:
                comps.append(Poly(field, {(0, 0): field.coerce(c)}))
        return cls(comps)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, k):
        return self.components[k]

    def is_zero(self):
        return not any(self.components)

    def dot(self, polys):
        """Sum of components times the given polynomials (or scalars in rows)."""
        total = None
        for c, p in zip(self.components, polys):
            term = c * as_poly(p)
            total = term if total is None else total + term
        return total

    def combine(self, rows):
        """Sum of components times the given PolyVectors."""
        width = len(rows[0])
        field = rows[0][0].field
        out = [Poly(field) for _ in range(width)]
        for c, row in zip(self.components, rows):
            for k in range(width):
                out[k] = out[k] + c * row[k]
        return PolyVector(out)

    def __eq__(self, other):
        return isinstance(other, PolyVector) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.components) + "]"

    __repr__ = __str__


def _vlead(vec):
    """(position, monomial, coefficient) of the POT leading term."""
    for pos, comp in enumerate(vec):
        if comp:
            lm = max(comp, key=grlex_key)
            return pos, lm, comp[lm]
    return None


def _vec_dicts(v):
    return [dict(c.terms) for c in v.components]


def _vsub_term(field, target, t, coef, vec):
    """target -= coef * x^t0 z^t1 * vec (all sparse dicts, in place)."""
    for pos, comp in enumerate(vec):
        tp = target[pos]
        for (a, b), c in comp.items():
            key = (a + t[0], b + t[1])
            v = field.sub(tp.get(key, field.zero), field.mul(coef, c))
            if field.is_zero(v):
                tp.pop(key, None)
            else:
                tp[key] = v


def _vremainder(field, vec, basis):
    """Full POT reduction of a dict-vector by ``basis`` (list of (lead, dicts))."""
    vec = [dict(c) for c in vec]
    rem = [{} for _ in vec]
    while True:
        lead = _vlead(vec)
        if lead is None:
            return rem
        pos, mon, c = lead
        for (bpos, blm, binv), bvec in basis:
            if bpos == pos and _divides(blm, mon):
                t = (mon[0] - blm[0], mon[1] - blm[1])
                _vsub_term(field, vec, t, field.mul(c, binv), bvec)
                break
        else:
            rem[pos][mon] = c
            del vec[pos][mon]


def _entry(field, vec):
    pos, lm, c = _vlead(vec)
    return (pos, lm, field.inv(c)), vec


def module_gb(vectors):
    """Groebner basis of a submodule of R^e under position-over-term order."""
    vectors = [v for v in vectors if not v.is_zero()]
    if not vectors:
        return []
    field = next(c.field for v in vectors for c in v.components if c)
    basis = [_entry(field, _vec_dicts(v)) for v in vectors]
    pairs = {(i, j) for j in range(len(basis)) for i in range(j)
             if basis[i][0][0] == basis[j][0][0]}
    while pairs:
        i, j = min(pairs, key=lambda p: (basis[p[0]][0][0],
                                         grlex_key(_lcm(basis[p[0]][0][1], basis[p[1]][0][1])), p))
        pairs.discard((i, j))
        (pos, li, inv_i), vi = basis[i]
        (_, lj, inv_j), vj = basis[j]
        L = _lcm(li, lj)
        s = [{} for _ in vi]
        _vsub_term(field, s, (L[0] - li[0], L[1] - li[1]), field.neg(inv_i), vi)
        _vsub_term(field, s, (L[0] - lj[0], L[1] - lj[1]), inv_j, vj)
        r = _vremainder(field, s, basis)
        if _vlead(r) is not None:
            n = len(basis)
            basis.append(_entry(field, r))
            rpos = basis[n][0][0]
            pairs.update((k, n) for k in range(n) if basis[k][0][0] == rpos)
    return [PolyVector([Poly(field, c) for c in vec]) for _, vec in basis]


def module_remainder(vec, basis):
    """POT remainder of ``vec`` modulo a list of PolyVectors (in order)."""
    field = next((c.field for v in [vec, *basis] for c in v.components if c), None)
    if field is None:
        return vec
    entries = [_entry(field, _vec_dicts(b)) for b in basis if not b.is_zero()]
    r = _vremainder(field, _vec_dicts(vec), entries)
    return PolyVector([Poly(field, c) for c in r])


def syzygy_basis(rows):
    """Generators of the syzygies of ``rows`` (PolyVectors of equal length e).

    Each row r_i is extended by the unit tag e_i and placed after the
    image components; elements of a POT basis with zero image part are
    exactly a generating set of the syzygy module.
    """
    if not rows:
        return []
    e, r = len(rows[0]), len(rows)
    if any(len(v) != e for v in rows):
        raise UsageError("rows of different lengths")
    field = next((c.field for v in rows for c in v.components if c), None)
    if field is None:
        raise UsageError("syzygy_basis needs a nonzero row")
    tagged = []
    for i, v in enumerate(rows):
        tags = [Poly(field, {(0, 0): field.one} if k == i else {}) for k in range(r)]
        tagged.append(PolyVector(list(v.components) + tags))
    out = []
    for g in module_gb(tagged):
        if not any(g.components[:e]):
            out.append(PolyVector(g.components[e:]))
    return out


def intersect_ideals(f, g):
    """Homogeneous generators of <f> cap <g> (reduced Groebner basis, as forms).

    ``f`` and ``g`` are viable pairs or any sequences of generators.
    """
    A = [as_poly(p) for p in f if as_poly(p)]
    B = [as_poly(p) for p in g if as_poly(p)]
    if not A or not B:
        raise UsageError("intersection needs nonzero generators on both sides")
    field = A[0].field
    one, zero = Poly.constant(field), Poly(field)
    rows = [PolyVector([one, one])]
    rows += [PolyVector([a, zero]) for a in A]
    rows += [PolyVector([zero, b]) for b in B]
    gens = []
    for w in syzygy_basis(rows):
        if w[0]:
            gens.extend(w[0].homogeneous_components())
    if not gens:
        raise UsageError("empty intersection generator set")
    return [p.to_form() for p in reduce_gb(buchberger(gens))]
