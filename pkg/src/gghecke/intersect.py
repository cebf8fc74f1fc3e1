"""Left U-coset representatives of double-coset intersections.

For Weyl elements x, y, z and torus parts t_x, t_y, t_z, the set

    U (x' ) U  meet  z' U (y')^{-1} U,    x' = lift(x) t_x,  etc.

is a finite union of cosets gU.  Representatives are parametrized by
distinguished subexpressions j of the fixed reduced word of x together
with a tuple mu of root-group parameters: positions are scanned from the
right, each position is either omitted (type B, only allowed at descents
of the running product times y) or chosen (type A at descents, C at
ascents), and the end condition requires the chosen product to equal
z y^{-1}.  Parameter domains are F_q at A positions, F_q^x at B
positions, and the fixed value 1 at C positions.

Each (j, mu) yields a generator word D_j(mu); rewriting it into Bruhat
normal form twice (once with the B-position factors expressed through
positive root elements) cross-checks the relation tables and exposes the
two factorized shapes.  From the U x U shape we read off the unipotent
head/tail and the torus t_mu; translating by lift(z)^{-1} exposes the
z-side head/tail and the involutive correction torus t_0.  The toral
condition then selects, for given (t_x, t_y, t_z), which (j, mu) land in
the intersection.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .chevalley import Group, GroupElem, chevalley_group
from .gf import Field
from .rootsys import Cmp, WeylElem, weyl_group

__all__ = [
    "Subexpr",
    "MuAssignment",
    "CosetRep",
    "distinguished_subexprs",
    "classify",
    "mu_assignments",
    "build_rep",
    "intersect",
    "left_coset_key",
    "rep_to_dict",
]


def _tag_of(w: WeylElem) -> str:
    try:
        return {6: "A2", 8: "B2"}[len(w.perm)]
    except KeyError:
        raise ValueError("Weyl element does not belong to a rank-2 type") from None


@dataclass(frozen=True)
class Subexpr:
    """A distinguished subexpression of the reduced word of x.

    Positions m = 1..n count from the right end of the word; jvec and
    types are stored in display order (leftmost letter first), so
    position m lives at index n - m.  taus[m] is the product of the
    chosen letters at positions m..1; a_set/b_set/c_set hold positions.
    """

    tag: str
    x: WeylElem
    y: WeylElem
    z: WeylElem
    jvec: tuple
    types: str
    taus: tuple
    a_set: frozenset
    b_set: frozenset
    c_set: frozenset

    @property
    def word(self) -> tuple:
        return self.x.word

    def __len__(self) -> int:
        return len(self.jvec)

    def __repr__(self) -> str:
        return f"Subexpr({list(self.jvec)}, {self.types})"


@dataclass(frozen=True)
class MuAssignment:
    """Root-group parameters in display order (field codes)."""

    field: Field
    values: tuple

    def __repr__(self) -> str:
        return f"MuAssignment({list(self.values)})"


@dataclass(frozen=True)
class CosetRep:
    """One coset representative with both factorized shapes.

    uxu = (u, m, u2) and zuy = (zf, v, tail) are triples of GroupElems
    with u*m*u2 = g = zf*v*tail.  head_x/tail_x are the coordinates of
    the U x U shape's unipotent factors, head_z/tail_z those of the
    z-side shape (tail_z rides inside zuy[2] for a bare build_rep).
    t_mu and t_zero are torus character pairs; t_zero is an involution.
    """

    j: Subexpr
    mu: MuAssignment
    g: GroupElem
    uxu: tuple
    zuy: tuple
    t_mu: tuple
    t_zero: tuple
    head_x: tuple
    tail_x: tuple
    head_z: tuple
    tail_z: tuple


def _walk(tag: str, x: WeylElem, y: WeylElem, jvec) -> tuple:
    """Types and partial products for a j-vector; raises if not valid."""
    W = weyl_group(tag)
    word = x.word
    n = len(word)
    jvec = tuple(jvec)
    if len(jvec) != n:
        raise ValueError("j-vector length does not match the word")
    tau = W.identity
    taus = [tau]
    types = []
    for m in range(1, n + 1):
        i = word[n - m]
        jm = jvec[n - m]
        d = W.descent(tau, i, y)
        if jm == 0:
            if d is not Cmp.LESS:
                raise ValueError("omitted letter at an ascent: not distinguished")
            types.append("B")
        elif jm == i:
            types.append("A" if d is Cmp.LESS else "C")
            tau = W.mult(W.simple(i), tau)
        else:
            raise ValueError("j-vector entry is neither 0 nor the word letter")
        taus.append(tau)
    return "".join(reversed(types)), tuple(taus)


def _make_subexpr(tag, x, y, z, jvec) -> Subexpr:
    types, taus = _walk(tag, x, y, jvec)
    n = len(jvec)
    by_m = {m: types[n - m] for m in range(1, n + 1)}
    return Subexpr(
        tag=tag,
        x=x,
        y=y,
        z=z,
        jvec=tuple(jvec),
        types=types,
        taus=taus,
        a_set=frozenset(m for m, c in by_m.items() if c == "A"),
        b_set=frozenset(m for m, c in by_m.items() if c == "B"),
        c_set=frozenset(m for m, c in by_m.items() if c == "C"),
    )


@lru_cache(maxsize=None)
def distinguished_subexprs(x: WeylElem, y: WeylElem, z: WeylElem) -> tuple:
    """All distinguished j with end product z y^{-1}, lex-ordered on j."""
    tag = _tag_of(x)
    if _tag_of(y) != tag or _tag_of(z) != tag:
        raise ValueError("mixed types")
    W = weyl_group(tag)
    target = W.mult(z, W.inv(y))
    word = x.word
    n = len(word)
    found = []

    def rec(m, tau, jrev):
        if m > n:
            if tau == target:
                found.append(tuple(reversed(jrev)))
            return
        i = word[n - m]
        if W.descent(tau, i, y) is Cmp.LESS:
            rec(m + 1, tau, jrev + [0])
        rec(m + 1, W.mult(W.simple(i), tau), jrev + [i])

    rec(1, W.identity, [])
    return tuple(_make_subexpr(tag, x, y, z, j) for j in sorted(found))


def classify(sub: Subexpr) -> str:
    """Recompute the type string of a subexpression from scratch."""
    types, _ = _walk(sub.tag, sub.x, sub.y, sub.jvec)
    return types


def mu_assignments(sub: Subexpr, field: Field):
    """All parameter tuples for sub, in display-lexicographic order."""
    domains = []
    for c in sub.types:
        if c == "A":
            domains.append(tuple(field.elements()))
        elif c == "B":
            domains.append(tuple(field.units()))
        else:
            domains.append((1,))
    for values in product(*domains):
        yield MuAssignment(field, values)


def _validate_mu(sub: Subexpr, mu: MuAssignment):
    if len(mu.values) != len(sub.types):
        raise ValueError("parameter tuple length mismatch")
    for c, v in zip(sub.types, mu.values):
        if not 0 <= v < mu.field.q:
            raise ValueError("parameter code out of range")
        if c == "B" and v == 0:
            raise ValueError("B-position parameter must be a unit")
        if c == "C" and v != 1:
            raise ValueError("C-position parameter is fixed to 1")


@lru_cache(maxsize=None)
def build_rep(sub: Subexpr, mu: MuAssignment) -> CosetRep:
    """Normal-form D_j(mu) and extract both factorized shapes."""
    _validate_mu(sub, mu)
    G = chevalley_group(sub.tag, mu.field)
    F, W = G.F, G.W
    word = sub.x.word
    d_atoms = []
    dp_atoms = []
    for i, jv, c, m in zip(word, sub.jvec, sub.types, mu.values):
        if c == "B":
            d_atoms.append(("u", i + G.N, m))
            r = F.inv(m)
            dp_atoms += [("u", i, r), ("n", i, F.neg(r)), ("u", i, r)]
        elif c == "A":
            d_atoms += [("u", i, m), ("n", i, 1)]
            dp_atoms += [("u", i, m), ("n", i, 1)]
        else:
            d_atoms.append(("n", i, 1))
            dp_atoms.append(("n", i, 1))
    g = G.normal_form(d_atoms)
    if g != G.normal_form(dp_atoms):
        raise AssertionError("the two factor shapes disagree: relation tables broken")
    if g.w != sub.x:
        raise AssertionError("representative left the U x U cell")
    t_mu = (
        G.chi_at(g.t, W.act(sub.x, 1)),
        G.chi_at(g.t, W.act(sub.x, 2)),
    )
    xtmu = G.multiply(G.lift(sub.x), G.torus(*t_mu))
    uxu = (G.unipotent(g.u), xtmu, G.unipotent(g.u2))

    zf = G.lift(sub.z)
    h = G.multiply(G.invert(zf), g)
    yinv = W.inv(sub.y)
    if h.w != yinv:
        raise AssertionError("representative left the z U y^{-1} U cell")
    t0e = G.multiply(G.lift(sub.y), G.torus(*h.t), G.lift(yinv))
    if t0e.w.length() or any(t0e.u) or any(t0e.u2):
        raise AssertionError("correction torus is not toral")
    t_zero = t0e.t
    if F.mul(t_zero[0], t_zero[0]) != 1 or F.mul(t_zero[1], t_zero[1]) != 1:
        raise AssertionError("correction torus is not an involution")
    v = G.unipotent(h.u)
    tail = G.multiply(G.invert(v), h)
    zuy = (zf, v, tail)
    rep = CosetRep(
        j=sub,
        mu=mu,
        g=g,
        uxu=uxu,
        zuy=zuy,
        t_mu=t_mu,
        t_zero=t_zero,
        head_x=g.u,
        tail_x=g.u2,
        head_z=h.u,
        tail_z=h.u2,
    )
    if G.multiply(*uxu) != g or G.multiply(*zuy) != g:
        raise AssertionError("factor shapes do not multiply back")
    return rep


def _toral_part(arg, G: Group) -> tuple:
    if isinstance(arg, GroupElem):
        if arg.w.length() or any(arg.u) or any(arg.u2):
            raise ValueError("torus argument is not toral")
        return arg.t
    t = tuple(arg)
    if len(t) != 2:
        raise ValueError("torus argument must have two coordinates")
    return t


def intersect(x, t_x, y, t_y, z, t_z, group: Group | None = None) -> list:
    """Coset representatives of U(xt_x)U meet (zt_z)U(yt_y)^{-1}U.

    Torus arguments are toral GroupElems or character pairs; a Group is
    required when none of them is a GroupElem.
    """
    if group is None:
        for cand in (t_x, t_y, t_z):
            if isinstance(cand, GroupElem):
                group = cand.group
                break
        else:
            raise ValueError("no group to work in")
    G = group
    tx = _toral_part(t_x, G)
    ty = _toral_part(t_y, G)
    tz = _toral_part(t_z, G)
    W = G.W
    xtx = G.multiply(G.lift(x), G.torus(*tx))
    yty_inv = G.invert(G.multiply(G.lift(y), G.torus(*ty)))
    ztz = G.multiply(G.lift(z), G.torus(*tz))
    xinv = W.inv(x)
    want_t = (G.chi_at(tx, W.act(xinv, 1)), G.chi_at(tx, W.act(xinv, 2)))
    out = []
    for sub in distinguished_subexprs(x, y, z):
        for mu in mu_assignments(sub, G.F):
            base = build_rep(sub, mu)
            g = G.multiply(ztz, base.zuy[1], yty_inv)
            if g.w != x:
                raise AssertionError("representative left the U x U cell")
            if g.t != want_t:
                continue
            u = G.unipotent(g.u)
            u2 = G.unipotent(g.u2)
            if G.multiply(u, xtx, u2) != g:
                raise AssertionError("factor shapes do not multiply back")
            out.append(
                CosetRep(
                    j=sub,
                    mu=mu,
                    g=g,
                    uxu=(u, xtx, u2),
                    zuy=(ztz, base.zuy[1], yty_inv),
                    t_mu=base.t_mu,
                    t_zero=base.t_zero,
                    head_x=g.u,
                    tail_x=g.u2,
                    head_z=base.head_z,
                    tail_z=base.tail_z,
                )
            )
    return out


def left_coset_key(g: GroupElem) -> tuple:
    """Canonical key of the coset gU.

    g = u t n_w u2 gives gU = u t n_w U, so the key is (t, w) plus u
    reduced modulo right multiplication by U meet w U w^{-1} (the
    positive roots not inverted by w^{-1}), leaving coordinates only on
    the inversion set of w^{-1}.
    """
    G = g.group
    keep = G.inv_set(G.W.inv(g.w))
    u = G.unipotent(g.u)
    for idx in range(1, G.N + 1):
        if idx in keep:
            continue
        c = u.u[idx - 1]
        if c:
            coords = [0] * G.N
            coords[idx - 1] = G.F.neg(c)
            u = G.multiply(u, G.unipotent(coords))
    return (g.t, g.w.perm, u.u)


def rep_to_dict(rep: CosetRep) -> dict:
    return {
        "j": list(rep.j.jvec),
        "type": rep.j.types,
        "mu": list(rep.mu.values),
        "rep": rep.g.to_dict(),
        "t_mu": list(rep.t_mu),
        "t_0": list(rep.t_zero),
        "uxu": [e.to_dict() for e in rep.uxu],
        "zuy": [e.to_dict() for e in rep.zuy],
    }
