"""Adjoint Chevalley groups of types A2 and B2 over a small finite field,
with exact rewriting to Bruhat normal form.

Normal form is g = u * t * n_w * u', where u lies in U (coordinates over the
positive roots in the fixed order), t lies in the adjoint torus T = (F_q^*)^2
recorded by its character values (chi(alpha1), chi(alpha2)), n_w is the
canonical lift of w (product of n_i(1) over the canonical reduced word; the
braid relations make the lift word-independent), and u' is supported on the
inversion set of w.

Generators: u_alpha(x) for every root alpha, n_i(t) =
u_i(t) u_{-i}(-1/t) u_i(t) for simple i, and the fundamental-coweight
cocharacters t_1(l), t_2(l) with chi(alpha_j) = l^{delta_ij}.  The group is
presented by the commutator relations

    u1(x) u2(z) u1(-x) = u2(z) u3(xz)              (A2)
    u1(x) u2(z) u1(-x) = u2(z) u3(xz) u4(x^2 z)    (B2)
    u1(x) u3(z) u1(-x) = u3(z) u4(2xz)             (B2)

(all other positive pairs commute), the torus scaling of root coordinates by
chi(alpha1)^c1 chi(alpha2)^c2 for beta = c1 alpha1 + c2 alpha2, and the
n_i-conjugation n_i u_beta(c) n_i^{-1} = u_{s_i beta}(eta_i(beta) c).  The
signs eta are not free: they are derived once per type by seeding the
Chevalley structure constants N from the relations above, closing under
antisymmetry / negation / the zero-sum-triple proportionality, and evaluating
Ad(n_i) = exp(ad e) exp(-ad f) exp(ad e) as an exact rational matrix on the
adjoint Lie algebra.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .gf import Field
from .rootsys import RootSystem, WeylElem, WeylGroup, root_system, weyl_group

# u_i(a) u_j(b) = u_j(b) u_i(a) * prod u_k(c * a^m * b^n), entries (k, c, m, n)
_SWAPS = {
    "A2": {
        (1, 2): ((3, 1, 1, 1),),
        (2, 1): ((3, -1, 1, 1),),
    },
    "B2": {
        (1, 2): ((3, 1, 1, 1), (4, -1, 2, 1)),
        (2, 1): ((3, -1, 1, 1), (4, 1, 1, 2)),
        (1, 3): ((4, 2, 1, 1),),
        (3, 1): ((4, -2, 1, 1),),
    },
}

_N_SEEDS = {
    "A2": {((1, 0), (0, 1)): 1},
    "B2": {((1, 0), (0, 1)): 1, ((1, 0), (1, 1)): 2},
}


def _mat_zero(d):
    return [[Fraction(0)] * d for _ in range(d)]


def _mat_mul(a, b):
    d = len(a)
    out = _mat_zero(d)
    for i in range(d):
        ai = a[i]
        oi = out[i]
        for k in range(d):
            c = ai[k]
            if c:
                bk = b[k]
                for j in range(d):
                    if bk[j]:
                        oi[j] += c * bk[j]
    return out


def _mat_exp(m):
    d = len(m)
    out = [[Fraction(1 if i == j else 0) for j in range(d)] for i in range(d)]
    term = [row[:] for row in out]
    for k in range(1, d + 2):
        term = [[c / k for c in row] for row in _mat_mul(term, m)]
        if all(all(c == 0 for c in row) for row in term):
            return out
        for i in range(d):
            for j in range(d):
                out[i][j] += term[i][j]
    raise AssertionError("ad matrix is not nilpotent")


@lru_cache(maxsize=None)
def _eta_table(tag: str) -> dict[tuple[int, int], int]:
    """Signs eta[(i, idx)] with n_i u_idx(c) n_i^{-1} = u_{s_i idx}(eta c)."""
    rs = root_system(tag)
    n = rs.n_pos
    idxs = range(1, 2 * n + 1)

    def radd(a, b):
        ra, rb = rs.root(a), rs.root(b)
        return (ra[0] + rb[0], ra[1] + rb[1])

    wanted = {
        (a, b)
        for a in idxs
        for b in idxs
        if radd(a, b) != (0, 0) and rs.is_root(radd(a, b))
    }
    N: dict[tuple[int, int], Fraction] = {}

    def put(key, val):
        if key in N:
            if N[key] != val:
                raise AssertionError(f"inconsistent N at {key}: {N[key]} vs {val}")
            return False
        N[key] = val
        return True

    for (ra, rb), v in _N_SEEDS[tag].items():
        put((rs.index(ra), rs.index(rb)), Fraction(v))

    def negidx(a):
        return a + n if a <= n else a - n

    changed = True
    while changed:
        changed = False
        for (a, b), v in list(N.items()):
            changed |= put((b, a), -v)
            changed |= put((negidx(a), negidx(b)), -v)
            # zero-sum triple (a, b, c) with c = -(a+b):
            # N(a,b)/|c|^2 = N(b,c)/|a|^2 = N(c,a)/|b|^2
            c = negidx(rs.index(radd(a, b)))
            changed |= put((b, c), v * rs.norm(a) / rs.norm(c))
            changed |= put((c, a), v * rs.norm(b) / rs.norm(c))
    if set(N) != wanted:
        raise AssertionError("structure constant closure incomplete")
    for v in N.values():
        if v.denominator != 1:
            raise AssertionError("non-integral structure constant")

    dim = 2 * n + 2

    def row(idx):
        return idx - 1

    def ad(a):
        m = _mat_zero(dim)
        ra = rs.root(a)
        for b in idxs:
            s = radd(a, b)
            if s == (0, 0):
                # [e_a, e_{-a}] = coroot of root(a); a is +-simple here
                simple = a if a <= n else a - n
                m[2 * n + simple - 1][row(b)] = Fraction(1 if a <= n else -1)
            elif rs.is_root(s):
                m[row(rs.index(s))][row(b)] = N[(a, b)]
        for i in (1, 2):
            m[row(a)][2 * n + i - 1] = -Fraction(rs.pairing(ra, i))
        return m

    out: dict[tuple[int, int], int] = {}
    for i in (1, 2):
        ea = _mat_exp(ad(i))
        fneg = _mat_exp([[-c for c in r] for r in ad(i + n)])
        w = _mat_mul(_mat_mul(ea, fneg), ea)
        for b in idxs:
            tgt = row(rs.reflect(i, b))
            for r in range(dim):
                v = w[r][row(b)]
                if r == tgt:
                    if v not in (1, -1):
                        raise AssertionError(f"eta not a sign: {v}")
                    out[(i, b)] = int(v)
                elif v != 0:
                    raise AssertionError("Ad(n_i) does not permute root spaces")
        for b in idxs:
            sb = rs.reflect(i, b)
            if out[(i, b)] * out[(i, sb)] != (-1) ** rs.pairing(rs.root(b), i):
                raise AssertionError("eta violates n_i^2 = h_i(-1)")
    return out


class GroupElem:
    """Bruhat normal form u * t * n_w * u'.  Immutable."""

    __slots__ = ("group", "u", "t", "w", "u2")

    def __init__(self, group: "Group", u, t, w: WeylElem, u2):
        n = group.rs.n_pos
        inv = group.inv_set(w)
        if any(c and (i + 1) not in inv for i, c in enumerate(u2)):
            raise ValueError("u' has support outside the inversion set")
        if t[0] == 0 or t[1] == 0:
            raise ValueError("torus coordinates must be units")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "u", tuple(u))
        object.__setattr__(self, "t", tuple(t))
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "u2", tuple(u2))

    def __setattr__(self, *a):
        raise AttributeError("GroupElem is immutable")

    def key(self):
        return (self.u, self.t, self.w.perm, self.u2)

    def __eq__(self, other):
        return isinstance(other, GroupElem) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return (
            f"GroupElem(u={self.u}, t={self.t}, w={self.w.digits() or 'e'},"
            f" u2={self.u2})"
        )

    def to_dict(self) -> dict:
        return {
            "u": list(self.u),
            "t": list(self.t),
            "w": self.w.digits(),
            "u2": list(self.u2),
        }


class Group:
    """Rewriting engine for one (type, field) pair."""

    def __init__(self, tag: str, field: Field):
        if tag == "B2" and field.p == 2:
            raise ValueError("type B2 requires odd characteristic")
        self.tag = tag
        self.F = field
        self.rs: RootSystem = root_system(tag)
        self.W: WeylGroup = weyl_group(tag)
        self.N = self.rs.n_pos
        F = field
        self._swaps = {
            key: tuple((k, F.of(c), m, n) for (k, c, m, n) in rules)
            for key, rules in _SWAPS[tag].items()
        }
        self._eta = {key: F.of(v) for key, v in _eta_table(tag).items()}
        self._refl = {
            i: {idx: self.rs.reflect(i, idx) for idx in range(1, 2 * self.N + 1)}
            for i in (1, 2)
        }
        self._inv_sets = {
            w: frozenset(self.W.inversions(w)) for w in self.W.elements
        }
        # for each non-simple positive root, a simple reflection lowering it
        self._desc = {}
        for g in range(3, self.N + 1):
            for i in (1, 2):
                if self.rs.pairing(self.rs.root(g), i) > 0:
                    self._desc[g] = i
                    break
        self._id = GroupElem(self, (0,) * self.N, (1, 1), self.W.identity, (0,) * self.N)

    # -- atoms ----------------------------------------------------------------

    def atom_u(self, idx: int, x: int):
        """u_alpha(x); idx in 1..2N (negative roots are idx > N)."""
        return ("u", idx, x)

    def atom_n(self, i: int, t: int = 1):
        if i not in (1, 2):
            raise ValueError("n-atoms exist for simple roots only")
        if t == 0:
            raise ValueError("n_i(0) is undefined")
        return ("n", i, t)

    def atom_t(self, i: int, lam: int):
        if lam == 0:
            raise ValueError("torus parameter must be a unit")
        return ("T", lam, 1) if i == 1 else ("T", 1, lam)

    def atom_torus(self, chi1: int, chi2: int):
        if chi1 == 0 or chi2 == 0:
            raise ValueError("torus parameter must be a unit")
        return ("T", chi1, chi2)

    # -- torus helpers ----------------------------------------------------------

    def chi_at(self, t, idx: int) -> int:
        """chi_t evaluated at the root with index idx."""
        c1, c2 = self.rs.root(idx)
        F = self.F
        return F.mul(F.pow(t[0], c1), F.pow(t[1], c2))

    def chi_at_pair(self, t, pair) -> int:
        F = self.F
        return F.mul(F.pow(t[0], pair[0]), F.pow(t[1], pair[1]))

    def inv_set(self, w: WeylElem) -> frozenset:
        return self._inv_sets[w]

    # -- collection --------------------------------------------------------------

    def _collect(self, items, rank):
        """Sort a u-atom list by rank, applying the commutator corrections."""
        F = self.F
        swaps = self._swaps
        items = [it for it in items if it[1] != 0]
        i = 0
        guard = 0
        while i < len(items) - 1:
            ia, ca = items[i]
            ib, cb = items[i + 1]
            if ia == ib:
                s = F.add(ca, cb)
                if s:
                    items[i] = (ia, s)
                    del items[i + 1]
                else:
                    del items[i : i + 2]
                i = max(i - 1, 0)
                continue
            if rank(ia) > rank(ib):
                repl = [(ib, cb), (ia, ca)]
                for k, c, m, nn in swaps.get((ia, ib), ()):
                    val = F.mul(c, F.mul(F.pow(ca, m), F.pow(cb, nn)))
                    if val:
                        repl.append((k, val))
                items[i : i + 2] = repl
                i = max(i - 1, 0)
                guard += 1
                if guard > 100000:
                    raise AssertionError("collection failed to terminate")
                continue
            i += 1
        return items

    @staticmethod
    def _items(coords):
        return [(i + 1, c) for i, c in enumerate(coords) if c]

    def _coords(self, items):
        out = [0] * self.N
        for idx, c in items:
            if not 1 <= idx <= self.N or out[idx - 1]:
                raise AssertionError("bad collected support")
            out[idx - 1] = c
        return out

    def _conj_n_fwd(self, i, items):
        """n_i * x * n_i^{-1} per atom."""
        F, eta, refl = self.F, self._eta, self._refl[i]
        return [(refl[idx], F.mul(eta[(i, idx)], c)) for idx, c in items]

    def _conj_n_back(self, i, items):
        """n_i^{-1} * x * n_i per atom."""
        F, eta, refl = self.F, self._eta, self._refl[i]
        return [(refl[idx], F.mul(eta[(i, refl[idx])], c)) for idx, c in items]

    # -- absorption into normal form ------------------------------------------------

    def _absorb(self, st, atom):
        kind = atom[0]
        if kind == "u":
            _, idx, c = atom
            if idx <= self.N:
                self._absorb_u_pos(st, idx, c)
            else:
                self._absorb_u_neg(st, idx, c)
        elif kind == "T":
            self._absorb_torus(st, atom[1], atom[2])
        elif kind == "n":
            self._absorb_n(st, atom[1], atom[2])
        else:
            raise ValueError(f"unknown atom {atom!r}")

    def _absorb_u_pos(self, st, idx, c):
        if c == 0:
            return
        u, t, w, u2 = st
        items = self._items(u2)
        items.append((idx, c))
        inv = self._inv_sets[w]
        if len(inv) == self.N:  # longest element: everything stays in u'
            st[3] = self._coords(self._collect(items, lambda k: k))
            return
        split = self._collect(
            items, lambda k, inv=inv: (1, k) if k in inv else (0, k)
        )
        cut = 0
        while cut < len(split) and split[cut][0] not in inv:
            cut += 1
        a, b = split[:cut], split[cut:]
        if a:
            for letter in reversed(w.word):
                a = self._conj_n_fwd(letter, a)
            F = self.F
            a = [(k, F.mul(self.chi_at(t, k), v)) for k, v in a]
            if any(k > self.N for k, _ in a):
                raise AssertionError("conjugated complement left U")
            st[0] = self._coords(self._collect(self._items(u) + a, lambda k: k))
        st[3] = self._coords(b)

    def _absorb_u_neg(self, st, idx, c):
        if c == 0:
            return
        F = self.F
        g = idx - self.N
        if g in (1, 2):
            y = F.inv(c)
            self._absorb_u_pos(st, g, y)
            self._absorb_n(st, g, F.neg(y))
            self._absorb_u_pos(st, g, y)
            return
        i = self._desc[g]
        delta = self._refl[i][g]
        eta = self._eta[(i, idx)]
        self._absorb_n(st, i, F.neg(F.of(1)))
        self._absorb_u_neg(st, delta + self.N, F.mul(eta, c))
        self._absorb_n(st, i, 1)

    def _absorb_torus(self, st, chi1, chi2):
        u, t, w, u2 = st
        F = self.F
        tp = (chi1, chi2)
        winv = self.W.inv(w)
        st[1] = [
            F.mul(t[0], self.chi_at(tp, self.W.act(winv, 1))),
            F.mul(t[1], self.chi_at(tp, self.W.act(winv, 2))),
        ]
        st[3] = [F.mul(F.inv(self.chi_at(tp, i + 1)), c) if c else 0 for i, c in enumerate(u2)]

    def _absorb_n(self, st, i, c):
        F = self.F
        if c == 0:
            raise ValueError("n_i(0) is undefined")
        if c != 1:
            cart = self.rs.cartan[i - 1]
            self._absorb_torus(st, F.pow(c, cart[0]), F.pow(c, cart[1]))
        u, t, w, u2 = st
        items = self._collect(
            self._items(u2), lambda k, i=i: (1, k) if k == i else (0, k)
        )
        if items and items[-1][0] == i:
            ci = items[-1][1]
            v = items[:-1]
        else:
            ci = 0
            v = items
        wnew = self.W.mult(w, self.W.simple(i))
        decreasing = self.W.act(w, i) > self.N
        if not decreasing:
            if ci:
                raise AssertionError("alpha_i coordinate in u' outside inversion set")
            st[2] = wnew
            st[3] = self._coords(self._collect(self._conj_n_back(i, v), lambda k: k))
            return
        if ci == 0:
            st[2] = wnew
            st[3] = self._coords(self._collect(self._conj_n_back(i, v), lambda k: k))
            # n_w = n_{wnew} n_i, and the leftover n_i^2 = h_i(-1) moves into t
            neg1 = F.neg(F.of(1))
            cart = self.rs.cartan[i - 1]
            h = (F.pow(neg1, cart[0]), F.pow(neg1, cart[1]))
            winv = self.W.inv(wnew)
            tt = st[1]
            st[1] = [
                F.mul(tt[0], self.chi_at(h, self.W.act(winv, 1))),
                F.mul(tt[1], self.chi_at(h, self.W.act(winv, 2))),
            ]
            return
        # u_i(ci) n_i = n_i u_{-i}(-ci), then expand the negative root element
        st[3] = self._coords(v)
        self._absorb_n(st, i, 1)
        y = F.neg(F.inv(ci))
        self._absorb_u_pos(st, i, y)
        self._absorb_n(st, i, F.inv(ci))
        self._absorb_u_pos(st, i, y)

    # -- public API ------------------------------------------------------------------

    def identity(self) -> GroupElem:
        return self._id

    def normal_form(self, word) -> GroupElem:
        st = [[0] * self.N, [1, 1], self.W.identity, [0] * self.N]
        for atom in word:
            self._absorb(st, atom)
        return GroupElem(self, st[0], st[1], st[2], st[3])

    def expansion(self, g: GroupElem):
        """A generator word multiplying back to g."""
        atoms = [("u", i + 1, c) for i, c in enumerate(g.u) if c]
        if g.t != (1, 1):
            atoms.append(("T", g.t[0], g.t[1]))
        atoms.extend(("n", i, 1) for i in g.w.word)
        atoms.extend(("u", i + 1, c) for i, c in enumerate(g.u2) if c)
        return atoms

    def multiply(self, g: GroupElem, *hs: GroupElem) -> GroupElem:
        self._check(g)
        st = [list(g.u), list(g.t), g.w, list(g.u2)]
        for h in hs:
            self._check(h)
            for atom in self.expansion(h):
                self._absorb(st, atom)
        return GroupElem(self, st[0], st[1], st[2], st[3])

    def invert(self, g: GroupElem) -> GroupElem:
        F = self.F
        atoms = []
        for atom in reversed(self.expansion(g)):
            if atom[0] == "u":
                atoms.append(("u", atom[1], F.neg(atom[2])))
            elif atom[0] == "n":
                atoms.append(("n", atom[1], F.neg(atom[2])))
            else:
                atoms.append(("T", F.inv(atom[1]), F.inv(atom[2])))
        return self.normal_form(atoms)

    def _check(self, g: GroupElem):
        if g.group.F != self.F or g.group.tag != self.tag:
            raise ValueError("element belongs to a different group")

    def unipotent(self, coords) -> GroupElem:
        coords = tuple(coords)
        if len(coords) != self.N:
            raise ValueError(f"need {self.N} coordinates")
        return GroupElem(self, coords, (1, 1), self.W.identity, (0,) * self.N)

    def torus(self, chi1: int, chi2: int) -> GroupElem:
        return GroupElem(self, (0,) * self.N, (chi1, chi2), self.W.identity, (0,) * self.N)

    def torus_from_params(self, lam1: int, lam2: int) -> GroupElem:
        """t_1(lam1) t_2(lam2)."""
        return self.torus(lam1, lam2)

    def lift(self, w: WeylElem) -> GroupElem:
        return self.normal_form([("n", i, 1) for i in w.word])

    def delta_coords(self, u) -> tuple[int, int]:
        """Simple-root coordinates; a homomorphism U -> (F_q, +)^2."""
        coords = u.u if isinstance(u, GroupElem) else u
        return (coords[0], coords[1])

    def torus_conjugate(self, t, u_coords):
        """Coordinates of t * u * t^{-1}."""
        F = self.F
        return tuple(
            F.mul(self.chi_at(t, i + 1), c) if c else 0
            for i, c in enumerate(u_coords)
        )

    def iter_elements(self):
        """Every normal form, exactly once."""
        F = self.F
        units = list(F.units())
        space = list(F.elements())
        for w in self.W.elements:
            inv = sorted(self._inv_sets[w])
            for t1 in units:
                for t2 in units:
                    yield from self._iter_cell(w, inv, (t1, t2), space)

    def _iter_cell(self, w, inv, t, space):
        n = self.N
        ucounter = [0] * n

        def rec_u(pos, coords):
            if pos == n:
                yield tuple(coords)
                return
            for x in space:
                coords[pos] = x
                yield from rec_u(pos + 1, coords)
            coords[pos] = 0

        for u in rec_u(0, [0] * n):
            base = [0] * n

            def rec_u2(k, coords):
                if k == len(inv):
                    yield tuple(coords)
                    return
                for x in space:
                    coords[inv[k] - 1] = x
                    yield from rec_u2(k + 1, coords)
                coords[inv[k] - 1] = 0

            for u2 in rec_u2(0, base):
                yield GroupElem(self, u, t, w, u2)

    def order(self) -> int:
        q = self.F.q
        return (
            q**self.N
            * (q - 1) ** 2
            * sum(q ** w.length() for w in self.W.elements)
        )


_GROUPS: dict = {}


def chevalley_group(tag: str, field: Field) -> Group:
    key = (tag, field)
    if key not in _GROUPS:
        _GROUPS[key] = Group(tag, field)
    return _GROUPS[key]
