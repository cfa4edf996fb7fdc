"""Finitely generated abelian groups and homomorphisms between them.

A group is stored *as presented*: a list of cyclic orders (``0`` for an
infinite cyclic factor) together with optional generator names such as
``"ν"`` or ``"σ"``.  Homomorphisms are integer matrices whose columns are
the images of the domain generators.  Every subquotient (kernel, image,
cokernel, homology) is computed through the Smith normal form of an
integer matrix, and comes back as a new presented group whose generators
carry labels written in terms of the ambient generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable, Sequence

from .arith import is_prime, nu_p
from .errors import DomainError, Indeterminate

Matrix = list[list[int]]
Vector = list[int]


# --------------------------------------------------------------------------
# integer matrices


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    if inner is None:
        inner = len(b)
    cols = len(b[0]) if b else 0
    return [
        [sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for row in a
    ]


def matvec(a: Matrix, v: Sequence[int]) -> Vector:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Matrix, ncols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def columns_to_matrix(cols: Sequence[Sequence[int]], nrows: int) -> Matrix:
    return [[c[i] for c in cols] for i in range(nrows)]


@dataclass
class SmithForm:
    """``D == U @ A @ V`` with ``U``, ``V`` unimodular; ``Uinv`` is ``U^-1``."""

    U: Matrix
    D: Matrix
    V: Matrix
    Uinv: Matrix
    diagonal: list[int]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def smith(A: Matrix, ncols: int | None = None) -> SmithForm:
    """Smith normal form with transforms.

    Pivots are chosen as the smallest nonzero entry in absolute value of the
    remaining block.  ``ncols`` is needed only when ``A`` has no rows.
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    D = [list(map(int, row)) for row in A]
    U, Uinv, V = identity(m), identity(m), identity(n)

    def swap_rows(i: int, j: int) -> None:
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i: int, j: int) -> None:
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, q: int) -> None:
        # row_dst += q * row_src
        for M in (D, U):
            rd, rs = M[dst], M[src]
            for k in range(len(rd)):
                rd[k] += q * rs[k]
        for row in Uinv:
            row[src] -= q * row[dst]

    def add_col(dst: int, src: int, q: int) -> None:
        for M in (D, V):
            for row in M:
                row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < best[0]):
                    best = (abs(D[i][j]), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
                    clean = clean and D[t][j] == 0
            if not clean:
                # a smaller remainder appeared in the pivot row/column
                cands = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
                cands += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
                _, i, j = min(cands)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n)
                 if D[i][j] % D[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            for M in (D, U):
                M[t] = [-x for x in M[t]]
            for row in Uinv:
                row[t] = -row[t]
        t += 1
    diagonal = [D[i][i] for i in range(min(m, n))]
    return SmithForm(U, D, V, Uinv, diagonal)


def smith_normal_form(A: Matrix, ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``D = U·A·V`` diagonal and ``d1 | d2 | ...``."""
    sf = smith(A, ncols)
    return sf.U, sf.D, sf.V


def lattice_basis(gens: Sequence[Sequence[int]], dim: int) -> list[Vector]:
    """A basis of the sublattice of ``Z^dim`` spanned by ``gens``."""
    if not gens:
        return []
    sf = smith(columns_to_matrix(gens, dim), len(gens))
    return [
        [d * sf.Uinv[r][i] for r in range(dim)]
        for i, d in enumerate(sf.diagonal)
        if d
    ]


def integer_kernel(A: Matrix, ncols: int) -> list[Vector]:
    """A basis of ``{x in Z^ncols : A x = 0}``."""
    sf = smith(A, ncols)
    r = sf.rank
    return [[sf.V[i][j] for i in range(ncols)] for j in range(r, ncols)]


def solve_integer(A: Matrix, b: Sequence[int], ncols: int) -> Vector | None:
    """Some integer ``x`` with ``A x = b``, or ``None`` if there is none."""
    sf = smith(A, ncols)
    w = matvec(sf.U, b)
    y = [0] * ncols
    for i, wi in enumerate(w):
        d = sf.diagonal[i] if i < len(sf.diagonal) else 0
        if d == 0:
            if wi:
                return None
        elif wi % d:
            return None
        else:
            y[i] = wi // d
    return matvec(sf.V, y)


# --------------------------------------------------------------------------
# groups and elements


def _validate_orders(orders: Iterable[int]) -> tuple[int, ...]:
    out = tuple(int(o) for o in orders)
    for o in out:
        if o < 0 or o == 1:
            raise DomainError(f"cyclic orders must be 0 or >= 2, got {o}")
    return out


@dataclass(frozen=True)
class FinAbGroup:
    """``Z/orders[0] + Z/orders[1] + ...`` with ``Z/0 = Z``."""

    orders: tuple[int, ...] = ()
    names: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "orders", _validate_orders(self.orders))
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != len(self.orders):
                raise DomainError("one name per generator required")
            object.__setattr__(self, "names", names)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def free_rank(self) -> int:
        return sum(1 for o in self.orders if o == 0)

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def is_trivial(self) -> bool:
        return not self.orders

    def order(self) -> int:
        """Cardinality, or ``0`` for an infinite group."""
        out = 1
        for o in self.orders:
            out *= o
        return out

    def invariants(self) -> tuple[tuple[int, ...], int]:
        """(invariant factors ``d1 | d2 | ...`` of the torsion, free rank)."""
        torsion = [o for o in self.orders if o]
        diag = smith([[o if i == j else 0 for j in range(len(torsion))]
                      for i, o in enumerate(torsion)], len(torsion)).diagonal
        return tuple(d for d in diag if d > 1), self.free_rank

    def relations(self) -> list[Vector]:
        n = self.rank
        return [[o if i == j else 0 for i in range(n)]
                for j, o in enumerate(self.orders) if o]

    def reduce(self, coords: Sequence[int]) -> tuple[int, ...]:
        if len(coords) != self.rank:
            raise DomainError(f"expected {self.rank} coordinates, got {len(coords)}")
        return tuple(c % o if o else int(c) for c, o in zip(coords, self.orders))

    def element(self, coords: Sequence[int]) -> Element:
        return Element(self, self.reduce(coords))

    def zero(self) -> Element:
        return Element(self, (0,) * self.rank)

    def gen(self, i: int | str) -> Element:
        if isinstance(i, str):
            if self.names is None or i not in self.names:
                raise DomainError(f"no generator named {i!r}")
            i = self.names.index(i)
        return self.element([int(j == i) for j in range(self.rank)])

    def label(self, coords: Sequence[int]) -> str | None:
        """Render a coordinate vector as ``"2σ"``, ``"ν̄+ε"``, ``"0"``..."""
        if self.names is None:
            return None
        terms = []
        for c, name in zip(self.reduce(coords), self.names):
            if c == 0:
                continue
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append("-" + name)
            else:
                terms.append(f"{c}{name}")
        return "+".join(terms).replace("+-", "-") if terms else "0"

    def with_names(self, names: Sequence[str] | None) -> FinAbGroup:
        return FinAbGroup(self.orders, None if names is None else tuple(names))

    def isomorphism_type(self) -> FinAbGroup:
        torsion, free = self.invariants()
        return FinAbGroup(torsion + (0,) * free)

    def __str__(self) -> str:
        return format_group(self)

    def to_json(self) -> dict:
        out: dict = {"orders": list(self.orders)}
        if self.names is not None:
            out["names"] = list(self.names)
        return out

    @classmethod
    def from_json(cls, data: dict) -> FinAbGroup:
        names = data.get("names")
        return cls(tuple(data["orders"]), None if names is None else tuple(names))


def cyclic(n: int, name: str | None = None) -> FinAbGroup:
    """``Z/n`` (``n = 0`` gives ``Z``, ``n = 1`` the trivial group)."""
    if n == 1:
        return FinAbGroup()
    return FinAbGroup((n,), None if name is None else (name,))


TRIVIAL = FinAbGroup()
Z = cyclic(0)


def format_group(G: FinAbGroup, labels: bool = False) -> str:
    """``"Z"``, ``"Z_24"``, ``"Z_2+Z_2"``, ``"0"``; optionally ``"Z_24⟨ν⟩"``."""
    if G.is_trivial():
        return "0"
    parts = ["Z" if o == 0 else f"Z_{o}" for o in G.orders]
    text = "+".join(parts)
    if labels and G.names is not None:
        text += "⟨" + ",".join(G.names) + "⟩"
    return text


def direct_sum(*groups: FinAbGroup) -> FinAbGroup:
    orders: list[int] = []
    names: list[str] = []
    named = all(g.names is not None for g in groups)
    for g in groups:
        orders.extend(g.orders)
        if named:
            names.extend(g.names or ())
    return FinAbGroup(tuple(orders), tuple(names) if named else None)


def is_isomorphic(G: FinAbGroup, H: FinAbGroup) -> bool:
    return G.invariants() == H.invariants()


@dataclass(frozen=True)
class Element:
    group: FinAbGroup
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", self.group.reduce(self.coords))

    def __add__(self, other: Element) -> Element:
        self._same(other)
        return self.group.element([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: Element) -> Element:
        self._same(other)
        return self.group.element([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> Element:
        return self.group.element([-a for a in self.coords])

    def __rmul__(self, k: int) -> Element:
        return self.group.element([k * a for a in self.coords])

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _same(self, other: Element) -> None:
        if other.group.orders != self.group.orders:
            raise DomainError("elements of different groups")

    def __str__(self) -> str:
        return self.group.label(self.coords) or str(list(self.coords))


def order_of(x: Element) -> int:
    """Order of ``x`` (``0`` when it has infinite order)."""
    out = 1
    for c, o in zip(x.coords, x.group.orders):
        if o == 0:
            if c:
                return 0
        else:
            out = lcm(out, o // gcd(o, c))
    return out


# --------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class GroupHom:
    """Matrix with ``codomain.rank`` rows; column ``j`` is the image of generator ``j``."""

    domain: FinAbGroup
    codomain: FinAbGroup
    matrix: tuple[tuple[int, ...], ...]

    def __init__(self, domain: FinAbGroup, codomain: FinAbGroup, matrix: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        if len(rows) != codomain.rank or any(len(r) != domain.rank for r in rows):
            raise DomainError(
                f"matrix shape must be {codomain.rank}x{domain.rank}"
            )
        # store reduced entries so equal maps compare equal
        rows = tuple(
            tuple(x % o if o else x for x in row)
            for row, o in zip(rows, codomain.orders)
        )
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)
        object.__setattr__(self, "matrix", rows)
        for j, d in enumerate(domain.orders):
            if d and not codomain.element([d * self.matrix[i][j] for i in range(codomain.rank)]).is_zero():
                raise DomainError(
                    f"ill-defined homomorphism: generator {j} has order {d} "
                    "but its image does not"
                )

    @classmethod
    def from_images(cls, domain: FinAbGroup, codomain: FinAbGroup,
                    images: Sequence[Sequence[int]]) -> GroupHom:
        return cls(domain, codomain, columns_to_matrix(images, codomain.rank))

    @classmethod
    def zero(cls, domain: FinAbGroup, codomain: FinAbGroup) -> GroupHom:
        return cls(domain, codomain, zeros(codomain.rank, domain.rank))

    @classmethod
    def scalar(cls, G: FinAbGroup, k: int) -> GroupHom:
        return cls(G, G, [[k * int(i == j) for j in range(G.rank)] for i in range(G.rank)])

    def column(self, j: int) -> Vector:
        return [self.matrix[i][j] for i in range(self.codomain.rank)]

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.domain.rank)]

    def __call__(self, x: Element) -> Element:
        if x.group.orders != self.domain.orders:
            raise DomainError("element not in the domain")
        return self.codomain.element(matvec([list(r) for r in self.matrix], x.coords))

    def compose(self, inner: GroupHom) -> GroupHom:
        """``self ∘ inner``."""
        if inner.codomain.orders != self.domain.orders:
            raise DomainError("non-composable homomorphisms")
        if self.domain.rank == 0:
            return GroupHom.zero(inner.domain, self.codomain)
        prod = matmul([list(r) for r in self.matrix],
                      [list(r) for r in inner.matrix], self.domain.rank)
        return GroupHom(inner.domain, self.codomain, prod)

    def is_zero(self) -> bool:
        return all(self.codomain.element(c).is_zero() for c in self.columns())

    def known_columns(self) -> list[Vector | None]:
        return self.columns()

    def is_total(self) -> bool:
        return True

    def to_json(self) -> dict:
        return {"domain": self.domain.to_json(), "codomain": self.codomain.to_json(),
                "matrix": [list(r) for r in self.matrix]}

    @classmethod
    def from_json(cls, data: dict, domain: FinAbGroup | None = None,
                  codomain: FinAbGroup | None = None) -> GroupHom:
        domain = domain or FinAbGroup.from_json(data["domain"])
        codomain = codomain or FinAbGroup.from_json(data["codomain"])
        return cls(domain, codomain, data["matrix"])


@dataclass(frozen=True)
class PartialHom:
    """A homomorphism of which only some generator images are known.

    ``images[j]`` is ``None`` where the image of generator ``j`` is unknown.
    """

    domain: FinAbGroup
    codomain: FinAbGroup
    images: tuple[tuple[int, ...] | None, ...]
    note: str = ""

    def __post_init__(self) -> None:
        imgs = tuple(None if c is None else self.codomain.reduce(c) for c in self.images)
        if len(imgs) != self.domain.rank:
            raise DomainError("one image slot per domain generator required")
        object.__setattr__(self, "images", imgs)

    def is_total(self) -> bool:
        return all(c is not None for c in self.images)

    def known_columns(self) -> list[Vector | None]:
        return [None if c is None else list(c) for c in self.images]

    def __call__(self, x: Element) -> Element:
        out = [0] * self.codomain.rank
        for c, img in zip(x.coords, self.images):
            if c == 0:
                continue
            if img is None:
                raise Indeterminate(f"image of {x} is not known")
            out = [a + c * b for a, b in zip(out, img)]
        return self.codomain.element(out)

    def to_json(self) -> dict:
        return {"domain": self.domain.to_json(), "codomain": self.codomain.to_json(),
                "partial": True,
                "images": [None if c is None else list(c) for c in self.images]}


# --------------------------------------------------------------------------
# subquotients


@dataclass(frozen=True)
class Subquotient:
    """A subquotient ``T/B`` of some ``Z^c``, decomposed into cyclic pieces.

    ``gens[i]`` is a representative in ``Z^c`` of a generator of order
    ``orders[i]``.
    """

    ambient: FinAbGroup
    gens: tuple[tuple[int, ...], ...]
    orders: tuple[int, ...]

    def group(self) -> FinAbGroup:
        labels = [self.ambient.label(g) for g in self.gens]
        names = None if any(lab is None for lab in labels) else tuple(labels)
        return FinAbGroup(self.orders, names)

    def elements(self) -> list[Element]:
        return [self.ambient.element(g) for g in self.gens]


def subquotient(ambient: FinAbGroup, top: Sequence[Sequence[int]] | None,
                bottom: Sequence[Sequence[int]]) -> Subquotient:
    """``span(top) / span(bottom)`` inside ``Z^c`` (``top=None`` means all of it).

    ``span(bottom)`` must lie in ``span(top)``.
    """
    c = ambient.rank
    basis = identity(c) if top is None else lattice_basis(top, c)
    l = len(basis)
    K = columns_to_matrix(basis, c)
    if l == 0:
        return Subquotient(ambient, (), ())
    sfK = smith(K, l)
    coeffs: list[Vector] = []
    for b in bottom:
        w = matvec(sfK.U, b)
        y = [0] * l
        for i, wi in enumerate(w):
            d = sfK.diagonal[i] if i < l else 0
            if d == 0:
                if wi:
                    raise DomainError("bottom lattice is not contained in top lattice")
            elif wi % d:
                raise DomainError("bottom lattice is not contained in top lattice")
            else:
                y[i] = wi // d
        coeffs.append(matvec(sfK.V, y))
    C = columns_to_matrix(coeffs, l)
    sfC = smith(C, len(coeffs))
    gens, orders = [], []
    for i in range(l):
        d = sfC.diagonal[i] if i < len(sfC.diagonal) else 0
        if d == 1:
            continue
        rep = list(ambient.reduce(matvec(K, [sfC.Uinv[r][i] for r in range(l)])))
        lead = next((x for x, o in zip(rep, ambient.orders) if o == 0 and x), 0)
        if lead < 0:
            rep = list(ambient.reduce([-x for x in rep]))
        gens.append(tuple(rep))
        orders.append(d)
    # list torsion before free summands, as in the invariant-factor chain
    pairs = sorted(zip(orders, gens), key=lambda p: (p[0] == 0,))
    return Subquotient(ambient, tuple(g for _, g in pairs), tuple(o for o, _ in pairs))


def _check_total(f) -> GroupHom:
    if not f.is_total():
        raise Indeterminate("homomorphism has unknown generator images")
    return f


def kernel_lattice(f: GroupHom) -> list[Vector]:
    """Spanning set of ``{x in Z^n : f(x) = 0 in the codomain}``."""
    f = _check_total(f)
    n, m = f.domain.rank, f.codomain.rank
    rel = f.codomain.relations()
    cols = f.columns() + rel
    B = columns_to_matrix(cols, m) if m else []
    ker = integer_kernel(B, len(cols))
    return [v[:n] for v in ker]


def kernel_sq(f: GroupHom) -> Subquotient:
    return subquotient(f.domain, kernel_lattice(f), f.domain.relations())


def image_sq(f: GroupHom) -> Subquotient:
    f = _check_total(f)
    rel = f.codomain.relations()
    return subquotient(f.codomain, f.columns() + rel, rel)


def cokernel_sq(f: GroupHom) -> Subquotient:
    f = _check_total(f)
    return subquotient(f.codomain, None, f.columns() + f.codomain.relations())


def homology_sq(incoming: GroupHom, outgoing: GroupHom) -> Subquotient:
    """``ker(outgoing) / im(incoming)`` at their common group."""
    incoming, outgoing = _check_total(incoming), _check_total(outgoing)
    mid = outgoing.domain
    if incoming.codomain.orders != mid.orders:
        raise DomainError("incoming and outgoing maps do not meet")
    bottom = incoming.columns() + mid.relations()
    return subquotient(mid, kernel_lattice(outgoing), bottom)


def kernel(f: GroupHom) -> FinAbGroup:
    return kernel_sq(f).group()


def image(f: GroupHom) -> FinAbGroup:
    return image_sq(f).group()


def cokernel(f: GroupHom) -> FinAbGroup:
    return cokernel_sq(f).group()


def homology(incoming: GroupHom, outgoing: GroupHom) -> FinAbGroup:
    return homology_sq(incoming, outgoing).group()


def in_subgroup(x: Element, gens: Sequence[Element | Sequence[int]]) -> bool:
    """Whether ``x`` lies in the subgroup generated by ``gens``."""
    G = x.group
    vecs = [list(g.coords) if isinstance(g, Element) else list(g) for g in gens]
    cols = vecs + G.relations()
    if not any(x.coords):
        return True
    if not cols:
        return False
    B = columns_to_matrix(cols, G.rank)
    return solve_integer(B, list(x.coords), len(cols)) is not None


# --------------------------------------------------------------------------
# p-primary parts


def _inverse_mod(a: int, m: int) -> int:
    return pow(a, -1, m) if m > 1 else 0


def _p_slots(G: FinAbGroup, p: int) -> list[tuple[int, int]]:
    """(index in G, p-primary order) for every factor surviving p-localization."""
    out = []
    for i, o in enumerate(G.orders):
        if o == 0:
            out.append((i, 0))
        else:
            q = p ** nu_p(p, o)
            if q > 1:
                out.append((i, q))
    return out


def p_component_group(G: FinAbGroup, p: int) -> FinAbGroup:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    slots = _p_slots(G, p)
    names = None if G.names is None else tuple(G.names[i] for i, _ in slots)
    return FinAbGroup(tuple(q for _, q in slots), names)


def p_component_hom(f: GroupHom, p: int) -> GroupHom:
    """The induced map between p-primary parts (free factors carried along)."""
    f = _check_total(f)
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    dom_slots, cod_slots = _p_slots(f.domain, p), _p_slots(f.codomain, p)
    mat = []
    for a, qa in cod_slots:
        oa = f.codomain.orders[a]
        # retraction Z/oa -> Z/qa splitting the inclusion 1 -> oa/qa
        proj = 1 if oa == 0 else _inverse_mod(oa // qa, qa)
        row = []
        for b, qb in dom_slots:
            ob = f.domain.orders[b]
            incl = 1 if ob == 0 else ob // qb
            v = f.matrix[a][b] * incl * proj
            row.append(v % qa if qa else v)
        mat.append(row)
    return GroupHom(p_component_group(f.domain, p), p_component_group(f.codomain, p), mat)


def p_component_partial(f: PartialHom, p: int) -> GroupHom | PartialHom:
    """Localize a partly known map; unknown images may become known (zero)."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    dom_slots, cod_slots = _p_slots(f.domain, p), _p_slots(f.codomain, p)
    known = [j for j, c in enumerate(f.images) if c is not None]
    sub = FinAbGroup(tuple(f.domain.orders[j] for j in known))
    # localize the known part as an honest homomorphism on those generators
    part = GroupHom.from_images(sub, f.codomain, [f.images[j] for j in known])
    part_p = p_component_hom(part, p)
    sub_slots = {j: idx for idx, (j0, _) in enumerate(_p_slots(sub, p))
                 for j in [known[j0]]}
    images: list[tuple[int, ...] | None] = []
    for b, _ in dom_slots:
        if b in sub_slots:
            images.append(tuple(part_p.column(sub_slots[b])))
        elif not cod_slots:
            images.append(())
        else:
            images.append(None)
    dom_p, cod_p = p_component_group(f.domain, p), p_component_group(f.codomain, p)
    if all(c is not None for c in images):
        return GroupHom.from_images(dom_p, cod_p, images)
    return PartialHom(dom_p, cod_p, tuple(images), f.note)


def p_component(obj, p: int):
    """p-primary part of a group, or the induced map of a homomorphism."""
    if isinstance(obj, FinAbGroup):
        return p_component_group(obj, p)
    if isinstance(obj, GroupHom):
        return p_component_hom(obj, p)
    if isinstance(obj, PartialHom):
        return p_component_partial(obj, p)
    raise TypeError(f"cannot localize {type(obj).__name__}")


def strip_primes(G: FinAbGroup, primes: Iterable[int]) -> FinAbGroup:
    """Remove the p-primary parts for the given primes (free part kept)."""
    primes = list(primes)
    orders, names = [], []
    for i, o in enumerate(G.orders):
        if o:
            for p in primes:
                while o % p == 0:
                    o //= p
            if o == 1:
                continue
        orders.append(o)
        if G.names is not None:
            names.append(G.names[i])
    return FinAbGroup(tuple(orders), tuple(names) if G.names is not None else None)
