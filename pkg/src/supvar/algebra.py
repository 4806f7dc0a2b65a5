"""gl(m|n) as explicit structure constants, and its detecting subalgebra.

Basis elements are the matrix units E_{a,b}, labeled ("E", a, b) with 1-based
indices.  The bracket is the supercommutator [A,B] = AB - (-1)^{|A||B|} BA,
so structure constants of matrix units are

    [E_ab, E_cd] = delta_{bc} E_ad - (-1)^{|ab||cd|} delta_{da} E_cb.

Super-antisymmetry and the graded Jacobi identity are checked on every basis
triple at construction time.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import SupvarError
from .linalg import ONE, ZERO, RationalMatrix
from .roots import eps

Label = tuple  # ("E", a, b)


def _unit_bracket(m: int, a: int, b: int, c: int, d: int) -> dict:
    """Supercommutator of E_ab and E_cd as a sparse element."""
    p1 = 1 if (a <= m) != (b <= m) else 0
    p2 = 1 if (c <= m) != (d <= m) else 0
    sign = -ONE if (p1 and p2) else ONE
    out: dict = {}
    if b == c:
        out[("E", a, d)] = out.get(("E", a, d), ZERO) + ONE
    if d == a:
        key = ("E", c, b)
        out[key] = out.get(key, ZERO) - sign * ONE
    return {k: v for k, v in out.items() if v}


class LieSuperalgebraData:
    """Finite basis with parities and structure constants."""

    def __init__(self, name, labels, parity, structure, weight_of=None, z_degree=None,
                 m=None, n=None, check=True):
        self.name = name
        self.labels = tuple(labels)
        self.parity = dict(parity)
        self.structure = structure  # dict[(label, label)] -> dict[label, Fraction]
        self.weight_of = weight_of or {}
        self.z_degree = z_degree or {}
        self.m = m
        self.n = n
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if check:
            self._check_axioms()

    def bracket(self, a: Label, b: Label) -> dict:
        return self.structure.get((a, b), {})

    def bracket_elements(self, x: dict, y: dict) -> dict:
        """Bilinear extension of the bracket to sparse elements."""
        out: dict = {}
        for la, ca in x.items():
            if not ca:
                continue
            for lb, cb in y.items():
                if not cb:
                    continue
                for lc, cc in self.bracket(la, lb).items():
                    v = out.get(lc, ZERO) + ca * cb * cc
                    if v:
                        out[lc] = v
                    else:
                        out.pop(lc, None)
        return out

    def even_labels(self) -> list:
        return [lab for lab in self.labels if self.parity[lab] == 0]

    def odd_labels(self) -> list:
        return [lab for lab in self.labels if self.parity[lab] == 1]

    def _check_axioms(self):
        par = self.parity
        for a in self.labels:
            for b in self.labels:
                ab = self.bracket(a, b)
                ba = self.bracket(b, a)
                # super-antisymmetry: [a,b] = -(-1)^{|a||b|} [b,a]
                sign = -ONE if (par[a] and par[b]) else ONE
                for k in set(ab) | set(ba):
                    if ab.get(k, ZERO) + sign * ba.get(k, ZERO) != 0:
                        raise SupvarError(f"super-antisymmetry fails on {a}, {b}")
        for a in self.labels:
            pa = par[a]
            for b in self.labels:
                pb = par[b]
                ab = self.bracket(a, b)
                for c in self.labels:
                    # graded Jacobi: [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
                    lhs = self.bracket_elements({a: ONE}, self.bracket(b, c))
                    rhs = self.bracket_elements(ab, {c: ONE})
                    sgn = -ONE if (pa and pb) else ONE
                    for k, v in self.bracket_elements({b: ONE}, self.bracket(a, c)).items():
                        nv = rhs.get(k, ZERO) + sgn * v
                        if nv:
                            rhs[k] = nv
                        else:
                            rhs.pop(k, None)
                    if lhs != rhs:
                        raise SupvarError(f"graded Jacobi fails on {a}, {b}, {c}")


def _gl_labels(m: int, n: int):
    size = m + n
    return [("E", a, b) for a in range(1, size + 1) for b in range(1, size + 1)]


def _gl_data(m: int, n: int, labels, name: str, check: bool) -> LieSuperalgebraData:
    parity = {("E", a, b): 1 if (a <= m) != (b <= m) else 0 for (_, a, b) in labels}
    z_degree = {}
    weights = {}
    structure = {}
    label_set = set(labels)
    for (_, a, b) in labels:
        if (a <= m) == (b <= m):
            z_degree[("E", a, b)] = 0
        elif a <= m:
            z_degree[("E", a, b)] = 1
        else:
            z_degree[("E", a, b)] = -1
        weights[("E", a, b)] = eps(m, n, a) - eps(m, n, b)
    for la in labels:
        for lb in labels:
            br = _unit_bracket(m, la[1], la[2], lb[1], lb[2])
            br = {k: v for k, v in br.items() if k in label_set}
            if br:
                structure[(la, lb)] = br
    return LieSuperalgebraData(
        name, labels, parity, structure, weight_of=weights, z_degree=z_degree,
        m=m, n=n, check=check,
    )


@lru_cache(maxsize=None)
def gl_superalgebra(m: int, n: int, check: bool = True) -> LieSuperalgebraData:
    """gl(m|n) with its consistent Z-grading recorded per basis element."""
    if m < 1 or n < 1:
        raise ValueError("m, n must be >= 1")
    return _gl_data(m, n, _gl_labels(m, n), f"gl({m}|{n})", check)


@lru_cache(maxsize=None)
def gl_even_subalgebra(m: int, n: int, check: bool = True) -> LieSuperalgebraData:
    """The even part gl(m) + gl(n), as a Lie algebra in its own right."""
    labels = [lab for lab in _gl_labels(m, n) if (lab[1] <= m) == (lab[2] <= m)]
    return _gl_data(m, n, labels, f"gl({m})+gl({n})", check)


def element_matrix(m: int, n: int, element: dict) -> RationalMatrix:
    """Sparse gl(m|n) element as an (m+n) x (m+n) matrix."""
    size = m + n
    rows = [[ZERO] * size for _ in range(size)]
    for (_, a, b), coeff in element.items():
        rows[a - 1][b - 1] += coeff
    return RationalMatrix(rows)


class DetectingSubalgebra:
    """The rank-variety home: r odd generators inside gl(m|n).

    The odd generators are x_t = E_{m+1-t,m+t} + E_{m+t,m+1-t} for
    t = 1..min(m,n).  They pairwise supercommute and each square is the
    diagonal element E_{m+1-t,m+1-t} + E_{m+t,m+t}.
    """

    def __init__(self, m: int, n: int):
        if m < 1 or n < 1:
            raise ValueError("m, n must be >= 1")
        self.m, self.n = m, n
        self.r = min(m, n)
        g = gl_superalgebra(m, n)
        self.odd_basis = tuple(
            {("E", m + 1 - t, m + t): ONE, ("E", m + t, m + 1 - t): ONE}
            for t in range(1, self.r + 1)
        )
        # x_t^2 = [x_t, x_t] / 2, stored as the even-part generators used here
        self.squares = tuple(
            {k: v / 2 for k, v in g.bracket_elements(x, x).items()} for x in self.odd_basis
        )
        for s, xs in enumerate(self.odd_basis):
            for t, xt in enumerate(self.odd_basis):
                if s != t and g.bracket_elements(xs, xt):
                    raise SupvarError("detecting generators fail to supercommute")
        for sq in self.squares:
            if any(a != b for (_, a, b) in sq):
                raise SupvarError("a detecting generator square is not diagonal")

    def matrix(self, t: int) -> RationalMatrix:
        """Defining-representation matrix of x_t (1-based t)."""
        return element_matrix(self.m, self.n, self.odd_basis[t - 1])

    def generator_labels(self, t: int) -> tuple:
        """The two matrix-unit labels entering x_t (1-based t)."""
        m = self.m
        return (("E", m + 1 - t, m + t), ("E", m + t, m + 1 - t))


@lru_cache(maxsize=None)
def detecting_subalgebra(m: int, n: int) -> DetectingSubalgebra:
    return DetectingSubalgebra(m, n)
