"""Explicit supermodules for gl(m|n) with exact rational action matrices.

Construction chain:

* ``L0_module`` builds the simple gl(m) x gl(n) module of a dominant integral
  highest weight.  Each block weight is shifted by a power of the determinant
  character to a polynomial weight, the highest-weight cyclic submodule is
  extracted from a tensor power of the natural representation by exact
  closure under the lowering operators, and the determinant twist is undone
  on the diagonal actions.

* ``kac_module`` induces from L0 inflated to the parabolic g0 + g1.  The PBW
  basis is y_S tensor v with S a subset of the mn odd negative root vectors
  E_{j,i} (i <= m < j) in a fixed row-major order; action matrices come from
  straightening: supercommute the acting element past the monomial, let g1
  annihilate the top layer and g0 act on L0 at the right end.

* ``simple_module`` is the quotient of the Kac module by the radical of its
  contravariant form.  The form pairs weight spaces orthogonally, declares
  the top layer to carry the inner product inherited from the tensor-power
  construction, and satisfies <a.u, u'> = <u, tau(a).u'> for the transpose
  tau(E_ab) = E_ba; the radical is then the maximal proper submodule.

All reps are immutable after construction; actions are stored as sparse
columns and materialize to ``RationalMatrix`` on demand.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .algebra import LieSuperalgebraData, gl_even_subalgebra, gl_superalgebra
from .config import RunConfig
from .errors import (
    AlgebraMismatch,
    ConstructionOverflow,
    FormInconsistent,
    NotDominant,
    ShapeMismatch,
)
from .linalg import (
    ONE,
    ZERO,
    IncrementalSpan,
    RationalMatrix,
    SuperVectorSpace,
    format_scalar,
    kernel_basis,
    rank,
    solve,
)
from .roots import Weight, dim_L0, format_weight, is_dominant_integral, weight, zero_weight

FORM_VERIFY_DIM_LIMIT = 80  # full adjointness check below this dimension


class SuperModuleRep:
    """A finite dimensional supermodule with weight-labeled basis."""

    def __init__(self, algebra: LieSuperalgebraData, parities, weights, actions,
                 basis_names=None, meta=None):
        self.algebra = algebra
        self.parities = tuple(parities)
        self.weights = tuple(weights)
        # actions: dict[label] -> dict[col] -> dict[row] -> Fraction
        self.actions = actions
        self.basis_names = tuple(basis_names) if basis_names else tuple(
            f"b{i}" for i in range(len(self.parities))
        )
        self.meta = dict(meta or {})

    @property
    def dim(self) -> int:
        return len(self.parities)

    @property
    def space(self) -> SuperVectorSpace:
        return SuperVectorSpace(list(zip(self.basis_names, self.parities)))

    @property
    def superdimension(self) -> int:
        return sum(1 if p == 0 else -1 for p in self.parities)

    def action_column(self, label, col: int) -> dict:
        return self.actions.get(label, {}).get(col, {})

    def apply_label(self, label, vec: dict) -> dict:
        cols = self.actions.get(label, {})
        out: dict = {}
        for i, c in vec.items():
            if not c:
                continue
            for j, a in cols.get(i, {}).items():
                v = out.get(j, ZERO) + c * a
                if v:
                    out[j] = v
                else:
                    out.pop(j, None)
        return out

    def apply_element(self, element: dict, vec: dict) -> dict:
        out: dict = {}
        for label, coeff in element.items():
            if not coeff:
                continue
            for j, a in self.apply_label(label, vec).items():
                v = out.get(j, ZERO) + coeff * a
                if v:
                    out[j] = v
                else:
                    out.pop(j, None)
        return out

    def action_matrix(self, label) -> RationalMatrix:
        d = self.dim
        rows = [[ZERO] * d for _ in range(d)]
        for col, entries in self.actions.get(label, {}).items():
            for row, val in entries.items():
                rows[row][col] = val
        return RationalMatrix(rows)

    def __repr__(self):
        return f"SuperModuleRep(dim={self.dim}, algebra={self.algebra.name})"


def _empty_actions(algebra) -> dict:
    return {label: {} for label in algebra.labels}


def trivial_module(algebra: LieSuperalgebraData) -> SuperModuleRep:
    m = algebra.m or 1
    n = algebra.n or 1
    return SuperModuleRep(
        algebra, [0], [zero_weight(m, n)], _empty_actions(algebra),
        basis_names=["1"], meta={"kind": "trivial"},
    )


# ---------------------------------------------------------------------------
# simple gl(k) factors inside tensor powers of the natural representation


def _apply_unit_tensor(a: int, b: int, vec: dict) -> dict:
    """E_ab acting on a tensor-power vector {index tuple: coeff} (1-based)."""
    out: dict = {}
    for idx, coeff in vec.items():
        for pos, entry in enumerate(idx):
            if entry == b:
                nidx = idx[:pos] + (a,) + idx[pos + 1 :]
                v = out.get(nidx, ZERO) + coeff
                if v:
                    out[nidx] = v
                else:
                    out.pop(nidx, None)
    return out


def _highest_weight_tensor(mu: tuple[int, ...]) -> dict:
    """Antisymmetrized column tensors for the partition mu (mu_k = 0 allowed)."""
    vec = {(): ONE}
    height = len(mu)
    width = mu[0] if mu else 0
    for col in range(1, width + 1):
        h = sum(1 for part in mu if part >= col)
        column: dict = {}
        for perm in permutations(range(1, h + 1)):
            sign = ONE
            perm_list = list(perm)
            for i in range(len(perm_list)):
                for j in range(i + 1, len(perm_list)):
                    if perm_list[i] > perm_list[j]:
                        sign = -sign
            column[perm] = sign
        vec = {
            i1 + i2: c1 * c2 for i1, c1 in vec.items() for i2, c2 in column.items()
        }
    return vec


def _gl_factor_module(k: int, block: tuple, budget: int):
    """Simple GL(k) module data for a weakly decreasing integer weight.

    Returns (dim, weights, action cols dict[(a,b)] -> cols, gram rows).
    """
    shift = block[-1]
    mu = tuple(int(c - shift) for c in block)
    degree = sum(mu)
    if degree == 0:
        actions = {(a, b): ({0: {0: Fraction(shift)}} if a == b and shift else {})
                   for a in range(1, k + 1) for b in range(1, k + 1)}
        return 1, [tuple(Fraction(shift) for _ in range(k))], actions, [[ONE]]
    if k**degree > budget:
        raise ConstructionOverflow(
            f"tensor power dimension {k}**{degree} exceeds budget {budget}"
        )
    hw = _highest_weight_tensor(mu)
    span = IncrementalSpan()
    span.add(hw)
    basis_vecs = [hw]
    queue = [hw]
    lowering = [(i + 1, i) for i in range(1, k)]
    while queue:
        v = queue.pop(0)
        for (a, b) in lowering:
            w = _apply_unit_tensor(a, b, v)
            if w and span.add(w):
                basis_vecs.append(w)
                queue.append(w)
    dim = len(basis_vecs)
    actions = {}
    for a in range(1, k + 1):
        for b in range(1, k + 1):
            cols = {}
            for col, v in enumerate(basis_vecs):
                w = _apply_unit_tensor(a, b, v)
                if a == b and shift:
                    for idx, c in v.items():
                        nv = w.get(idx, ZERO) + Fraction(shift) * c
                        if nv:
                            w[idx] = nv
                        else:
                            w.pop(idx, None)
                if not w:
                    continue
                coords = span.express(w)
                if coords is None:
                    raise ShapeMismatch("lowering closure is not action stable")
                cols[col] = {r: c for r, c in coords.items() if c}
            actions[(a, b)] = cols
    weights = []
    for v in basis_vecs:
        idx = next(iter(v))
        weights.append(tuple(Fraction(idx.count(i) + shift) for i in range(1, k + 1)))
    gram = [
        [sum((ci * basis_vecs[j].get(t, ZERO) for t, ci in basis_vecs[i].items()), ZERO)
         for j in range(dim)]
        for i in range(dim)
    ]
    # normalize so the highest weight vector has norm one
    scale = gram[0][0]
    gram = [[x / scale for x in row] for row in gram]
    return dim, weights, actions, gram


def L0_module(lam: Weight, budget: int = RunConfig.dimension_budget) -> SuperModuleRep:
    """Simple gl(m) x gl(n) module of highest weight lam, even-concentrated.

    The module carries a ``gram`` entry in ``meta``: the matrix of the
    standard inner product inherited from the tensor-power construction, used
    as the top-layer seed of the contravariant form on Kac modules.
    """
    if not is_dominant_integral(lam):
        raise NotDominant(f"{format_weight(lam)} is not dominant integral")
    m, n = lam.m, lam.n
    algebra = gl_even_subalgebra(m, n)
    d1, w1, act1, gram1 = _gl_factor_module(m, lam.first_block, budget)
    d2, w2, act2, gram2 = _gl_factor_module(n, lam.second_block, budget)
    dim = d1 * d2
    if dim != dim_L0(lam):
        raise ShapeMismatch("constructed dimension disagrees with the Weyl formula")

    def pair(i, j):
        return i * d2 + j

    actions = {}
    for label in algebra.labels:
        _, a, b = label
        cols: dict = {}
        if a <= m and b <= m:
            for i, entries in act1[(a, b)].items():
                for j in range(d2):
                    cols[pair(i, j)] = {pair(r, j): v for r, v in entries.items()}
        else:
            for j, entries in act2[(a - m, b - m)].items():
                for i in range(d1):
                    cols[pair(i, j)] = {pair(i, r): v for r, v in entries.items()}
        actions[label] = cols
    weights = [
        weight(m, n, w1[i] + w2[j]) for i in range(d1) for j in range(d2)
    ]
    gram = [
        [gram1[i1][j1] * gram2[i2][j2] for j1 in range(d1) for j2 in range(d2)]
        for i1 in range(d1) for i2 in range(d2)
    ]
    return SuperModuleRep(
        algebra, [0] * dim, weights, actions,
        basis_names=[f"v{i}" for i in range(dim)],
        meta={"kind": "l0", "weight": lam, "gram": gram},
    )


# ---------------------------------------------------------------------------
# Kac modules by PBW straightening


def _odd_negative_labels(m: int, n: int) -> list:
    return [("E", a, b) for a in range(m + 1, m + n + 1) for b in range(1, m + 1)]


def kac_module(lam: Weight, budget: int = RunConfig.dimension_budget) -> SuperModuleRep:
    """The universal highest weight supermodule induced from L0(lam)."""
    m, n = lam.m, lam.n
    g = gl_superalgebra(m, n)
    L0 = L0_module(lam, budget)
    y_labels = _odd_negative_labels(m, n)
    y_pos = {lab: i for i, lab in enumerate(y_labels)}
    mn = len(y_labels)
    dim = (1 << mn) * L0.dim
    if dim > budget:
        raise ConstructionOverflow(f"Kac module dimension {dim} exceeds budget {budget}")

    subsets = []
    for mask in range(1 << mn):
        subsets.append(tuple(i for i in range(mn) if mask >> i & 1))
    subsets.sort(key=lambda s: (len(s), s))
    basis = [(S, t) for S in subsets for t in range(L0.dim)]
    basis_index = {key: i for i, key in enumerate(basis)}

    def prepend(h: int, S: tuple, t: int, coeff: Fraction, out: dict):
        """Add coeff * y_h y_S v_t, straightened, into out."""
        if h in S:
            return
        pos = 0
        while pos < len(S) and S[pos] < h:
            pos += 1
        if pos % 2:
            coeff = -coeff
        key = (S[:pos] + (h,) + S[pos:], t)
        v = out.get(key, ZERO) + coeff
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    memo: dict = {}

    def act(label, S: tuple, t: int) -> dict:
        cached = memo.get((label, S, t))
        if cached is not None:
            return cached
        out: dict = {}
        deg = g.z_degree[label]
        if not S:
            if deg == -1:
                out[((y_pos[label],), t)] = ONE
            elif deg == 0:
                for r, c in L0.action_column(label, t).items():
                    out[((), r)] = c
        else:
            h, rest = S[0], S[1:]
            y_lab = y_labels[h]
            for lab2, cb in g.bracket(label, y_lab).items():
                for (S2, t2), c in act(lab2, rest, t).items():
                    v = out.get((S2, t2), ZERO) + cb * c
                    if v:
                        out[(S2, t2)] = v
                    else:
                        out.pop((S2, t2), None)
            sign = -ONE if g.parity[label] else ONE
            for (S2, t2), c in act(label, rest, t).items():
                prepend(h, S2, t2, sign * c, out)
        memo[(label, S, t)] = out
        return out

    actions = {}
    for label in g.labels:
        cols = {}
        for col, (S, t) in enumerate(basis):
            res = act(label, S, t)
            if res:
                cols[col] = {basis_index[key]: c for key, c in res.items()}
        actions[label] = cols

    weights = []
    parities = []
    names = []
    for S, t in basis:
        w = L0.weights[t]
        for h in S:
            _, a, b = y_labels[h]
            w = w + g.weight_of[("E", a, b)]
        weights.append(w)
        parities.append(len(S) % 2)
        names.append("y[" + ",".join(str(h + 1) for h in S) + f"]v{t}")
    return SuperModuleRep(
        g, parities, weights, actions, basis_names=names,
        meta={
            "kind": "kac", "weight": lam, "l0_gram": L0.meta["gram"],
            "l0_dim": L0.dim, "basis": basis, "y_labels": y_labels,
        },
    )


# ---------------------------------------------------------------------------
# contravariant form and simple heads


def _transpose_label(label):
    _, a, b = label
    return ("E", b, a)


def _form_blocks(K: SuperModuleRep, gram_scale: Fraction = ONE) -> dict:
    """Weight blocks of the contravariant form on a Kac module.

    Returns {weight coords: (global indices, matrix rows)}.  Entries follow
    the peel rule <y_h u', w> = <u', tau(y_h) w> down to the top layer, where
    the form is the L0 inner product.  Distinct weight spaces pair to zero
    because each block weight pins the monomial length.
    """
    if K.meta.get("kind") != "kac":
        raise FormInconsistent("the contravariant form is seeded on Kac modules")
    basis = K.meta["basis"]
    y_labels = K.meta["y_labels"]
    l0_gram = K.meta["l0_gram"]
    K.meta.setdefault("basis_index", {key: i for i, key in enumerate(basis)})
    by_weight: dict = {}
    for i, (S, t) in enumerate(basis):
        by_weight.setdefault(K.weights[i].coords, []).append(i)
    blocks: dict = {}
    layer_of = {w: len(basis[idxs[0]][0]) for w, idxs in by_weight.items()}
    value_cache: dict = {}

    def block_value(i: int, j: int) -> Fraction:
        got = value_cache.get((i, j))
        if got is not None:
            return got
        S, t = basis[i]
        if not S:
            S2, t2 = basis[j]
            val = (l0_gram[t][t2] if not S2 else ZERO) * gram_scale
        else:
            h, rest = S[0], S[1:]
            up = K.apply_label(_transpose_label(y_labels[h]), {j: ONE})
            i2 = K.meta["basis_index"][(rest, t)]
            val = sum((c * block_value(i2, z) for z, c in up.items()), ZERO)
        value_cache[(i, j)] = val
        return val

    for wcoords, idxs in sorted(by_weight.items(), key=lambda kv: (layer_of[kv[0]], kv[0])):
        rows = [[block_value(i, j) for j in idxs] for i in idxs]
        for a in range(len(idxs)):
            for b in range(a + 1, len(idxs)):
                if rows[a][b] != rows[b][a]:
                    raise FormInconsistent("contravariant form block is not symmetric")
        blocks[wcoords] = (idxs, rows)
    return blocks


def _verify_form_adjointness(K: SuperModuleRep, blocks: dict):
    """Check <a.u, u'> = <u, tau(a).u'> for every algebra basis element."""
    lookup = {}
    for wcoords, (idxs, rows) in blocks.items():
        for a, i in enumerate(idxs):
            for b, j in enumerate(idxs):
                lookup[(i, j)] = rows[a][b]

    def form(vec1: dict, vec2: dict) -> Fraction:
        total = ZERO
        for i, c1 in vec1.items():
            for j, c2 in vec2.items():
                v = lookup.get((i, j))
                if v:
                    total += c1 * c2 * v
        return total

    for label in K.algebra.labels:
        tl = _transpose_label(label)
        for i in range(K.dim):
            left = K.apply_label(label, {i: ONE})
            for j in range(K.dim):
                lhs = form(left, {j: ONE})
                rhs = form({i: ONE}, K.apply_label(tl, {j: ONE}))
                if lhs != rhs:
                    raise FormInconsistent(
                        f"adjointness fails for {label} on basis pair ({i},{j})"
                    )


def contravariant_form(K: SuperModuleRep, verify: str | bool = "auto",
                       gram_scale: Fraction = ONE) -> RationalMatrix:
    """The contravariant form of a Kac module as a symmetric matrix."""
    blocks = _form_blocks(K, gram_scale=gram_scale)
    if verify is True or (verify == "auto" and K.dim <= FORM_VERIFY_DIM_LIMIT):
        _verify_form_adjointness(K, blocks)
    d = K.dim
    rows = [[ZERO] * d for _ in range(d)]
    for _, (idxs, block_rows) in blocks.items():
        for a, i in enumerate(idxs):
            for b, j in enumerate(idxs):
                rows[i][j] = block_rows[a][b]
    return RationalMatrix(rows)


def simple_module(lam: Weight, budget: int = RunConfig.dimension_budget,
                  verify_form: str | bool = "auto",
                  gram_scale: Fraction = ONE) -> SuperModuleRep:
    """Simple head of the Kac module: quotient by the form radical."""
    K = kac_module(lam, budget)
    blocks = _form_blocks(K, gram_scale=gram_scale)
    if verify_form is True or (verify_form == "auto" and K.dim <= FORM_VERIFY_DIM_LIMIT):
        _verify_form_adjointness(K, blocks)

    kept: list[int] = []
    radical: dict = {}  # weight coords -> list of sparse radical vectors (local coords)
    kept_local: dict = {}  # weight coords -> list of local positions kept
    for wcoords, (idxs, rows) in blocks.items():
        size = len(idxs)
        rad = kernel_basis(RationalMatrix(rows)) if size else []
        if rad:
            span = IncrementalSpan()
            for v in rad:
                span.add({k: c for k, c in enumerate(v) if c})
            local_kept = [p for p in range(size) if p not in span.pivots()]
        else:
            local_kept = list(range(size))
        radical[wcoords] = [dict((k, c) for k, c in enumerate(v) if c) for v in rad]
        kept_local[wcoords] = local_kept
        kept.extend(idxs[p] for p in local_kept)
    kept.sort()
    new_index = {old: new for new, old in enumerate(kept)}

    # quotient coordinates: solve against radical + kept unit vectors per block
    block_of = {}
    for wcoords, (idxs, _) in blocks.items():
        for pos, i in enumerate(idxs):
            block_of[i] = (wcoords, pos)
    solvers: dict = {}

    def reduce_to_kept(vec: dict) -> dict:
        """Express vec (sparse over K) modulo the radical in kept coordinates."""
        out: dict = {}
        grouped: dict = {}
        for i, c in vec.items():
            wcoords, pos = block_of[i]
            grouped.setdefault(wcoords, {})[pos] = c
        for wcoords, local_vec in grouped.items():
            idxs, _ = blocks[wcoords]
            rad = radical[wcoords]
            lk = kept_local[wcoords]
            if not rad:
                for pos, c in local_vec.items():
                    out[new_index[idxs[pos]]] = c
                continue
            solver = solvers.get(wcoords)
            if solver is None:
                cols = [[v.get(r, ZERO) for r in range(len(idxs))] for v in rad]
                cols += [[ONE if r == p else ZERO for r in range(len(idxs))] for p in lk]
                solver = RationalMatrix.from_columns(cols)
                solvers[wcoords] = solver
            target = [local_vec.get(r, ZERO) for r in range(len(idxs))]
            coords = solve(solver, target)
            if coords is None:
                raise FormInconsistent("quotient solve failed inside a weight block")
            for k, p in enumerate(lk):
                c = coords[len(rad) + k]
                if c:
                    out[new_index[idxs[p]]] = c
        return out

    actions = {}
    for label in K.algebra.labels:
        cols = {}
        for new_col, old in enumerate(kept):
            img = K.apply_label(label, {old: ONE})
            red = reduce_to_kept(img)
            if red:
                cols[new_col] = red
        actions[label] = cols
    weights = [K.weights[i] for i in kept]
    parities = [K.parities[i] for i in kept]
    names = [K.basis_names[i] for i in kept]

    # the induced form on the quotient must be nondegenerate
    for wcoords, (idxs, rows) in blocks.items():
        lk = kept_local[wcoords]
        if lk:
            sub = RationalMatrix([[rows[p][q] for q in lk] for p in lk])
            if rank(sub) != len(lk):
                raise FormInconsistent("induced form on the quotient is degenerate")

    return SuperModuleRep(
        K.algebra, parities, weights, actions, basis_names=names,
        meta={"kind": "simple", "weight": lam, "kac_dim": K.dim},
    )


# ---------------------------------------------------------------------------
# tensor, dual, parity shift, direct sum


def _check_same_algebra(M: SuperModuleRep, N: SuperModuleRep):
    if M.algebra is not N.algebra and M.algebra.name != N.algebra.name:
        raise AlgebraMismatch(f"{M.algebra.name} vs {N.algebra.name}")


def tensor(M: SuperModuleRep, N: SuperModuleRep) -> SuperModuleRep:
    """M tensor N with the Koszul sign: a(u@w) = au@w + (-1)^{|a||u|} u@aw."""
    _check_same_algebra(M, N)
    dn = N.dim
    dim = M.dim * dn

    def pair(i, j):
        return i * dn + j

    actions = {}
    for label in M.algebra.labels:
        pa = M.algebra.parity[label]
        cols: dict = {}
        m_cols = M.actions.get(label, {})
        n_cols = N.actions.get(label, {})
        for i in range(M.dim):
            sign = -ONE if (pa and M.parities[i]) else ONE
            for j in range(N.dim):
                col: dict = {}
                for r, c in m_cols.get(i, {}).items():
                    col[pair(r, j)] = c
                for r, c in n_cols.get(j, {}).items():
                    key = pair(i, r)
                    v = col.get(key, ZERO) + sign * c
                    if v:
                        col[key] = v
                    else:
                        col.pop(key, None)
                if col:
                    cols[pair(i, j)] = col
        actions[label] = cols
    parities = [(M.parities[i] + N.parities[j]) % 2 for i in range(M.dim) for j in range(N.dim)]
    weights = [M.weights[i] + N.weights[j] for i in range(M.dim) for j in range(N.dim)]
    names = [f"{M.basis_names[i]}@{N.basis_names[j]}" for i in range(M.dim) for j in range(N.dim)]
    return SuperModuleRep(M.algebra, parities, weights, actions, basis_names=names,
                          meta={"kind": "tensor"})


def dual(M: SuperModuleRep) -> SuperModuleRep:
    """Contragradient dual: (a.f)(u) = -(-1)^{|a||f|} f(a.u)."""
    actions = {}
    for label in M.algebra.labels:
        pa = M.algebra.parity[label]
        cols: dict = {}
        for j, entries in M.actions.get(label, {}).items():
            for k, c in entries.items():
                sign = -ONE if (pa and M.parities[k]) else ONE
                col = cols.setdefault(k, {})
                v = col.get(j, ZERO) - sign * c
                if v:
                    col[j] = v
                else:
                    col.pop(j, None)
        actions[label] = {k: col for k, col in cols.items() if col}
    weights = [-w for w in M.weights]
    names = [f"{name}*" for name in M.basis_names]
    return SuperModuleRep(M.algebra, M.parities, weights, actions, basis_names=names,
                          meta={"kind": "dual"})


def parity_shift(M: SuperModuleRep) -> SuperModuleRep:
    """Flip the grading; odd algebra elements act with an extra sign."""
    actions = {}
    for label in M.algebra.labels:
        if M.algebra.parity[label]:
            actions[label] = {
                i: {j: -c for j, c in col.items()} for i, col in M.actions.get(label, {}).items()
            }
        else:
            actions[label] = M.actions.get(label, {})
    parities = [(p + 1) % 2 for p in M.parities]
    return SuperModuleRep(M.algebra, parities, M.weights, actions,
                          basis_names=M.basis_names, meta={"kind": "parity-shift"})


def direct_sum(M: SuperModuleRep, N: SuperModuleRep) -> SuperModuleRep:
    _check_same_algebra(M, N)
    dm = M.dim
    actions = {}
    for label in M.algebra.labels:
        cols = {i: dict(col) for i, col in M.actions.get(label, {}).items()}
        for i, col in N.actions.get(label, {}).items():
            cols[dm + i] = {dm + j: c for j, c in col.items()}
        actions[label] = cols
    return SuperModuleRep(
        M.algebra,
        list(M.parities) + list(N.parities),
        list(M.weights) + list(N.weights),
        actions,
        basis_names=[f"l.{s}" for s in M.basis_names] + [f"r.{s}" for s in N.basis_names],
        meta={"kind": "direct-sum"},
    )


# ---------------------------------------------------------------------------
# integrity checks and dumps


def verify_rep(M: SuperModuleRep) -> tuple[bool, list[str]]:
    """Exact parity, weight, and bracket compatibility on every basis pair.

    Cartan elements must act diagonally by the labeled weight coordinates;
    the rank-variety tests rely on that.
    """
    problems = []
    g = M.algebra
    for label in g.labels:
        pa = g.parity[label]
        shift = g.weight_of.get(label)
        for i, col in M.actions.get(label, {}).items():
            for j, c in col.items():
                if c and (M.parities[j] - M.parities[i] - pa) % 2 != 0:
                    problems.append(f"parity breaks: {label} sends {i} to {j}")
                if c and shift is not None and M.weights[j] != M.weights[i] + shift:
                    problems.append(f"weight breaks: {label} sends {i} to {j}")
    for label in g.labels:
        _, a, b = label
        if a != b:
            continue
        for i in range(M.dim):
            col = M.actions.get(label, {}).get(i, {})
            expected = M.weights[i].coords[a - 1]
            if col != ({i: expected} if expected else {}):
                problems.append(f"Cartan element {label} is not diagonal on column {i}")
    for a in g.labels:
        pa = g.parity[a]
        for b in g.labels:
            pb = g.parity[b]
            sign = -ONE if (pa and pb) else ONE
            br = g.bracket(a, b)
            for i in range(M.dim):
                e = {i: ONE}
                lhs = M.apply_label(a, M.apply_label(b, e))
                for k, c in M.apply_label(b, M.apply_label(a, e)).items():
                    v = lhs.get(k, ZERO) - sign * c
                    if v:
                        lhs[k] = v
                    else:
                        lhs.pop(k, None)
                rhs: dict = {}
                for d_label, cd in br.items():
                    for k, c in M.apply_label(d_label, e).items():
                        v = rhs.get(k, ZERO) + cd * c
                        if v:
                            rhs[k] = v
                        else:
                            rhs.pop(k, None)
                if lhs != rhs:
                    problems.append(f"bracket compatibility fails on ({a}, {b}) column {i}")
                    break
    return not problems, problems


def label_str(label) -> str:
    _, a, b = label
    return f"E[{a},{b}]"


def dump_module(M: SuperModuleRep) -> dict:
    """JSON-ready record: basis labels, parities, weights, exact matrices."""
    record = {
        "algebra": M.algebra.name,
        "dim": M.dim,
        "superdimension": M.superdimension,
        "kind": M.meta.get("kind", "module"),
        "basis": [
            {
                "name": M.basis_names[i],
                "parity": M.parities[i],
                "weight": format_weight(M.weights[i]),
            }
            for i in range(M.dim)
        ],
        "actions": {},
    }
    if "weight" in M.meta:
        record["highest_weight"] = format_weight(M.meta["weight"])
    for label in M.algebra.labels:
        mat = M.action_matrix(label)
        record["actions"][label_str(label)] = [
            [format_scalar(x) for x in row] for row in mat.entries
        ]
    return record
