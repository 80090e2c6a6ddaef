"""Integer lattice linear algebra, lattice polytopes, rational polyhedra,
and an exact rational LP kernel.

Everything here is exact: no floating point is used anywhere. Polyhedra
carry integer normals with rational constants; LPs are solved by a dense
two-phase simplex with Bland's rule, so termination is guaranteed and
infeasibility / unboundedness come with checkable witnesses.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd

from .qnum import Q

Vec = tuple  # integer n-tuple


# ---------------------------------------------------------------------------
# vector / integer helpers

def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def vec_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(int(x)))
    return g


def primitive(v) -> Vec:
    """Scale an integer vector to coordinate gcd 1, keeping its direction."""
    g = vec_gcd(v)
    if g == 0:
        return tuple(0 for _ in v)
    return tuple(int(x) // g for x in v)


def clear_denominators(v) -> Vec:
    """Smallest positive multiple of a rational vector that is integral."""
    m = 1
    for x in v:
        m = m * Q(x).denominator // gcd(m, int(Q(x).denominator))
    return tuple(int(Q(x) * m) for x in v)


# ---------------------------------------------------------------------------
# integer matrices

@dataclass(frozen=True)
class IntMatrix:
    rows: tuple

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix dimensions must be positive")
        w = len(self.rows[0])
        if any(len(r) != w for r in self.rows):
            raise ValueError("matrix must be rectangular")
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        ot = list(zip(*other.rows))
        return IntMatrix(tuple(tuple(dot(r, c) for c in ot) for r in self.rows))

    def mul_vec(self, v) -> Vec:
        return tuple(dot(r, v) for r in self.rows)

    def column(self, j) -> Vec:
        return tuple(r[j] for r in self.rows)

    def det(self) -> int:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        # fraction-free Gaussian elimination (Bareiss)
        n = self.nrows
        a = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def inverse_unimodular(self) -> "IntMatrix":
        """Exact inverse of a matrix with determinant +-1."""
        n = self.nrows
        d = self.det()
        if abs(d) != 1:
            raise ValueError("matrix is not unimodular")
        aug = [[Q(x) for x in r] + [Q(1) if i == j else Q(0) for j in range(n)]
               for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next(i for i in range(col, n) if aug[i][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            pv = aug[col][col]
            aug[col] = [x / pv for x in aug[col]]
            for i in range(n):
                if i != col and aug[i][col] != 0:
                    f = aug[i][col]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
        return IntMatrix(tuple(tuple(int(x) for x in row[n:]) for row in aug))


def hnf(m: IntMatrix):
    """Column Hermite normal form: returns (H, U) with M*U = H and |det U| = 1.

    H is in lower-triangular column echelon form: each pivot is positive,
    entries to its right in the pivot row are zero, and earlier columns are
    reduced modulo the pivot.
    """
    rows = [list(r) for r in m.rows]
    nr, nc = m.nrows, m.ncols
    u = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def colop_swap(j, k):
        for r in rows:
            r[j], r[k] = r[k], r[j]
        for r in u:
            r[j], r[k] = r[k], r[j]

    def colop_neg(j):
        for r in rows:
            r[j] = -r[j]
        for r in u:
            r[j] = -r[j]

    def colop_add(j, k, f):
        # column j += f * column k
        for r in rows:
            r[j] += f * r[k]
        for r in u:
            r[j] += f * r[k]

    piv = 0
    for r in range(nr):
        if piv >= nc:
            break
        j0 = next((j for j in range(piv, nc) if rows[r][j] != 0), None)
        if j0 is None:
            continue
        colop_swap(piv, j0)
        for j in range(piv + 1, nc):
            while rows[r][j] != 0:
                q = rows[r][j] // rows[r][piv]
                colop_add(j, piv, -q)
                if rows[r][j] != 0:
                    colop_swap(piv, j)
        if rows[r][piv] < 0:
            colop_neg(piv)
        for j in range(piv):
            q = rows[r][j] // rows[r][piv]
            if q:
                colop_add(j, piv, -q)
        piv += 1
    return IntMatrix(tuple(tuple(r) for r in rows)), IntMatrix(tuple(tuple(r) for r in u))


def int_kernel(rows) -> list:
    """Basis of {x in Z^n : R x = 0} for integer row vectors R.

    The returned basis is saturated (it spans kernel(R) over Q).
    """
    rows = [tuple(int(x) for x in r) for r in rows]
    if not rows:
        raise ValueError("int_kernel needs the ambient dimension; pass a zero row")
    h, u = hnf(IntMatrix(tuple(rows)))
    out = []
    for j in range(h.ncols):
        if all(h.rows[i][j] == 0 for i in range(h.nrows)):
            out.append(u.column(j))
    return out


def _rational_rref(rows):
    """Reduced row echelon form over Q; returns (rref rows, pivot cols)."""
    a = [[Q(x) for x in r] for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rational_rank(rows) -> int:
    return len(_rational_rref(rows)[0])


def rational_kernel(rows, n) -> list:
    """Basis of {x in Q^n : R x = 0} as rational vectors."""
    rref, pivots = _rational_rref(rows)
    free = [c for c in range(n) if c not in pivots]
    out = []
    for fc in free:
        v = [Q(0)] * n
        v[fc] = Q(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rref[i][fc]
        out.append(tuple(v))
    return out


def solve_rational(rows, rhs):
    """One solution x of R x = rhs over Q, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    rref, pivots = _rational_rref(aug)
    n = len(rows[0]) if rows else 0
    for row in rref:
        if all(x == 0 for x in row[:n]) and row[n] != 0:
            return None
    x = [Q(0)] * n
    for i, pc in enumerate(pivots):
        if pc == n:
            return None
        x[pc] = rref[i][n]
    return tuple(x)


def saturate(gens) -> list:
    """Basis of span(gens) intersected with Z^n, for rational generators."""
    gens = [tuple(Q(x) for x in g) for g in gens]
    if not gens:
        return []
    n = len(gens[0])
    rows = [clear_denominators(g) for g in gens]
    rows = [r for r in rows if any(r)]
    if not rows:
        return []
    perp = int_kernel(rows)
    if not perp:
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    return int_kernel(perp)


def extend_basis(basis, n: int) -> list:
    """Extend a saturated basis of a sublattice to a basis of Z^n.

    The returned list starts with the input vectors and the full n x n
    matrix of columns has determinant +-1.
    """
    basis = [tuple(int(x) for x in b) for b in basis]
    d = len(basis)
    if d == 0:
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    h, u = hnf(IntMatrix(tuple(basis)))
    t = [[h.rows[i][j] for j in range(d)] for i in range(d)]
    dt = IntMatrix(tuple(tuple(r) for r in t)).det() if d else 1
    if dt == 0:
        raise ValueError("input vectors are not linearly independent")
    if abs(dt) != 1:
        raise ValueError("input basis is not saturated")
    uinv = u.inverse_unimodular()
    return basis + [uinv.rows[i] for i in range(d, n)]


def lattice_member(basis, v) -> bool:
    """Is integer vector v in the Z-span of the given integer basis?"""
    v = tuple(int(x) for x in v)
    if not basis:
        return not any(v)
    cols = list(zip(*basis))  # n rows, d cols
    sol = solve_rational(cols, v)
    if sol is None:
        return False
    return all(Q(x).denominator == 1 for x in sol)


# ---------------------------------------------------------------------------
# polyhedra and the LP kernel

@dataclass(frozen=True)
class Polyhedron:
    """Rational polyhedron in H-representation.

    eqs are pairs (normal, c) meaning normal . x == c, ineqs mean
    normal . x <= c; normals are integer tuples, constants rational.
    """
    dim: int
    eqs: tuple
    ineqs: tuple

    @staticmethod
    def make(dim, eqs=(), ineqs=()):
        def norm(cs):
            out = []
            for a, c in cs:
                a = tuple(int(x) for x in a)
                if not any(a):
                    raise ValueError("zero normal vector in constraint")
                out.append((a, Q(c)))
            return tuple(out)
        return Polyhedron(dim, norm(eqs), norm(ineqs))

    def contains(self, x) -> bool:
        return (all(dot(a, x) == c for a, c in self.eqs)
                and all(dot(a, x) <= c for a, c in self.ineqs))

    def translate(self, a) -> "Polyhedron":
        """The polyhedron P + a."""
        a = tuple(Q(x) for x in a)
        return Polyhedron(
            self.dim,
            tuple((nv, c + dot(nv, a)) for nv, c in self.eqs),
            tuple((nv, c + dot(nv, a)) for nv, c in self.ineqs))


@dataclass(frozen=True)
class LPResult:
    status: str          # "optimal" | "unbounded" | "infeasible"
    value: object = None     # rational optimum when optimal
    point: tuple = None      # witness point (optimal: optimum; unbounded: feasible)
    ray: tuple = None        # improving recession direction when unbounded

    @property
    def optimal(self):
        return self.status == "optimal"

    @property
    def unbounded(self):
        return self.status == "unbounded"


def _pivot(tab, rhs, basis, r, j):
    pr = tab[r]
    pv = pr[j]
    inv = Q(1) / pv
    tab[r] = pr = [x * inv for x in pr]
    rhs[r] = rhs[r] * inv
    for i in range(len(tab)):
        if i == r:
            continue
        f = tab[i][j]
        if f != 0:
            row = tab[i]
            tab[i] = [x - f * y for x, y in zip(row, pr)]
            rhs[i] = rhs[i] - f * rhs[r]
    basis[r] = j


def _simplex_phase(tab, rhs, basis, cost, ncols):
    """Minimize cost . z over the current tableau with Bland's rule.

    Returns ("optimal", None) or ("unbounded", entering_col).
    """
    m = len(tab)
    while True:
        lam = [cost[basis[i]] for i in range(m)]
        entering = None
        for j in range(ncols):
            red = cost[j] - sum(lam[i] * tab[i][j] for i in range(m) if tab[i][j] != 0)
            if red < 0:
                entering = j
                break
        if entering is None:
            return "optimal", None
        leave = None
        best = None
        for i in range(m):
            t = tab[i][entering]
            if t > 0:
                ratio = rhs[i] / t
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return "unbounded", entering
        _pivot(tab, rhs, basis, leave, entering)


def _standard_simplex(rows, rhs_in, cost):
    """min cost.z s.t. rows z = rhs, z >= 0. Dense two-phase simplex.

    Returns (status, z, ray) with z the optimal point, or a feasible point
    plus an improving ray when unbounded.
    """
    m = len(rows)
    n = len(cost)
    tab = []
    rhs = []
    for row, b in zip(rows, rhs_in):
        if b < 0:
            row = [-x for x in row]
            b = -b
        tab.append([Q(x) for x in row] + [Q(1) if len(tab) == i else Q(0) for i in range(m)])
        rhs.append(Q(b))
    # phase 1: artificials occupy columns n .. n+m-1
    total = n + m
    basis = [n + i for i in range(m)]
    cost1 = [Q(0)] * n + [Q(1)] * m
    status, _ = _simplex_phase(tab, rhs, basis, cost1, total)
    assert status == "optimal"
    if sum(rhs[i] for i in range(m) if basis[i] >= n) != 0:
        return "infeasible", None, None
    # drive remaining artificials out of the basis, drop redundant rows
    keep = []
    for i in range(m):
        if basis[i] >= n:
            j = next((j for j in range(n) if tab[i][j] != 0), None)
            if j is None:
                continue  # redundant row
            _pivot(tab, rhs, basis, i, j)
        keep.append(i)
    tab = [tab[i][:n] for i in keep]
    rhs = [rhs[i] for i in keep]
    basis = [basis[i] for i in keep]
    cost2 = [Q(c) for c in cost]
    status, entering = _simplex_phase(tab, rhs, basis, cost2, n)
    z = [Q(0)] * n
    for i, bi in enumerate(basis):
        z[bi] = rhs[i]
    if status == "unbounded":
        ray = [Q(0)] * n
        ray[entering] = Q(1)
        for i, bi in enumerate(basis):
            ray[bi] = -tab[i][entering]
        return "unbounded", z, ray
    return "optimal", z, None


def lp(objective, poly: Polyhedron, sense: str = "max") -> LPResult:
    """Exact rational LP over a polyhedron with free variables.

    objective is a rational n-vector; sense is "max" or "min". Witness
    points and rays are exact and verifiable by substitution.
    """
    if sense not in ("max", "min"):
        raise ValueError("sense must be 'max' or 'min'")
    n = poly.dim
    obj = [Q(x) for x in objective]
    if len(obj) != n:
        raise ValueError("objective length does not match the ambient dimension")
    nvars = 2 * n + len(poly.ineqs)
    rows = []
    rhs = []
    for a, c in poly.eqs:
        rows.append([Q(x) for x in a] + [-Q(x) for x in a] + [Q(0)] * len(poly.ineqs))
        rhs.append(c)
    for k, (a, c) in enumerate(poly.ineqs):
        slack = [Q(0)] * len(poly.ineqs)
        slack[k] = Q(1)
        rows.append([Q(x) for x in a] + [-Q(x) for x in a] + slack)
        rhs.append(c)
    sign = -1 if sense == "max" else 1
    cost = [sign * x for x in obj] + [-sign * x for x in obj] + [Q(0)] * len(poly.ineqs)
    status, z, zray = _standard_simplex(rows, rhs, cost)
    if status == "infeasible":
        return LPResult("infeasible")
    point = tuple(z[i] - z[n + i] for i in range(n))
    if status == "unbounded":
        ray = tuple(zray[i] - zray[n + i] for i in range(n))
        return LPResult("unbounded", point=point, ray=ray)
    value = sum(o * x for o, x in zip(obj, point))
    return LPResult("optimal", value=value, point=point)


def feasible_point(poly: Polyhedron):
    res = lp([0] * poly.dim, poly, "min")
    return res.point if res.status != "infeasible" else None


def is_empty(poly: Polyhedron) -> bool:
    return feasible_point(poly) is None


@lru_cache(maxsize=None)
def implicit_equalities(poly: Polyhedron) -> tuple:
    """Indices of inequalities that hold with equality on the whole polyhedron."""
    out = []
    for k, (a, c) in enumerate(poly.ineqs):
        res = lp(a, poly, "min")
        if res.optimal and res.value == c:
            out.append(k)
    return tuple(out)


@lru_cache(maxsize=None)
def affine_hull_normals(poly: Polyhedron) -> tuple:
    """Integer normals whose level sets cut out Aff(poly)."""
    normals = [a for a, _ in poly.eqs]
    impl = implicit_equalities(poly)
    normals += [poly.ineqs[k][0] for k in impl]
    return tuple(normals)


@lru_cache(maxsize=None)
def poly_dim(poly: Polyhedron) -> int:
    if is_empty(poly):
        return -1
    normals = affine_hull_normals(poly)
    if not normals:
        return poly.dim
    return poly.dim - rational_rank(normals)


@lru_cache(maxsize=None)
def lattice_basis(poly: Polyhedron) -> tuple:
    """Saturated basis of Lambda(poly) = L(poly) ^ Z^n."""
    normals = affine_hull_normals(poly)
    if not normals:
        n = poly.dim
        return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    gens = rational_kernel(normals, poly.dim)
    return tuple(saturate(gens))


@lru_cache(maxsize=None)
def relint_point(poly: Polyhedron):
    """A rational point in the relative interior, or None if empty."""
    base = feasible_point(poly)
    if base is None:
        return None
    impl = set(implicit_equalities(poly))
    points = [base]
    for k, (a, c) in enumerate(poly.ineqs):
        if k in impl:
            continue
        res = lp(a, poly, "min")
        if res.optimal:
            points.append(res.point)
        else:
            points.append(vadd(res.point, res.ray))
    m = len(points)
    return tuple(sum(col) / m for col in zip(*points))


def poly_subset(p: Polyhedron, q: Polyhedron) -> bool:
    """Is p a subset of q? Decided by exact LPs over p."""
    if is_empty(p):
        return True
    for a, c in q.eqs:
        hi = lp(a, p, "max")
        if not hi.optimal or hi.value != c:
            return False
        lo = lp(a, p, "min")
        if not lo.optimal or lo.value != c:
            return False
    for a, c in q.ineqs:
        hi = lp(a, p, "max")
        if not hi.optimal or hi.value > c:
            return False
    return True


def poly_equal(p: Polyhedron, q: Polyhedron) -> bool:
    return poly_subset(p, q) and poly_subset(q, p)


def intersect(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    return Polyhedron(p.dim, p.eqs + q.eqs, p.ineqs + q.ineqs)


@lru_cache(maxsize=None)
def recession_generators(poly: Polyhedron) -> tuple:
    """Integer vectors conically spanning the recession cone of poly.

    Computed by the double description method on the cone
    {r : eq normals . r = 0, ineq normals . r <= 0}.
    """
    n = poly.dim
    halfspaces = []
    for a, _ in poly.eqs:
        halfspaces.append(a)
        halfspaces.append(vneg(a))
    for a, _ in poly.ineqs:
        halfspaces.append(a)
    gens = set()
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        gens.add(e)
        gens.add(vneg(e))
    for a in halfspaces:
        pos, zero, neg = [], [], []
        for g in gens:
            s = dot(a, g)
            (pos if s > 0 else neg if s < 0 else zero).append(g)
        new = set(zero) | set(neg)
        for gp in pos:
            sp = dot(a, gp)
            for gn in neg:
                sn = dot(a, gn)
                combo = tuple(sp * y - sn * x for x, y in zip(gn, gp))
                combo = primitive(combo)
                if any(combo):
                    new.add(combo)
        gens = new
    return tuple(sorted(gens))


# ---------------------------------------------------------------------------
# lattice polytopes

def _hull2d(points):
    """Vertices of the 2D convex hull (strict corners), CCW monotone chain."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:  # all collinear: keep the two extreme points
        return [pts[0], pts[-1]]
    return hull


def conv_contains(points, x) -> bool:
    """Is x in the convex hull of the given points? Exact LP feasibility."""
    points = list(points)
    if not points:
        return False
    n = len(points[0])
    k = len(points)
    eqs = [(tuple(1 for _ in range(k)), Q(1))]
    for i in range(n):
        eqs.append((tuple(int(p[i]) for p in points), Q(x[i])))
    # lambda >= 0 via -lambda_i <= 0
    ineqs = [(tuple(-1 if j == i else 0 for j in range(k)), Q(0)) for i in range(k)]
    # exponents may be rational here only through x; normals must be integer:
    # scale equality rows if x is non-integer
    sc_eqs = []
    for a, c in eqs:
        mult = Q(c).denominator
        sc_eqs.append((tuple(v * mult for v in a), Q(c) * mult))
    pl = Polyhedron(k, tuple(sc_eqs), tuple(ineqs))
    return feasible_point(pl) is not None


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of integer points, stored by its exact vertex set."""
    dim: int
    vertices: tuple  # lex-sorted integer tuples; empty tuple = empty polytope

    @staticmethod
    def empty(dim: int) -> "LatticePolytope":
        return LatticePolytope(dim, ())

    @staticmethod
    def from_points(dim: int, points) -> "LatticePolytope":
        pts = sorted({tuple(int(x) for x in p) for p in points})
        if not pts:
            return LatticePolytope(dim, ())
        if len(pts) == 1:
            return LatticePolytope(dim, (pts[0],))
        if dim == 2:
            verts = sorted(_hull2d(pts))
        else:
            verts = [p for p in pts
                     if not conv_contains([q for q in pts if q != p], p)]
        return LatticePolytope(dim, tuple(sorted(verts)))

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def contains(self, x) -> bool:
        if self.is_empty:
            return False
        if len(self.vertices) == 1:
            return tuple(Q(v) for v in x) == tuple(Q(v) for v in self.vertices[0])
        if self.dim == 2:
            return self._contains2d(x)
        return conv_contains(self.vertices, x)

    def _contains2d(self, x) -> bool:
        hull = _hull2d(self.vertices)
        x = tuple(Q(v) for v in x)
        if len(hull) == 2:
            a, b = hull
            d = vsub(b, a)
            r = (x[0] - a[0], x[1] - a[1])
            if d[0] * r[1] - d[1] * r[0] != 0:
                return False
            t = (r[0] / d[0]) if d[0] != 0 else (r[1] / d[1])
            return 0 <= t <= 1
        m = len(hull)
        for i in range(m):
            a, b = hull[i], hull[(i + 1) % m]
            d = vsub(b, a)
            # inside test for CCW hull: cross(d, x - a) >= 0
            if d[0] * (x[1] - a[1]) - d[1] * (x[0] - a[0]) < 0:
                return False
        return True

    def lattice_points(self) -> list:
        """All integer points of the polytope, by exact bounding-box scan."""
        if self.is_empty:
            return []
        los = [min(v[i] for v in self.vertices) for i in range(self.dim)]
        his = [max(v[i] for v in self.vertices) for i in range(self.dim)]
        out = []
        for p in product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
            if self.contains(p):
                out.append(p)
        return out

    def minkowski(self, other: "LatticePolytope") -> "LatticePolytope":
        if self.is_empty or other.is_empty:
            return LatticePolytope.empty(self.dim)
        sums = {vadd(a, b) for a in self.vertices for b in other.vertices}
        return LatticePolytope.from_points(self.dim, sums)

    def diameter_sq(self):
        """Max squared Euclidean distance between points (exact, rational)."""
        if self.is_empty:
            return Q(0)
        best = Q(0)
        vs = self.vertices
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                d = vsub(vs[i], vs[j])
                best = max(best, Q(dot(d, d)))
        return best

    def fits_in_translate(self, container: "LatticePolytope"):
        """Integer t with self <= container + t, or None.

        Candidate translations are q0 - z over lattice points z of the
        container, for a fixed vertex q0; the search is exhaustive.
        """
        if self.is_empty or container.is_empty:
            raise ValueError("fits_in_translate requires nonempty polytopes")
        q0 = self.vertices[0]
        for z in container.lattice_points():
            t = vsub(q0, z)
            if all(container.contains(vsub(v, t)) for v in self.vertices):
                return t
        return None


def minkowski(p: LatticePolytope, q: LatticePolytope) -> LatticePolytope:
    return p.minkowski(q)


def diameter_sq(p: LatticePolytope):
    return p.diameter_sq()


def lattice_points(p: LatticePolytope) -> list:
    return p.lattice_points()


def fits_in_translate(q: LatticePolytope, p: LatticePolytope):
    return q.fits_in_translate(p)
