"""Independent brute-force verifiers.

Three families of checks, all exact over F_l:

* graded coinvariants of a cyclic diagonal action, by enumerating the
  products monomial * (a - gamma.a) in each degree and row-reducing;
* invariants of the wreath-type action (coordinate scaling plus the full
  symmetric group on the variables), by joint kernels of (g - id);
* the total Chern class of the restricted lift on m blocks, expanded as an
  honest product of linear factors and checked clause by clause.

None of these share logic with the closed forms they are compared against:
the coinvariant spanning set is the generic one (all monomial pairs), not
the one-line diagonal shortcut, and the Chern class is multiplied out
factor by factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import GaloisParams, is_prime, multiplicative_order
from .errors import InputError, ResourceLimitError
from .poly import (
    ModPolynomial,
    TruncatedSeries,
    elementary_symmetric,
    generators,
    hilbert_series_of_free_polynomial_ring,
)

__all__ = [
    "Clause",
    "DEFAULT_MONOMIAL_LIMIT",
    "FULL_SYMMETRIC",
    "GradedActionProblem",
    "NO_PERMUTATION",
    "VerificationReport",
    "brauer_chern_total_class",
    "chern_scalar_checks",
    "coinvariants_hilbert_bruteforce",
    "coinvariants_hilbert_closedform",
    "invariants_hilbert_bruteforce",
    "invariants_hilbert_closedform",
    "report_from_json_dict",
    "verify_restricted_chern",
]

SCHEMA_VERSION = 1

DEFAULT_MONOMIAL_LIMIT = 20_000

NO_PERMUTATION = "none"
FULL_SYMMETRIC = "full_symmetric"


@dataclass(frozen=True)
class GradedActionProblem:
    """A diagonal action of gamma (scaling a degree-w monomial by q^w) on a
    graded polynomial ring with the given variable weights, over F_l,
    optionally extended by the full symmetric group permuting the variables."""

    weights: tuple[int, ...]
    l: int
    q: int
    cutoff: int
    permutation: str = NO_PERMUTATION
    monomial_limit: int = DEFAULT_MONOMIAL_LIMIT

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if any(w < 1 for w in self.weights):
            raise InputError("variable weights must be positive")
        if not is_prime(self.l):
            raise InputError(f"l = {self.l} is not prime")
        if self.q < 1 or gcd(self.q, self.l) != 1:
            raise InputError(f"q = {self.q} must be positive and prime to l = {self.l}")
        if self.cutoff < 0:
            raise InputError(f"cutoff must be >= 0, got {self.cutoff}")
        if self.permutation not in (NO_PERMUTATION, FULL_SYMMETRIC):
            raise InputError(f"unknown permutation component {self.permutation!r}")
        if self.monomial_limit < 1:
            raise InputError("monomial limit must be positive")

    def order(self) -> int:
        """Multiplicative order r of q mod l."""
        return multiplicative_order(self.q, self.l)


# -- monomial bookkeeping ---------------------------------------------------


def _monomials_of_degree(weights: tuple[int, ...], d: int) -> list[tuple[int, ...]]:
    """All exponent tuples of weighted degree exactly d, in a fixed order."""
    n = len(weights)
    out: list[tuple[int, ...]] = []

    def rec(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == n:
            if remaining == 0:
                out.append(prefix)
            return
        w = weights[i]
        if i == n - 1:
            if remaining % w == 0:
                out.append(prefix + (remaining // w,))
            return
        for e in range(remaining // w + 1):
            rec(i + 1, remaining - e * w, prefix + (e,))

    rec(0, d, ())
    return out


def _checked_dimensions(problem: GradedActionProblem) -> list[int]:
    """Dimension of each graded piece up to the cutoff, refusing oversize
    degrees before any enumeration happens."""
    dims = hilbert_series_of_free_polynomial_ring(problem.weights, problem.cutoff)
    for d, count in enumerate(dims.coefficients):
        if count > problem.monomial_limit:
            raise ResourceLimitError(
                f"degree {d}: {count} monomials exceed the configured limit "
                f"of {problem.monomial_limit}",
                degree=d,
                count=count,
            )
    return list(dims.coefficients)


class _SpanAccumulator:
    """Incremental row reduction over F_l for sparse rows (dicts mapping
    exponent tuples to nonzero coefficients).  Rows within one call are
    homogeneous, so the lexicographically largest exponent is a stable
    leading term."""

    def __init__(self, l: int):
        self.l = l
        self.pivots: dict[tuple[int, ...], dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: dict) -> bool:
        l = self.l
        row = dict(row)
        while row:
            lead = max(row)
            pivot = self.pivots.get(lead)
            if pivot is None:
                inv = pow(row[lead], -1, l)
                self.pivots[lead] = {e: c * inv % l for e, c in row.items()}
                return True
            f = row[lead]
            for e, pc in pivot.items():
                c = (row.get(e, 0) - f * pc) % l
                if c:
                    row[e] = c
                elif e in row:
                    del row[e]
        return False


# -- coinvariants -----------------------------------------------------------


def _require_cyclic(problem: GradedActionProblem):
    if problem.permutation != NO_PERMUTATION:
        raise InputError("coinvariant oracles handle the cyclic (diagonal) action only")


def coinvariants_hilbert_bruteforce(problem: GradedActionProblem) -> TruncatedSeries:
    """Series of the coinvariant ring R/(a - gamma.a), one degree at a time.

    In degree d the ideal's graded piece is spanned by the products
    M * (a - gamma.a) over all monomial pairs (M, a) with deg(M*a) = d; its
    exact rank over F_l is subtracted from dim R_d.  Generators a - gamma.a
    that vanish identically are skipped, and a degree stops early once the
    accumulated rank already equals dim R_d; neither shortcut assumes
    anything about the shape of the action.
    """
    _require_cyclic(problem)
    weights, l, cutoff = problem.weights, problem.l, problem.cutoff
    q0 = problem.q % l
    dims = _checked_dimensions(problem)
    basis = {d: _monomials_of_degree(weights, d) for d in range(cutoff + 1)}

    coeffs = []
    for d in range(cutoff + 1):
        dim = dims[d]
        acc = _SpanAccumulator(l)
        for w in range(d, 0, -1):
            if acc.rank == dim:
                break
            for b in basis[w]:
                # gamma sends the monomial b to c * image; g = b - gamma.b
                image = b
                c = pow(q0, sum(e * wt for e, wt in zip(b, weights)), l)
                g = {b: 1}
                g[image] = (g.get(image, 0) - c) % l
                g = {e: v for e, v in g.items() if v}
                if not g:
                    continue
                for mono in basis[d - w]:
                    row = {tuple(x + y for x, y in zip(e, mono)): v for e, v in g.items()}
                    acc.add(row)
                if acc.rank == dim:
                    break
        coeffs.append(dim - acc.rank)
    return TruncatedSeries(cutoff, tuple(coeffs))


def coinvariants_hilbert_closedform(problem: GradedActionProblem) -> TruncatedSeries:
    """Series of the free polynomial ring on the variables whose weight is
    divisible by r = ord(q mod l): the closed-form answer for the
    coinvariants of the diagonal action."""
    _require_cyclic(problem)
    r = problem.order()
    kept = [w for w in problem.weights if w % r == 0]
    return hilbert_series_of_free_polynomial_ring(kept, problem.cutoff)


# -- wreath-type invariants -------------------------------------------------


def _symmetric_group_maps(m: int) -> list[list[int]]:
    """Index permutations generating the full symmetric group on m letters:
    a transposition and the m-cycle (either alone suffices only for m <= 2)."""
    gens = []
    if m >= 2:
        swap = list(range(m))
        swap[0], swap[1] = swap[1], swap[0]
        gens.append(swap)
    if m >= 3:
        gens.append(list(range(1, m)) + [0])
    return gens


def invariants_hilbert_bruteforce(problem: GradedActionProblem) -> TruncatedSeries:
    """Series of the ring of invariants under the group generated by the
    coordinate scaling eta_1 -> q*eta_1 and the full symmetric group on the
    variables: in each degree, the joint kernel of (g - id) over the monomial
    basis, for g running over the generators."""
    if problem.permutation != FULL_SYMMETRIC:
        raise InputError("invariant oracle needs the full symmetric permutation component")
    if any(w != 1 for w in problem.weights):
        raise InputError("invariant oracle expects all variable weights equal to 1")
    m = len(problem.weights)
    l, cutoff = problem.l, problem.cutoff
    q0 = problem.q % l
    _checked_dimensions(problem)
    perms = _symmetric_group_maps(m)

    coeffs = []
    for d in range(cutoff + 1):
        basis = _monomials_of_degree(problem.weights, d)
        index = {e: i for i, e in enumerate(basis)}
        n = len(basis)
        stacked: list[list[int]] = []
        # scaling on the first coordinate: e -> q^{e_1} e
        block = [[0] * n for _ in range(n)]
        for j, e in enumerate(basis):
            block[j][j] = (pow(q0, e[0], l) - 1) % l if m else 0
        stacked.extend(block)
        for perm in perms:
            block = [[0] * n for _ in range(n)]
            for j, e in enumerate(basis):
                image = tuple(e[perm[i]] for i in range(m))
                block[index[image]][j] = (block[index[image]][j] + 1) % l
                block[j][j] = (block[j][j] - 1) % l
            stacked.extend(block)
        coeffs.append(n - _dense_rank(stacked, l))
    return TruncatedSeries(cutoff, tuple(coeffs))


def invariants_hilbert_closedform(problem: GradedActionProblem) -> TruncatedSeries:
    """The expected answer: a free polynomial ring on generators of degrees
    r, 2r, ..., m*r (the elementary symmetric functions of the eta_j^r)."""
    if problem.permutation != FULL_SYMMETRIC:
        raise InputError("invariant oracle needs the full symmetric permutation component")
    m = len(problem.weights)
    r = problem.order()
    return hilbert_series_of_free_polynomial_ring([i * r for i in range(1, m + 1)], problem.cutoff)


def _dense_rank(rows: list[list[int]], l: int) -> int:
    """Rank over F_l by plain Gaussian elimination on dense integer rows."""
    if not rows:
        return 0
    rows = [row[:] for row in rows]
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, l)
        rows[rank] = [x * inv % l for x in rows[rank]]
        lead = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % l for a, b in zip(rows[i], lead)]
        rank += 1
        if rank == ncols:
            break
    return rank


# -- Chern classes of the restricted lift -----------------------------------


def brauer_chern_total_class(m: int, params: GaloisParams) -> ModPolynomial:
    """Total Chern class of the restricted lift on m blocks:
    prod_{j=1..m} prod_{i=0..r-1} (1 + q^i eta_j) in F_l[eta_1, ..., eta_m]."""
    if m < 1:
        raise InputError(f"m must be >= 1, got {m}")
    l, r = params.l, params.r
    variables = tuple((f"eta_{j}", 1) for j in range(1, m + 1))
    total = ModPolynomial.constant(l, variables, 1)
    for eta in generators(l, variables):
        for i in range(r):
            total = total * (1 + pow(params.q, i, l) * eta)
    return total


@dataclass(frozen=True)
class Clause:
    name: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class VerificationReport:
    kind: str
    parameters: tuple[tuple[str, int], ...]
    clauses: tuple[Clause, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": self.kind,
            "parameters": {k: v for k, v in self.parameters},
            "passed": self.passed,
            "clauses": [
                {"name": c.name, "passed": c.passed, "witness": c.witness}
                for c in self.clauses
            ],
        }


def report_from_json_dict(d: dict) -> VerificationReport:
    return VerificationReport(
        kind=d["kind"],
        parameters=tuple((k, int(v)) for k, v in d["parameters"].items()),
        clauses=tuple(
            Clause(c["name"], bool(c["passed"]), c["witness"]) for c in d["clauses"]
        ),
    )


def verify_restricted_chern(m: int, params: GaloisParams) -> VerificationReport:
    """Check the expected shape of the restricted total Chern class:

    1. homogeneous components vanish in degrees not divisible by r;
    2. the degree-i*r component is (-1)^{(r-1)i} e_i(eta_1^r, ..., eta_m^r);
    3. for m = 1, the degree-r coefficient is q^{r(r-1)/2} = (-1)^{r-1} mod l.

    Failures are reported, not raised.
    """
    l, r = params.l, params.r
    total = brauer_chern_total_class(m, params)
    clauses = []

    offenders = [
        f"degree {d}: {comp}"
        for d, comp in total.homogeneous_components().items()
        if d % r != 0
    ]
    clauses.append(
        Clause(
            "off_degree_components_vanish",
            not offenders,
            "; ".join(offenders) if offenders else None,
        )
    )

    etas = generators(l, total.variables)
    eta_r = [eta**r for eta in etas]
    mismatches = []
    for i in range(1, m + 1):
        sign = (-1) ** ((r - 1) * i) % l
        expected = sign * elementary_symmetric(i, eta_r)
        got = total.homogeneous_component(i * r)
        if got != expected:
            mismatches.append(f"degree {i * r}: got {got}, expected {expected}")
    clauses.append(
        Clause(
            "symmetric_function_identity",
            not mismatches,
            "; ".join(mismatches) if mismatches else None,
        )
    )

    if m == 1:
        coef = total.coefficient((r,))
        power_value = pow(params.q, r * (r - 1) // 2, l)
        sign = (-1) ** (r - 1) % l
        ok = coef == power_value == sign
        clauses.append(
            Clause(
                "top_coefficient_sign",
                ok,
                None if ok else f"coefficient {coef}, q^{{r(r-1)/2}} = {power_value}, sign {sign}",
            )
        )

    return VerificationReport(
        kind="restricted-chern",
        parameters=(("m", m), ("p", params.p), ("q", params.q), ("l", l), ("r", r)),
        clauses=tuple(clauses),
    )


def chern_scalar_checks(l: int, q: int) -> VerificationReport:
    """Scalar identities behind the Chern-class computation: with r the order
    of q mod l, e_j(1, q, ..., q^{r-1}) vanishes mod l for 0 < j < r, and
    q^{r(r-1)/2} = (-1)^{r-1} mod l."""
    r = multiplicative_order(q, l)
    powers = [pow(q, i, l) for i in range(r)]
    failures = []
    for j in range(1, r):
        value = elementary_symmetric(j, powers) % l
        if value != 0:
            failures.append(f"e_{j} = {value}")
    clauses = [
        Clause(
            "intermediate_symmetric_values_vanish",
            not failures,
            "; ".join(failures) if failures else None,
        )
    ]
    power_value = pow(q, r * (r - 1) // 2, l)
    sign = (-1) ** (r - 1) % l
    clauses.append(
        Clause(
            "top_power_is_sign",
            power_value == sign,
            None if power_value == sign else f"q^{{r(r-1)/2}} = {power_value}, sign {sign}",
        )
    )
    return VerificationReport(
        kind="chern-scalars",
        parameters=(("q", q), ("l", l), ("r", r)),
        clauses=tuple(clauses),
    )
