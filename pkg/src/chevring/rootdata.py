"""Registry of split reductive group types.

Each record supplies the Lie-theoretic constants the presentation engines
consume: rank, fundamental degrees (algebraic convention, so the generator of
topological degree 2d is recorded as d), Weyl group order, torsion primes,
and the number N of positive roots.  Records live in ``data/root_data.txt``
so the tables can be audited or extended without code changes; the loader
validates every record against the classical identities

    prod(d_i) = |W|        and        N = sum(d_i - 1).
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import factorial, prod

from .arith import is_prime, multiplicative_order, prime_power_base
from .errors import InputError

__all__ = [
    "Registry",
    "RootDatum",
    "check_torsion_free",
    "default_registry",
    "group_order",
    "lookup",
    "validate_registry",
]


@dataclass(frozen=True)
class RootDatum:
    family: str
    rank: int
    degrees: tuple[int, ...]
    weyl_order: int
    torsion_primes: frozenset[int]
    unipotent_exponent: int  # number N of positive roots


# -- integer formula evaluation ------------------------------------------

_FORMULA_CHARS = re.compile(r"[0-9n\s+\-*/^()!]*\Z")


def _eval_formula(expr: str, n: int) -> int:
    """Evaluate an integer formula in n.  Supports + - * ( ), ^ for powers,
    / for exact integer division, and ! for factorial."""
    if not _FORMULA_CHARS.match(expr):
        raise InputError(f"illegal character in formula {expr!r}")
    py = expr.replace("^", "**")
    py = re.sub(r"\(([^()]*)\)!", r"factorial(\1)", py)
    py = re.sub(r"(\w+)!", r"factorial(\1)", py)
    try:
        tree = ast.parse(py.strip(), mode="eval")
    except SyntaxError as exc:
        raise InputError(f"cannot parse formula {expr!r}: {exc}") from None
    return _eval_node(tree.body, n, expr)


def _eval_node(node: ast.AST, n: int, expr: str) -> int:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.Name) and node.id == "n":
        return n
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval_node(node.operand, n, expr)
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id == "factorial":
        (arg,) = node.args
        v = _eval_node(arg, n, expr)
        if v < 0:
            raise InputError(f"factorial of negative value in {expr!r}")
        return factorial(v)
    if isinstance(node, ast.BinOp):
        a = _eval_node(node.left, n, expr)
        b = _eval_node(node.right, n, expr)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Pow):
            if b < 0:
                raise InputError(f"negative exponent in {expr!r}")
            return a**b
        if isinstance(node.op, ast.Div):
            q, rem = divmod(a, b)
            if rem:
                raise InputError(f"inexact division {a}/{b} in {expr!r}")
            return q
    raise InputError(f"unsupported construct in formula {expr!r}")


_RANGE_RE = re.compile(r"(?P<lo>[^.]+)\.\.(?P<hi>.+?)(?:\s+step\s+(?P<step>.+))?\Z")


def _expand_degrees(spec: str, n: int) -> list[int]:
    out: list[int] = []
    for item in spec.split(","):
        item = item.strip()
        if not item:
            raise InputError(f"empty item in degree list {spec!r}")
        m = _RANGE_RE.match(item)
        if m and ".." in item:
            lo = _eval_formula(m.group("lo"), n)
            hi = _eval_formula(m.group("hi"), n)
            step = _eval_formula(m.group("step"), n) if m.group("step") else 1
            if step < 1:
                raise InputError(f"range step must be positive in {item!r}")
            out.extend(range(lo, hi + 1, step))
        else:
            out.append(_eval_formula(item, n))
    return out


# -- registry records ------------------------------------------------------


@dataclass(frozen=True)
class _Record:
    family: str
    min_rank: int
    fixed_rank: bool
    degrees_spec: str
    weyl_spec: str
    roots_spec: str
    torsion_primes: frozenset[int]

    def admits(self, rank: int) -> bool:
        return rank == self.min_rank if self.fixed_rank else rank >= self.min_rank

    def expand(self, rank: int) -> RootDatum:
        if not self.admits(rank):
            pat = f"= {self.min_rank}" if self.fixed_rank else f">= {self.min_rank}"
            raise InputError(f"family {self.family} needs rank {pat}, got {rank}")
        degrees = tuple(sorted(_expand_degrees(self.degrees_spec, rank)))
        if len(degrees) != rank:
            raise InputError(
                f"{self.family} rank {rank}: {len(degrees)} fundamental degrees, expected {rank}"
            )
        if any(d < 1 for d in degrees):
            raise InputError(f"{self.family} rank {rank}: nonpositive fundamental degree")
        weyl = _eval_formula(self.weyl_spec, rank)
        roots = _eval_formula(self.roots_spec, rank)
        if prod(degrees) != weyl:
            raise InputError(
                f"{self.family} rank {rank}: prod(degrees) = {prod(degrees)} "
                f"but the Weyl order column says {weyl}"
            )
        if sum(d - 1 for d in degrees) != roots:
            raise InputError(
                f"{self.family} rank {rank}: sum(d_i - 1) = {sum(d - 1 for d in degrees)} "
                f"but the positive-root column says {roots}"
            )
        return RootDatum(
            family=self.family,
            rank=rank,
            degrees=degrees,
            weyl_order=weyl,
            torsion_primes=self.torsion_primes,
            unipotent_exponent=roots,
        )


_RANK_RE = re.compile(r"n\s*(?P<op>>=|=)\s*(?P<k>\d+)\Z")

# How far parametric records are expanded when validating a registry.
_VALIDATION_RANK_SPAN = 12


class Registry:
    """A parsed registry; use :func:`default_registry` for the shipped one."""

    def __init__(self, records: list[_Record]):
        seen = set()
        for rec in records:
            if rec.family in seen:
                raise InputError(f"duplicate family {rec.family} in registry")
            seen.add(rec.family)
        self._records = {rec.family: rec for rec in records}

    @classmethod
    def from_text(cls, text: str) -> "Registry":
        records = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = [f.strip() for f in line.split("|")]
            if len(fields) != 6:
                raise InputError(f"line {lineno}: expected 6 fields, got {len(fields)}")
            family, rank_pat, degrees_spec, weyl_spec, roots_spec, torsion_spec = fields
            m = _RANK_RE.match(rank_pat)
            if not m:
                raise InputError(f"line {lineno}: bad rank pattern {rank_pat!r}")
            if torsion_spec == "-":
                torsion: frozenset[int] = frozenset()
            else:
                torsion = frozenset(int(t) for t in torsion_spec.split(","))
                if not all(is_prime(t) for t in torsion):
                    raise InputError(f"line {lineno}: torsion entries must be prime")
            records.append(
                _Record(
                    family=family,
                    min_rank=int(m.group("k")),
                    fixed_rank=m.group("op") == "=",
                    degrees_spec=degrees_spec,
                    weyl_spec=weyl_spec,
                    roots_spec=roots_spec,
                    torsion_primes=torsion,
                )
            )
        registry = cls(records)
        registry.validate()
        return registry

    def families(self) -> list[str]:
        return sorted(self._records)

    def lookup(self, family: str, rank: int) -> RootDatum:
        rec = self._records.get(family)
        if rec is None:
            raise InputError(
                f"unknown family {family!r}; known families: {', '.join(self.families())}"
            )
        return rec.expand(rank)

    def validate(self, max_rank: int | None = None) -> int:
        """Expand every record over its validation rank range (raising on any
        violated identity) and return the number of data checked."""
        checked = 0
        for rec in self._records.values():
            if rec.fixed_rank:
                ranks = [rec.min_rank]
            else:
                top = max_rank if max_rank is not None else rec.min_rank + _VALIDATION_RANK_SPAN - 1
                ranks = range(rec.min_rank, top + 1)
            for rank in ranks:
                rec.expand(rank)
                checked += 1
        return checked


@lru_cache(maxsize=1)
def default_registry() -> Registry:
    text = resources.files("chevring").joinpath("data/root_data.txt").read_text()
    return Registry.from_text(text)


def lookup(family: str, rank: int) -> RootDatum:
    """Expand the shipped record for (family, rank)."""
    return default_registry().lookup(family, rank)


def validate_registry(max_rank: int | None = None) -> int:
    return default_registry().validate(max_rank)


def group_order(datum: RootDatum, q: int) -> int:
    """Order of the group of F_q-points: q^N * prod(q^{d_i} - 1), exactly."""
    prime_power_base(q)  # rejects non prime powers
    return q**datum.unipotent_exponent * prod(q**d - 1 for d in datum.degrees)


def check_torsion_free(datum: RootDatum, l: int) -> bool:
    """True iff l is not a torsion prime of the type."""
    return l not in datum.torsion_primes


def order_divisibility_matches_degrees(datum: RootDatum, q: int, l: int) -> bool:
    """l divides the group order iff the order of q mod l divides some
    fundamental degree; used as a registry sanity check."""
    r = multiplicative_order(q, l)
    divides_some = any(d % r == 0 for d in datum.degrees)
    return (group_order(datum, q) % l == 0) == divides_some
