"""Exact measurement of image sizes |f(A_1 x ... x A_k)| over finite sets.

The image is computed by exhaustive enumeration of the grid with exact
arithmetic, collecting values into a deduplicating set.  Rational values
hash by their canonical lowest-terms integer pair (the ``Fraction``
contract, consistent with plain ``int``), so no collision can corrupt a
count.  Enumeration peels variables off one at a time: the outer prefix is
substituted incrementally into the sparse term map, and the innermost
variable is swept with a dense Horner evaluation, so each grid point costs
a couple of ring operations instead of a full k-variate evaluation.
Whenever the sets and coefficients are integers the sweep stays in plain
``int`` arithmetic.

Fitted growth exponents (least squares on log-log data) are compared to
the theoretical exponent (5r - 4) / (2r) attached to a polynomial of rank
r; the fit is a desk-scale trend indicator, not a proof of anything.
"""

from __future__ import annotations

import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import Polynomial, Scalar, VarSet
from .rank import rank

DEFAULT_BUDGET = 10**8

#: Grids at least this large are worth forking workers for.
PARALLEL_THRESHOLD = 200_000


class BudgetExceededError(RuntimeError):
    """The requested grid has more tuples than the evaluation budget."""


def theoretical_exponent(r: int) -> Fraction:
    """The growth exponent (5r - 4) / (2r) attached to rank r >= 1."""
    if r < 1:
        raise ValueError(f"the exponent formula needs rank >= 1, got {r}")
    return Fraction(5 * r - 4, 2 * r)


@dataclass(frozen=True)
class SetSpec:
    """Deterministic recipe for a finite set of n distinct rationals."""

    kind: str  # interval | geometric | random_int | explicit
    n: int
    seed: int = 0
    params: tuple = ()


def generate_set(spec: SetSpec) -> tuple[Scalar, ...]:
    """Materialize a SetSpec into a sorted tuple of n distinct values."""
    import random

    if spec.n < 1:
        raise ValueError("set size must be >= 1")
    if spec.kind == "interval":
        return tuple(range(1, spec.n + 1))
    if spec.kind == "geometric":
        return tuple(1 << i for i in range(spec.n))
    if spec.kind == "random_int":
        rng = random.Random(spec.seed)
        return tuple(sorted(rng.sample(range(0, spec.n**3 + 1), spec.n)))
    if spec.kind == "explicit":
        values = tuple(sorted(Fraction(v) for v in spec.params))
        if len(values) != spec.n or len(set(values)) != spec.n:
            raise ValueError("explicit set must contain exactly n distinct values")
        return tuple(v.numerator if v.denominator == 1 else v for v in values)
    raise ValueError(f"unknown set kind {spec.kind!r}")


def _plain(value: Scalar) -> Scalar:
    """Prefer int over an integral Fraction: plain ints sweep much faster."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def _sweep(
    terms: dict[tuple[int, ...], Scalar],
    value_lists: Sequence[Sequence[Scalar]],
    pow_tables: Sequence[dict[Scalar, list[Scalar]]],
    depth: int,
    out: set,
) -> None:
    """Enumerate values of the polynomial over the trailing grid."""
    if not terms:
        out.add(0)
        return
    if depth == len(value_lists) - 1:
        dmax = 0
        for e in terms:
            if e[0] > dmax:
                dmax = e[0]
        coeffs: list[Scalar] = [0] * (dmax + 1)
        for e, c in terms.items():
            coeffs[e[0]] += c
        if dmax == 0:
            out.add(coeffs[0])
            return
        top = coeffs[dmax]
        rng = range(dmax - 1, -1, -1)
        for val in value_lists[depth]:
            acc = top
            for idx in rng:
                acc = acc * val + coeffs[idx]
            out.add(acc)
        return
    table = pow_tables[depth]
    for val in value_lists[depth]:
        powers = table[val]
        sub: dict[tuple[int, ...], Scalar] = {}
        for e, c in terms.items():
            exp = e[0]
            key = e[1:]
            cc = c * powers[exp] if exp else c
            acc = sub.get(key)
            if acc is None:
                sub[key] = cc
            else:
                total = acc + cc
                if total:
                    sub[key] = total
                else:
                    del sub[key]
        _sweep(sub, value_lists, pow_tables, depth + 1, out)


def _prepare_sweep(
    f: Polynomial, sets: Sequence[Sequence[Scalar]]
) -> tuple[dict[tuple[int, ...], Scalar], list[list[Scalar]], list[dict[Scalar, list[Scalar]]]]:
    value_lists = [[_plain(v) for v in s] for s in sets]
    terms = {m: _plain(c) for m, c in f.terms.items()}
    max_exps = [0] * f.vars.k
    for m in terms:
        for i, e in enumerate(m):
            if e > max_exps[i]:
                max_exps[i] = e
    pow_tables: list[dict[Scalar, list[Scalar]]] = []
    for i, values in enumerate(value_lists):
        table = {}
        for v in values:
            powers = [1]
            for _ in range(max_exps[i]):
                powers.append(powers[-1] * v)
            table[v] = powers
        pow_tables.append(table)
    return terms, value_lists, pow_tables


def _image_chunk(
    args: tuple[dict, list, list, list]
) -> set:
    terms, chunk, value_lists, pow_tables = args
    out: set = set()
    if len(value_lists) == 1:
        _sweep(terms, [chunk], pow_tables, 0, out)
        return out
    _sweep(terms, [chunk] + value_lists[1:], pow_tables, 0, out)
    return out


def image_values(
    f: Polynomial,
    sets: Sequence[Sequence[Scalar]],
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> set:
    """The exact image set {f(a_1, ..., a_k) : a_i in A_i}."""
    if len(sets) != f.vars.k:
        raise ValueError(f"need {f.vars.k} sets, got {len(sets)}")
    size = 1
    for s in sets:
        if not s:
            raise ValueError("empty input set")
        size *= len(s)
    if size > budget:
        raise BudgetExceededError(f"grid has {size} tuples, over the budget of {budget}")
    if f.is_zero:
        return {0}
    terms, value_lists, pow_tables = _prepare_sweep(f, sets)
    first = value_lists[0]
    if workers > 1 and size >= PARALLEL_THRESHOLD and len(first) > 1:
        n_chunks = min(workers * 4, len(first))
        chunks = [list(first[i::n_chunks]) for i in range(n_chunks)]
        jobs = [(terms, chunk, value_lists, pow_tables) for chunk in chunks]
        out: set = set()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_image_chunk, jobs):
                out |= part
        return out
    out = set()
    _sweep(terms, value_lists, pow_tables, 0, out)
    return out


def image_size(
    f: Polynomial,
    sets: Sequence[Sequence[Scalar]],
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> int:
    """Exact cardinality of the image of the grid under f."""
    return len(image_values(f, sets, budget=budget, workers=workers))


def fit_exponent(rows: Sequence[tuple[int, int]]) -> float:
    """Least-squares slope of log(image size) against log(n)."""
    if len(rows) < 3:
        raise ValueError("exponent fit needs at least 3 data points")
    xs = [math.log(n) for n, _ in rows]
    ys = [math.log(size) for _, size in rows]
    return statistics.linear_regression(xs, ys).slope


@dataclass(frozen=True)
class ExpansionReport:
    poly: str
    rank: int
    rows: tuple[tuple[int, int, float], ...]  # (n, image_size, elapsed seconds)
    fitted_exponent: float
    theoretical_exponent: Fraction
    lower_bound_respected: bool
    generator: str
    seed: int

    def to_json_dict(self) -> dict:
        return {
            "poly": self.poly,
            "rank": self.rank,
            "theoretical_exponent": str(self.theoretical_exponent),
            "fitted_exponent": self.fitted_exponent,
            "lower_bound_respected": self.lower_bound_respected,
            "generator": self.generator,
            "seed": self.seed,
        }

    def to_csv_text(self) -> str:
        lines = ["n,image_size,elapsed_ms"]
        for n, size, elapsed in self.rows:
            lines.append(f"{n},{size},{elapsed * 1000.0:.3f}")
        return "\n".join(lines) + "\n"


def _set_seed(seed: int, var_index: int) -> int:
    return seed * 7919 + var_index


def expansion_report(
    f: Polynomial,
    generator: str,
    n_list: Sequence[int],
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> ExpansionReport:
    """Measure |f(A_1, ..., A_k)| for each n in ``n_list`` and fit the
    growth exponent.

    ``generator`` names the set recipe (interval, geometric, random_int);
    random sets get per-variable seeds derived from ``seed``.  The
    ``lower_bound_respected`` flag checks the largest measurement against
    n^(theoretical - 0.25); the 0.25 slack absorbs the unspecified
    constant, so the flag is a sanity indicator, not a test of the bound.
    """
    if list(n_list) != sorted(set(n_list)) or not n_list:
        raise ValueError("n_list must be nonempty and strictly increasing")
    report = rank(f, seed=seed)
    r = report.overall
    theo = theoretical_exponent(r)
    rows = []
    for n in n_list:
        sets = [
            generate_set(SetSpec(kind=generator, n=n, seed=_set_seed(seed, i)))
            for i in range(f.vars.k)
        ]
        started = time.perf_counter()
        size = image_size(f, sets, budget=budget, workers=workers)
        rows.append((n, size, time.perf_counter() - started))
    fitted = fit_exponent([(n, size) for n, size, _ in rows])
    n_max, size_max, _ = rows[-1]
    respected = size_max >= n_max ** (float(theo) - 0.25)
    return ExpansionReport(
        poly=str(f),
        rank=r,
        rows=tuple(rows),
        fitted_exponent=fitted,
        theoretical_exponent=theo,
        lower_bound_respected=respected,
        generator=generator,
        seed=seed,
    )


def degenerate_demo(k: int, n: int, seed: int = 0, budget: int = DEFAULT_BUDGET) -> dict:
    """Exhibit a (k+2)-variate polynomial that expands no faster than a
    trivariate one.

    f(x, y, z_1, ..., z_k) = x*y + z_1 + ... + z_k over random A, B and
    interval sets C_i = {1..n} has exactly the same image as
    g(x, y, z) = x*y + z over A, B and the sumset C_1 + ... + C_k =
    {k, ..., k*n}.  Both images are computed exhaustively and compared.
    """
    if k < 1:
        raise ValueError("need k >= 1 auxiliary variables")
    if n < 1:
        raise ValueError("need n >= 1")
    names = ("x", "y") + tuple(f"z{i}" for i in range(1, k + 1))
    vars_full = VarSet(names)
    terms: dict[tuple[int, ...], int] = {}
    xy = [0] * (k + 2)
    xy[0] = xy[1] = 1
    terms[tuple(xy)] = 1
    for i in range(k):
        z = [0] * (k + 2)
        z[2 + i] = 1
        terms[tuple(z)] = 1
    f = Polynomial(vars_full, terms)

    a = generate_set(SetSpec("random_int", n, seed=_set_seed(seed, 0)))
    b = generate_set(SetSpec("random_int", n, seed=_set_seed(seed, 1)))
    interval = generate_set(SetSpec("interval", n))
    full_image = image_values(f, [a, b] + [interval] * k, budget=budget)

    vars_g = VarSet(("x", "y", "z"))
    g = Polynomial(vars_g, {(1, 1, 0): 1, (0, 0, 1): 1})
    sumset = tuple(range(k, k * n + 1))
    reduced_image = image_values(g, [a, b, sumset], budget=budget)

    return {
        "k": k,
        "n": n,
        "seed": seed,
        "image_size_full": len(full_image),
        "image_size_reduced": len(reduced_image),
        "equal": full_image == reduced_image,
        "sumset_size": len(sumset),
    }
