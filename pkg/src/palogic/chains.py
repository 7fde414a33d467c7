"""Finite totally-ordered candidate algebras and the model census.

Carrier elements are ranks 0 = zero < 1 < ... < n-1 = one.  The negation
table is pinned to the rank reversal i(k) = n-1-k: on a finite chain the
only antitone involution is the reversal, so under L3+L7 there is nothing
to search.  The enumerator therefore searches product tables only.

Chains are rigid (the sole order-preserving bijection between two n-chains
is the rank map), so isomorphism classes of enumerated models are
singletons and canonical_form is the identity.  `isomorphism_classes`
exists as the oracle guarding that assumption.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .algebra import ProbabilityAlgebra
from .laws import (
    DEFAULT_LAW_SET,
    CounterexampleReport,
    LawSet,
    check_laws,
)

DEFAULT_SIZE_CAP = 8

#: Reference census table for the default law set (counts of non-isomorphic
#: n-chain models).  `palogic census` diffs enumeration results against it.
EXPECTED_CENSUS = {2: 1, 3: 1, 4: 2, 5: 3, 6: 7, 7: 16}


class ModelFormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def rank_reversal(n: int) -> tuple[int, ...]:
    return tuple(n - 1 - k for k in range(n))


@dataclass(frozen=True)
class FiniteChainModel(ProbabilityAlgebra):
    """A candidate algebra on the n-chain: product table plus negation table."""

    n: int
    h_table: tuple[tuple[int, ...], ...]
    i_table: tuple[int, ...]

    name = "chain"

    def __post_init__(self):
        n = self.n
        if n < 2:
            raise ValueError("carrier needs at least the two bounds")
        if len(self.h_table) != n or any(len(row) != n for row in self.h_table):
            raise ValueError(f"h_table must be {n}x{n}")
        if len(self.i_table) != n:
            raise ValueError(f"i_table must have {n} entries")
        for row in self.h_table:
            for v in row:
                if not 0 <= v < n:
                    raise ValueError(f"h_table entry {v} out of range")
        for v in self.i_table:
            if not 0 <= v < n:
                raise ValueError(f"i_table entry {v} out of range")

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return self.n - 1

    def le(self, p: int, q: int) -> bool:
        return p <= q

    def h(self, p: int, q: int) -> int:
        return self.h_table[p][q]

    def i(self, p: int) -> int:
        return self.i_table[p]

    def carrier(self) -> range:
        return range(self.n)

    def divide(self, q: int, p: int) -> Optional[int]:
        """First r in rank order with h(p, r) = q, else None."""
        for r in range(self.n):
            if self.h_table[p][r] == q:
                return r
        return None

    def parse_value(self, text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise ValueError(f"not a rank: {text!r}") from None
        if not 0 <= v < self.n:
            raise ValueError(f"rank {v} outside 0..{self.n - 1}")
        return v


def chain_model(n: int, h_table: Sequence[Sequence[int]],
                i_table: Optional[Sequence[int]] = None) -> FiniteChainModel:
    if i_table is None:
        i_table = rank_reversal(n)
    return FiniteChainModel(n, tuple(tuple(row) for row in h_table), tuple(i_table))


def format_model(model: FiniteChainModel) -> str:
    lines = [f"n={model.n}", "i=" + ",".join(map(str, model.i_table))]
    lines.extend(",".join(map(str, row)) for row in model.h_table)
    return "".join(line + "\n" for line in lines)


def parse_model(text: str) -> FiniteChainModel:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("n="):
        raise ModelFormatError(1, "expected 'n=<size>'")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise ModelFormatError(1, f"bad size {lines[0][2:]!r}") from None
    if len(lines) < 2 or not lines[1].startswith("i="):
        raise ModelFormatError(2, "expected 'i=<comma-separated ranks>'")

    def ranks(lineno: int, payload: str) -> tuple[int, ...]:
        try:
            values = tuple(int(tok) for tok in payload.split(","))
        except ValueError:
            raise ModelFormatError(lineno, f"bad rank list {payload!r}") from None
        return values

    i_table = ranks(2, lines[1][2:])
    rows = []
    for k in range(n):
        lineno = 3 + k
        if lineno - 1 >= len(lines) or not lines[lineno - 1].strip():
            raise ModelFormatError(lineno, f"missing h_table row {k}")
        rows.append(ranks(lineno, lines[lineno - 1].strip()))
    try:
        return FiniteChainModel(n, tuple(rows), i_table)
    except ValueError as exc:
        raise ModelFormatError(1, str(exc)) from None


def load_model(path: str) -> FiniteChainModel:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_model(fh.read())


def save_model(model: FiniteChainModel, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_model(model))


# ---------------------------------------------------------------------------
# isomorphism


def canonical_form(model: FiniteChainModel) -> FiniteChainModel:
    """Identity: order-preserving bijections between chains are unique.

    Exists to make the isomorphism policy explicit; `isomorphism_classes`
    cross-checks the rigidity assumption by brute force.
    """
    return model


def are_isomorphic(a: FiniteChainModel, b: FiniteChainModel,
                   order_preserving_only: bool = True) -> bool:
    if a.n != b.n:
        return False
    if order_preserving_only:
        return a.h_table == b.h_table and a.i_table == b.i_table
    n = a.n
    for perm in itertools.permutations(range(n)):
        if any(perm[p] > perm[q] for p in range(n) for q in range(p, n)):
            continue  # must preserve the order
        if any(perm[a.h_table[p][q]] != b.h_table[perm[p]][perm[q]]
               for p in range(n) for q in range(n)):
            continue
        if any(perm[a.i_table[p]] != b.i_table[perm[p]] for p in range(n)):
            continue
        return True
    return False


def isomorphism_classes(models: Sequence[FiniteChainModel],
                        order_preserving_only: bool = False) -> list[list[FiniteChainModel]]:
    """Brute-force pairwise partition; the oracle behind canonical_form."""
    classes: list[list[FiniteChainModel]] = []
    for m in models:
        for cls in classes:
            if are_isomorphic(cls[0], m, order_preserving_only):
                cls.append(m)
                break
        else:
            classes.append([m])
    return classes


# ---------------------------------------------------------------------------
# census


@dataclass(frozen=True)
class CensusResult:
    n: int
    law_set_name: str
    count: int
    models: tuple[FiniteChainModel, ...]

    def __post_init__(self):
        if self.count != len(self.models):
            raise ValueError("count must equal the number of models")


def is_model(model: FiniteChainModel, laws: LawSet) -> list[CounterexampleReport]:
    """All law violations (empty list = the structure is a model)."""
    return check_laws(model, laws)


def _search_tables(n: int, laws: LawSet,
                   first_value: Optional[int] = None) -> Iterable[tuple[tuple[int, ...], ...]]:
    """Backtracking fill of the product table.

    Pruning uses only laws present in `laws`: identity row/column (L4),
    zero row/column (L5, or L2+L4 which force it), commutative mirroring
    (L10), monotone upper bounds (L2), factor bounds (L11), nonzero lower
    bound (L6), incremental associativity on the filled prefix (L9).
    Remaining laws are left to the caller's post-filter.
    """
    one = n - 1
    use_identity = "L4" in laws
    use_zero = "L5" in laws or ("L2" in laws and "L4" in laws)
    use_comm = "L10" in laws
    use_mono = "L2" in laws
    use_bounds = "L11" in laws
    use_nzd = "L6" in laws
    use_assoc = "L9" in laws

    table: list[list[Optional[int]]] = [[None] * n for _ in range(n)]
    if use_identity:
        for q in range(n):
            table[one][q] = q
            table[q][one] = q
    if use_zero:
        for q in range(n):
            table[0][q] = 0
            table[q][0] = 0

    cells = [
        (p, q)
        for p in range(n - 1, -1, -1)
        for q in range(n - 1, (p - 1) if use_comm else -1, -1)
        if table[p][q] is None
    ]

    def lookup(x: int, y: int) -> Optional[int]:
        v = table[x][y]
        if v is None and use_comm:
            v = table[y][x]
        return v

    def assoc_consistent() -> bool:
        for x in range(n):
            for y in range(n):
                xy = lookup(x, y)
                if xy is None:
                    continue
                for z in range(n):
                    yz = lookup(y, z)
                    if yz is None:
                        continue
                    left = lookup(xy, z)
                    right = lookup(x, yz)
                    if left is not None and right is not None and left != right:
                        return False
        return True

    def fill(idx: int):
        if idx == len(cells):
            yield tuple(tuple(lookup(p, q) for q in range(n)) for p in range(n))
            return
        p, q = cells[idx]
        ub = n - 1
        if use_mono:
            for np_, nq in ((p + 1, q), (p, q + 1)):
                if np_ < n and nq < n:
                    v = lookup(np_, nq)
                    if v is not None:
                        ub = min(ub, v)
        if use_bounds:
            ub = min(ub, p, q)
        lb = 1 if (use_nzd and p != 0 and q != 0) else 0
        candidates = range(lb, ub + 1)
        if idx == 0 and first_value is not None:
            candidates = [v for v in candidates if v == first_value]
        for v in candidates:
            table[p][q] = v
            if use_comm:
                table[q][p] = v
            if not use_assoc or assoc_consistent():
                yield from fill(idx + 1)
        table[p][q] = None
        if use_comm:
            table[q][p] = None

    yield from fill(0)


def enumerate_models(n: int, laws: LawSet = DEFAULT_LAW_SET,
                     cap: int = DEFAULT_SIZE_CAP, jobs: int = 1) -> CensusResult:
    """Every model of `laws` on the n-chain, one representative per class.

    Pruned cell-by-cell search; every candidate that survives is re-checked
    against the complete law set, so pruning can only lose speed, never
    soundness.  Output is sorted by table contents, which is also the
    deterministic merge order for partitioned (jobs > 1) runs.
    """
    if not 2 <= n <= cap:
        raise ValueError(f"n must be within [2, {cap}], got {n}")
    reversal = rank_reversal(n)

    def finish(tables: Iterable[tuple[tuple[int, ...], ...]]) -> list[FiniteChainModel]:
        out = []
        for t in tables:
            model = FiniteChainModel(n, t, reversal)
            if not is_model(model, laws):
                out.append(model)
        return out

    if jobs <= 1:
        models = finish(_search_tables(n, laws))
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                lambda v: finish(_search_tables(n, laws, first_value=v)), range(n)
            )
        models = [m for part in parts for m in part]
    models.sort(key=lambda m: m.h_table)
    return CensusResult(n, laws.name, len(models), tuple(models))


def _monotone_rows(n: int) -> list[tuple[int, ...]]:
    return [
        r
        for r in itertools.product(range(n), repeat=n)
        if all(r[k] <= r[k + 1] for k in range(n - 1))
    ]


def naive_enumerate(n: int, laws: LawSet = DEFAULT_LAW_SET) -> CensusResult:
    """Oracle enumerator: all monotone tables, post-hoc law filtering.

    Independent of the pruned search: no mirroring, no incremental checks.
    The only shortcut is evaluating the L4 identity-row clause first (when
    L4 is in the law set), which rejects most tables in O(1); the surviving
    tables still pass through the full `is_model` filter.
    """
    if not 2 <= n <= 5:
        raise ValueError("naive enumeration is desk-scale only (2 <= n <= 5)")
    rows = _monotone_rows(n)
    successors = {r: tuple(r2 for r2 in rows if all(x <= y for x, y in zip(r, r2)))
                  for r in rows}
    ident = rows[rows.index(tuple(range(n)))]
    require_ident_last = "L4" in laws
    reversal = rank_reversal(n)
    found = []

    def rec(prefix: tuple):
        depth = len(prefix)
        candidates = rows if depth == 0 else successors[prefix[-1]]
        if depth == n - 1:
            for r in candidates:
                if require_ident_last and r is not ident:
                    continue
                model = FiniteChainModel(n, prefix + (r,), reversal)
                if not is_model(model, laws):
                    found.append(model)
            return
        for r in candidates:
            rec(prefix + (r,))

    rec(())
    found.sort(key=lambda m: m.h_table)
    return CensusResult(n, laws.name, len(found), tuple(found))


def calibration_report(variants: dict[str, LawSet],
                       ns: Sequence[int] = tuple(EXPECTED_CENSUS),
                       cap: int = DEFAULT_SIZE_CAP) -> dict[str, dict[int, int]]:
    """Counts per law-set variant per size, for diffing against the
    reference table when the default set fails to reproduce it."""
    report = {}
    for label, law_set in variants.items():
        report[label] = {n: enumerate_models(n, law_set, cap=cap).count for n in ns}
    return report
