"""Recognition of the exceptional graphs and census verification of the 4-valent classification."""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import constructions as c
from .catalog import CATALOG, REQUIRED_BRANCHES
from .colourings.common import InvariantViolation, PreconditionError, recognize_wreath
from .colourings.dispatch import EXPECTED_D, Certificate, distinguishing_colouring_4vt
from .distinguishing import BudgetExceeded, distinguishing_number
from .formats import from_graph6, to_graph6
from .graph import Graph, is_connected
from .search import find_isomorphism
from .symmetry import is_vertex_transitive

__all__ = [
    "Certificate",
    "CensusReport",
    "CensusRow",
    "ClassificationError",
    "classify",
    "cubic_expected_d",
    "exceptional_family",
    "recognize_wreath",
    "verify_theorem",
]


class ClassificationError(RuntimeError):
    """An exceptional verdict disagrees with the expected distinguishing number."""


def exceptional_family(g: Graph) -> str | None:
    """Name of the exceptional family ``g`` is isomorphic to, by direct isomorphism tests."""
    if g.regular_degree() != 4:
        return None
    refs = {5: [("K5", c.complete(5))], 8: [("K44_W4", c.complete_bipartite(4)), ("K4boxK2", c.named("k4_box_k2"))],
            9: [("K3boxK3", c.named("k3_box_k3"))], 10: [("K5xK2", c.named("k5_tensor_k2"))]}
    for name, ref in refs.get(g.n, []):
        if find_isomorphism(g, ref) is not None:
            return name
    if g.n % 2 == 0 and g.n >= 6 and g.n != 8 and find_isomorphism(g, c.wreath(g.n // 2)) is not None:
        return f"W{g.n // 2}"
    return None


def _family_name(family: str) -> str:
    return "Wn" if family.startswith("W") and family[1:].isdigit() else family


def cubic_expected_d(g: Graph) -> int:
    """Distinguishing number of a connected cubic vertex-transitive graph per the cubic classification."""
    for ref, d in ((c.complete(4), 4), (c.complete_bipartite(3), 4), (c.hypercube(3), 3), (c.petersen(), 3)):
        if g.n == ref.n and find_isomorphism(g, ref) is not None:
            return d
    return 2


def classify(g: Graph, budget: int | None = None) -> Certificate:
    """Certificate for ``g``; exceptional verdicts must carry the expected ``D``."""
    cert = distinguishing_colouring_4vt(g, budget)
    if cert.exceptional is not None:
        want = EXPECTED_D[cert.exceptional.family]
        if cert.D != want:
            raise ClassificationError(f"{cert.exceptional.name}: exact D = {cert.D}, expected {want}")
    elif not cert.verified:
        raise InvariantViolation("non-exceptional certificate without a verified colouring")
    return cert


@dataclass
class CensusRow:
    name: str
    graph6: str
    status: str  # "ok", "skipped" or "FAILED"
    note: str = ""
    valency: int | None = None
    exceptional: str | None = None
    D: int | None = None
    branch: str | None = None

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in
                ("name", "graph6", "status", "note", "valency", "exceptional", "D", "branch")}


@dataclass
class CensusReport:
    rows: list[CensusRow] = field(default_factory=list)
    required_branches: frozenset[str] = REQUIRED_BRANCHES

    @property
    def failures(self) -> list[CensusRow]:
        return [r for r in self.rows if r.status == "FAILED"]

    @property
    def branches_hit(self) -> set[str]:
        return {r.branch for r in self.rows if r.branch}

    @property
    def missing_branches(self) -> list[str]:
        return sorted(self.required_branches - self.branches_hit)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.missing_branches

    def summary(self) -> dict:
        counts: dict[str, int] = {}
        for r in self.rows:
            counts[r.status] = counts.get(r.status, 0) + 1
        return {"status": "PASSED" if self.ok else "FAILED", "counts": counts,
                "missing_branches": self.missing_branches,
                "failed": [r.graph6 for r in self.failures]}

    def json_lines(self) -> str:
        lines = [json.dumps(r.as_dict(), sort_keys=True) for r in self.rows]
        lines.append(json.dumps({"summary": self.summary()}, sort_keys=True))
        return "\n".join(lines) + "\n"

    def table(self) -> str:
        head = ("name", "n", "status", "family", "D", "branch")
        body = [(r.name, str(len_from_graph6(r.graph6)), r.status, r.exceptional or "-",
                 "-" if r.D is None else str(r.D), r.branch or r.note) for r in self.rows]
        widths = [max(len(x) for x in col) for col in zip(head, *body)]
        fmt = "  ".join(f"{{:<{w}}}" for w in widths)
        out = [fmt.format(*head)] + [fmt.format(*row) for row in body]
        s = self.summary()
        out.append(f"{s['status']}: " + ", ".join(f"{k}={v}" for k, v in sorted(s["counts"].items())))
        if s["missing_branches"]:
            out.append("missing branches: " + ", ".join(s["missing_branches"]))
        return "\n".join(out) + "\n"


def len_from_graph6(text: str) -> int:
    return from_graph6(text).n


def _census_row(name: str, g6: str, confirm_upto: int, budget: int | None) -> CensusRow:
    g = from_graph6(g6)
    row = CensusRow(name, g6, "ok", valency=g.regular_degree())
    try:
        if not is_connected(g):
            row.status, row.note = "skipped", "not connected"
            return row
        if not is_vertex_transitive(g):
            row.status, row.note = "skipped", "not vertex-transitive"
            return row
        if row.valency == 3:
            d, _ = distinguishing_number(g, k_max=5, budget=budget)
            want = cubic_expected_d(g)
            row.D, row.note = d, "cubic"
            if d != want:
                row.status, row.note = "FAILED", f"cubic D = {d}, expected {want}"
            return row
        if row.valency != 4:
            row.status, row.note = "skipped", f"valency {row.valency}"
            return row
        cert = classify(g, budget)
        row.branch = cert.branch
        row.D = cert.D
        row.exceptional = cert.exceptional.name if cert.exceptional else None
        family = exceptional_family(g)
        got = cert.exceptional.family if cert.exceptional else None
        if (family is None) != (got is None) or (family is not None and _family_name(family) != got):
            row.status, row.note = "FAILED", f"exceptional verdict {got} but isomorphism test says {family}"
        elif family is None and g.n <= confirm_upto:
            d, _ = distinguishing_number(g, k_max=2, budget=budget)
            if d != 2:
                row.status, row.note = "FAILED", f"exact search gives D = {d}"
            else:
                row.note = "exact D = 2 confirmed"
    except BudgetExceeded as exc:
        row.status, row.note = "FAILED", f"budget exhausted: {exc}"
    except (PreconditionError, InvariantViolation, ClassificationError) as exc:
        row.status, row.note = "FAILED", f"{type(exc).__name__}: {exc}"
    return row


def _row_job(args: tuple[str, str, int, int | None]) -> CensusRow:
    return _census_row(*args)


def verify_theorem(catalog: Iterable[Graph | tuple[str, Graph]] | None = None, jobs: int = 1,
                   confirm_upto: int = 0, budget: int | None = None,
                   required_branches: frozenset[str] | None = None) -> CensusReport:
    """Classify every catalog graph and check verdicts against independent tests.

    Exceptional verdicts are compared with direct isomorphism tests and their
    ``D`` with the expected values; non-exceptional graphs with at most
    ``confirm_upto`` vertices also get ``D = 2`` confirmed by exact search.
    Rows are sorted by graph6. With ``catalog=None`` the bundled catalog is
    used and full branch coverage is required.
    """
    if catalog is None:
        items: Sequence[tuple[str, Graph]] = [(e.name, e.graph()) for e in CATALOG]
        required = REQUIRED_BRANCHES if required_branches is None else required_branches
    else:
        items = [(x if isinstance(x, tuple) else (to_graph6(x), x)) for x in catalog]
        required = frozenset() if required_branches is None else required_branches
    jobs_args = [(name, to_graph6(g), confirm_upto, budget) for name, g in items]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row_job, jobs_args))
    else:
        rows = [_row_job(a) for a in jobs_args]
    rows.sort(key=lambda r: (r.graph6, r.name))
    return CensusReport(rows, required)
