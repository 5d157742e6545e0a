"""Power equations: global solutions versus solvability in finite quotients.

For the equation x^m = g the trichotomy is decidable on the global side
(m-th roots are computable) and one-sided on the finite side: a single
finite quotient with no solution certifies that g is not an m-th power,
while exhausting a degree budget certifies nothing.  The checker reports
GLOBAL_SOLUTION, LOCAL_FAILURE (with the witnessing hom), or EXHAUSTED.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .equations import power_equation
from .factors import (DirectedFamilyFactor, directed_family_factor,
                      spanning_tree_basis)
from .graphs import StallingsGraph
from .quotients import FiniteQuotientHom, enumerate_homs, solve_in_quotient
from .words import Alphabet, Word, enumerate_cyclically_reduced, mth_root

DEFAULT_MAX_DEGREE = 6
AUDIT_MAX_DEGREE = 3


def default_max_degree() -> int:
    """Degree budget for witness searches; STALLINGS_MAX_DEGREE overrides."""
    env = os.environ.get("STALLINGS_MAX_DEGREE")
    return int(env) if env else DEFAULT_MAX_DEGREE


class WitnessMode(Enum):
    GLOBAL_SOLUTION = "GLOBAL_SOLUTION"
    LOCAL_FAILURE = "LOCAL_FAILURE"
    EXHAUSTED = "EXHAUSTED"


EXIT_CODES = {WitnessMode.GLOBAL_SOLUTION: 0,
              WitnessMode.LOCAL_FAILURE: 10,
              WitnessMode.EXHAUSTED: 20}


def is_m_power(g: Word, m: int) -> bool:
    return mth_root(g, m) is not None


@dataclass(frozen=True)
class WitnessReport:
    g: Word
    m: int
    mode: WitnessMode
    root: Optional[Word] = None
    hom: Optional[FiniteQuotientHom] = None
    degree: Optional[int] = None
    max_degree: Optional[int] = None
    homs_tested: int = 0
    elapsed_s: float = 0.0
    audited_max_degree: Optional[int] = None
    audit_failures: tuple[FiniteQuotientHom, ...] = ()

    def to_json_dict(self) -> dict:
        out: dict = {"equation": str(power_equation(self.m, self.g)),
                     "g": str(self.g), "m": self.m,
                     "mode": self.mode.value,
                     "homs_tested": self.homs_tested,
                     "elapsed_s": round(self.elapsed_s, 6)}
        if self.root is not None:
            out["root"] = str(self.root)
        if self.hom is not None:
            out["hom"] = self.hom.to_json_dict(solvable=False)
            out["degree"] = self.degree
        if self.mode is WitnessMode.EXHAUSTED:
            out["max_degree"] = self.max_degree
        if self.audited_max_degree is not None:
            out["audited_max_degree"] = self.audited_max_degree
            out["audit_failures"] = [h.to_json_dict() for h in self.audit_failures]
        return out


def local_global_mpower_check(g: Word, m: int,
                              max_degree: Optional[int] = None,
                              audit: bool = False,
                              audit_max_degree: int = AUDIT_MAX_DEGREE
                              ) -> WitnessReport:
    """Decide x^m = g globally; without a root, search homs of increasing
    degree for a quotient with no solution.

    With ``audit`` and a global root, every hom up to audit_max_degree is
    checked for a solution; any failure would contradict the hom property
    and is reported rather than swallowed.
    """
    if max_degree is None:
        max_degree = default_max_degree()
    start = time.perf_counter()
    rank = g.alphabet.rank
    eq = power_equation(m, g)
    root = mth_root(g, m)
    tested = 0
    if root is not None:
        failures = []
        audited = None
        if audit:
            audited = audit_max_degree
            for d in range(1, audit_max_degree + 1):
                for h in enumerate_homs(rank, d):
                    tested += 1
                    if solve_in_quotient(eq, h) is None:
                        failures.append(h)
        return WitnessReport(g, m, WitnessMode.GLOBAL_SOLUTION, root=root,
                             homs_tested=tested,
                             elapsed_s=time.perf_counter() - start,
                             audited_max_degree=audited,
                             audit_failures=tuple(failures))
    for d in range(1, max_degree + 1):
        for h in enumerate_homs(rank, d):
            tested += 1
            if solve_in_quotient(eq, h) is None:
                return WitnessReport(g, m, WitnessMode.LOCAL_FAILURE, hom=h,
                                     degree=d, homs_tested=tested,
                                     elapsed_s=time.perf_counter() - start)
    return WitnessReport(g, m, WitnessMode.EXHAUSTED, max_degree=max_degree,
                         homs_tested=tested,
                         elapsed_s=time.perf_counter() - start)


@dataclass(frozen=True)
class SweepRow:
    g: Word
    m: int
    report: WitnessReport

    def to_json_dict(self) -> dict:
        return self.report.to_json_dict()


def _sweep_case(args: tuple[str, int, int, int, bool]
                ) -> tuple[str, int, WitnessReport]:
    text, rank, m, max_degree, audit = args
    g = Alphabet(rank).word(text)
    report = local_global_mpower_check(g, m, max_degree, audit=audit)
    return text, m, report


def sweep_mpowers(rank: int = 2, max_len: int = 4,
                  exponents: Sequence[int] = (2, 3),
                  max_degree: Optional[int] = None,
                  audit: bool = True, jobs: int = 1) -> list[SweepRow]:
    """Run the dichotomy check over every cyclically reduced word of
    length <= max_len, for each exponent.  Deterministic row order."""
    if max_degree is None:
        max_degree = default_max_degree()
    alphabet = Alphabet(rank)
    cases = [(str(g), rank, m, max_degree, audit)
             for g in enumerate_cyclically_reduced(alphabet, max_len)
             for m in exponents]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_case, cases, chunksize=8))
    else:
        results = [_sweep_case(c) for c in cases]
    return [SweepRow(alphabet.word(text), m, report)
            for (text, m, report) in results]


@dataclass(frozen=True)
class ReductionStep:
    description: str
    status: str  # "verified" or "not machine-checked"


@dataclass(frozen=True)
class ReductionReport:
    """Rank bookkeeping for replacing an equation's coefficient group by a
    free factor of bounded rank.

    The graph-theoretic steps are machine-checked here; the steps that
    pass through completions and retractions are recorded as motivation
    only.
    """

    g: Word
    num_vars: int
    factor: DirectedFamilyFactor
    rank: int
    rank_within_bound: bool
    basis: tuple[Word, ...]
    steps: tuple[ReductionStep, ...]

    def to_json_dict(self) -> dict:
        return {
            "g": str(self.g),
            "num_vars": self.num_vars,
            "j0": self.factor.j0,
            "h_basis": [str(w) for w in self.basis],
            "h_rank": self.rank,
            "rank_within_bound": self.rank_within_bound,
            "basis_h": [str(w) for w in self.factor.certificate.basis_h],
            "basis_n": [str(w) for w in self.factor.certificate.basis_n],
            "steps": [{"description": s.description, "status": s.status}
                      for s in self.steps],
        }


def reduction_pipeline(g: Word, solution_gens: Sequence[Word],
                       family: Sequence[StallingsGraph]) -> ReductionReport:
    """Trace g through the family, certify the image subgroup as a free
    factor, and compare its rank against the variable count.

    ``solution_gens`` stands in for a generating set of the subgroup a
    solution would generate; g and every entry must belong to every
    family member.
    """
    for j, member in enumerate(family):
        if not member.contains(g):
            raise ValueError("g is not a member of family[%d]" % j)
        for s in solution_gens:
            if not member.contains(s):
                raise ValueError(
                    "solution generator %s is not a member of family[%d]" % (s, j))
    factor = directed_family_factor([g], family)
    basis = spanning_tree_basis(factor.h).words
    rank = factor.h.cycle_rank
    assert rank == len(basis)
    n = len(solution_gens)
    steps = (
        ReductionStep("g traces a closed path in every family member", "verified"),
        ReductionStep("image subgroup has a finite basis of size %d" % rank,
                      "verified"),
        ReductionStep("image subgroup is a free factor of candidate %d "
                      "(injective morphism with extended spanning tree)"
                      % factor.j0, "verified"),
        ReductionStep("rank %d %s the variable-count bound %d"
                      % (rank, "meets" if rank <= n else "exceeds", n),
                      "verified"),
        ReductionStep("the directed family stands in for the poset of "
                      "finite-index overgroups", "not machine-checked"),
        ReductionStep("passing the retraction through completions preserves "
                      "solvability in every finite quotient", "not machine-checked"),
    )
    return ReductionReport(g, n, factor, rank, rank <= n, basis, steps)
