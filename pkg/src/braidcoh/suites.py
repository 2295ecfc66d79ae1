"""Batch verification suites: every closed-form prediction against its computation.

Each suite expands to a list of independent tasks ``(function name, args)``;
:func:`run_suite` evaluates them serially or on a process pool and always
returns the cases in task order, so reports do not depend on ``jobs``.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import amalgam, braid, cyclic, dividedpower, polyinv, series
from .exactalg import AbelianGroup, tensor_fp_dimension

SUITES = ("cyclic-tables", "invariant-rings", "dickson", "sl2z-h1", "sl2z-series",
          "b3-h1", "b3-h2", "gamma-ring", "anick")


@dataclass
class Case:
    group: str
    i: int
    n: int
    coeff: str
    expected: str
    computed: str
    status: str

    @classmethod
    def make(cls, group, i, n, coeff, expected, computed) -> Case:
        return cls(group, i, n, coeff, str(expected), str(computed),
                   "pass" if expected == computed else "fail")


@dataclass
class VerifyReport:
    suite: str
    cases: list[Case] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> int:
        return sum(c.status == "pass" for c in self.cases)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {"suite": self.suite, "cases": [asdict(c) for c in self.cases],
                "passed": self.passed, "failed": self.failed}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def even_degrees(max_degree: int, start: int = 0) -> list[int]:
    return list(range(start, max_degree + 1, 2))


# --- computed sequences behind each catalog series ---------------------------


def _tensor(g: AbelianGroup, p: int) -> int:
    return tensor_fp_dimension(g, p)


def _count(g: AbelianGroup, q: int) -> int:
    return g.prime_powers().count(q)


SERIES_SOURCES = {
    "z2-even": [("Z/2 H^0 rank", "z2", 0, "int", lambda n: cyclic.cyclic_cohomology(2, 0, n).free_rank),
                ("Z/2 H^2 (x) F_2", "z2", 2, "mod:2", lambda n: _tensor(cyclic.cyclic_cohomology(2, 2, n), 2))],
    "z2-odd": [("Z/2 H^1 (x) F_2", "z2", 1, "mod:2", lambda n: _tensor(cyclic.cyclic_cohomology(2, 1, n), 2))],
    "z4-even": [("Z/4 H^0 rank", "z4", 0, "int", lambda n: cyclic.cyclic_cohomology(4, 0, n).free_rank),
                ("Z/4 H^2 (x) F_2", "z4", 2, "mod:2", lambda n: _tensor(cyclic.cyclic_cohomology(4, 2, n), 2))],
    "z4-odd": [("Z/4 H^1 (x) F_2", "z4", 1, "mod:2", lambda n: _tensor(cyclic.cyclic_cohomology(4, 1, n), 2))],
    "z4-4torsion": [("Z/4 summands of H^2(Z/4)", "z4", 2, "int", lambda n: _count(cyclic.cyclic_cohomology(4, 2, n), 4))],
    "z6-even": [("Z/6 H^0 rank", "z6", 0, "int", lambda n: cyclic.cyclic_cohomology(6, 0, n).free_rank),
                ("Z/6 H^2 (x) F_2", "z6", 2, "mod:2", lambda n: _tensor(cyclic.cyclic_cohomology(6, 2, n), 2))],
    "z6-even-mod3": [("Z/6 H^2 (x) F_3", "z6", 2, "mod:3", lambda n: _tensor(cyclic.cyclic_cohomology(6, 2, n), 3))],
    "z6-odd-mod2": [("Z/6 H^1 (x) F_2", "z6", 1, "mod:2", lambda n: _tensor(cyclic.cyclic_cohomology(6, 1, n), 2))],
    "z6-odd-mod3": [("Z/6 H^1 (x) F_3", "z6", 1, "mod:3", lambda n: _tensor(cyclic.cyclic_cohomology(6, 1, n), 3))],
    "b3-free": [("B3 H^1 rank", "b3", 1, "int", lambda n: braid.b3_cohomology(1, n).free_rank),
                ("B3 H^2 rank", "b3", 2, "int", lambda n: braid.b3_cohomology(2, n).free_rank),
                ("SL2 H^1 rank", "sl2z", 1, "int", lambda n: amalgam.sl2z_cohomology(1, n).free_rank)],
    "sl2z-h2-mod2": [("SL2 H^2 (x) F_2", "sl2z", 2, "mod:2", lambda n: _tensor(amalgam.sl2z_cohomology(2, n), 2))],
    "sl2z-h3-mod2": [("SL2 H^3 (x) F_2", "sl2z", 3, "mod:2", lambda n: _tensor(amalgam.sl2z_cohomology(3, n), 2))],
    "sl2z-h2-mod3": [("SL2 H^2 (x) F_3", "sl2z", 2, "mod:3", lambda n: _tensor(amalgam.sl2z_cohomology(2, n), 3))],
    "sl2z-h3-mod3": [("SL2 H^3 (x) F_3", "sl2z", 3, "mod:3", lambda n: _tensor(amalgam.sl2z_cohomology(3, n), 3))],
    "z2-inv-mod2": [("Z/2 invariants mod 2", "z2", 0, "mod:2", lambda n: polyinv.invariant_dimension("z2", n, 2))],
    "z4-inv-mod2": [("Z/4 invariants mod 2", "z4", 0, "mod:2", lambda n: polyinv.invariant_dimension("z4", n, 2))],
    "z6-inv-int": [("Z/6 invariants", "z6", 0, "int", lambda n: polyinv.invariant_dimension("z6", n, 0))],
    "z6-inv-mod2": [("Z/6 invariants mod 2", "z6", 0, "mod:2", lambda n: polyinv.invariant_dimension("z6", n, 2))],
    "z6-inv-mod3": [("Z/6 invariants mod 3", "z6", 0, "mod:3", lambda n: polyinv.invariant_dimension("z6", n, 3))],
}
for _p in (2, 3, 5, 7):
    SERIES_SOURCES[f"sl2z-h1-torsion-p{_p}"] = [
        (f"{_p}-primary summands of SL2 H^1", "sl2z", 1, "int",
         lambda n, p=_p: len(amalgam.sl2z_cohomology(1, n).p_part(p)))]


def series_case(name: str, source_index: int, n: int) -> Case:
    label, group, i, coeff, fn = SERIES_SOURCES[name][source_index]
    entry = series.get(name)
    expected = entry.series.coefficient(n)
    return Case.make(group, i, n, coeff, expected, fn(n))


# --- individual case functions (top level so they pickle) --------------------


def z4_table_case(i: int, n: int) -> Case:
    return Case.make("z4", i, n, "int", cyclic.z4_table_prediction(i, n), cyclic.cyclic_cohomology(4, i, n))


def z2_table_case(i: int, n: int) -> Case:
    return Case.make("z2", i, n, "int", cyclic.z2_prediction(i, n), cyclic.cyclic_cohomology(2, i, n))


def presentation_case(name: str, max_degree: int) -> Case:
    rep = polyinv.verify_ring_presentation(name, max_degree, strict=False)
    bad = [g for g, ok in rep.invariant_generators.items() if not ok]
    computed = "ok" if rep.ok else f"non-invariant {bad}, relation {rep.relation_holds}, " \
                                   f"generation fails at {rep.generation_failures[:3]}"
    pres = polyinv.PRESENTATIONS[name]
    return Case.make(pres.group, 0, max_degree, f"mod:{pres.modulus}" if pres.modulus else "int",
                     "ok", computed)


def dickson_case(p: int, max_degree: int) -> Case:
    checks = polyinv.verify_dickson_mod_p(p, max_degree)
    bad = [c.n for c in checks if not c.ok]
    return Case.make("sl2z", 0, max_degree, f"mod:{p}", "[]", str(bad))


def steinberg_case(p: int, r: int, max_degree: int) -> Case:
    checks = polyinv.verify_steinberg_mod_pr(p, r, max_degree)
    bad = [c.n for c in checks if not c.ok]
    return Case.make("sl2z", 0, max_degree, f"mod:{p}^{r}", "[]", str(bad))


def sl2z_h1_case(n: int) -> Case:
    g = amalgam.sl2z_cohomology(1, n)
    return Case.make("sl2z", 1, n, "int", str(dividedpower.h1_torsion_model(n)),
                     str(dividedpower.TorsionModel.from_group(n, g)))


def b3_h1_case(n: int) -> Case:
    g = braid.b3_cohomology(1, n)
    return Case.make("b3", 1, n, "int", str(dividedpower.h1_torsion_model(n)),
                     str(dividedpower.TorsionModel.from_group(n, g)))


def b3_h2_case(n: int) -> Case:
    g = braid.b3_cohomology(2, n)
    return Case.make("b3", 2, n, "int", str(dividedpower.h2_b3_torsion_model(n)),
                     str(dividedpower.TorsionModel.from_group(n, g)))


def b3_uct_case(n: int, p: int, k: int) -> Case:
    return Case.make("b3", 2, n, f"mod:{p}^{k}", braid.b3_order_mod_prime_power_uct(2, n, p, k),
                     braid.b3_order_mod_prime_power(2, n, p, k))


def sl2z_periodicity_case(n: int) -> Case:
    return Case.make("sl2z", 4, n, "int", amalgam.sl2z_cohomology(2, n), amalgam.sl2z_cohomology(4, n))


def sl2z_z4_case(i: int, n: int) -> Case:
    expected = 1 if (i % 2 == 0 and n % 8 == 0) else 0
    return Case.make("sl2z", i, n, "int", expected, _count(amalgam.sl2z_cohomology(i, n), 4))


def gamma_case(p: int, max_degree: int) -> Case:
    rep = dividedpower.gamma_ring_check(p, max_degree)
    return Case.make("gamma", 0, max_degree, f"p={p}", "[]", str(rep.failures[:3]))


def anick_case(p: int, two_n: int, max_degree: int) -> Case:
    return Case.make(f"T_{p}({two_n + 1})", 0, max_degree, f"p={p}",
                     dividedpower.gamma_torsion(p, two_n, max_degree),
                     dividedpower.anick_cohomology(p, two_n, max_degree))


def shimura_case(p: int, max_degree: int) -> Case:
    rows = dividedpower.shimura_comparison(p, max_degree)
    bad = [r.total_degree for r in rows if not r.tensor_match]
    return Case.make("sl2z", 1, max_degree, f"p={p}", "[]", str(bad))


# --- suite definitions --------------------------------------------------------


def suite_tasks(suite: str, max_degree: int | None = None) -> list[tuple[str, tuple]]:
    """Task list for a suite; ``max_degree`` defaults to the suite's standard bound."""
    defaults = {"cyclic-tables": 60, "invariant-rings": 120, "dickson": 120, "sl2z-h1": 120,
                "sl2z-series": 120, "b3-h1": 120, "b3-h2": 120, "gamma-ring": 200, "anick": 2000}
    if suite not in defaults:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    top = defaults[suite] if max_degree is None else max_degree
    degs = even_degrees(top)
    tasks: list[tuple[str, tuple]] = []
    if suite == "cyclic-tables":
        for n in degs:
            for i in range(5):
                tasks += [("z4_table_case", (i, n)), ("z2_table_case", (i, n))]
        for name in ("z2-even", "z2-odd", "z4-even", "z4-odd", "z4-4torsion",
                     "z6-even", "z6-even-mod3", "z6-odd-mod2", "z6-odd-mod3"):
            for k in range(len(SERIES_SOURCES[name])):
                tasks += [("series_case", (name, k, n)) for n in degs]
    elif suite == "invariant-rings":
        tasks += [("presentation_case", (name, top)) for name in polyinv.PRESENTATIONS]
        for name in ("z2-inv-mod2", "z4-inv-mod2", "z6-inv-int", "z6-inv-mod2", "z6-inv-mod3"):
            tasks += [("series_case", (name, 0, n)) for n in degs]
        for name in ("z2-even", "z4-even", "z6-even"):
            tasks += [("series_case", (name, 0, n)) for n in degs]
    elif suite == "dickson":
        tasks += [("dickson_case", (p, top)) for p in (2, 3, 5, 7)]
        tasks += [("steinberg_case", (p, r, min(top, 48))) for p in (2, 3) for r in (1, 2, 3)]
    elif suite == "sl2z-h1":
        tasks += [("sl2z_h1_case", (n,)) for n in degs if n > 0]
        for p in (2, 3, 5, 7):
            tasks += [("series_case", (f"sl2z-h1-torsion-p{p}", 0, n)) for n in degs]
    elif suite == "sl2z-series":
        for name in ("sl2z-h2-mod2", "sl2z-h3-mod2", "sl2z-h2-mod3", "sl2z-h3-mod3"):
            tasks += [("series_case", (name, 0, n)) for n in degs]
        tasks += [("series_case", ("b3-free", 2, n)) for n in degs if n > 0]
        tasks += [("sl2z_periodicity_case", (n,)) for n in degs if n <= 60]
        tasks += [("sl2z_z4_case", (i, n)) for n in degs for i in (2, 3)]
    elif suite == "b3-h1":
        tasks += [("b3_h1_case", (n,)) for n in degs if n > 0]
        tasks += [("series_case", ("b3-free", 0, n)) for n in degs if n > 0]
    elif suite == "b3-h2":
        tasks += [("b3_h2_case", (n,)) for n in degs if n > 0]
        tasks += [("series_case", ("b3-free", 1, n)) for n in degs if n > 0]
        tasks += [("b3_uct_case", (n, p, k)) for n in degs if n > 0 for p in (2, 3) for k in (1, 2, 3)]
    elif suite == "gamma-ring":
        tasks += [("gamma_case", (p, top)) for p in (2, 3, 5)]
    elif suite == "anick":
        tasks += [("anick_case", (p, two_n, top)) for p in (5, 7)
                  for two_n in dividedpower.dickson_degrees(p)]
        tasks += [("shimura_case", (5, min(top, 200)))]
    return tasks


def _run_task(task: tuple[str, tuple]) -> Case:
    name, args = task
    return globals()[name](*args)


def run_suite(suite: str, max_degree: int | None = None, jobs: int = 1) -> VerifyReport:
    """Run a suite (or ``"all"``); cases come back in task order regardless of ``jobs``."""
    start = time.perf_counter()
    names = SUITES if suite == "all" else (suite,)
    tasks = [t for s in names for t in suite_tasks(s, max_degree)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cases = list(pool.map(_run_task, tasks, chunksize=8))
    else:
        cases = [_run_task(t) for t in tasks]
    return VerifyReport(suite, cases, time.perf_counter() - start)
