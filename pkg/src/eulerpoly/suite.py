"""The acceptance criteria as runnable checks.

Each ``criterion_N`` returns a :class:`CriterionResult`; ``run_all`` runs
them in order.  Randomized parts draw from ``random.Random(seed)``.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .exactmath import PoleError, format_rational
from .feulerian import (
    EulerianSpec,
    classify_zeros,
    hatw_direct,
    hatw_from_poly,
    hatw_recursive,
    quadratic_region,
    tp_minor_check,
)
from .jacobipineiro import (
    JP_VARIANTS,
    JPParams,
    characteristic_zones,
    jp_zero_location,
    narayana_as_jp,
    narayana_connection_identity,
)
from .millerparis import GuardError, MPParams, compare_first_mp, compare_second_mp
from .narayana import (
    NarayanaParams,
    all_routes,
    catalan_multidim,
    hat_q_composition,
    hat_q_direct,
    narayana_block,
    narayana_spec,
    narayana_sulanke,
    palindrome_check,
    r_reduced,
)
from .polyalgebra import Poly

NARAYANA_GRID = tuple((d, m) for d in range(2, 5) for m in range(1, 5)) + ((2, 5), (2, 6), (5, 2))
SMALL_GRID = tuple((d, m) for d, m in NARAYANA_GRID if d <= 4 and m <= 4)

Q = Fraction


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    elapsed: float
    limit: float
    checks: int = 0
    witness: dict | None = None
    notes: list = field(default_factory=list)

    @property
    def in_time(self) -> bool:
        return self.elapsed <= self.limit

    @property
    def ok(self) -> bool:
        return self.passed and self.in_time

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "" if self.in_time else " (time limit exceeded)"
        return (
            f"criterion {self.number:>2} {status}  {self.title}  "
            f"[{self.checks} checks, {self.elapsed:.2f}s / {self.limit:.0f}s]{extra}"
        )

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "status": "PASS" if self.ok else "FAIL",
            "checks": self.checks,
            "elapsed": round(self.elapsed, 3),
            "limit": self.limit,
            "witness": self.witness,
            "notes": self.notes,
        }


def _timed(number: int, title: str, limit: float, body: Callable[[], tuple]) -> CriterionResult:
    start = time.perf_counter()
    passed, checks, witness, notes = body()
    return CriterionResult(number, title, passed, time.perf_counter() - start, limit, checks, witness, notes)


def _map(fn, items, jobs: int):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _rand_rational(rng: random.Random, lo: int, hi: int, max_den: int = 6) -> Fraction:
    den = rng.randint(1, max_den)
    return Q(rng.randint(lo * den, hi * den), den)


def _poly_json(p: Poly) -> list[str]:
    return [format_rational(c) for c in p.coeffs]


# 1


def worked_examples() -> list[tuple[str, Poly, Poly]]:
    t = Poly.x()
    ex1 = EulerianSpec(1, ((Q(11, 10), 1), (Q(11, 10), 1)))
    ex4 = EulerianSpec(1, ((Q(11, 10), 1),))
    return [
        ("(n+11/10)^2", hatw_direct(ex1, normalize=False), Poly([Q(121, 100), Q(78, 100), Q(1, 100)])),
        ("(n+11/10)^2 recursive", hatw_recursive(ex1, normalize=False), Poly([Q(121, 100), Q(78, 100), Q(1, 100)])),
        ("n^2+1/8", hatw_from_poly(1, t * t + Q(1, 8)), (Poly([1, 3]) ** 2) / 8),
        ("n+11/10", hatw_direct(ex4, normalize=False), Poly([Q(11, 10), Q(-1, 10)])),
        ("n+11/10 recursive", hatw_recursive(ex4, normalize=False), Poly([Q(11, 10), Q(-1, 10)])),
        ("n+11/10 series", hatw_from_poly(1, t + Q(11, 10)), Poly([Q(11, 10), Q(-1, 10)])),
    ]


def criterion_1(seed: int = 0, jobs: int = 1) -> CriterionResult:
    def body():
        for name, got, want in worked_examples():
            if got != want:
                return False, 0, {"example": name, "got": _poly_json(got), "expected": _poly_json(want)}, []
        return True, len(worked_examples()), None, []

    return _timed(1, "worked examples bit-exact", 1, body)


# 2


def _grid_point(dm):
    d, m = dm
    routes = all_routes(d, m)
    ref = routes["sulanke"]
    bad = [k for k, v in routes.items() if v != ref]
    return d, m, sorted(routes), bad, _poly_json(ref)


def criterion_2(seed: int = 0, jobs: int = 1) -> CriterionResult:
    def body():
        checks = 0
        for d, m, names, bad, coeffs in _map(_grid_point, NARAYANA_GRID, jobs):
            if "oracle" not in names or bad:
                return False, checks, {"d": d, "m": m, "disagreeing": bad or ["oracle missing"], "sulanke": coeffs}, []
            checks += len(names)
        return True, checks, None, []

    return _timed(2, "d-Narayana route agreement", 60, body)


# 3


def criterion_3(seed: int = 0, jobs: int = 1) -> CriterionResult:
    def body():
        checks = 0
        for d, m in NARAYANA_GRID:
            value = narayana_sulanke(d, m)(1)
            if value != catalan_multidim(d, m):
                return False, checks, {"d": d, "m": m, "N(1)": format_rational(value)}, []
            checks += 1
        column = [narayana_sulanke(2, m)(1) for m in range(1, 6)]
        if column != [1, 2, 5, 14, 42]:
            return False, checks, {"d": 2, "column": [format_rational(v) for v in column]}, []
        return True, checks + 5, None, []

    return _timed(3, "multidimensional Catalan values", 5, body)


# 4


def criterion_4(seed: int = 0, jobs: int = 1) -> CriterionResult:
    def body():
        checks = 0
        for d, m in NARAYANA_GRID:
            with_gasper = d <= 4 and m <= 4
            if not palindrome_check(d, m, with_gasper=with_gasper):
                return False, checks, {"d": d, "m": m, "gasper": with_gasper}, []
            checks += 1 + (NarayanaParams(d, m).K + 1 if with_gasper else 0)
        return True, checks, None, []

    return _timed(4, "palindromicity and coefficient pairs", 30, body)


# 5


def negative_zero_samples(rng: random.Random, count: int) -> list[EulerianSpec]:
    """Specs with ``a > 0`` whose block roots satisfy the lattice condition."""
    out = []
    while len(out) < count:
        a = _rand_rational(rng, 0, 4)
        if a <= 0:
            continue
        blocks = []
        for _ in range(rng.randint(1, 3)):
            if rng.random() < 0.5:
                # a chain starting at a keeps the lattice condition
                blocks.append((a, rng.randint(1, 3)))
            else:
                f = _rand_rational(rng, 0, 3)
                k = rng.randint(1, 2)
                if f <= 0 or f + k - 1 > a:
                    continue
                blocks.append((f, k))
        if not blocks:
            continue
        spec = EulerianSpec(a, tuple(blocks))
        if spec.m <= 6:
            out.append(spec)
    return out


def canonical_jp_samples(rng: random.Random, count: int) -> list[JPParams]:
    out = []
    while len(out) < count:
        r = rng.randint(1, 3)
        dens = rng.sample([2, 3, 5, 7], r)
        alpha = [Q(rng.randint(-den + 1, 3 * den), den) for den in dens]
        if any(x.denominator == 1 for x in alpha) and r > 1:
            continue
        beta = _rand_rational(rng, 0, 3)
        beta = beta if beta > -1 else Q(1, 2)
        n_vec = [rng.randint(0, 2) for _ in range(r)]
        if sum(n_vec) == 0 or sum(n_vec) > 5:
            continue
        try:
            p = JPParams(alpha, beta, n_vec)
        except (PoleError, ValueError):
            continue
        if p.canonical:
            out.append(p)
    return out


def beyond_one_samples(rng: random.Random, count: int) -> list[EulerianSpec]:
    """Specs with ``m >= 2`` and every block root below ``a < 1 - m``."""
    out = []
    while len(out) < count:
        blocks = []
        for _ in range(rng.randint(1, 3)):
            blocks.append((_rand_rational(rng, -12, -1), rng.randint(1, 2)))
        m = sum(k for _, k in blocks)
        if m < 2 or m > 6:
            continue
        top = max(f + k - 1 for f, k in blocks)
        hi = min(Q(1 - m), Q(0))
        if top >= hi:
            continue
        a = top + (hi - top) * Q(rng.randint(1, 9), 10)
        try:
            spec = EulerianSpec(a, tuple(blocks))
        except (ValueError, PoleError):
            continue
        out.append(spec)
    return out


def criterion_5(seed: int = 0, jobs: int = 1) -> CriterionResult:
    rng = random.Random(seed)

    def body():
        checks = 0
        counted = {}

        def tally(name):
            counted[name] = counted.get(name, 0) + 1

        for d, m in NARAYANA_GRID:
            spec = narayana_spec(d, m)
            cls = classify_zeros(spec)
            z = cls.counts
            if not (z.neg == NarayanaParams(d, m).K and z.nonreal == 0):
                return False, checks, {"narayana": [d, m], "zones": z.to_json()}, []
            for name in ("negative_all", "large_a"):
                v = cls.verdicts[name]
                if v.hypothesis:
                    if not v.confirmed:
                        return False, checks, {"narayana": [d, m], "theorem": name}, []
                    tally(name)
                    checks += 1
            tally("narayana_negative")
            checks += 1
        for spec in negative_zero_samples(rng, 40):
            cls = classify_zeros(spec)
            v = cls.verdicts["negative_all"]
            if not v.hypothesis:
                continue
            if not v.confirmed:
                return False, checks, {"spec": spec.to_json(), "zones": cls.counts.to_json()}, []
            tally("negative_all")
            checks += 1
        for p in canonical_jp_samples(rng, 40):
            rep = jp_zero_location(p)
            cls = classify_zeros(p.spec())
            if rep.confirmed is not True or cls.verdicts["unit_interval"].confirmed is not True:
                return False, checks, {"jp": p.to_json(), "zones": rep.counts.to_json()}, []
            tally("unit_interval")
            checks += 1
        for spec in beyond_one_samples(rng, 30):
            cls = classify_zeros(spec)
            v = cls.verdicts["beyond_one"]
            if not v.hypothesis or not v.confirmed:
                return False, checks, {"spec": spec.to_json(), "zones": cls.counts.to_json()}, []
            tally("beyond_one")
            checks += 1
        if checks < 100:
            return False, checks, {"reason": "fewer than 100 verdicts"}, [counted]
        return True, checks, None, [counted]

    return _timed(5, "zero-location verdict suite", 120, body)


# 6


def random_specs(rng: random.Random, count: int) -> list[EulerianSpec]:
    out = []
    while len(out) < count:
        r = rng.randint(1, 3)
        blocks = []
        for _ in range(r):
            blocks.append((_rand_rational(rng, -5, 5), rng.randint(1, 3)))
        if sum(k for _, k in blocks) > 6:
            continue
        try:
            out.append(EulerianSpec(_rand_rational(rng, -6, 6), tuple(blocks)))
        except (ValueError, PoleError):
            continue
    return out


def worked_specs() -> list[EulerianSpec]:
    specs = [
        EulerianSpec(1, ((Q(11, 10), 1), (Q(11, 10), 1))),
        EulerianSpec(1, ((Q(11, 10), 1),)),
        EulerianSpec(5, ((2, 2),)),
        EulerianSpec(1, ()),
    ]
    specs += [narayana_spec(d, m) for d, m in NARAYANA_GRID]
    return specs


def criterion_6(seed: int = 0, jobs: int = 1) -> CriterionResult:
    rng = random.Random(seed)

    def body():
        specs = random_specs(rng, 50) + worked_specs()
        for spec in specs:
            if hatw_direct(spec) != hatw_recursive(spec):
                return False, 0, {"spec": spec.to_json()}, []
        return True, len(specs), None, []

    return _timed(6, "direct and recursive constructions agree", 60, body)


# 7


def random_mp_params(rng: random.Random, count: int) -> list[MPParams]:
    out = []
    while len(out) < count:
        r = rng.randint(0, 2)
        nu = [_rand_rational(rng, -4, 4) for _ in range(r)]
        om = [rng.randint(1, 2) for _ in range(r)]
        try:
            p = MPParams(
                _rand_rational(rng, -4, 4), _rand_rational(rng, -4, 4), _rand_rational(rng, -3, 5), nu, om
            )
            p.check_second()
        except (GuardError, PoleError, ValueError):
            continue
        out.append(p)
    return out


def narayana_mp_params(d: int, m: int) -> list[tuple[str, MPParams]]:
    nu, om = narayana_block(d, m)
    out = [
        ("narayana_hyper", MPParams(m + d, m + 1, 2, nu, om)),
        ("bernstein_first", MPParams(-NarayanaParams(d, m).K, m + 1, 2, nu, om)),
        ("connection", MPParams(m + 1, m + d, 2, nu, om)),
    ]
    if d >= 3 and m >= 2:
        out.append(("reduced", MPParams(m + d, m + 1, 2, tuple(range(3, d + 1)), (m,) * (d - 2))))
    return out


def criterion_7(seed: int = 0, jobs: int = 1) -> CriterionResult:
    rng = random.Random(seed)

    def body():
        checks = 0
        for p in random_mp_params(rng, 50):
            for kind, cmp in (("first", compare_first_mp(p)), ("second", compare_second_mp(p))):
                if not cmp.ok:
                    return False, checks, _mp_witness(p, kind, cmp), []
                checks += 1
        for d, m in SMALL_GRID:
            for name, p in narayana_mp_params(d, m):
                cmp = compare_first_mp(p)
                if not cmp.ok:
                    return False, checks, _mp_witness(p, f"first:{name}", cmp), []
                checks += 1
                if name == "narayana_hyper":
                    cmp = compare_second_mp(p)
                    if not cmp.ok:
                        return False, checks, _mp_witness(p, f"second:{name}", cmp), []
                    checks += 1
            if hat_q_direct(d, m) != hat_q_composition(d, m):
                return False, checks, {"d": d, "m": m, "check": "Qhat routes"}, []
            checks += 1
            if d >= 3 and m >= 2:
                deg = r_reduced(d, m).degree
                if deg != NarayanaParams(d, m).L - 1:
                    return False, checks, {"d": d, "m": m, "degree R": deg}, []
                checks += 1
        return True, checks, None, []

    return _timed(7, "Miller-Paris identity suite", 120, body)


def _mp_witness(p: MPParams, kind: str, cmp) -> dict:
    return {
        "kind": kind,
        "delta": format_rational(p.delta),
        "epsilon": format_rational(p.epsilon),
        "rho": format_rational(p.rho),
        "nu": [format_rational(v) for v in p.nu],
        "omega": list(p.omega_vec),
        "coefficient": cmp.mismatch,
        "lhs": format_rational(cmp.lhs),
        "rhs": format_rational(cmp.rhs),
    }


# 8


def tp_sequences() -> dict[str, list[Fraction]]:
    n = range(12)
    return {
        "(n+11/10)^2": [(k + Q(11, 10)) ** 2 for k in n],
        "n^2+1/8": [k * k + Q(1, 8) for k in n],
        "(n^2+1/8)^2": [(k * k + Q(1, 8)) ** 2 for k in n],
        "(n+11/10)^4": [(k + Q(11, 10)) ** 4 for k in n],
    }


def criterion_8(seed: int = 0, jobs: int = 1) -> CriterionResult:
    def body():
        checks = 0
        for name, seq in tp_sequences().items():
            ok, w = tp_minor_check(seq, max_order=3, window=12)
            if not ok:
                return False, checks, {"sequence": name, "rows": w.rows, "cols": w.cols, "value": format_rational(w.value)}, []
            checks += 1
        ok, w = tp_minor_check([k + Q(11, 10) for k in range(12)], max_order=3, window=12)
        if ok or (w.rows, w.cols, w.value) != ((0, 1, 2), (1, 2, 3), Q(-1, 10)):
            return False, checks, {"sequence": "n+11/10", "witness": None if ok else [w.rows, w.cols, format_rational(w.value)]}, []
        return True, checks + 1, None, []

    return _timed(8, "finite-window total positivity", 10, body)


# 9

QUAD_B = tuple(Q(-1) + Q(k, 10) for k in range(41))
QUAD_C = tuple(Q(k, 20) for k in range(41))


def criterion_9(seed: int = 0, jobs: int = 1) -> CriterionResult:
    def body():
        region = quadratic_region(1, QUAD_B, QUAD_C)
        for cell in region:
            if cell["inside"] != cell["sturm"]:
                return False, 0, {"b": format_rational(cell["b"]), "c": format_rational(cell["c"])}, []
        inside = sum(cell["inside"] for cell in region)
        return True, len(region), None, [f"{inside} of {len(region)} grid points inside"]

    return _timed(9, "quadratic criterion matches Sturm", 30, body)


# 10


def escaping_jp_samples(rng: random.Random, count: int) -> list[JPParams]:
    out = [JPParams([0, Q(1, 2)], Q(-3, 2), [1, 1]), JPParams([Q(1, 3), Q(1, 2)], -1, [2, 3])]
    while len(out) < count:
        r = rng.randint(1, 3)
        alpha = [_rand_rational(rng, -1, 3) for _ in range(r)]
        if any(x <= -1 for x in alpha):
            continue
        beta = -1 if rng.random() < 0.3 else -1 - Q(rng.randint(1, 9), 10)
        n_vec = [rng.randint(0, 2) for _ in range(r)]
        n = sum(n_vec)
        if n == 0 or n > 5:
            continue
        if n == 1 and max(a for a, k in zip(alpha, n_vec) if k) + beta + 2 <= 0:
            continue
        try:
            out.append(JPParams(alpha, beta, n_vec))
        except (PoleError, ValueError):
            continue
    return out


def criterion_10(seed: int = 0, jobs: int = 1) -> CriterionResult:
    rng = random.Random(seed)

    def body():
        checks = 0
        boundary = 0
        for p in escaping_jp_samples(rng, 30):
            rep = jp_zero_location(p)
            if rep.hypothesis != "unit_interval_but_one" or not rep.confirmed:
                return False, checks, {"jp": p.to_json(), "zones": rep.counts.to_json()}, []
            boundary += p.beta == -1
            checks += 1
        for d, m in SMALL_GRID:
            for v in JP_VARIANTS:
                if v == "beta_d_minus_2" and (d < 3 or m < 2):
                    continue
                if not narayana_as_jp(d, m, v).verified:
                    return False, checks, {"d": d, "m": m, "variant": v}, []
                checks += 1
        zones = characteristic_zones(5, 5, "beta_d_minus_2")
        if zones.nonreal == 0 or not narayana_connection_identity(5, 5, "beta_d_minus_2"):
            return False, checks, {"d": 5, "m": 5, "zones": zones.to_json()}, []
        return True, checks + 1, None, [f"{boundary} samples at beta = -1", f"d=5 m=5 nonreal={zones.nonreal}"]

    return _timed(10, "non-canonical Jacobi-Pineiro claims", 60, body)


CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
)


def run_all(seed: int = 0, jobs: int = 1) -> list[CriterionResult]:
    return [c(seed=seed, jobs=jobs) for c in CRITERIA]
