"""Seeded batch verification with replayable failures.

Each input is built from ``(seed, index)`` alone, workers process disjoint
index ranges and the reducer sorts by index, so results do not depend on the
worker count.
"""
from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import Place, prime_factors
from .clusters import ROWS
from .curves import RationalCubic, scale
from .errors import DegenerateSturm, ParityError
from .generators import (
    mobius_pair, perturb, random_cubic, real_case_cubic, rng_for, table2_cubic,
)
from .globalparity import global_product_H, relevant_places
from .local import TABLE_1, error_term_H, local_report, table2_row
from .sturm import cubic_consistency
from .twotorsion import (
    BRANCHES, compose, is_identity_map, mobius_match, model_identity, normal_form,
    twisted_model_identity,
)

CHECKS = ("identity", "product-H", "scaling", "continuity", "sturm-consistency", "mobius")
TABLE2_PRIMES = (5, 7, 17)


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 0
    count: int = 100
    height: int = 1000
    check: str = "identity"
    force_case: int | None = None
    force_type: str | None = None
    workers: int = 1

    def __post_init__(self):
        if self.check not in CHECKS:
            raise ValueError(f"unknown check {self.check!r}; choose from {', '.join(CHECKS)}")
        if self.force_case is not None and self.force_case not in TABLE_1:
            raise ValueError("force-case must be 1..6")
        if self.force_type is not None and self.force_type not in ROWS:
            raise ValueError(f"force-type must be one of {', '.join(ROWS)}")
        if self.count < 0 or self.workers < 1:
            raise ValueError("count must be >= 0 and workers >= 1")


@dataclass
class ItemResult:
    index: int
    failures: list = field(default_factory=list)
    tallies: Counter = field(default_factory=Counter)


@dataclass
class VerifySummary:
    config: VerifyConfig
    checked: int
    failures: list
    tallies: dict

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self):
        c = self.config
        return {
            "check": c.check, "seed": c.seed, "count": c.count, "height": c.height,
            "force_case": c.force_case, "force_type": c.force_type,
            "checked": self.checked, "passed": self.checked - len({f["index"] for f in self.failures}),
            "failures": self.failures,
            "coverage": dict(sorted(self.tallies.items())),
        }

    def to_text(self) -> str:
        data = self.to_json()
        lines = [f"check {data['check']}: {data['passed']}/{data['checked']} passed (seed {data['seed']})"]
        for key, n in data["coverage"].items():
            lines.append(f"  {key}: {n}")
        for f in self.failures:
            lines.append(f"FAIL #{f['index']}: {f['reason']}")
            lines.append(f"  replay: {f['replay']}")
        return "\n".join(lines)


def _place_arg(place: Place) -> str:
    return "real" if place.kind == "real" else ("complex" if place.kind == "complex" else str(place.p))


def local_replay(f: RationalCubic, place: Place) -> str:
    # the polynomial form never starts with '-', so argparse cannot mistake it for a flag
    return f"twoparity local '{f}' --place {_place_arg(place)}"


def _fail(res: ItemResult, reason: str, replay: str):
    res.failures.append({"index": res.index, "reason": reason, "replay": replay})


def _input_cubic(cfg: VerifyConfig, rng: random.Random, index: int):
    """The cubic for this index plus the odd prime it was built for (if any)."""
    if cfg.force_case is not None:
        return real_case_cubic(rng, cfg.force_case), None
    if cfg.force_type is not None:
        p = TABLE2_PRIMES[index % len(TABLE2_PRIMES)]
        n = index // len(TABLE2_PRIMES) % 4 + 1
        return table2_cubic(rng, p, n, cfg.force_type), p
    return random_cubic(rng, cfg.height), None


def _check_identity(cfg, rng, res):
    f, p = _input_cubic(cfg, rng, res.index)
    if cfg.force_case is not None:
        places = [Place.real()]
    elif p is not None:
        places = [Place.padic(p)]
    else:
        places = relevant_places(f)
    for v in places:
        r = local_report(f, v)
        if not r.supported:
            res.tallies[f"unsupported {v}"] += 1
            continue
        if v.kind == "real":
            res.tallies[f"real case {r.payload.case}"] += 1
            row = TABLE_1[r.payload.case]
            got = (r.payload.n_E, r.payload.n_JacEprime, r.payload.n_JacC,
                   r.payload.kernel_identity_count, r.payload.mu, r.lam, r.H)
            if got != row:
                _fail(res, f"{v}: Table 1 row {r.payload.case} expected {row}, got {got}",
                      local_replay(f, v))
        elif v.kind == "padic":
            t = r.payload.type
            res.tallies[f"row {t.row}"] += 1
            if cfg.force_type is not None and t.row != cfg.force_type:
                _fail(res, f"{v}: built as {cfg.force_type}, classified {t.label}", local_replay(f, v))
            expected = table2_row(t.row, t.n)
            if (r.ww, r.H) != (expected["ww"], expected["H"]):
                _fail(res, f"{v}: {t.label} w*w, H = {(r.ww, r.H)}, table {(expected['ww'], expected['H'])}",
                      local_replay(f, v))
        if not r.identity_holds:
            _fail(res, f"{v}: w*w = {r.ww}, lambda*H = {r.lam * r.H}", local_replay(f, v))


def _check_product_H(cfg, rng, res):
    f, _ = _input_cubic(cfg, rng, res.index)
    prod, vector = global_product_H(f)
    res.tallies["places"] += len(vector)
    if prod != 1:
        bad = ", ".join(f"{v}={h:+d}" for v, h in vector.items())
        _fail(res, f"product of H is -1 ({bad})", f"twoparity global '{f}' --mode inferred")


def _check_scaling(cfg, rng, res):
    f, _ = _input_cubic(cfg, rng, res.index)
    num, den = rng.randint(1, 60), rng.randint(1, 60)
    d = Fraction(rng.choice((1, -1)) * num, den)
    g = scale(f, d)
    places = set(relevant_places(f, integral=False)) | set(relevant_places(g, integral=False))
    places |= {Place.padic(q) for q in prime_factors(d)}
    res.tallies["places"] += len(places)
    for v in sorted(places):
        if error_term_H(f, v) != error_term_H(g, v):
            _fail(res, f"{v}: H changes under scaling by d = {d}", local_replay(g, v))


CONTINUITY_PRIMES = (5, 7, 11, 13, 17)


def _continuity_input(cfg, rng, index):
    if cfg.force_case is not None:
        raise ValueError("continuity runs on p-adic inputs; use --force-type, not --force-case")
    row = cfg.force_type or ROWS[index % len(ROWS)]
    p = CONTINUITY_PRIMES[index // len(ROWS) % len(CONTINUITY_PRIMES)]
    return table2_cubic(rng, p, rng.randint(1, 4), row), p


def _check_continuity(cfg, rng, res):
    f, p = _continuity_input(cfg, rng, res.index)
    g = perturb(rng, f, p)
    v = Place.padic(p)
    a, b = local_report(f, v), local_report(g, v)
    res.tallies[f"row {a.payload.type.row}"] += 1
    got_a = (a.lam, a.H, a.w_E, a.w_JacEprime)
    got_b = (b.lam, b.H, b.w_E, b.w_JacEprime)
    if got_a != got_b:
        _fail(res, f"{v}: (lambda, H, w_E, w_JacE') {got_a} for f, {got_b} after perturbation "
                   f"(f = {f.literal()})", local_replay(g, v))


def _check_sturm(cfg, rng, res):
    while True:
        f, _ = _input_cubic(cfg, rng, res.index)
        if f.b != 0 and f.L != 0:
            try:
                ok = cubic_consistency(f)
                break
            except DegenerateSturm:
                res.tallies["degenerate skipped"] += 1
    res.tallies["cubics"] += 1
    if not ok:
        _fail(res, "chain error term differs from cubic error term",
              f"twoparity sturm '{f.poly}'")


def _check_mobius(cfg, rng, res):
    branch = BRANCHES[res.index % len(BRANCHES)]
    alphas, betas = mobius_pair(rng, branch)
    m = mobius_match(alphas, betas)
    res.tallies[f"branch {m.branch}"] += 1
    replay = "twoparity mobius -- '{}' '{}'".format(
        ",".join(map(str, alphas)), ",".join(map(str, betas)))
    problems = []
    if m.branch != branch:
        problems.append(f"built as {branch}, classified {m.branch}")
    if any(m.h(a) != b for a, b in zip(alphas, betas)):
        problems.append("h(alpha_i) != beta_i")
    if not model_identity(m):
        problems.append("model identity fails")
    if not twisted_model_identity(m, normal_form(m)):
        problems.append("normal form is not a twist of g2")
    if not is_identity_map(compose(mobius_match(betas, alphas), m)):
        problems.append("reverse match is not inverse")
    for msg in problems:
        _fail(res, msg, replay)


_RUNNERS = {
    "identity": _check_identity,
    "product-H": _check_product_H,
    "scaling": _check_scaling,
    "continuity": _check_continuity,
    "sturm-consistency": _check_sturm,
    "mobius": _check_mobius,
}


def check_one(cfg: VerifyConfig, index: int) -> ItemResult:
    res = ItemResult(index)
    rng = rng_for(cfg.seed, index, f"{cfg.check}/")
    try:
        _RUNNERS[cfg.check](cfg, rng, res)
    except ParityError as exc:
        _fail(res, f"{type(exc).__name__}: {exc}", f"(seed {cfg.seed}, index {index})")
    return res


def _check_range(cfg: VerifyConfig, start: int, stop: int) -> list[ItemResult]:
    return [check_one(cfg, i) for i in range(start, stop)]


def run_verify(cfg: VerifyConfig) -> VerifySummary:
    if cfg.workers == 1 or cfg.count < 2:
        results = _check_range(cfg, 0, cfg.count)
    else:
        step = -(-cfg.count // cfg.workers)
        bounds = [(s, min(s + step, cfg.count)) for s in range(0, cfg.count, step)]
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = pool.map(_check_range, [cfg] * len(bounds), *zip(*bounds))
            results = [r for chunk in chunks for r in chunk]
    results.sort(key=lambda r: r.index)
    failures, tallies = [], Counter()
    for r in results:
        failures += r.failures
        tallies.update(r.tallies)
    return VerifySummary(cfg, len(results), failures, dict(tallies))
