"""Grid sweeps: the equivalence check for square integrable blocks, the
generated family for the main-theorem reduction, and the duality check.

Generation is deterministic from the config seed.  Modules in the family
are built from eligible fixed blocks and twisted-dual pairs, so most draws
have a nonempty involution set; a small fraction of noise pairs exercises
the filter.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .distinction import (
    abc_bookkeeping,
    abc_prediction,
    check_duality_corollary,
    check_main_theorem,
    enumerate_T,
    epsilon_identity,
    esi_distinguished,
    is_gsp_with_similitude,
    paired_partner,
)
from .errors import PreconditionFailed
from .exact import GaussianRational, as_gaussian, gr
from .grammar import parse_gauss, print_blocks, print_gauss
from .langlands import (
    P1,
    P2,
    T,
    DivAlg,
    EssDiscrete,
    HeckeCharacter,
    IrrRepGL,
    StandardModule,
    llc,
    make_standard,
    quotient,
)

DEFAULT_LAMBDA_GRID = ("0", "1/2", "-1/2", "1", "-1")


@dataclass(frozen=True)
class SweepConfig:
    """Deterministic sweep parameters."""

    D: tuple[DivAlg, ...] = (DivAlg.R, DivAlg.H)
    k_range: tuple[int, int] = (1, 10)
    l_range: tuple[int, int] = (-10, 10)
    lambda_grid: tuple[GaussianRational, ...] = tuple(
        parse_gauss(s) for s in DEFAULT_LAMBDA_GRID
    )
    eta_grid: tuple[GaussianRational, ...] | None = None
    max_blocks: int = 4
    seed: int = 7
    count: int = 500

    @classmethod
    def from_dict(cls, data: dict) -> "SweepConfig":
        kwargs = {}
        if "D" in data:
            kwargs["D"] = tuple(DivAlg(d) for d in data["D"])
        for key in ("k_range", "l_range"):
            if key in data:
                kwargs[key] = (int(data[key][0]), int(data[key][1]))
        if "lambda_grid" in data:
            kwargs["lambda_grid"] = tuple(parse_gauss(s) for s in data["lambda_grid"])
        if "eta_grid" in data:
            kwargs["eta_grid"] = tuple(parse_gauss(s) for s in data["eta_grid"])
        for key in ("max_blocks", "seed", "count"):
            if key in data:
                kwargs[key] = int(data[key])
        return cls(**kwargs)

    @classmethod
    def from_json_file(cls, path: str) -> "SweepConfig":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def etas(self) -> tuple[GaussianRational, ...]:
        if self.eta_grid is not None:
            return self.eta_grid
        return tuple(lam * 2 for lam in self.lambda_grid)


def esi_block(D: DivAlg, k: int, lam: GaussianRational) -> EssDiscrete:
    return P2(k, lam) if D is DivAlg.R else T(k, lam)


def esi_equivalence_point(
    D: DivAlg, k: int, l: int, lam: GaussianRational, eta: GaussianRational
) -> dict:
    """One grid point of the square-integrable equivalence check."""
    block = esi_block(D, k, lam)
    chi = HeckeCharacter(l, eta)
    lhs = esi_distinguished(block, chi)
    pi = IrrRepGL(D, (block,))
    gsp = is_gsp_with_similitude(llc(pi), chi)
    identity_ok = False
    if gsp:
        _, _, identity_ok = epsilon_identity(pi, chi)
    rhs = gsp and identity_ok
    return {
        "D": D.value,
        "k": k,
        "l": l,
        "lambda": print_gauss(lam),
        "eta": print_gauss(eta),
        "esi_distinguished": lhs,
        "gsp_ok": gsp,
        "identity_ok": identity_ok,
        "ok": lhs == rhs,
    }


def esi_equivalence_grid(cfg: SweepConfig) -> Iterator[tuple]:
    for D in cfg.D:
        for k in range(cfg.k_range[0], cfg.k_range[1] + 1):
            for l in range(cfg.l_range[0], cfg.l_range[1] + 1):
                for lam in cfg.lambda_grid:
                    yield (D, k, l, lam, lam * 2)


def run_esi_sweep(cfg: SweepConfig, workers: int = 1) -> tuple[int, list[dict]]:
    """Run the equivalence grid; returns (point count, failures)."""
    points = list(esi_equivalence_grid(cfg))
    results = _map_indexed(lambda p: esi_equivalence_point(*p), points, workers)
    failures = [r for r in results if not r["ok"]]
    return len(points), failures


def _eligible_fixed_k(D: DivAlg, l: int, rng: random.Random) -> int | None:
    """A weight k making a single block distinguished for chi with this l."""
    if D is DivAlg.R:
        pool = [k for k in range(1, abs(l)) if (k - l) % 2]
        return rng.choice(pool) if pool else None
    pool = [abs(l) + 1 + 2 * t for t in range(3)]
    pool = [k for k in pool if (k - l) % 2]
    return rng.choice(pool) if pool else None


def _random_block(D: DivAlg, cfg: SweepConfig, rng: random.Random) -> EssDiscrete:
    lam = rng.choice(cfg.lambda_grid)
    if D is DivAlg.H:
        return T(rng.randint(max(1, cfg.k_range[0]), cfg.k_range[1]), lam)
    if rng.random() < 0.4:
        return P1(rng.randint(0, 1), lam)
    return P2(rng.randint(max(1, cfg.k_range[0]), cfg.k_range[1]), lam)


def generate_modules(cfg: SweepConfig) -> Iterator[tuple[StandardModule, HeckeCharacter]]:
    """Yield standard modules with nonempty involution sets, deterministically."""
    rng = random.Random(cfg.seed)
    produced = 0
    attempts = 0
    while produced < cfg.count and attempts < cfg.count * 50:
        attempts += 1
        D = rng.choice(cfg.D)
        l = rng.randint(cfg.l_range[0], cfg.l_range[1])
        eta = rng.choice(cfg.etas())
        chi = HeckeCharacter(l, eta)
        blocks: list[EssDiscrete] = []
        while len(blocks) < cfg.max_blocks:
            room = cfg.max_blocks - len(blocks)
            roll = rng.random()
            if roll < 0.35 and room >= 1:
                k = _eligible_fixed_k(D, l, rng)
                if k is None:
                    continue
                half = eta * gr("1/2")
                blocks.append(esi_block(D, k, half))
            elif roll < 0.9 and room >= 2:
                base = _random_block(D, cfg, rng)
                blocks.extend([base, paired_partner(base, chi)])
            elif room >= 2:
                blocks.extend([_random_block(D, cfg, rng), _random_block(D, cfg, rng)])
            if blocks and rng.random() < 0.5:
                break
        if not blocks:
            continue
        sm = make_standard(D, blocks)
        if enumerate_T(sm, chi):
            produced += 1
            yield sm, chi


def module_row(sm: StandardModule, chi: HeckeCharacter) -> dict:
    """The emitter row for one module: report fields in CSV column order."""
    report = check_main_theorem(sm, chi)
    row = {
        "D": sm.D.value,
        "n": sm.half_param_dim,
        "blocks": print_blocks(sm.blocks),
        "chi_l": chi.l,
        "chi_eta": print_gauss(chi.eta),
        "T_size": report.hom_upper_bound,
        "gsp_ok": report.gsp_ok,
        "eps_lhs": None if report.epsilon_lhs is None else str(report.epsilon_lhs),
        "eps_rhs": report.epsilon_rhs,
        "identity_ok": report.identity_ok,
    }
    row["_report"] = report
    return row


def run_module_sweep(cfg: SweepConfig, workers: int = 1) -> tuple[list[dict], list[dict]]:
    """Generate the family and check the reduction plus the duality corollary."""
    modules = list(generate_modules(cfg))
    rows = _map_indexed(lambda mc: module_row(*mc), modules, workers)
    failures = []
    for (sm, chi), row in zip(modules, rows):
        report = row["_report"]
        problems = []
        if not report.gsp_ok:
            problems.append("gsp")
        if not report.identity_ok:
            problems.append("identity")
        if report.abc_ok is not True:
            problems.append("abc")
        if not check_duality_corollary(sm, chi):
            problems.append("duality")
        if problems:
            failures.append({
                "blocks": row["blocks"],
                "D": row["D"],
                "chi_l": row["chi_l"],
                "chi_eta": row["chi_eta"],
                "failed": problems,
            })
    return rows, failures


def _map_indexed(fn, items: list, workers: int) -> list:
    """Apply fn over items preserving order; threads when workers > 1."""
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
