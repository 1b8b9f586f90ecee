"""Random sweep over the basic-case builders.

Draws random real (or, for the esoteric case, non-real) polynomial parameters,
builds the corresponding extension data and records whether every exact
identity held, how often the parameters were degenerate, and build times.

    python scripts/extension_sweep.py --samples 50 --degree 2 --seed 1
"""

import argparse
import json
import random
import statistics
import time
from dataclasses import asdict, dataclass, field

from realcyclic.errors import DegenerateParameter, NotAFieldExtension
from realcyclic.extensions import build_dihedral_like, build_esoteric, build_twisted
from realcyclic.funcfield import GaussRational, poly_from_coeffs


@dataclass
class SweepConfig:
    samples: int = 50
    degree: int = 2
    coeff_bound: int = 5
    seed: int = 1
    dihedral_degrees: list = field(default_factory=lambda: [3, 4, 5, 6])
    even_degrees: list = field(default_factory=lambda: [8, 16])


def real_poly(rng, cfg):
    b = cfg.coeff_bound
    return poly_from_coeffs([rng.randint(-b, b) for _ in range(cfg.degree + 1)])


def gauss_poly(rng, cfg):
    b = cfg.coeff_bound
    return poly_from_coeffs([GaussRational(rng.randint(-b, b), rng.randint(-b, b)) for _ in range(cfg.degree + 1)])


def sweep(cfg: SweepConfig) -> dict:
    rng = random.Random(cfg.seed)
    builders = {
        "dihedral_like": (cfg.dihedral_degrees, lambda n: build_dihedral_like(n, real_poly(rng, cfg), real_poly(rng, cfg))),
        "twisted": (cfg.even_degrees, lambda n: build_twisted(n, real_poly(rng, cfg), real_poly(rng, cfg))),
        "esoteric": (cfg.even_degrees, lambda n: build_esoteric(n, gauss_poly(rng, cfg))),
    }
    report = {}
    for name, (degrees, build) in builders.items():
        times, skipped, failed = [], 0, 0
        while len(times) < cfg.samples:
            n = rng.choice(degrees)
            t0 = time.perf_counter()
            try:
                data = build(n)
            except (DegenerateParameter, NotAFieldExtension):
                skipped += 1
                continue
            times.append(time.perf_counter() - t0)
            failed += not all(data.identities.values())
        report[name] = {
            "built": len(times),
            "degenerate_or_square": skipped,
            "identity_failures": failed,
            "median_ms": round(1000 * statistics.median(times), 2),
            "max_ms": round(1000 * max(times), 2),
        }
    return report


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=SweepConfig.samples)
    parser.add_argument("--degree", type=int, default=SweepConfig.degree)
    parser.add_argument("--coeff-bound", type=int, default=SweepConfig.coeff_bound)
    parser.add_argument("--seed", type=int, default=SweepConfig.seed)
    cfg = SweepConfig(**vars(parser.parse_args()))
    print(json.dumps({"config": asdict(cfg), "results": sweep(cfg)}, indent=2))


if __name__ == "__main__":
    main()
