"""How often random cyclic building data pass the reality checks.

Generates random data on random Picard models and tabulates, per involution
type, the share passing divisor reality, connectedness and the full verdict,
plus the size of the lambda solution sets.

    python scripts/reality_survey.py --instances 500 --max-n 24
"""

import argparse
import json
import random
from collections import defaultdict
from dataclasses import asdict, dataclass

from realcyclic.building_data import PicModel, random_building_data, verify_real_building_data
from realcyclic.group_ext import basic_case_type
from realcyclic.involutions import enumerate_cyclic_involutions


@dataclass
class SurveyConfig:
    instances: int = 500
    max_n: int = 24
    max_free_rank: int = 3
    max_torsion: int = 8
    real_fraction: float = 0.5
    seed: int = 0


def survey(cfg: SurveyConfig) -> dict:
    rng = random.Random(cfg.seed)
    stats = defaultdict(lambda: defaultdict(int))
    for _ in range(cfg.instances):
        n = rng.randint(2, cfg.max_n)
        m = rng.choice(enumerate_cyclic_involutions(n))
        model = PicModel(
            rng.randint(0, cfg.max_free_rank),
            tuple(rng.randint(2, cfg.max_torsion) for _ in range(rng.randint(0, 2))),
        )
        bd = random_building_data(rng, n, m, model, real=rng.random() < cfg.real_fraction)
        r = verify_real_building_data(bd)
        s = stats[basic_case_type(n, m).kind]
        s["instances"] += 1
        s["divisor_reality"] += r.divisor_reality
        s["connected"] += r.connectedness.verdict
        s["eta_zero"] += not any(r.eta)
        s["lambda_solutions"] += len(r.lambda_solutions)
        s["verdict"] += r.verdict
    return {k: dict(v) for k, v in sorted(stats.items())}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(SurveyConfig()).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    cfg = SurveyConfig(**vars(parser.parse_args()))
    print(json.dumps({"config": asdict(cfg), "by_type": survey(cfg)}, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
