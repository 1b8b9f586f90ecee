"""Census of involutions on all finite abelian groups up to a given order.

For every group the script counts involutive automorphisms, groups them by
their eigenspace pair (G+, G-) and records how many involutions share each
pair. Output is one JSON line per group.

    python scripts/involution_census.py --max-order 32 --out census.jsonl
"""

import argparse
import json
import logging
import time
from collections import Counter
from dataclasses import asdict, dataclass
from typing import Optional

from realcyclic.abelian import Subgroup, all_groups_up_to
from realcyclic.errors import IncompatibleEigenspaceData
from realcyclic.group_ext import SemidirectGroup, tau_is_normal
from realcyclic.involutions import analyze_involution, enumerate_compatible_involutions

log = logging.getLogger("census")


@dataclass
class CensusConfig:
    max_order: int = 32
    out: Optional[str] = None
    # skip the normality check of <tau> above this order (it enumerates G')
    normality_limit: int = 64


def subgroups(G) -> set:
    """Every subgroup of G, by closing the trivial subgroup under adding one element."""
    elems = list(G.elements())
    seen = {Subgroup.trivial(G)}
    frontier = list(seen)
    while frontier:
        S = frontier.pop()
        members = S.elements()
        for x in elems:
            if x not in members:
                T = S + Subgroup.generated(G, [x])
                if T not in seen:
                    seen.add(T)
                    frontier.append(T)
    return seen


def involutions(G) -> list:
    """All involutive automorphisms of G, one eigenspace pair at a time."""
    subs = subgroups(G)
    out = []
    for plus in subs:
        for minus in subs:
            try:
                out.extend(enumerate_compatible_involutions(G, plus, minus))
            except IncompatibleEigenspaceData:
                pass
    return out


def run(cfg: CensusConfig) -> list[dict]:
    rows = []
    for G in all_groups_up_to(cfg.max_order):
        if G.order == 1:
            continue
        t0 = time.perf_counter()
        maps = involutions(G)
        shapes = Counter()
        normal = 0
        for M in maps:
            a = analyze_involution(G, M)
            shapes[(a.Gplus.order, a.Gminus.order, a.V.order)] += 1
            if 2 * G.order <= cfg.normality_limit and tau_is_normal(SemidirectGroup(G, M)):
                normal += 1
        rows.append(
            {
                "group": list(G.invariant_factors),
                "involutions": len(maps),
                "tau_normal": normal if 2 * G.order <= cfg.normality_limit else None,
                "shapes": [{"Gplus": p, "Gminus": m, "V": v, "count": c} for (p, m, v), c in sorted(shapes.items())],
                "seconds": round(time.perf_counter() - t0, 3),
            }
        )
        log.info("%s: %d involutions", G, len(maps))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(CensusConfig()).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=type(default) if default is not None else str, default=default)
    cfg = CensusConfig(**vars(parser.parse_args()))
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    rows = run(cfg)
    text = "\n".join(json.dumps(r, sort_keys=True) for r in rows)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


if __name__ == "__main__":
    main()
