"""Invariant profile of RP and RP* for the dihedral, dicyclic and semidihedral families.

    python scripts/family_profile.py --max-order 48
"""
import argparse
from dataclasses import dataclass

from redpower.group_core import dicyclic, dihedral, semidihedral
from redpower.invariants import Caps, compute_report
from redpower.powergraph import RP, RP_STAR, build, decompose_known


@dataclass
class Config:
    max_order: int = 32
    caps: Caps = Caps(hamiltonian_cap=64, perfect_cap=40)


def family_groups(max_order: int):
    for order in range(6, max_order + 1, 2):
        if order >= 6:
            yield dihedral(order)
        if order % 4 == 0 and order >= 8:
            yield dicyclic(order)
        if order % 8 == 0 and order >= 16:
            yield semidihedral(order)


def main(cfg: Config) -> None:
    head = f"{'group':<7}{'graph':<6}{'kappa':>6}{'alpha':>6}{'omega':>6}{'comps':>6}{'ham':>6}  structure"
    print(head)
    for g in family_groups(cfg.max_order):
        ks = decompose_known(g)
        matches = ks.graph == build(g, RP)
        for v in (RP, RP_STAR):
            r = compute_report(build(g, v), cfg.caps)
            ham = "-" if r.is_hamiltonian is None else str(r.is_hamiltonian)[0]
            struct = ("ok " if matches else "MISMATCH ") + ks.expression if v is RP else ""
            print(f"{g.label:<7}{v.symbol:<6}{r.vertex_connectivity:>6}{r.independence_number:>6}"
                  f"{r.clique_number:>6}{r.component_count:>6}{ham:>6}  {struct}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-order", type=int, default=Config.max_order)
    main(Config(max_order=p.parse_args().max_order))
