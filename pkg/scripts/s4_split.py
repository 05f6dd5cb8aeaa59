"""Compare the bipartite argmax of N(S4, K_{a,n-a}) with the printed and corrected splits."""
import argparse
from dataclasses import dataclass

from gturan.oracle import s4_bipartite_argmax, s4_k3_split, s4_k3_split_printed


@dataclass
class SplitConfig:
    lo: int = 20
    hi: int = 200


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=SplitConfig.lo)
    ap.add_argument("--hi", type=int, default=SplitConfig.hi)
    a = ap.parse_args(argv)
    cfg = SplitConfig(a.lo, a.hi)

    printed_hits = corrected_hits = 0
    for n in range(cfg.lo, cfg.hi + 1):
        best = set(s4_bipartite_argmax(n))
        p, c = s4_k3_split_printed(n), s4_k3_split(n)
        printed_hits += bool(best & {p, p + 1})
        corrected_hits += bool(best & {c, c + 1})
        print(f"n={n:4d} argmax={sorted(best)} printed={p} corrected={c}")
    total = cfg.hi - cfg.lo + 1
    print(f"printed split hits {printed_hits}/{total}, corrected split hits {corrected_hits}/{total}")


if __name__ == "__main__":
    main()
