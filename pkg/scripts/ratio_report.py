"""Tabulate search maximum over leading term for the asymptotic and bounds-only cells."""
import argparse
from dataclasses import dataclass

from gturan.constructions import defining_property_check, FamilySpec
from gturan.harness import verify_table
from gturan.oracle import Kind, nonzero_cells


@dataclass
class RatioConfig:
    n_max: int = 8
    rs_sizes: tuple[int, ...] = (1, 2, 4, 8, 16, 32)


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=RatioConfig.n_max)
    cfg = RatioConfig(n_max=ap.parse_args(argv).n)

    cells = [(e.h, e.f) for e in nonzero_cells() if e.kind in (Kind.ASYMPTOTIC, Kind.BOUNDS_ONLY)]
    report = verify_table(cfg.n_max, cells=cells)
    for r in report.cells:
        ratios = " ".join(f"{x:.3f}" for x in r.ratios)
        print(f"{r.h:>3} {r.f:>3} {r.kind:<11} n={r.n_values[0]}..{r.n_values[-1]}  {ratios}")
    for m in cfg.rs_sizes:
        ok = defining_property_check(FamilySpec("RSTriangleGraph", (m,)))
        print(f"RSTriangleGraph m={m}: every edge in exactly one triangle: {ok}")


if __name__ == "__main__":
    main()
