"""PSigmaL(2,27): the almost simple group with a Carter subgroup of odd order.

Builds the group on the projective line over GF(27), checks that its Sylow
3-subgroup is a Carter subgroup, identifies the composition factors and runs
the main checks with that subgroup as the hint.
"""
import json
import time

from carter_kit.carter import CarterWitness, is_carter
from carter_kit.harness import check_carter_induced, check_main_theorem, check_sylow_theorems
from carter_kit.recognize import field_modulus, psigma_l2
from carter_kit.series import chief_series, rc_series
from carter_kit.structure import sylow_subgroup


def timed(label, fn):
    t0 = time.monotonic()
    out = fn()
    print(f"{label}: {time.monotonic() - t0:.1f}s")
    return out


def main():
    print("GF(27) modulus (low degree first):", field_modulus(27))
    G = timed("construct", lambda: psigma_l2(3, 3))
    print(f"degree {G.degree}, order {G.order}")
    P = timed("Sylow 3-subgroup", lambda: sylow_subgroup(G, 3))
    print(f"|P| = {P.order}, Carter: {is_carter(G, P)}")
    print("chief orders:", timed("chief series", lambda: chief_series(G)).orders)
    print("rc orders:", rc_series(G).orders)
    for rep in (
        timed("main theorem", lambda: check_main_theorem(G, P, "psigma_l2(3,3)")),
        timed("Sylow p=3", lambda: check_sylow_theorems(G, 3, "psigma_l2(3,3)")),
        timed("Carter in induced group", lambda: check_carter_induced(G, CarterWitness.of(G, P), "psigma_l2(3,3)")),
    ):
        print(json.dumps(rep.to_dict(), indent=1))


if __name__ == "__main__":
    main()
