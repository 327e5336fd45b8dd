"""Tabulate helm squares: closed form n(n+1)/2 against the exact solver.

For n >= 10 the best independent set switches from "all pendants" to one rim
vertex plus the pendants it does not reach, and the closed form overshoots.
"""

from iasi_powers import FamilySpec, evaluate_formula, sparing_number_of


def main(n_max: int = 14) -> None:
    print(f"{'n':>3} {'|E|':>5} {'formula':>8} {'solver':>7} {'delta':>6}  witness")
    for n in range(3, n_max + 1):
        spec = FamilySpec.of("helm", n, power=2)
        res = sparing_number_of(spec)
        formula = evaluate_formula(spec)
        print(f"{n:>3} {res.certificate.graph.m:>5} {formula:>8} {res.value:>7} "
              f"{formula - res.value:>6}  {list(res.witness_independent_set)}")


if __name__ == "__main__":
    main()
