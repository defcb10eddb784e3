"""Walk through support components, linear quotients and support-regularity
on a few small ideals.  Run with ``python demos/support_components.py``."""

from monolab.betti import betti_table, min_linear_truncation, reg, suppreg
from monolab.core import support_component
from monolab.io import parse_ideal
from monolab.quotients import componentwise_lq, find_admissible_order, pack_compatibility

CASES = {
    "four generators, LQ": "n=4\na^2*b\na*b*c\nb*c*d\nc*d^2\n",
    "seven generators": "n=4\nb*c\na*b*d^2\nb^3*d^2\nc*d\na*c\nc^2\na^2*b*d\n",
    "components LQ, whole not": "n=3\nx2^4\nx1*x2^3\nx2^3*x3\nx1^2*x2*x3\n",
}


def show(label: str, text: str) -> None:
    I = parse_ideal(text)
    print(f"== {label}: {I}")
    order = find_admissible_order(I)
    print("  admissible order:", ", ".join(map(str, order.monomials)) if order else "none")
    for d, rep in componentwise_lq(I, "support").items():
        print(f"  I<{d}> = {support_component(I, d)}  LQ: {rep.verdict.value}")
    table = betti_table(I)
    print(f"  suppreg {suppreg(I, table)}, reg {reg(I, table)}, "
          f"least linear truncation {min_linear_truncation(I)}")
    print("  pack compatible:", pack_compatibility(I).verdict.value)


if __name__ == "__main__":
    for label, text in CASES.items():
        show(label, text)
