#!/usr/bin/env python3
"""Side-by-side fate of the classic implication paradox schemas.

Instantiates each schema with a few operand pairs and prints how it fares
under material semantics versus the relational reading, including the row
that refutes it when it fails.

    python scripts/audit_paradoxes.py
"""

from logicrel.equivalence import default_universe
from logicrel.parser import parse, render
from logicrel.relation import audit_paradoxes, proof_case_preconditions

PAIRS = [
    ("p", "q"),          # independent letters: every schema collapses
    ("p", "~p"),         # the canonical failure case: disjoint, non-degenerate
    ("p", "p"),          # same proposition: every schema survives
    ("p & q", "p"),      # genuine inclusion: the relation itself holds
]


def main() -> None:
    for a_text, b_text in PAIRS:
        a, b = parse(a_text), parse(b_text)
        u = default_universe(a, b)
        marker = "  [failure-case preconditions hold]" if proof_case_preconditions(a, b, u) else ""
        print(f"first = {a_text},  second = {b_text}{marker}")
        for r in audit_paradoxes(a, b, u):
            material = "tautology" if r.material_tautology else "not a tautology"
            detail = r.relational_status
            if r.relational_witness is not None:
                row = " ".join(
                    f"{k}={'1' if v else '0'}" for k, v in r.relational_witness.as_dict().items()
                )
                detail += f" (false at {row})"
            print(f"  {r.schema}  {render(r.formula):28s} material: {material:15s} relational: {detail}")
        print()


if __name__ == "__main__":
    main()
