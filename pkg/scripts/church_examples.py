"""Normalize the Church numeral examples and print their certificates' size."""

from stlc_nbe.cli.surface import parse_term, print_term
from stlc_nbe.conversion import check_deriv, count_rules
from stlc_nbe.glue import nf4

EXAMPLES = {
    "one": r"\f:o->o. f",
    "succ": r"\n:(o->o)->o->o. \f:o->o. \x:o. f (n f x)",
    "succ one": r"(\n:(o->o)->o->o. \f:o->o. \x:o. f (n f x)) (\f:o->o. f)",
    "two": r"\f:o->o. \x:o. f (f x)",
}


def main():
    for name, src in EXAMPLES.items():
        t = parse_term(src)
        r = nf4(t, check=True)
        lhs, rhs = check_deriv(r.cert)
        assert lhs == t and rhs == r.nf
        rules = ", ".join(f"{k}={v}" for k, v in sorted(count_rules(r.cert).items()))
        print(f"{name:9s} {print_term(t)}")
        print(f"{'':9s} ~> {print_term(r.nf)}")
        print(f"{'':9s} certificate: {rules}")


if __name__ == "__main__":
    main()
