"""Prescribe a distance, build the BCH-dihedral generator and compare the bound with the truth."""

from dihedral_codes import (
    bch_dihedral_generator,
    bch_lower_bound,
    binary_bch_generator,
    binary_condition,
    code_from_generator,
    minimum_distance,
)
from dihedral_codes.errors import PreconditionError


def show(label, spec) -> None:
    C = code_from_generator(spec)
    res = minimum_distance(C)
    print(f"  {label:8s} deg p = {spec.generator.degree:2d}  [{C.n},{C.k},{res.d}]  bound {bch_lower_bound(spec)}")


def smallest(build, m, delta):
    # the starting exponent b with the lowest-degree generator keeps k largest
    specs = []
    for b in range(m):
        try:
            specs.append(build(b))
        except PreconditionError:
            pass
    return min(specs, key=lambda s: s.generator.degree, default=None)


def main() -> None:
    for m in (7, 11, 19, 21):
        report = binary_condition(m)
        print(f"m = {m}: 2^(2s+1) = -1 mod m {'holds, s = ' + str(report.s) if report.holds else 'fails'}")
        for delta in (3, 4, 5):
            builders = [("general", lambda b: bch_dihedral_generator(2, m, b, delta))]
            if report.holds:
                builders.insert(0, ("binary", lambda b: binary_bch_generator(m, b, delta)))
            for label, build in builders:
                spec = smallest(build, m, delta)
                if spec is None:
                    print(f"  {label} d{delta}: every generator is degenerate")
                else:
                    show(f"{label} d{delta}", spec)

    print("ternary, m = 8:")
    for delta in (3, 4):
        show(f"delta {delta}", bch_dihedral_generator(3, 8, 1, delta))


if __name__ == "__main__":
    main()
