"""Dual codes stay dihedral; the four preset codes against their published parameters."""

from dihedral_codes import PRESETS, code_from_generator, dual_code, is_dihedral_invariant, char2_containment
from dihedral_codes.cli import reproduce_rows


def main() -> None:
    spec = PRESETS["d22"].spec()
    C = code_from_generator(spec)
    D = dual_code(C)
    print(f"D22 code [{C.n},{C.k}], dual [{D.n},{D.k}], dual dihedral: {is_dihedral_invariant(D)}")
    print("conjugate-generator containment (char 2):", char2_containment(spec))

    print("\npreset    computed        claimed         status")
    for row in reproduce_rows():
        print(f"{row['preset']:8s}  {str(row['computed']):14s}  {str(row['claimed']):14s}  {row['status']}")
        if row.get("note"):
            print("          note:", row["note"])


if __name__ == "__main__":
    main()
