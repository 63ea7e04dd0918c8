"""The four binary example generators, with the parameters claimed for them."""

from __future__ import annotations

from dataclasses import dataclass

from .dihedral import DihedralSpec, make_spec


def _poly_text(terms: dict[int, str]) -> str:
    coeffs = ["0"] * (max(terms) + 1)
    for e, c in terms.items():
        coeffs[e] = c
    return ",".join(coeffs)


@dataclass(frozen=True)
class Preset:
    name: str
    m: int
    generator: str
    claimed: tuple[int, int, int]  # (n, k, d)
    note: str = ""

    def spec(self) -> DihedralSpec:
        return make_spec(2, self.m, self.generator)


PRESETS: dict[str, Preset] = {
    "d22": Preset(
        "d22",
        11,
        # x^5 + a x^4 + x^3 + x^2 + a^2 x + 1
        _poly_text({5: "1", 4: "a", 3: "1", 2: "1", 1: "a^2", 0: "1"}),
        (22, 12, 6),
    ),
    "d66": Preset(
        "d66",
        33,
        _poly_text(
            {15: "1", 14: "a", 13: "1", 11: "1", 10: "1", 9: "a^2", 8: "a^2",
             7: "a", 6: "a", 5: "1", 4: "1", 2: "1", 1: "a^2", 0: "1"}
        ),
        (66, 33, 12),
        note=(
            "claimed k=33 is inconsistent with the accompanying statement that the "
            "dimension equals 2(m - deg p) = 36"
        ),
    ),
    "d86a": Preset(
        "d86a",
        43,
        _poly_text(
            {21: "1", 20: "a", 18: "a", 17: "a", 16: "a", 15: "1", 11: "a^2", 10: "a",
             6: "1", 5: "a^2", 4: "a^2", 3: "a^2", 1: "a^2", 0: "1"}
        ),
        (86, 44, 15),
    ),
    "d86b": Preset(
        "d86b",
        43,
        # x^7 + x^6 + a x^5 + a^2 x^2 + x + 1
        _poly_text({7: "1", 6: "1", 5: "a", 2: "a^2", 1: "1", 0: "1"}),
        (86, 72, 5),
    ),
}

# Presets whose published parameters are known not to be reproducible as printed.
KNOWN_DISCREPANCIES = frozenset({"d66"})
