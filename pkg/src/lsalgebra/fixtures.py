"""Small bonded posets used in tests, the acceptance suite and the CLI examples."""

from __future__ import annotations

from typing import Callable

from .poset import BondedPoset, build_poset


def i24() -> BondedPoset:
    """I(2,4): 12 < 13 < {14, 23} < 24 < 34, all bonds 1."""
    return build_poset(
        ["12", "13", "14", "23", "24", "34"],
        [("12", "13"), ("13", "14"), ("13", "23"), ("14", "24"), ("23", "24"), ("24", "34")],
    )


def chain_121() -> BondedPoset:
    """e < x < y < z with bonds 1, 2, 1 (the shape of the B2 vector representation)."""
    return build_poset(["e", "x", "y", "z"], [("e", "x", 1), ("x", "y", 2), ("y", "z", 1)])


def chain_12() -> BondedPoset:
    return build_poset(["e", "x", "y"], [("e", "x", 1), ("x", "y", 2)])


def chain_33() -> BondedPoset:
    return build_poset(["e", "x", "y"], [("e", "x", 3), ("x", "y", 3)])


def a1_bond3() -> BondedPoset:
    """e < s with bond 3 (the A1 quotient for the weight 3 omega)."""
    return build_poset(["e", "s"], [("e", "s", 3)])


def diamond() -> BondedPoset:
    """0 < a, b < 1 with bonds (1, 2) through a and (1, 1) through b."""
    return build_poset(["0", "a", "b", "1"], [("0", "a", 1), ("a", "1", 2), ("0", "b", 1), ("b", "1", 1)])


def bad_diamond() -> BondedPoset:
    """Fails the gcd condition: the two chains of [0, 1] give gcds 2 and 3."""
    return build_poset(["0", "a", "b", "1"], [("0", "a", 2), ("a", "1", 2), ("0", "b", 3), ("b", "1", 3)])


def antichain3() -> BondedPoset:
    """Three incomparable middle elements between a bottom and a top, bonds 1."""
    mids = ["a", "b", "c"]
    return build_poset(["0", *mids, "1"], [("0", m) for m in mids] + [(m, "1") for m in mids])


def a2_adjoint() -> BondedPoset:
    """W^lambda for A2 and lambda = omega_1 + omega_2 (six elements, two bonds equal to 2)."""
    from .weyl import build_root_system, bruhat_poset

    return bruhat_poset(build_root_system("A", 2), (1, 1))


FIXTURES: dict[str, Callable[[], BondedPoset]] = {
    "i24": i24,
    "chain-121": chain_121,
    "chain-12": chain_12,
    "chain-33": chain_33,
    "a1-bond3": a1_bond3,
    "diamond": diamond,
    "antichain3": antichain3,
    "a2-adjoint": a2_adjoint,
}
