"""Acceptance suite: the exit criteria of the build, one test per criterion.

Every assertion is exact (integers and symbolic polynomial identities; no
tolerances anywhere).  Each criterion prints its own pass line; run with
``pytest tests/test_acceptance.py -s`` to see them stream.
"""

from __future__ import annotations

from fractions import Fraction

from charclass.algebra import degree_symbol, xi_scalar
from charclass.context import SYMBOLIC, make_context
from charclass.presets import (
    roman_surface_context,
    smooth_surface_context,
    smooth_threefold_context,
    veronese_threefold_context,
)
from charclass.report import all_passed
from charclass.surface import (
    surface_characters,
    surface_invert,
    surface_typo_diagnostics,
    verify_surface_relations,
)
from charclass.tables import golden_roundtrip, validate_tables
from charclass.threefold import (
    threefold_characters,
    threefold_invert,
    threefold_typo_diagnostics,
)

from test_properties import (
    run_projection_formula,
    run_ring_laws,
    run_series_inversion,
    run_substitution_homomorphism,
)

D = degree_symbol()
X1, X2, X01 = xi_scalar((1,)), xi_scalar((2,)), xi_scalar((0, 1))
X3, X11, X001 = xi_scalar((3,)), xi_scalar((1, 1)), xi_scalar((0, 0, 1))


def _report(number: int, description: str) -> None:
    print(f"criterion {number:02d} PASS: {description}")


def test_criterion_01_veronese_threefold_reproduction():
    ch = threefold_characters(veronese_threefold_context())
    assert ch.mu0 == 20
    assert ch.t == 20
    assert ch.gamma == 20
    assert ch.q == 5
    assert ch.s_t == 40
    assert ch.chi_C == -20
    assert ch.m3 == 4
    _report(1, "quadric Veronese 3-fold: mu0=20 t=20 gamma=20 q=5 s_t=40 chi_C=-20 m3=4")


def test_criterion_02_threefold_inversion_roundtrip():
    ch = threefold_characters(make_context(3, 4, SYMBOLIC))
    inverted = threefold_invert(ch.d, ch.mu0, ch.t, ch.q, ch.s_t, ch.gamma, ch.chi_C)
    assert inverted == (X1, X2, X01, X3, X11, X001)
    _report(2, "threefold character/Chern-degree round trip is the identity in 7 atoms")


def test_criterion_03_surface_inversion_roundtrip():
    ch = surface_characters(make_context(2, 3, SYMBOLIC))
    assert surface_invert(ch.mu0, ch.eps0, ch.C, ch.T) == (X1, X2, X01)
    _report(3, "surface character/Chern-degree round trip is the identity in 4 atoms")


def test_criterion_04_five_surface_relations():
    checks = [
        c
        for c in verify_surface_relations(make_context(2, 3, SYMBOLIC))
        if "/relation/" in c.name
    ]
    assert len(checks) == 5 and all_passed(checks)
    _report(4, "all five classical surface relations vanish identically")


def test_criterion_05_birational_invariants():
    ch = surface_characters(make_context(2, 3, SYMBOLIC))
    omega = ch.mu2 - 6 * ch.mu1 + 9 * ch.mu0 + ch.C + 1
    zs = ch.mu2 - 2 * ch.mu1 + 3 * ch.mu0 - 4
    assert omega == X2 + 1
    assert zs == X01 - 4
    assert omega + zs == X2 + X01 - 3
    _report(5, "omega = xi2+1, Zeuthen-Segre = xi01-4, and their sum check out")


def test_criterion_06_roman_surface():
    ch = surface_characters(roman_surface_context())
    assert ch.eps0 == 3
    assert ch.C == 6
    assert ch.T == 1
    assert ch.mu1 == 6
    assert ch.mu2 == 3
    assert ch.kappa_cusps == 9
    assert ch.rho == 3
    assert ch.eps1 == 0
    assert ch.chi_double_curve == 4
    xi = surface_invert(4, ch.eps0, ch.C, ch.T)
    assert xi == (6, 9, 3)
    _report(6, "Steiner Roman surface: eps0=3 C=6 T=1 mu1=6 mu2=3 kappa=9 rho=3 eps1=0 chi(D)=4")


def test_criterion_07_smooth_hypersurface_degenerations():
    surf = surface_characters(smooth_surface_context())
    assert surf.eps0.is_zero() and surf.C.is_zero() and surf.T.is_zero()
    assert surf.mu1 == D * (D - 1)
    assert surf.kappa_cusps == D * (D - 1) * (D - 2)
    assert surf.mu2 == D * (D - 1) ** 2

    three = threefold_characters(smooth_threefold_context())
    for name in ["mu0", "t", "q", "s_t", "gamma", "chi_C"]:
        assert three.as_dict()[name].is_zero(), name
    assert three.m1 == D * (D - 1)
    assert three.m2 == D * (D - 1) ** 2
    assert three.m3 == D * (D - 1) ** 3
    _report(7, "smooth hypersurfaces degenerate to the classical polar formulas, symbolically in d")


def test_criterion_08_canonical_dot_critical_curve():
    ch = threefold_characters(make_context(3, 4, SYMBOLIC))
    assert ch.K_dot_S == -10 * X1 + X11 + 5 * X2 - X3
    assert ch.K_dot_S == (ch.s_t - ch.d * ch.gamma) / 2 - ch.chi_C
    assert threefold_characters(veronese_threefold_context()).K_dot_S == -40
    _report(8, "K.S equals its Chern-degree form, its character form, and -40 on the Veronese preset")


def test_criterion_09_table_validation():
    structural = validate_tables()
    golden = golden_roundtrip()
    assert structural and all_passed(structural)
    assert golden and all_passed(golden)
    _report(9, "table rows are homogeneous, series open with their locus classes, golden file bit-exact")


def test_criterion_10_euler_characteristic_lines():
    ctx = make_context(2, 3, SYMBOLIC)
    ch = surface_characters(ctx)
    assert ch.chi_critical_curve == -9 * D + 9 * X1 - 2 * X2
    expected = (7 * D + 6 * D ** 2 - D ** 3 - Fraction(5, 2) * X01
                - 12 * X1 + Fraction(7, 2) * X2) / 3
    assert ch.chi_double_curve == expected
    _report(10, "chi of the critical and double curves match the printed forms via the weighted-Euler pipeline")


def test_criterion_11_typo_diagnostics():
    surface_checks = surface_typo_diagnostics()
    threefold_checks = threefold_typo_diagnostics()
    assert all_passed(surface_checks) and all_passed(threefold_checks)
    names = {c.name for c in surface_checks} | {c.name for c in threefold_checks}
    assert any("rho" in n for n in names)
    assert any("s01" in n for n in names)
    assert any("m2" in n for n in names)
    # the documented deltas are pinned inside the diagnostics: rho differs by
    # 3*(xi01 - xi2), m2 by 2*xi01, s01 by the 6d term; anything else fails
    _report(11, "engine agrees with the self-consistent closed forms and differs from the three inconsistent lines exactly as documented")


def test_criterion_12_randomized_property_suite():
    assert run_projection_formula(1000) == 1000
    assert run_ring_laws(1000) == 1000
    assert run_series_inversion(1000) == 1000
    assert run_substitution_homomorphism(1000) == 1000
    _report(12, "projection formula, ring laws, series inversion, substitution homomorphism: 1000 exact cases each")
