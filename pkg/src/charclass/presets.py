"""Built-in geometries with their degree tables derived in code.

Each preset computes its xi table from first principles rather than storing
bare numbers, so the derivation is auditable:

* Veronese presets: M = P^k embedded by the full quadric system and then
  projected generically.  The tangent classes of P^k are the binomial
  coefficients of (1+h)^(k+1) and the pulled-back hyperplane class is 2h,
  with h^k integrating to 1.
* Smooth-hypersurface presets: M of degree d inside P^(m+1), where
  adjunction gives c(TM) = (1+h)^(m+2) / (1+dh) restricted to M, the
  hyperplane class restricts to itself, and h^m integrates to d.  These are
  the degenerate inputs on which every multiple-point count must vanish.

The smooth presets accept a symbolic degree (pass ``degree=None``), in which
case the table entries are exact polynomials in the scalar symbol ``d``.
"""

from __future__ import annotations

from .algebra import (
    GradedPolynomial,
    SOURCE_HYPERPLANE_VAR,
    VarKind,
    atom,
    chern_indices,
    constant,
    degree_symbol,
    invert_unit_series,
    lift,
)
from .context import MapContext, Scalar, make_context, xi_label


def _hyperplane_coefficients(series: GradedPolynomial, top: int) -> list:
    """Scalar coefficients of h^0 ... h^top in a series over the h-line."""
    coeffs = []
    for k in range(top + 1):
        part = GradedPolynomial()
        for mono, coeff in series.component(k).items():
            stripped = tuple(
                (v, e) for v, e in mono if v.kind is not VarKind.SOURCE_HYPERPLANE
            )
            part = part + GradedPolynomial({stripped: coeff})
        coeffs.append(part)
    return coeffs


def _xi_from_line_data(
    m: int, tangent_total: GradedPolynomial, pullback_multiple: Scalar, top_degree: Scalar
) -> dict:
    """Degree table for a source whose classes live on a single h-line.

    With c_k(TM) = gamma_k h^k and the pulled-back hyperplane class e*h,
    the degree of f_*(c_I) is (prod of gamma_k^{i_k}) * e^(m - weight I)
    times the degree of h^m.
    """
    gammas = _hyperplane_coefficients(tangent_total, m)
    table = {}
    for index in chern_indices(m):
        value = constant(1)
        weight = 0
        for k, e in enumerate(index, start=1):
            value = value * gammas[k] ** e
            weight += k * e
        table[xi_label(index)] = value * pullback_multiple ** (m - weight) * top_degree
    return table


def veronese_xi(source_dim: int, twist: int = 2) -> dict:
    """Degree table of P^k re-embedded by degree-``twist`` forms."""
    m = int(source_dim)
    h = atom(SOURCE_HYPERPLANE_VAR, cap=m)
    tangent = (1 + h) ** (m + 1)
    return _xi_from_line_data(m, tangent, constant(twist), constant(1))


def hypersurface_xi(source_dim: int, degree=None) -> dict:
    """Adjunction degree table of a smooth hypersurface of given degree.

    ``degree=None`` keeps the degree as the scalar symbol ``d``.
    """
    m = int(source_dim)
    d = degree_symbol() if degree is None else lift(degree)
    h = atom(SOURCE_HYPERPLANE_VAR, cap=m)
    tangent = (1 + h) ** (m + 2) * invert_unit_series(1 + d * h, m)
    return _xi_from_line_data(m, tangent, constant(1), d)


def hypersurface_tangent_images(source_dim: int, degree=None) -> dict:
    """Substitution sending each c_k(TM) to its adjunction value on the h-line.

    Smooth hypersurfaces have c(TM) = (1+h)^(m+2)/(1+dh) with the hyperplane
    class restricting to itself, so every source Chern class is a multiple of
    a power of ``at``.  Applying this map to an evaluated multiple-point
    class exhibits its identical vanishing on embeddings.
    """
    from .algebra import SOURCE_HYPERPLANE_VAR, source_chern

    m = int(source_dim)
    d = degree_symbol() if degree is None else lift(degree)
    h = atom(SOURCE_HYPERPLANE_VAR, cap=m)
    tangent = (1 + h) ** (m + 2) * invert_unit_series(1 + d * h, m)
    gammas = _hyperplane_coefficients(tangent, m)
    images = {source_chern(k): gammas[k] * h ** k for k in range(1, m + 1)}
    images[SOURCE_HYPERPLANE_VAR] = h
    return images


def roman_surface_context() -> MapContext:
    """The Steiner quartic: P^2 by conics, projected to 3-space.

    Classically it has three double lines meeting in one triple point and
    six pinch points, which pins every surface character below.
    """
    return make_context(2, 3, veronese_xi(2, 2))


def veronese_threefold_context() -> MapContext:
    """P^3 by quadrics, projected generically to P^4 (degree-8 image)."""
    return make_context(3, 4, veronese_xi(3, 2))


def smooth_surface_context(degree=None) -> MapContext:
    """Smooth surface of the given degree in P^3; symbolic degree if None."""
    return make_context(2, 3, hypersurface_xi(2, degree))


def smooth_threefold_context(degree=None) -> MapContext:
    """Smooth hypersurface of the given degree in P^4; symbolic if None."""
    return make_context(3, 4, hypersurface_xi(3, degree))


PRESETS = {
    "roman-surface": ("surface", roman_surface_context, False),
    "veronese-p3": ("threefold", veronese_threefold_context, False),
    "smooth-surface": ("surface", smooth_surface_context, True),
    "smooth-threefold": ("threefold", smooth_threefold_context, True),
}


def preset_names() -> list:
    return sorted(PRESETS)


def preset_context(name: str, degree=None):
    """Instantiate a preset; returns (kind, context)."""
    try:
        kind, builder, needs_degree = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {', '.join(preset_names())}") from None
    if needs_degree:
        return kind, builder(degree)
    if degree is not None:
        raise ValueError(f"preset {name!r} does not take a degree")
    return kind, builder()


def preset_document(name: str, degree=None) -> dict:
    """Preset as an input document (numeric only, rationals as strings)."""
    kind, builder, needs_degree = PRESETS.get(name, (None, None, None))
    if kind is None:
        raise ValueError(f"unknown preset {name!r}; choose from {', '.join(preset_names())}")
    if needs_degree:
        if degree is None:
            raise ValueError(f"preset {name!r} needs --degree")
        if int(degree) < 1:
            raise ValueError("degree must be a positive integer")
        ctx = builder(int(degree))
    else:
        if degree is not None:
            raise ValueError(f"preset {name!r} does not take a degree")
        ctx = builder()
    data = {
        xi_label(index): str(value.constant_value())
        for index, value in sorted(ctx.xi.items(), key=lambda kv: (len(kv[0]), kv[0]))
    }
    return {"kind": kind, "chern_data": data}
