"""Intersection-theory contexts for maps into projective space.

A :class:`MapContext` packages the data of a finite map f from a smooth
m-fold M onto its image in P^n: the dimensions plus the table of degrees of
pushed-forward Chern monomials of TM,

    xi(I) = degree of f_*( c_1(TM)^{i_1} c_2(TM)^{i_2} ... ),

with the empty index giving the degree d of the image.  That table is the
engine's only model of the cohomology of M; every computation reduces to
monomials in the c_k(TM) and the pulled-back hyperplane class.

Source-side classes are polynomials in source Chern classes and ``at``
(weight cap m), target-side classes are polynomials in ``a`` (weight cap n);
scalars may be exact rationals or polynomials in the ``d``/``xi`` symbols,
uniformly represented, so numeric and fully symbolic runs share one code
path.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .algebra import (
    AbstractClass,
    GradedPolynomial,
    MultiIndex,
    RingMismatchError,
    SOURCE_HYPERPLANE_VAR,
    TARGET_HYPERPLANE_VAR,
    VarKind,
    atom,
    chern_indices,
    constant,
    index_digits,
    index_weight,
    lift,
    source_chern,
    trim_index,
    var_label,
    xi_symbol,
)

Scalar = GradedPolynomial
XiValue = Union[int, Fraction, GradedPolynomial]

SYMBOLIC = "symbolic"


class TruncationError(ValueError):
    """A truncated series was asked for more weight than it is valid to."""


def xi_label(index: MultiIndex) -> str:
    """Key naming for the degree table: ``d``, ``xi1``, ``xi01``, ..."""
    return "d" if not index else f"xi{index_digits(index)}"


def parse_xi_key(key) -> MultiIndex:
    if isinstance(key, str):
        if key == "d":
            return ()
        if key.startswith("xi") and key[2:].isdigit():
            return trim_index(int(ch) for ch in key[2:])
        raise ValueError(f"unknown degree-table key {key!r}")
    return trim_index(key)


def _check_scalar(value: GradedPolynomial, label: str) -> GradedPolynomial:
    bad = [v for v in value.variables() if v.kind is not VarKind.XI]
    if bad:
        raise ValueError(
            f"degree-table value for {label} contains non-scalar variables "
            f"{sorted(var_label(v) for v in bad)}"
        )
    return value


class MapContext:
    """The data of f: M^m -> P^n together with the Gysin calculus around it.

    Instances are immutable; all methods are pure and cache internally only
    values derived from the constructor arguments.
    """

    def __init__(self, source_dim: int, target_dim: int, xi: Mapping):
        m, n = int(source_dim), int(target_dim)
        if m < 1:
            raise ValueError("source dimension must be >= 1")
        if n < m:
            raise ValueError(f"target dimension {n} below source dimension {m}")
        required = chern_indices(m)
        table = {}
        for key, value in xi.items():
            index = parse_xi_key(key)
            if index in table:
                raise ValueError(f"duplicate degree-table entry for {xi_label(index)}")
            table[index] = _check_scalar(lift(value), xi_label(index))
        missing = [xi_label(i) for i in required if i not in table]
        if missing:
            raise ValueError(f"degree table is missing entries: {', '.join(missing)}")
        extra = [xi_label(i) for i in table if i not in required]
        if extra:
            raise ValueError(f"degree table has entries beyond weight {m}: {', '.join(extra)}")
        self._m = m
        self._n = n
        self._xi = table
        self._quotient: list | None = None
        self._ln_cache: dict = {}

    # -- basic data ---------------------------------------------------------

    @property
    def source_dim(self) -> int:
        return self._m

    @property
    def target_dim(self) -> int:
        return self._n

    @property
    def kappa(self) -> int:
        return self._n - self._m

    @property
    def xi(self) -> dict:
        return dict(self._xi)

    def xi_scalar(self, index) -> Scalar:
        return self._xi[parse_xi_key(index)]

    def is_numeric(self) -> bool:
        return all(v.is_constant() for v in self._xi.values())

    def __repr__(self) -> str:
        mode = "numeric" if self.is_numeric() else "symbolic"
        return f"MapContext({self._m} -> P^{self._n}, {mode})"

    # -- source/target ring helpers ------------------------------------------

    def hyperplane(self) -> GradedPolynomial:
        """The pulled-back hyperplane class ``at`` in the source ring."""
        return atom(SOURCE_HYPERPLANE_VAR, cap=self._m)

    def source_chern_total(self) -> GradedPolynomial:
        """c(TM) = 1 + c_1 + ... + c_m as an abstract source class."""
        total = constant(1)
        for k in range(1, self._m + 1):
            total = total + atom(source_chern(k))
        return total.truncated(self._m)

    # -- the calculus ---------------------------------------------------------

    def quotient_chern(self) -> list:
        """Quotient Chern classes c_1(f) ... c_m(f) as source classes.

        Computed from the series quotient of the pulled-back target tangent
        classes by the source ones: (1 + at)^(n+1) * c(TM)^{-1}, truncated at
        weight m; entry k-1 of the list is homogeneous of weight k.
        """
        if self._quotient is None:
            from .algebra import invert_unit_series

            total = (1 + self.hyperplane()) ** (self._n + 1) * invert_unit_series(
                self.source_chern_total(), self._m
            )
            self._quotient = [total.component(k) for k in range(1, self._m + 1)]
        return list(self._quotient)

    def pushforward(self, x: GradedPolynomial) -> GradedPolynomial:
        """Gysin image of a source class in the target ring.

        Linear over scalars and hyperplane powers (projection formula): the
        monomial c_I(TM) * at^j goes to xi(I) * a^(weight(I) + j + kappa).
        Powers of ``a`` beyond the target dimension vanish.
        """
        total = GradedPolynomial(cap=self._n)
        a = atom(TARGET_HYPERPLANE_VAR, cap=self._n)
        for mono, coeff in x.truncated(self._m).items():
            exps: dict = {}
            hyper = 0
            scalar = constant(coeff)
            for v, e in mono:
                if v.kind is VarKind.SOURCE_CHERN:
                    exps[v.index[0]] = e
                elif v.kind is VarKind.SOURCE_HYPERPLANE:
                    hyper = e
                elif v.kind is VarKind.XI:
                    scalar = scalar * atom(v) ** e
                else:
                    raise ValueError(
                        f"cannot push forward variable {var_label(v)}; not a source class"
                    )
            index = trim_index(
                exps.get(k, 0) for k in range(1, max(exps, default=0) + 1)
            )
            power = index_weight(index) + hyper + self.kappa
            if power > self._n:
                continue
            total = total + scalar * self._xi[index] * a ** power
        return total

    def pullback(self, y: GradedPolynomial) -> GradedPolynomial:
        """Pull a target class back to the source: a -> at, truncated at m."""
        at = self.hyperplane()
        total = GradedPolynomial(cap=self._m)
        for mono, coeff in y.items():
            term = constant(coeff)
            for v, e in mono:
                if v.kind is VarKind.TARGET_HYPERPLANE:
                    term = term * at ** e
                elif v.kind is VarKind.XI:
                    term = term * atom(v) ** e
                else:
                    raise ValueError(
                        f"cannot pull back variable {var_label(v)}; not a target class"
                    )
            total = total + term
        return total.truncated(self._m)

    def landweber_novikov(self, index) -> GradedPolynomial:
        """s_I(f): the pushed-forward Chern monomial of quotient classes."""
        index = trim_index(index)
        if index_weight(index) + self.kappa > self._n:
            raise ValueError(
                f"s_{index_digits(index)} has weight beyond the target dimension"
            )
        if index not in self._ln_cache:
            monomial = constant(1).truncated(self._m)
            for k, e in enumerate(index, start=1):
                if e:
                    monomial = monomial * self.quotient_chern()[k - 1] ** e
            self._ln_cache[index] = self.pushforward(monomial)
        return self._ln_cache[index]

    def evaluate(self, ac: AbstractClass) -> GradedPolynomial:
        """Instantiate a universal class on this map.

        Quotient Chern variables become the quotient classes of f and
        Landweber-Novikov variables the pullbacks of the corresponding
        pushed-forward classes; the result is a source class of weight cap m.
        """
        from .algebra import substitute

        if ac.kappa != self.kappa:
            raise RingMismatchError(
                f"class {ac.name} lives at kappa={ac.kappa}, context has {self.kappa}"
            )
        body = ac.body.truncated(self._m)
        assignment = {}
        for v in body.variables():
            if v.kind is VarKind.QUOTIENT_CHERN:
                assignment[v] = self.quotient_chern()[v.index[0] - 1]
            elif v.kind is VarKind.LANDWEBER_NOVIKOV:
                assignment[v] = self.pullback(self.landweber_novikov(v.index))
        return substitute(body, assignment, cap=self._m)

    def integrate(self, x: GradedPolynomial) -> Scalar:
        """Degree of a source class: only the weight-m part contributes.

        Each top monomial c_I(TM) * at^(m - weight(I)) contributes its
        coefficient times xi(I); lighter monomials have no degree.
        """
        total = GradedPolynomial()
        for mono, coeff in x.items():
            exps: dict = {}
            scalar = constant(coeff)
            weight = 0
            for v, e in mono:
                if v.kind is VarKind.SOURCE_CHERN:
                    exps[v.index[0]] = e
                    weight += v.index[0] * e
                elif v.kind is VarKind.SOURCE_HYPERPLANE:
                    weight += e
                elif v.kind is VarKind.XI:
                    scalar = scalar * atom(v) ** e
                else:
                    raise ValueError(
                        f"cannot integrate variable {var_label(v)}; not a source class"
                    )
            if weight != self._m:
                continue
            index = trim_index(
                exps.get(k, 0) for k in range(1, max(exps, default=0) + 1)
            )
            total = total + scalar * self._xi[index]
        return total

    def project(self) -> "MapContext":
        """Compose with a generic linear projection P^n -> P^(n-1).

        The degree table is intrinsic to (M, at) and is reused unchanged; the
        quotient classes pick up the smaller target exponent automatically.
        """
        if self.kappa == 0:
            raise ValueError("cannot project: relative codimension would become negative")
        return MapContext(self._m, self._n - 1, self._xi)

    def weighted_euler(self, series: AbstractClass) -> Scalar:
        """Euler characteristic of a locus: integrate c(TM) times the series.

        Refuses to run when the stored series is not valid up to weight m
        rather than silently truncating.
        """
        if series.valid_to_weight is not None and series.valid_to_weight < self._m:
            raise TruncationError(
                f"series {series.name} is valid to weight {series.valid_to_weight}, "
                f"needed {self._m}"
            )
        return self.integrate(self.source_chern_total() * self.evaluate(series))


def make_context(source_dim: int, target_dim: int, xi) -> MapContext:
    """Build a validated context; pass ``"symbolic"`` for the generic one.

    In symbolic mode every degree-table entry is its own scalar symbol, so
    all downstream results are exact polynomials in ``d`` and the ``xi``
    symbols.
    """
    m, n = int(source_dim), int(target_dim)
    if n <= m:
        raise ValueError(f"target dimension {n} must exceed source dimension {m}")
    if xi == SYMBOLIC:
        xi = {index: atom(xi_symbol(index)) for index in chern_indices(m)}
    return MapContext(m, n, xi)
