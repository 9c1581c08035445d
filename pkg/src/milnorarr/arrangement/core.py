"""Central hyperplane arrangements with exact cyclotomic coefficients."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, Union

from ..exactmath import CycloElement, cyclo_from_json, rational_to_json

Form = tuple[CycloElement, ...]
Coefficient = Union[int, Fraction, CycloElement]


class ArrangementError(ValueError):
    """Invalid arrangement data."""


class ArrangementFormatError(ArrangementError):
    """Malformed arrangement file; ``where`` names the offending field."""

    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


class DuplicateHyperplaneError(ArrangementError):
    def __init__(self, first: int, second: int):
        super().__init__(
            f"hyperplanes {first} and {second} coincide after normalisation"
        )
        self.indices = (first, second)


def form_key(form: Sequence[CycloElement]) -> tuple:
    return tuple(c.key for c in form)


def normalize_form(form: Sequence[CycloElement]) -> Form:
    """Scale so the first nonzero coefficient is 1."""
    lead = next((c for c in form if c), None)
    if lead is None:
        raise ArrangementError("zero linear form")
    if lead == 1:
        return tuple(form)
    inv = lead.inverse()
    return tuple(c * inv for c in form)


@dataclass(frozen=True)
class Arrangement:
    """A reduced central arrangement: normalised, pairwise distinct linear forms.

    ``family`` is a free-form type tag such as ``"G(m,m,4)"`` set by the
    builders; witness rules may match on it.
    """

    ambient_dim: int
    cyclo_order: int
    hyperplanes: tuple[Form, ...]
    label: str = ""
    family: Optional[str] = None

    @property
    def degree(self) -> int:
        return len(self.hyperplanes)

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def permuted(self, perm: Sequence[int]) -> "Arrangement":
        """Arrangement whose k-th hyperplane is the ``perm[k]``-th of this one."""
        return Arrangement(
            self.ambient_dim,
            self.cyclo_order,
            tuple(self.hyperplanes[p] for p in perm),
            self.label,
            self.family,
        )

    def to_json(self) -> dict[str, Any]:
        rows = []
        for form in self.hyperplanes:
            row = []
            for c in form:
                q = c.is_rational()
                row.append(rational_to_json(q) if q is not None else c.to_json())
            rows.append(row)
        out: dict[str, Any] = {
            "label": self.label,
            "ambient_dim": self.ambient_dim,
            "cyclotomic_order": self.cyclo_order,
            "hyperplanes": rows,
        }
        if self.family is not None:
            out["family"] = self.family
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def _coerce(c: Coefficient, order: int) -> CycloElement:
    if isinstance(c, CycloElement):
        return c.lift(order)
    return CycloElement.constant(order, c)


def make_arrangement(
    ambient_dim: int,
    cyclo_order: int,
    forms: Iterable[Sequence[Coefficient]],
    label: str = "",
    family: Optional[str] = None,
) -> Arrangement:
    """Normalise raw forms and reject zero or repeated hyperplanes."""
    if ambient_dim < 1 or cyclo_order < 1:
        raise ArrangementError("ambient dimension and cyclotomic order must be positive")
    seen: dict[tuple, int] = {}
    out: list[Form] = []
    for idx, raw in enumerate(forms):
        if len(raw) != ambient_dim:
            raise ArrangementError(
                f"hyperplane {idx} has {len(raw)} coefficients, expected {ambient_dim}"
            )
        try:
            form = normalize_form([_coerce(c, cyclo_order) for c in raw])
        except ArrangementError:
            raise ArrangementError(f"hyperplane {idx} is the zero form") from None
        key = form_key(form)
        if key in seen:
            raise DuplicateHyperplaneError(seen[key], idx)
        seen[key] = idx
        out.append(form)
    if not out:
        raise ArrangementError("an arrangement needs at least one hyperplane")
    return Arrangement(ambient_dim, cyclo_order, tuple(out), label, family)


def arrangement_from_json(data: Any) -> Arrangement:
    if not isinstance(data, dict):
        raise ArrangementFormatError("$", "expected a JSON object")
    for field in ("ambient_dim", "cyclotomic_order", "hyperplanes"):
        if field not in data:
            raise ArrangementFormatError(field, "missing field")
    try:
        dim = int(data["ambient_dim"])
        order = int(data["cyclotomic_order"])
    except (TypeError, ValueError) as exc:
        raise ArrangementFormatError("ambient_dim/cyclotomic_order", str(exc)) from None
    rows = data["hyperplanes"]
    if not isinstance(rows, list):
        raise ArrangementFormatError("hyperplanes", "expected a list")
    forms = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise ArrangementFormatError(f"hyperplanes[{i}]", "expected a list")
        form = []
        for j, c in enumerate(row):
            try:
                el = cyclo_from_json(c)
                form.append(el.lift(order))
            except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
                raise ArrangementFormatError(f"hyperplanes[{i}][{j}]", str(exc)) from None
        forms.append(form)
    try:
        return make_arrangement(
            dim, order, forms, str(data.get("label", "")), data.get("family")
        )
    except ArrangementError as exc:
        raise ArrangementFormatError("hyperplanes", str(exc)) from None


def loads_arrangement(text: str) -> Arrangement:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementFormatError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return arrangement_from_json(data)


def load_arrangement(path) -> Arrangement:
    with open(path, encoding="utf-8") as fh:
        return loads_arrangement(fh.read())
