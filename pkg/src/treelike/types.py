"""Common types."""

from __future__ import annotations

from collections.abc import Mapping, Sequence

#: Identifier of an element of a finite structure.
type Element = str | int
#: Identifier of a point in a tower or B-tower.
type PointId = str
#: Scalar JSON values.
type ScalarValue = str | int | bool | float | None
#: JSON values as echoed in command reports.
type JsonValue = ScalarValue | Sequence[JsonValue] | Mapping[str, JsonValue]
