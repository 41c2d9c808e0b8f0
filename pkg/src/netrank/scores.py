"""Per-node score vectors with provenance metadata and CSV output."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

MEASURES = ("degree", "betweenness", "lse")


def label_sort_key(label: str) -> tuple[int, int, str]:
    """Ordering key for node labels: integer tokens numerically, then text."""
    stripped = label[1:] if label.startswith("-") else label
    if stripped.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


def format_score(value: float) -> str:
    """Render a score compactly; integral values print without a decimal."""
    if value == int(value):
        return str(int(value))
    return repr(value)


@dataclass(frozen=True)
class ScoreVector:
    """One real-valued score per node for a single influence measure.

    ``mode`` records the settings the scores were computed under
    (normalization, log base, degree view) so any output can be traced
    back to its configuration.
    """

    measure: str
    mode: dict[str, str] = field(default_factory=dict)
    labels: tuple[str, ...] = ()
    scores: tuple[float, ...] = ()

    def __post_init__(self):
        if self.measure not in MEASURES:
            raise ValueError(f"unknown measure: {self.measure!r}")
        if len(self.labels) != len(self.scores):
            raise ValueError("labels and scores must have the same length")
        for label, value in zip(self.labels, self.scores):
            if not math.isfinite(value):
                raise ValueError(f"non-finite score for node {label!r}: {value!r}")
            if self.measure in ("degree", "betweenness") and value < 0:
                raise ValueError(f"negative {self.measure} score for node {label!r}")
            if self.measure == "degree" and value != int(value):
                raise ValueError(f"non-integral degree for node {label!r}: {value!r}")

    @classmethod
    def from_pairs(
        cls,
        measure: str,
        pairs: Iterable[tuple[object, float]],
        mode: dict[str, str] | None = None,
    ) -> "ScoreVector":
        labels, scores = [], []
        for label, value in pairs:
            labels.append(str(label))
            scores.append(float(value))
        return cls(measure, mode or {}, tuple(labels), tuple(scores))

    def __len__(self) -> int:
        return len(self.scores)

    def score_of(self, label: object) -> float:
        key = str(label)
        for candidate, value in zip(self.labels, self.scores):
            if candidate == key:
                return value
        raise KeyError(f"no score for node {key!r}")

    def ranked_indices(self) -> list[int]:
        """Node indices sorted by score descending, ties by label ascending."""
        return sorted(
            range(len(self.scores)),
            key=lambda i: (-self.scores[i], label_sort_key(self.labels[i])),
        )

    def to_csv(self) -> str:
        """CSV text: a ``#`` mode comment, ``node,score`` header, sorted rows."""
        parts = [f"measure={self.measure}"]
        parts += [f"{key}={value}" for key, value in self.mode.items()]
        lines = ["# " + " ".join(parts), "node,score"]
        for i in self.ranked_indices():
            lines.append(f"{self.labels[i]},{format_score(self.scores[i])}")
        return "\n".join(lines) + "\n"
