from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidInput


@dataclass(frozen=True)
class BeamSolution:
    """A partition of user ids into beams.

    ``clusters`` is a tuple of sorted id tuples. ``iterations_used`` counts
    Lloyd rounds (BK-Means) and ``moves_used`` counts balancing moves
    (TGBP); solvers that do neither leave them at zero.
    """

    clusters: tuple[tuple[int, ...], ...]
    algorithm: str = ""
    seed: int = 0
    iterations_used: int = 0
    moves_used: int = 0

    @classmethod
    def from_labels(cls, labels, **kwargs) -> BeamSolution:
        labels = np.asarray(labels)
        # clusters ordered by their smallest member
        _, first = np.unique(labels, return_index=True)
        clusters = []
        for lab in labels[np.sort(first)]:
            clusters.append(tuple(int(i) for i in np.flatnonzero(labels == lab)))
        return cls(tuple(clusters), **kwargs)

    @property
    def n_beams(self) -> int:
        return len(self.clusters)

    @property
    def n_users(self) -> int:
        return sum(len(c) for c in self.clusters)

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.clusters]

    @property
    def load_gap(self) -> int:
        s = self.sizes
        return max(s) - min(s)

    def labels(self) -> np.ndarray:
        out = np.full(self.n_users, -1, dtype=np.int64)
        for b, members in enumerate(self.clusters):
            out[list(members)] = b
        return out

    def validate(self, n_users: int | None = None) -> None:
        """Raise :class:`InvalidInput` unless clusters are a proper partition."""
        n = self.n_users if n_users is None else n_users
        seen = np.zeros(n, dtype=bool)
        for members in self.clusters:
            if not members:
                raise InvalidInput("empty cluster")
            for k in members:
                if not 0 <= k < n:
                    raise InvalidInput(f"user id {k} outside [0, {n})")
                if seen[k]:
                    raise InvalidInput(f"user {k} assigned twice")
                seen[k] = True
        if not seen.all():
            raise InvalidInput(f"users not served: {np.flatnonzero(~seen).tolist()}")


def balancing_indicator(sizes) -> int:
    """``sum_{b<j} (u_b - u_j)`` over sizes sorted in descending order."""
    u = np.sort(np.asarray(sizes, dtype=np.int64))[::-1]
    b = len(u)
    weights = b - 1 - 2 * np.arange(b)
    return int(weights @ u)
