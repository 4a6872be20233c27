from __future__ import annotations

from dataclasses import dataclass, replace

DEFAULT_MAX_SUBSPACES = 500_000
DEFAULT_MAX_PAIRS = 10_000_000
DEFAULT_MAX_ELEMENTS = 1_000_000


@dataclass(frozen=True)
class ScanConfig:
    """Budget and mode for exhaustive or sampled searches.

    ``exhaustive`` is only meaningful over finite fields; ``sampled`` draws
    ``samples`` random vectors from a stream seeded by ``seed``.
    """

    mode: str = "exhaustive"
    samples: int = 1000
    seed: int = 0
    max_subspaces: int = DEFAULT_MAX_SUBSPACES
    max_pairs: int = DEFAULT_MAX_PAIRS
    max_elements: int = DEFAULT_MAX_ELEMENTS
    workers: int = 1

    def __post_init__(self):
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown scan mode {self.mode!r}")

    def with_(self, **kw) -> "ScanConfig":
        return replace(self, **kw)


DEFAULT = ScanConfig()
