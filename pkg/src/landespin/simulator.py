"""Monte Carlo sampling of sequential spin-projection measurements.

Each shot starts with a definite projection along the start axis and is
measured along every stage axis in turn. After each stage the outcome
becomes the new definite projection, so a shot is a Markov chain over
(axis, projection) pairs with Born transition probabilities.

Random numbers come from Philox4x64-10, keyed by the seed. Shot ``i``
owns counter blocks ``[i*B, (i+1)*B)`` with ``B = ceil(stages/4)``, so a
shot's draws depend only on (seed, i). Shots can be split into any
chunks or across workers and the merged counts are identical.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from landespin.amplitudes import Projection, transition_probability
from landespin.geometry import Direction

RNG_ALGORITHM = "Philox4x64-10"
MAX_ENUMERATED_STAGES = 20
_WORDS_PER_BLOCK = 4
_DEFAULT_CHUNK = 1 << 16


class PathLimitError(ValueError):
    """Raised when a chain has too many stages to enumerate its outcome paths."""


@dataclass(frozen=True)
class MeasurementChain:
    start: Direction
    initial: Projection
    stages: tuple[Direction, ...]

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple(self.stages))
        object.__setattr__(self, "initial", Projection(self.initial))
        if not self.stages:
            raise ValueError("a measurement chain needs at least one stage")


Path = tuple[Projection, ...]


@dataclass
class ChainResult:
    shots: int
    seed: int
    stage_counts: list[tuple[int, int]]
    estimate: float
    std_error: float
    path_counts: dict[Path, int] | None = None
    rng: str = field(default=RNG_ALGORITHM)

    def up_fraction(self, stage: int = -1) -> float:
        return self.stage_counts[stage][0] / self.shots


def _stage_up_probabilities(chain: MeasurementChain) -> list[tuple[float, float]]:
    """Per stage, P(up) given the previous outcome was up / down."""
    probs = []
    prev = chain.start
    for d in chain.stages:
        probs.append(
            (
                transition_probability(Projection.UP, prev, Projection.UP, d),
                transition_probability(Projection.DOWN, prev, Projection.UP, d),
            )
        )
        prev = d
    return probs


def _check_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed < 1 << 64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


def _uniforms(seed: int, start: int, stop: int, n_stages: int) -> np.ndarray:
    """Uniform [0, 1) draws of shape (stop - start, n_stages) for shots start..stop-1."""
    blocks = -(-n_stages // _WORDS_PER_BLOCK)
    width = blocks * _WORDS_PER_BLOCK
    bitgen = np.random.Philox(key=seed, counter=start * blocks)
    raw = bitgen.random_raw((stop - start) * width).reshape(stop - start, width)
    return (raw[:, :n_stages] >> np.uint64(11)) * (1.0 / (1 << 53))


def tally_shots(
    chain: MeasurementChain, seed: int, start: int, stop: int
) -> tuple[np.ndarray, np.ndarray | None]:
    """Simulate shots ``start..stop-1``.

    Returns per-stage up counts and, for chains short enough to enumerate,
    counts per outcome path indexed by a bit code (bit j set = down at stage j).
    """
    seed = _check_seed(seed)
    n = stop - start
    k = len(chain.stages)
    u = _uniforms(seed, start, stop, k)
    probs = _stage_up_probabilities(chain)

    up_counts = np.zeros(k, dtype=np.int64)
    code = np.zeros(n, dtype=np.int64)
    is_up = np.full(n, chain.initial is Projection.UP)
    for j, (p_from_up, p_from_down) in enumerate(probs):
        p = np.where(is_up, p_from_up, p_from_down)
        is_up = u[:, j] < p
        up_counts[j] = int(np.count_nonzero(is_up))
        code |= (~is_up).astype(np.int64) << j

    paths = None
    if k <= MAX_ENUMERATED_STAGES:
        paths = np.bincount(code, minlength=1 << k)
    return up_counts, paths


def _decode(code: int, k: int) -> Path:
    return tuple(
        Projection.DOWN if (code >> j) & 1 else Projection.UP for j in range(k)
    )


def run_chain(
    chain: MeasurementChain,
    shots: int,
    seed: int,
    *,
    chunk_size: int = _DEFAULT_CHUNK,
) -> ChainResult:
    """Sample ``shots`` independent runs of the chain.

    The estimate is the mean outcome (+1/-1) at the last stage; the standard
    error is sqrt((1 - estimate**2) / shots).
    """
    if int(shots) < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    shots = int(shots)
    seed = _check_seed(seed)
    if chunk_size < 1:
        raise ValueError("chunk_size must be positive")

    k = len(chain.stages)
    up = np.zeros(k, dtype=np.int64)
    paths = None
    for lo in range(0, shots, chunk_size):
        part_up, part_paths = tally_shots(chain, seed, lo, min(lo + chunk_size, shots))
        up += part_up
        if part_paths is not None:
            paths = part_paths if paths is None else paths + part_paths

    stage_counts = [(int(x), shots - int(x)) for x in up]
    n_up, n_down = stage_counts[-1]
    estimate = (n_up - n_down) / shots
    std_error = math.sqrt(max(0.0, 1.0 - estimate * estimate) / shots)
    path_counts = None
    if paths is not None:
        path_counts = {_decode(i, k): int(cnt) for i, cnt in enumerate(paths)}
    return ChainResult(shots, seed, stage_counts, estimate, std_error, path_counts)


def enumerate_paths(chain: MeasurementChain) -> dict[Path, float]:
    """Exact probability of every outcome sequence, by brute force over 2**k paths."""
    k = len(chain.stages)
    if k > MAX_ENUMERATED_STAGES:
        raise PathLimitError(
            f"{k} stages means 2**{k} paths; limit is {MAX_ENUMERATED_STAGES} stages"
        )
    out: dict[Path, float] = {}
    for path in itertools.product((Projection.UP, Projection.DOWN), repeat=k):
        p = 1.0
        prev_dir, prev_m = chain.start, chain.initial
        for d, m in zip(chain.stages, path):
            p *= transition_probability(prev_m, prev_dir, m, d)
            prev_dir, prev_m = d, m
        out[path] = p
    return out


def last_stage_probability(paths: dict[Path, float], outcome: Projection) -> float:
    return sum(p for path, p in paths.items() if path[-1] is outcome)

