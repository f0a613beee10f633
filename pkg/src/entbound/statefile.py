"""JSON state files.

Format::

    {"dims": [m, n], "kind": "pure" | "mixed", "data": [[re, im], ...]}

``data`` holds the ``m*n`` amplitudes of a pure state, or the ``(m*n)^2``
entries of a density matrix in row-major order. Floats are written with
``repr`` precision so a save/load round trip is exact.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

import numpy as np

from .errors import InvalidInput
from .linalg import DensityMatrix, PureState

State = Union[PureState, DensityMatrix]


def state_to_dict(state: State) -> dict:
    if isinstance(state, PureState):
        kind, data = "pure", state.amplitudes
    elif isinstance(state, DensityMatrix):
        kind, data = "mixed", state.matrix.reshape(-1)
    else:
        raise InvalidInput(f"cannot serialize {type(state).__name__}")
    return {
        "dims": [state.dim_a, state.dim_b],
        "kind": kind,
        "data": [[float(z.real), float(z.imag)] for z in data],
    }


def state_from_dict(obj) -> State:
    """Parse and validate a state-file object."""
    if not isinstance(obj, dict):
        raise InvalidInput("state file must contain a JSON object")
    missing = {"dims", "kind", "data"} - obj.keys()
    if missing:
        raise InvalidInput(f"state file is missing keys {sorted(missing)}")
    dims = obj["dims"]
    if not (isinstance(dims, list) and len(dims) == 2 and all(isinstance(d, int) and d > 0 for d in dims)):
        raise InvalidInput(f"dims must be two positive integers, got {dims!r}")
    m, n = dims
    try:
        arr = np.asarray(obj["data"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise InvalidInput(f"data must be a list of [re, im] pairs: {exc}") from None
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise InvalidInput(f"data must be a list of [re, im] pairs, got shape {arr.shape}")
    z = arr[:, 0] + 1j * arr[:, 1]
    d = m * n
    if obj["kind"] == "pure":
        if z.size != d:
            raise InvalidInput(f"pure state on {m}x{n} needs {d} amplitudes, got {z.size}")
        return PureState(m, n, z)
    if obj["kind"] == "mixed":
        if z.size != d * d:
            raise InvalidInput(f"mixed state on {m}x{n} needs {d * d} entries, got {z.size}")
        return DensityMatrix(m, n, z.reshape(d, d))
    raise InvalidInput(f"kind must be 'pure' or 'mixed', got {obj['kind']!r}")


def dumps(state: State) -> str:
    return json.dumps(state_to_dict(state))


def loads(text: str) -> State:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"invalid JSON: {exc}") from None
    return state_from_dict(obj)


def save_state(state: State, path) -> None:
    Path(path).write_text(dumps(state) + "\n")


def load_state(path) -> State:
    return loads(Path(path).read_text())


def as_density_matrix(state: State) -> DensityMatrix:
    return state.density_matrix() if isinstance(state, PureState) else state
