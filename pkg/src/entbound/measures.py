"""Entanglement measures of pure states as functions of the Schmidt vector.

Every function accepts a :class:`~entbound.linalg.SchmidtVector`, a 1-d
array, or a stack of Schmidt vectors with shape ``(..., m)``; stacked input
returns an array over the leading axes, 1-d input returns a float.
"""

from __future__ import annotations

import enum

import numpy as np


class MeasureKind(str, enum.Enum):
    """The five convex-roof measures handled by the package."""

    EOF = "eof"
    GME = "gme"
    CONCURRENCE = "concurrence"
    CREN = "cren"
    GCONCURRENCE = "gconcurrence"

    @classmethod
    def parse(cls, tag) -> "MeasureKind":
        if isinstance(tag, cls):
            return tag
        key = str(tag).strip().lower().replace("-", "").replace("_", "")
        aliases = {
            "eof": cls.EOF, "ef": cls.EOF, "formation": cls.EOF, "h": cls.EOF,
            "gme": cls.GME, "eg": cls.GME, "geometric": cls.GME, "g": cls.GME,
            "concurrence": cls.CONCURRENCE, "c": cls.CONCURRENCE, "l": cls.CONCURRENCE,
            "cren": cls.CREN, "negativity": cls.CREN, "n": cls.CREN,
            "gconcurrence": cls.GCONCURRENCE, "cg": cls.GCONCURRENCE, "s": cls.GCONCURRENCE,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown measure {tag!r}; expected one of {[k.value for k in cls]}") from None


def _mu(mu) -> np.ndarray:
    return np.asarray(mu, dtype=float)


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def eof_pure(mu):
    """Entropy of entanglement ``-sum mu_i log2 mu_i`` with ``0 log 0 = 0``."""
    mu = _mu(mu)
    safe = np.where(mu > 0, mu, 1.0)
    return _out(-np.sum(np.where(mu > 0, mu * np.log2(safe), 0.0), axis=-1))


def gme_pure(mu):
    """Geometric measure ``1 - max mu_i``."""
    return _out(1.0 - np.max(_mu(mu), axis=-1))


def concurrence_pure(mu):
    """Generalized concurrence ``sqrt(2 (1 - sum mu_i^2))``."""
    mu = _mu(mu)
    return _out(np.sqrt(np.clip(2.0 * (1.0 - np.sum(mu**2, axis=-1)), 0.0, None)))


def negativity_pure(mu):
    """Pure-state negativity ``(sum sqrt(mu_i))^2 - 1`` (no factor 1/2)."""
    mu = np.clip(_mu(mu), 0.0, None)
    return _out(np.clip(np.sum(np.sqrt(mu), axis=-1) ** 2 - 1.0, 0.0, None))


def gconcurrence_pure(mu):
    """G-concurrence ``m (prod mu_i)^(1/m)``, zero if any Schmidt value vanishes."""
    mu = _mu(mu)
    m = mu.shape[-1]
    positive = np.all(mu > 0, axis=-1)
    logs = np.log(np.where(mu > 0, mu, 1.0))
    return _out(np.where(positive, m * np.exp(np.sum(logs, axis=-1) / m), 0.0))


def lambda_of_schmidt(mu):
    """The overlap statistic ``(sum sqrt(mu_i))^2 / m``, in ``[1/m, 1]``."""
    mu = np.clip(_mu(mu), 0.0, None)
    m = mu.shape[-1]
    return _out(np.sum(np.sqrt(mu), axis=-1) ** 2 / m)


PURE_MEASURES = {
    MeasureKind.EOF: eof_pure,
    MeasureKind.GME: gme_pure,
    MeasureKind.CONCURRENCE: concurrence_pure,
    MeasureKind.CREN: negativity_pure,
    MeasureKind.GCONCURRENCE: gconcurrence_pure,
}


def pure_measure(kind, mu):
    """Dispatch on :class:`MeasureKind`."""
    return PURE_MEASURES[MeasureKind.parse(kind)](mu)


def max_pure_value(kind, m: int) -> float:
    """Value of a measure on the maximally entangled ``m x m`` state."""
    return float(pure_measure(kind, np.full(m, 1.0 / m)))
