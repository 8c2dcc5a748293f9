"""Working-precision handling.

Every numerical routine in the package takes an explicit :class:`PrecisionContext`.
Each context owns its own :class:`mpmath.MPContext`, so no routine ever touches
the process-wide ``mpmath.mp`` precision.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass, replace

import mpmath

DEFAULT_BITS = 256
ENV_BITS = "ARCTIC_PRECISION_BITS"

_local = threading.local()


def _mp_for(bits: int) -> mpmath.MPContext:
    # One MPContext per (thread, bits): mpmath routines adjust ctx.prec
    # temporarily, so a context must never be shared between threads.
    cache = getattr(_local, "contexts", None)
    if cache is None:
        cache = _local.contexts = {}
    mp = cache.get(bits)
    if mp is None:
        mp = mpmath.MPContext()
        mp.prec = bits
        cache[bits] = mp
    return mp


@dataclass(frozen=True)
class PrecisionContext:
    """Mantissa precision plus the tolerances derived from it.

    Parameters
    ----------
    bits : int
        Working precision in bits (at least 64).
    series_tol : float or None
        Truncation tolerance for infinite series. Defaults to ``2**-bits``;
        must not exceed ``2**(8 - bits)``.
    modular_threshold : float
        Nome above which theta functions are evaluated through the
        imaginary modular transformation.
    max_bits : int
        Cap for adaptive precision escalation in determinant evaluation.
    """

    bits: int = DEFAULT_BITS
    series_tol: float | None = None
    modular_threshold: float = 0.5
    max_bits: int = 16384

    def __post_init__(self):
        if int(self.bits) != self.bits or self.bits < 64:
            raise ValueError(f"precision must be an integer >= 64 bits, got {self.bits}")
        if self.series_tol is None:
            object.__setattr__(self, "series_tol", 2.0 ** (-self.bits))
        elif not 0 < self.series_tol <= 2.0 ** (8 - self.bits):
            raise ValueError("series_tol must lie in (0, 2**(8 - bits)]")
        if not 0 < self.modular_threshold < 1:
            raise ValueError("modular_threshold must lie in (0, 1)")
        if self.max_bits < self.bits:
            raise ValueError("max_bits must be >= bits")

    @property
    def mp(self) -> mpmath.MPContext:
        return _mp_for(self.bits)

    @property
    def eps(self):
        return self.mp.mpf(2) ** (-self.bits)

    def with_bits(self, bits: int) -> "PrecisionContext":
        """Same tolerances policy at a different precision."""
        return replace(
            self,
            bits=bits,
            series_tol=None,
            max_bits=max(self.max_bits, bits),
        )

    def to_mpf(self, value):
        return self.mp.mpf(value)

    @classmethod
    def from_env(cls, default: int = DEFAULT_BITS) -> "PrecisionContext":
        """Context whose precision honours ``ARCTIC_PRECISION_BITS``."""
        raw = os.environ.get(ENV_BITS)
        return cls(bits=int(raw) if raw else default)


def default_context() -> PrecisionContext:
    return PrecisionContext()
