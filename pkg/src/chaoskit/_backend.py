"""Backend selection: compiled Cython core when importable, pure-Python
twin otherwise.  CHAOSKIT_PURE=1 forces the fallback."""

from __future__ import annotations

import os

from chaoskit import _pure

if os.environ.get("CHAOSKIT_PURE", "") not in ("", "0"):
    impl = _pure
else:
    try:
        from chaoskit import _core as impl  # type: ignore[no-redef]
    except ImportError:
        impl = _pure

BACKEND: str = impl.BACKEND

pairing_count = impl.pairing_count
crossing_histogram = impl.crossing_histogram
star_pairing_count_enum = impl.star_pairing_count_enum
nc_pairing_count = impl.nc_pairing_count
nc_partition_count = impl.nc_partition_count
nc_star_pairing_count = impl.nc_star_pairing_count
weighted_moment_sum = impl.weighted_moment_sum
signature_histogram = impl.signature_histogram
