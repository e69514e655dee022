import os

from .errors import CapExceeded

DEFAULT_CAP = 10**6
CAP_ENV_VAR = "FUSSCAT_CAP"


def enumeration_cap(cap=None):
    """Resolve the enumeration cap: explicit argument, then env var, then default."""
    if cap is not None:
        return int(cap)
    raw = os.environ.get(CAP_ENV_VAR)
    if raw:
        return int(raw)
    return DEFAULT_CAP


def check_cap(predicted, cap=None):
    limit = enumeration_cap(cap)
    if predicted > limit:
        raise CapExceeded(f"enumeration would produce {predicted} objects, cap is {limit}")
