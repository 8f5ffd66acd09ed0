"""Named Hopf algebras: kG for the small groups, and ``dual:``/``double:`` forms."""

from __future__ import annotations

from functools import lru_cache

from .groups import GROUPS, get_group
from .hopf import FiniteDimHopf, drinfeld_double, dual_hopf, group_algebra

GROUP_NAMES = tuple(GROUPS)
ACCEPTANCE_CATALOG = GROUP_NAMES + ("dual:S3", "dual:Q8", "double:C2", "double:C3", "double:S3")


class UnknownCatalogEntry(KeyError):
    pass


def validate_name(name: str) -> tuple[str, str]:
    """Split 'dual:S3' into ('dual', 'S3'); raise for anything unknown."""
    prefix, _, base = name.rpartition(":")
    if prefix not in ("", "dual", "double") or base not in GROUPS:
        raise UnknownCatalogEntry(
            f"unknown catalog entry {name!r}; use one of {', '.join(GROUP_NAMES)} "
            "optionally prefixed by 'dual:' or 'double:'"
        )
    return prefix or "group", base


@lru_cache(maxsize=None)
def get(name: str) -> FiniteDimHopf:
    kind, base = validate_name(name)
    H = group_algebra(None, group=get_group(base))
    if kind == "dual":
        H = dual_hopf(H)
    elif kind == "double":
        H = drinfeld_double(H)
    H.name = name
    return H
