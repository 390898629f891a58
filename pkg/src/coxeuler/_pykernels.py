"""Pure-Python census and scan kernels.

Same API as the compiled ``_kernels`` extension; written directly against the
``signed`` module so each step can be read off the definitions.
"""

from __future__ import annotations

from typing import Iterable

from .signed import (
    SignedPermutation,
    class_from_descents,
    descent_set,
    elements,
    expected_insertion,
    family_size,
    hat,
    insert_letter,
    is_even_signed,
)


def sub_census(n: int) -> list[list[int]]:
    """Counts ``[class_index][descents]`` over ``D_n``."""
    counts = [[0] * (n + 1) for _ in range(4)]
    for w in elements(n, "D"):
        des = descent_set(w, "D")
        counts[class_from_descents(des).index][len(des)] += 1
    return counts


def eulerian_census(n: int, family: str) -> list[int]:
    counts = [0] * (n + 1)
    for w in elements(n, family):
        counts[len(descent_set(w, family))] += 1
    return counts


def hat_scan(n: int):
    """First element of ``D_n`` violating the hat correspondence, or None."""
    for w in elements(n, "D"):
        h = hat(w)
        if is_even_signed(h):
            return tuple(w), "hat image is even-signed"
        dw, dh = descent_set(w, "D"), descent_set(h, "D")
        if len(dw) != len(dh):
            return tuple(w), f"descents {len(dw)} -> {len(dh)}"
        cw, ch = class_from_descents(dw), class_from_descents(dh)
        if cw.hat_image() is not ch:
            return tuple(w), f"class {cw.value} -> {ch.value}"
    return None


def insertion_scan(n: int, sources: Iterable[SignedPermutation] | None = None):
    """Insert ``+-n`` at every position of every source.

    Returns ``(products, failure)`` where ``failure`` is None or a dict naming
    the first product that repeats, leaves ``D_n`` or breaks the rule table.
    """
    if sources is None:
        sources = elements(n - 1, "D")
    seen: set[tuple[int, ...]] = set()
    count = 0
    for w in sources:
        dw = descent_set(w, "D")
        cw = class_from_descents(dw)
        for sign in (1, -1):
            for pos in range(n):
                u = insert_letter(w, pos, sign)
                count += 1
                key = tuple(u)
                info = {"source": tuple(w), "position": pos, "sign": sign, "word": key}
                if not is_even_signed(u):
                    return count, dict(info, reason="not even-signed", expected="even", actual="odd")
                if key in seen:
                    return count, dict(info, reason="duplicate product", expected="new", actual="repeat")
                seen.add(key)
                du = descent_set(u, "D")
                tc, dk = expected_insertion(cw, dw, n, pos, sign)
                got = (class_from_descents(du), len(du))
                if got != (tc, len(dw) + dk):
                    return count, dict(
                        info,
                        reason="rule mismatch",
                        expected=f"{tc.value},k={len(dw) + dk}",
                        actual=f"{got[0].value},k={got[1]}",
                    )
    if count != family_size(n, "D"):
        return count, {
            "source": None, "position": None, "sign": None, "word": None,
            "reason": "product count", "expected": str(family_size(n, "D")), "actual": str(count),
        }
    return count, None
