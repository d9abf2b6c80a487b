"""Realize a target Steiner-Wiener value with a certified nested star.

Search ascending star sizes n; at each n the deficit below the plain star
value must be written as a sum of distinct hub deficits C(a, k-1) with
hubs below n-1.  Any hit is rebuilt and recomputed exactly before being
returned, so a certificate is self-validating.  A miss (None) only means no
nested star up to n_max works; it is not a proof that the target is an
exceptional value.  Only the scanner's exhaustive enumeration can certify
exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binomial import represent
from .errors import BadKError
from .graph import Graph, is_connected
from .index import nested_star_closed_form, star_closed_form, steiner_wiener
from .stars import NestedStarSpec, build


@dataclass(frozen=True)
class InverseCertificate:
    """A nested star whose recomputed index equals the target."""

    k: int
    target: int
    n: int
    spec: NestedStarSpec
    predicted: int
    verified: int


def feasible_interval(n: int, k: int, m0: int = 0) -> tuple[int, int]:
    """Closed target interval a size-n star covers with deficits m0..n^(k-1).

    Endpoints are (star - n^(k-1), star - m0); lo may exceed hi for small n,
    in which case the interval is empty.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if k < 2:
        raise BadKError(f"subset size k must be >= 2, got {k}")
    if m0 < 0:
        raise ValueError(f"need m0 >= 0, got {m0}")
    star = star_closed_form(n, k)
    return star - n ** (k - 1), star - m0


def verify(g: Graph, k: int, claimed: int) -> bool:
    """True iff the exact recomputed SW_k equals the claim."""
    return steiner_wiener(g, k) == claimed


def invert(k: int, target: int, n_max: int) -> InverseCertificate | None:
    """Find the smallest-n nested star with SW_k equal to target.

    Returns None (unresolved) when no n <= n_max admits a representable
    deficit; the target may still be attainable by some other graph.
    """
    if k < 2:
        raise BadKError(f"subset size k must be >= 2, got {k}")
    if target < 1:
        raise ValueError(f"target must be >= 1, got {target}")
    for n in range(2, n_max + 1):
        star = star_closed_form(n, k)
        if star < target:
            continue
        deficit = star - target
        if deficit == 0:
            spec = NestedStarSpec(n, ())
        else:
            if n < 3:
                continue  # no room for hubs below n - 1
            rep = represent(deficit, k - 1, max_x=n - 1)
            if rep is None:
                continue
            spec = NestedStarSpec(n, rep.terms)
        predicted = nested_star_closed_form(spec, k)
        g = build(spec)
        assert is_connected(g)
        recomputed = steiner_wiener(g, k)
        if predicted == target and recomputed == target:
            return InverseCertificate(
                k=k,
                target=target,
                n=n,
                spec=spec,
                predicted=predicted,
                verified=recomputed,
            )
    return None
