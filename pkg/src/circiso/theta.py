"""The residue-shift transformation behind Type-2 isomorphism.

For m | n and a shift index t, the vertex map sends x to x + (x mod m)*t*m
(mod n): each residue class mod m is rotated rigidly by a different amount,
so the map is a bijection fixing 0.  Applied to the edges of a circulant
graph it sometimes lands on another circulant graph; when that image lies
outside the source's multiplier orbit the two graphs witness a Type-2
isomorphism.

The edge-level image is the single source of truth for circulant-ness.
The elementwise shortcut on the symmetric jump set is a fast pre-filter:
its failure is conclusive (the image of the symmetric jump set is exactly
the neighbourhood of vertex 0 in the image graph, which must be closed
under negation for any circulant graph), but its success is only confirmed
for m = 2, so positives are re-checked at edge level.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import ConnectionSet, EdgeSet, _detect_circulant_pairs, _pairs_of
from .modarith import reduce_set


@dataclass(frozen=True)
class ThetaMap:
    """Vertex bijection x -> x + (x mod m)*t*m (mod n)."""

    n: int
    m: int
    t: int

    def __post_init__(self) -> None:
        if self.m <= 1:
            raise ValueError(f"modulus must exceed 1, got {self.m}")
        if self.n % self.m != 0:
            raise ValueError(f"{self.m} does not divide order {self.n}")
        if not 0 <= self.t <= self.n // self.m - 1:
            raise ValueError(
                f"shift {self.t} out of range [0, {self.n // self.m - 1}] for (n={self.n}, m={self.m})"
            )

    def apply(self, x: int) -> int:
        return (x + (x % self.m) * self.t * self.m) % self.n

    def perm(self) -> tuple[int, ...]:
        """The full permutation of Z_n as a lookup table."""
        return tuple(self.apply(x) for x in range(self.n))


@dataclass(frozen=True)
class ThetaResult:
    """Outcome of transforming one circulant graph: its image set, or None."""

    source: ConnectionSet
    map: ThetaMap
    image: Optional[ConnectionSet]

    @property
    def is_circulant(self) -> bool:
        return self.image is not None


def theta_perm(n: int, m: int, t: int) -> ThetaMap:
    """Validated residue-shift map; t = 0 gives the identity."""
    return ThetaMap(n, m, t)


def _image_pairs(tm: ThetaMap, pairs) -> frozenset[tuple[int, int]]:
    perm = tm.perm()
    out = set()
    for u, v in pairs:
        a, b = perm[u], perm[v]
        out.add((a, b) if a < b else (b, a))
    return frozenset(out)


def apply_to_edges(tm: ThetaMap, e: EdgeSet) -> EdgeSet:
    """Push every edge through the vertex bijection (edge count is preserved)."""
    if e.n != tm.n:
        raise ValueError(f"edge set order {e.n} does not match map order {tm.n}")
    return EdgeSet(tm.n, _image_pairs(tm, e.edges))


def theta_image(c: ConnectionSet, m: int, t: int) -> ThetaResult:
    """Transform C_n(R) at edge level and test the image for circulant-ness."""
    tm = ThetaMap(c.n, m, t)
    image_pairs = _image_pairs(tm, _pairs_of(c))
    return ThetaResult(source=c, map=tm, image=_detect_circulant_pairs(c.n, image_pairs))


def jump_shortcut(c: ConnectionSet, m: int, t: int) -> ThetaResult:
    """Elementwise image of the symmetric jump set; circulant iff it is
    closed under negation mod n (jumps divisible by m stay fixed)."""
    tm = ThetaMap(c.n, m, t)
    sym = c.symmetric_jumps()
    image = {tm.apply(s) for s in sym}
    if any((c.n - s) % c.n not in image for s in image):
        return ThetaResult(source=c, map=tm, image=None)
    reduced = ConnectionSet(c.n, reduce_set(c.n, image))
    return ThetaResult(source=c, map=tm, image=reduced)


def shortcut_disagreement(c: ConnectionSet, m: int, t: int) -> Optional[str]:
    """Diagnostic comparing the shortcut against the edge-level truth.

    Returns a human-readable description when they disagree (possible only
    for m > 2 positives), else None.
    """
    fast = jump_shortcut(c, m, t)
    full = theta_image(c, m, t)
    if fast.image == full.image:
        return None
    return (
        f"shortcut says {fast.image} but edge-level image is {full.image} "
        f"for {c} under (m={m}, t={t})"
    )
