"""Deterministic sibling circle packing.

Front-chain packing in the style of the d3/Wang et al. algorithm: place
circles one by one tangent to the chain pair closest to the origin,
repairing the chain when the trial position collides. The usual
randomized smallest-enclosing-circle step is replaced by a deterministic
Welzl-style basis walk over the input order, so identical input always
yields identical geometry. Exactness of the enclosing circle does not
depend on processing order, only speed does, and sibling counts here are
small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


@dataclass
class Circle:
    x: float
    y: float
    r: float


class _Link:
    __slots__ = ("circle", "next", "previous")

    def __init__(self, circle: Circle):
        self.circle = circle
        self.next: "_Link" = self
        self.previous: "_Link" = self


def _place(b: Circle, a: Circle, c: Circle) -> None:
    """Position c tangent to both b and a, outside the chain."""
    dx = b.x - a.x
    dy = b.y - a.y
    d2 = dx * dx + dy * dy
    if d2:
        a2 = (a.r + c.r) ** 2
        b2 = (b.r + c.r) ** 2
        if a2 > b2:
            x = (d2 + b2 - a2) / (2 * d2)
            y = math.sqrt(max(0.0, b2 / d2 - x * x))
            c.x = b.x - x * dx - y * dy
            c.y = b.y - x * dy + y * dx
        else:
            x = (d2 + a2 - b2) / (2 * d2)
            y = math.sqrt(max(0.0, a2 / d2 - x * x))
            c.x = a.x + x * dx - y * dy
            c.y = a.y + x * dy + y * dx
    else:
        c.x = a.x + c.r
        c.y = a.y


def _intersects(a: Circle, b: Circle) -> bool:
    dr = a.r + b.r - 1e-6  # tolerance matches the layout overlap contract
    dx = b.x - a.x
    dy = b.y - a.y
    return dr > 0 and dr * dr > dx * dx + dy * dy


def _score(link: _Link) -> float:
    a = link.circle
    b = link.next.circle
    ab = a.r + b.r
    dx = (a.x * b.r + b.x * a.r) / ab
    dy = (a.y * b.r + b.y * a.r) / ab
    return dx * dx + dy * dy


def pack_siblings(radii: Sequence[float]) -> tuple[list[tuple[float, float]], float]:
    """Pack circles of the given radii around the origin.

    Returns (centers, enclosing_radius). Centers are translated so the
    smallest enclosing circle of the packing is centered on the origin.
    Input order is preserved in the output and is part of the contract:
    the same radii in the same order always pack identically.
    """
    circles = [Circle(0.0, 0.0, float(r)) for r in radii]
    if not circles:
        return [], 0.0
    a = circles[0]
    a.x, a.y = 0.0, 0.0
    if len(circles) > 1:
        b = circles[1]
        a.x = -b.r
        b.x = a.r
        b.y = 0.0
    if len(circles) > 2:
        c = circles[2]
        _place(b, a, c)
        link_a, link_b, link_c = _Link(a), _Link(b), _Link(c)
        link_a.next = link_c.previous = link_b
        link_b.next = link_a.previous = link_c
        link_c.next = link_b.previous = link_a
        i = 3
        while i < len(circles):
            c = circles[i]
            _place(link_a.circle, link_b.circle, c)
            link_c = _Link(c)
            # find the closest colliding chain circle, searching forward
            # and backward by accumulated arc distance
            j = link_b.next
            k = link_a.previous
            sj = link_b.circle.r
            sk = link_a.circle.r
            collided = False
            while True:
                if sj <= sk:
                    if _intersects(j.circle, c):
                        link_b = j
                        link_a.next = link_b
                        link_b.previous = link_a
                        collided = True
                        break
                    sj += j.circle.r
                    j = j.next
                else:
                    if _intersects(k.circle, c):
                        link_a = k
                        link_a.next = link_b
                        link_b.previous = link_a
                        collided = True
                        break
                    sk += k.circle.r
                    k = k.previous
                if j is k.next:
                    break
            if collided:
                continue  # retry the same circle against the repaired chain
            link_c.previous = link_a
            link_c.next = link_b
            link_a.next = link_b.previous = link_c
            link_b = link_c
            # restart from the chain pair nearest the origin; every link
            # except the new one competes, ties keep the earlier link
            best = link_a
            best_score = _score(best)
            cursor = link_b.next
            while cursor is not link_b:
                cursor_score = _score(cursor)
                if cursor_score < best_score:
                    best = cursor
                    best_score = cursor_score
                cursor = cursor.next
            link_a = best
            link_b = best.next
            i += 1
    enclosing = enclose(circles)
    for circle in circles:
        circle.x -= enclosing.x
        circle.y -= enclosing.y
    return [(c.x, c.y) for c in circles], enclosing.r


# ------------------------------------------------- smallest enclosing circle


def _encloses_not(a: Circle, b: Circle) -> bool:
    dr = a.r - b.r
    dx = b.x - a.x
    dy = b.y - a.y
    return dr < 0 or dr * dr < dx * dx + dy * dy


def _encloses_weak(a: Circle, b: Circle) -> bool:
    dr = a.r - b.r + max(a.r, b.r, 1.0) * 1e-9
    dx = b.x - a.x
    dy = b.y - a.y
    return dr > 0 and dr * dr > dx * dx + dy * dy


def _encloses_weak_all(a: Circle, basis: list[Circle]) -> bool:
    return all(_encloses_weak(a, b) for b in basis)


def _basis1(a: Circle) -> Circle:
    return Circle(a.x, a.y, a.r)


def _basis2(a: Circle, b: Circle) -> Circle:
    x21 = b.x - a.x
    y21 = b.y - a.y
    r21 = b.r - a.r
    length = math.sqrt(x21 * x21 + y21 * y21)
    return Circle(
        (a.x + b.x + x21 / length * r21) / 2,
        (a.y + b.y + y21 / length * r21) / 2,
        (length + a.r + b.r) / 2,
    )


def _basis3(a: Circle, b: Circle, c: Circle) -> Circle:
    a2 = a.x - b.x
    b2 = a.y - b.y
    c2 = b.r - a.r
    a3 = a.x - c.x
    b3 = a.y - c.y
    c3 = c.r - a.r
    d1 = a.x * a.x + a.y * a.y - a.r * a.r
    d2 = d1 - b.x * b.x - b.y * b.y + b.r * b.r
    d3 = d1 - c.x * c.x - c.y * c.y + c.r * c.r
    ab = a3 * b2 - a2 * b3
    xa = (b2 * d3 - b3 * d2) / (ab * 2) - a.x
    xb = (b3 * c2 - b2 * c3) / ab
    ya = (a3 * d2 - a2 * d3) / (ab * 2) - a.y
    yb = (a2 * c3 - a3 * c2) / ab
    qa = xb * xb + yb * yb - 1
    qb = 2 * (a.r + xa * xb + ya * yb)
    qc = xa * xa + ya * ya - a.r * a.r
    if abs(qa) > 1e-6:
        r = -(qb + math.sqrt(qb * qb - 4 * qa * qc)) / (2 * qa)
    else:
        r = -qc / qb
    return Circle(a.x + xa + xb * r, a.y + ya + yb * r, r)


def _basis_circle(basis: list[Circle]) -> Circle:
    if len(basis) == 1:
        return _basis1(basis[0])
    if len(basis) == 2:
        return _basis2(basis[0], basis[1])
    return _basis3(basis[0], basis[1], basis[2])


def _extend_basis(basis: list[Circle], p: Circle) -> list[Circle]:
    if _encloses_weak_all(p, basis):
        return [p]
    for b in basis:
        if _encloses_not(p, b) and _encloses_weak_all(_basis2(b, p), basis):
            return [b, p]
    for i in range(len(basis) - 1):
        for j in range(i + 1, len(basis)):
            bi, bj = basis[i], basis[j]
            if (
                _encloses_not(_basis2(bi, bj), p)
                and _encloses_not(_basis2(bi, p), bj)
                and _encloses_not(_basis2(bj, p), bi)
                and _encloses_weak_all(_basis3(bi, bj, p), basis)
            ):
                return [bi, bj, p]
    raise RuntimeError("unreachable: basis extension failed")


def enclose(circles: Sequence[Circle]) -> Circle:
    """Smallest circle enclosing all input circles, computed without
    randomization: a move-to-front pass over the fixed input order."""
    items = list(circles)
    basis: list[Circle] = []
    result: Circle | None = None
    i = 0
    while i < len(items):
        p = items[i]
        if result is not None and _encloses_weak(result, p):
            i += 1
        else:
            basis = _extend_basis(basis, p)
            result = _basis_circle(basis)
            i = 0
    assert result is not None
    return result
