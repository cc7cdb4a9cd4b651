"""Line-oriented spline document format.

A fitted spline is saved as plain text: a short header (format version,
method, limiter, gate, modified nodes), one line per node with abscissa,
derivative and provenance tag, then one line per interval with the four
local coefficients. Numbers are rendered with ``repr``, which Python
round-trips exactly, so ``parse(render(doc))`` reproduces every field
bit for bit.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import GridData
from .hermite import (VALID_TAGS, CubicHermiteSpline, DerivativeVector,
                      build_spline)

__all__ = ["FORMAT_NAME", "FORMAT_VERSION", "SplineDocument",
           "render", "parse", "document_from_spline", "spline_from_document"]

FORMAT_NAME = "monospline-document"
FORMAT_VERSION = 1


@dataclass
class SplineDocument:
    """Serializable snapshot of a fitted spline and how it was produced."""

    method: str
    limiter: str
    gate: str
    modified: tuple[int, ...]
    x: np.ndarray
    derivs: np.ndarray
    tags: tuple[str, ...]
    coeffs: np.ndarray
    version: int = FORMAT_VERSION

    def __eq__(self, other):
        if not isinstance(other, SplineDocument):
            return NotImplemented
        return (self.version == other.version
                and self.method == other.method
                and self.limiter == other.limiter
                and self.gate == other.gate
                and self.modified == other.modified
                and self.tags == other.tags
                and np.array_equal(self.x, other.x)
                and np.array_equal(self.derivs, other.derivs)
                and np.array_equal(self.coeffs, other.coeffs))


def document_from_spline(spline: CubicHermiteSpline, method: str,
                         limiter: str, gate: str) -> SplineDocument:
    return SplineDocument(
        method=method, limiter=limiter, gate=gate,
        modified=spline.modified_nodes,
        x=np.array(spline.x), derivs=np.array(spline.derivs.values),
        tags=spline.derivs.provenance, coeffs=np.array(spline.coeffs))


def spline_from_document(doc: SplineDocument) -> CubicHermiteSpline:
    # c1 is the node value on each interval; the last node value follows
    # from evaluating the final cubic at its right endpoint, where the c4
    # term vanishes
    f = np.empty(len(doc.x))
    f[:-1] = doc.coeffs[:, 0]
    d = doc.x[-1] - doc.x[-2]
    c1, c2, c3, _ = doc.coeffs[-1]
    f[-1] = c1 + d * (c2 + d * c3)
    derivs = DerivativeVector(values=doc.derivs.copy(), provenance=doc.tags)
    spline = build_spline(GridData(x=doc.x.copy(), f=f), derivs)
    # keep the stored coefficients authoritative (bit-exact round trips)
    object.__setattr__(spline, "coeffs", doc.coeffs.copy())
    return spline


def render(doc: SplineDocument) -> str:
    lines = [f"{FORMAT_NAME} {doc.version}",
             f"method {doc.method}",
             f"limiter {doc.limiter}",
             f"gate {doc.gate}",
             "modified " + " ".join(str(i) for i in doc.modified),
             f"nodes {len(doc.x)}"]
    for x, fd, tag in zip(doc.x, doc.derivs, doc.tags):
        lines.append(f"{float(x)!r} {float(fd)!r} {tag}")
    lines.append(f"coeffs {len(doc.coeffs)}")
    for row in doc.coeffs:
        lines.append(" ".join(repr(float(c)) for c in row))
    return "\n".join(lines) + "\n"


class _Reader:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def next(self) -> str:
        while self.pos < len(self.lines):
            line = self.lines[self.pos].strip()
            self.pos += 1
            if line:
                return line
        raise ValueError(f"line {self.pos + 1}: unexpected end of document")

    def fail(self, msg: str):
        raise ValueError(f"line {self.pos}: {msg}")


def parse(text: str) -> SplineDocument:
    r = _Reader(text)
    head = r.next().split()
    if len(head) != 2 or head[0] != FORMAT_NAME:
        r.fail(f"expected '{FORMAT_NAME} <version>' header")
    if int(head[1]) != FORMAT_VERSION:
        r.fail(f"unsupported version {head[1]}")

    meta = {}
    for key in ("method", "limiter", "gate"):
        parts = r.next().split()
        if len(parts) != 2 or parts[0] != key:
            r.fail(f"expected '{key} <value>'")
        meta[key] = parts[1]
    parts = r.next().split()
    if parts[0] != "modified":
        r.fail("expected 'modified ...'")
    modified = tuple(int(p) for p in parts[1:])

    parts = r.next().split()
    if len(parts) != 2 or parts[0] != "nodes":
        r.fail("expected 'nodes <count>'")
    n = int(parts[1])
    x = np.empty(n)
    derivs = np.empty(n)
    tags = []
    for i in range(n):
        parts = r.next().split()
        if len(parts) != 3:
            r.fail("expected '<x> <deriv> <tag>'")
        x[i], derivs[i] = float(parts[0]), float(parts[1])
        if parts[2] not in VALID_TAGS:
            r.fail(f"unknown provenance tag {parts[2]!r}")
        tags.append(parts[2])

    parts = r.next().split()
    if len(parts) != 2 or parts[0] != "coeffs":
        r.fail("expected 'coeffs <count>'")
    k = int(parts[1])
    if k != n - 1:
        r.fail(f"coefficient count {k} does not match {n} nodes")
    coeffs = np.empty((k, 4))
    for i in range(k):
        parts = r.next().split()
        if len(parts) != 4:
            r.fail("expected four coefficients")
        coeffs[i] = [float(p) for p in parts]

    return SplineDocument(method=meta["method"], limiter=meta["limiter"],
                          gate=meta["gate"], modified=modified, x=x,
                          derivs=derivs, tags=tuple(tags), coeffs=coeffs)
