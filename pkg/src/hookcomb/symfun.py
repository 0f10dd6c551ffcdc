"""Schur, skew Schur and hook Schur polynomials over two variable alphabets
x_1..x_k and y_1..y_l, computed by enumerating semistandard tableaux.

Enumeration has no sign cancellation, so it doubles as the combinatorial
definition of each polynomial; everything stays in exact integers.
"""

from __future__ import annotations

from .partitions import Partition, SkewShape


class MultiPoly:
    """Sparse integer polynomial in x_1..x_{num_x}; y_1..y_{num_y}.

    Terms map exponent vectors (x-slots first, then y-slots) to nonzero
    integer coefficients.
    """

    __slots__ = ("num_x", "num_y", "terms")

    def __init__(self, num_x: int, num_y: int, terms: dict | None = None):
        if num_x < 0 or num_y < 0:
            raise ValueError("alphabet sizes must be non-negative")
        self.num_x = num_x
        self.num_y = num_y
        width = num_x + num_y
        clean = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != width:
                raise ValueError(
                    f"exponent vector {exps} has length {len(exps)}, expected {width}"
                )
            if coeff != 0:
                clean[tuple(exps)] = coeff
        self.terms = clean

    @classmethod
    def constant(cls, num_x: int, num_y: int, value: int) -> "MultiPoly":
        return cls(num_x, num_y, {(0,) * (num_x + num_y): value})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degrees(self) -> set[int]:
        """Total degrees occurring among the terms."""
        return {sum(e) for e in self.terms}

    def _check_alphabets(self, other: "MultiPoly"):
        if self.num_x != other.num_x or self.num_y != other.num_y:
            raise ValueError("alphabet sizes differ")

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.num_x == other.num_x
            and self.num_y == other.num_y
            and self.terms == other.terms
        )

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.num_x, self.num_y, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_alphabets(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.num_x, self.num_y, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_alphabets(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MultiPoly(self.num_x, self.num_y, out)

    def swap_alphabets(self) -> "MultiPoly":
        """Exchange the x and y alphabets (x_i <-> y_i)."""
        k = self.num_x
        return MultiPoly(
            self.num_y,
            self.num_x,
            {e[k:] + e[:k]: c for e, c in self.terms.items()},
        )

    def transpose_variables(self, i: int, j: int) -> "MultiPoly":
        """Swap the variables in slots i and j of the combined alphabet."""
        out = {}
        for e, c in self.terms.items():
            le = list(e)
            le[i], le[j] = le[j], le[i]
            out[tuple(le)] = c
        return MultiPoly(self.num_x, self.num_y, out)

    def _sorted_terms(self):
        # Graded order, ascending degree; within a degree, x1-leading first.
        return sorted(
            self.terms.items(),
            key=lambda item: (sum(item[0]), tuple(-e for e in item[0])),
        )

    def to_json(self) -> list:
        """List of {"coeff", "x", "y"} objects in rendering order."""
        out = []
        for exps, coeff in self._sorted_terms():
            out.append(
                {
                    "coeff": str(coeff),
                    "x": list(exps[: self.num_x]),
                    "y": list(exps[self.num_x :]),
                }
            )
        return out

    def _term_str(self, exps) -> str:
        factors = []
        for slot, e in enumerate(exps):
            if e == 0:
                continue
            name = (
                f"x{slot + 1}" if slot < self.num_x else f"y{slot - self.num_x + 1}"
            )
            factors.append(name if e == 1 else f"{name}^{e}")
        return "*".join(factors)

    def __str__(self):
        pieces = []
        for exps, coeff in self._sorted_terms():
            mag = abs(coeff)
            vars_part = self._term_str(exps)
            if not vars_part:
                body = str(mag)
            elif mag == 1:
                body = vars_part
            else:
                body = f"{mag}*{vars_part}"
            if not pieces:
                pieces.append(body if coeff > 0 else "-" + body)
            else:
                pieces.append((" + " if coeff > 0 else " - ") + body)
        return "".join(pieces) if pieces else "0"

    def __repr__(self):
        return f"MultiPoly(num_x={self.num_x}, num_y={self.num_y}, terms={self.terms!r})"


def _ssyt_weight_counts(
    outer: tuple[int, ...], inner: tuple[int, ...], nvars: int
) -> dict[tuple[int, ...], int]:
    """Count semistandard fillings of outer/inner with entries 1..nvars.

    Returns a map from content weight (how many times each value appears)
    to the number of tableaux with that content. Rows weakly increase and
    columns strictly increase; cells are filled row-major with backtracking.
    """
    inner = inner + (0,) * (len(outer) - len(inner))
    cells = [
        (r, c) for r, row_len in enumerate(outer) for c in range(inner[r], row_len)
    ]
    counts: dict[tuple[int, ...], int] = {}
    weight = [0] * nvars
    values: dict[tuple[int, int], int] = {}

    def fill(pos: int):
        if pos == len(cells):
            key = tuple(weight)
            counts[key] = counts.get(key, 0) + 1
            return
        r, c = cells[pos]
        lo = 1
        left = values.get((r, c - 1))
        if left is not None:
            lo = left
        above = values.get((r - 1, c))
        if above is not None and above + 1 > lo:
            lo = above + 1
        for v in range(lo, nvars + 1):
            values[(r, c)] = v
            weight[v - 1] += 1
            fill(pos + 1)
            weight[v - 1] -= 1
        values.pop((r, c), None)

    fill(0)
    return counts


def _subdiagrams(parts: tuple[int, ...]):
    """All partitions contained in the given one, as part tuples."""

    def rec(i: int, prev: int):
        if i == len(parts):
            yield ()
            return
        for m in range(min(parts[i], prev), 0, -1):
            for rest in rec(i + 1, m):
                yield (m,) + rest
        yield ()  # row i empty forces all later rows empty

    return rec(0, parts[0] if parts else 0)


def schur_poly(lam: Partition, k: int) -> MultiPoly:
    """Schur polynomial s_lam(x_1..x_k) as a tableau generating function.

    Zero iff lam has more than k rows.
    """
    if k < 0:
        raise ValueError("number of variables must be non-negative")
    weights = _ssyt_weight_counts(lam.parts, (), k)
    return MultiPoly(k, 0, weights)


def skew_schur_poly(shape: SkewShape, l: int) -> MultiPoly:
    """Skew Schur polynomial of the shape in y_1..y_l."""
    if l < 0:
        raise ValueError("number of variables must be non-negative")
    weights = _ssyt_weight_counts(shape.outer.parts, shape.inner.parts, l)
    return MultiPoly(0, l, weights)


def hook_schur(lam: Partition, k: int, l: int) -> MultiPoly:
    """Hook Schur polynomial of lam in x_1..x_k; y_1..y_l.

    Sum over all mu inside lam of s_mu(x) times the skew Schur polynomial
    of conjugate(lam)/conjugate(mu) in y. Homogeneous of degree |lam|, and
    nonzero exactly when lam fits in the (k,l)-hook.
    """
    if k < 0 or l < 0:
        raise ValueError("alphabet sizes must be non-negative")
    lam_conj = lam.conjugate()
    terms: dict[tuple[int, ...], int] = {}
    for mu_parts in _subdiagrams(lam.parts):
        x_weights = _ssyt_weight_counts(mu_parts, (), k)
        if not x_weights:
            continue
        mu_conj = Partition(mu_parts).conjugate()
        y_weights = _ssyt_weight_counts(lam_conj.parts, mu_conj.parts, l)
        if not y_weights:
            continue
        for wx, cx in x_weights.items():
            for wy, cy in y_weights.items():
                key = wx + wy
                terms[key] = terms.get(key, 0) + cx * cy
    return MultiPoly(k, l, terms)


def is_symmetric_in_block(p: MultiPoly, block: str) -> bool:
    """True iff p is invariant under adjacent swaps within the x or y block."""
    if block == "x":
        offset, size = 0, p.num_x
    elif block == "y":
        offset, size = p.num_x, p.num_y
    else:
        raise ValueError(f"block must be 'x' or 'y', got {block!r}")
    return all(
        p.transpose_variables(offset + i, offset + i + 1) == p
        for i in range(size - 1)
    )
