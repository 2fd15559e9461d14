"""Document formats: rationals as strings, matrices as nested arrays.

Every emitter has a parser and parse(emit(x)) == x on the fixture corpus;
floats are rejected everywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .exact_linalg import Mat, Poly
from .lie_core import LieAlgebraSpec, LieElement, Sl2Triple, Subspace, gl, sl
from .decomp_classes import ClassLabel
from .root_combinatorics import Partition


class DocumentError(ValueError):
    """Malformed document."""


def emit_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(doc) -> Fraction:
    if isinstance(doc, bool) or isinstance(doc, float):
        raise DocumentError(f"rationals must be strings or integers, got {doc!r}")
    if isinstance(doc, int):
        return Fraction(doc)
    if isinstance(doc, str):
        try:
            return Fraction(doc)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"bad rational {doc!r}") from exc
    raise DocumentError(f"bad rational {doc!r}")


def emit_matrix(m: Mat):
    return [[emit_rational(x) for x in row] for row in m.data]


def parse_matrix(doc) -> Mat:
    if not isinstance(doc, list) or not doc or not all(isinstance(r, list) for r in doc):
        raise DocumentError("matrix must be a nonempty list of rows")
    try:
        return Mat([[parse_rational(x) for x in row] for row in doc])
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def emit_algebra(a: LieAlgebraSpec):
    return {"family": a.family, "n": a.n}


def parse_algebra(doc) -> LieAlgebraSpec:
    try:
        family = doc["family"]
        n = int(doc["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"bad algebra document {doc!r}") from exc
    if family not in ("gl", "sl"):
        raise DocumentError(f"unknown family {family!r}")
    return gl(n) if family == "gl" else sl(n)


def emit_element(x: LieElement):
    return {"algebra": emit_algebra(x.algebra), "matrix": emit_matrix(x.mat)}


def parse_element(doc) -> LieElement:
    return LieElement(parse_algebra(doc["algebra"]), parse_matrix(doc["matrix"]))


def emit_partition(p: Partition):
    return list(p.parts)


def parse_partition(doc) -> Partition:
    if not isinstance(doc, list):
        raise DocumentError("partition must be a list of integers")
    try:
        return Partition(tuple(int(x) for x in doc))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def emit_label(label: ClassLabel):
    return {
        "algebra": emit_algebra(label.algebra),
        "pairs": [
            {"size": s, "partition": emit_partition(p)} for s, p in label.pairs
        ],
    }


def parse_label(doc) -> ClassLabel:
    try:
        algebra = parse_algebra(doc["algebra"])
        pairs = tuple(
            (int(p["size"]), parse_partition(p["partition"])) for p in doc["pairs"]
        )
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"bad class label document: {exc}") from exc
    return ClassLabel(algebra, pairs)


def emit_triple(t: Sl2Triple):
    return {
        "algebra": emit_algebra(t.algebra),
        "e": emit_matrix(t.e.mat),
        "h": emit_matrix(t.h.mat),
        "f": emit_matrix(t.f.mat),
    }


def parse_triple(doc) -> Sl2Triple:
    algebra = parse_algebra(doc["algebra"])
    return Sl2Triple(
        LieElement(algebra, parse_matrix(doc["e"])),
        LieElement(algebra, parse_matrix(doc["h"])),
        LieElement(algebra, parse_matrix(doc["f"])),
    )


def emit_subspace(s: Subspace):
    return [emit_matrix(e.mat) for e in s.basis]


def emit_affine_slice(s):
    return {
        "base": emit_matrix(s.base.mat),
        "direction_basis": emit_subspace(s.directions),
        "dim": s.dim,
    }


def emit_poly(p: Poly):
    return [emit_rational(c) for c in p.coeffs]


def emit_descriptor(desc):
    return {
        "eigenvalues": [emit_rational(v) for v in desc.eigenvalues],
        "blocks": list(desc.blocks),
        "nilpotent_types": [emit_partition(p) for p in desc.nilpotent_types],
        "entries": [
            [
                [
                    {"size": s, "partition": emit_partition(p)}
                    for s, p in label.pairs
                ]
                for label in entry
            ]
            for entry in desc.entries
        ],
    }


def emit_subquotients(data):
    return {
        "dim_L": data.dim_L,
        "dim_Lprime": data.dim_Lprime,
        "rank_T": data.rank_T,
        "dim_N": data.dim_N,
        "dim_A": data.dim_A,
        "C_order": data.C_order,
        "C_structure": list(data.C_structure),
        "A_rank": data.A_rank,
        "A_torsion_order": data.A_torsion_order,
        "exact_sequence": {"C_order": data.exact_sequence[0], "rank_T": data.exact_sequence[1]},
    }
