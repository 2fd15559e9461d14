"""FastAPI service wrapping the core package.

Each CLI command has a POST endpoint with the same request/response models;
the handlers are plain functions so the CLI can call them in-process.
Domain errors surface as HTTP 400 with a machine-readable error record,
validation failures as FastAPI's 422.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import atlas as atlas_mod
from .exact_linalg import Mat
from .lie_core import LieElement, LieError, Sl2Triple, jm_complete, jordan_decompose, semisimple_polynomial_witness
from .decomp_classes import (
    IrrationalSpectrum,
    class_dimension,
    classify,
    derived_centralizer,
    enumerate_classes,
)
from .residual_groups import ax_presentation, subquotient_data
from .root_combinatorics import CombinatoricsError, LeviOrbitPair, ls_induce, orbit_dimension, richardson
from .serialization import (
    DocumentError,
    emit_label,
    emit_matrix,
    emit_poly,
    emit_rational,
    emit_partition,
    emit_subquotients,
    parse_algebra,
    parse_label,
    parse_matrix,
)
from .slices import (
    complementary_slice,
    contracting_weights,
    membership_Sx_descriptor,
    membership_Sx_rank,
    natural_slice,
    slodowy_slice,
)
from .sweeps import run_sweep
from . import schemas as S


class DomainError(Exception):
    """Carries a machine-readable error record."""

    def __init__(self, kind, message, detail=None):
        self.record = S.ErrorRecord(kind=kind, message=message, detail=detail)
        super().__init__(message)


def _domain(fn):
    def wrapped(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except IrrationalSpectrum as exc:
            raise DomainError("irrational_spectrum", str(exc), detail=repr(exc.factor)) from exc
        except (LieError, CombinatoricsError, DocumentError, KeyError, ValueError) as exc:
            raise DomainError(exc.__class__.__name__, str(exc)) from exc

    wrapped.__name__ = fn.__name__
    wrapped.__doc__ = fn.__doc__
    return wrapped


def _element(req: S.ElementRequest) -> LieElement:
    algebra = parse_algebra(req.algebra.model_dump())
    return LieElement(algebra, parse_matrix(req.matrix))


@_domain
def handle_jordan(req: S.ElementRequest) -> S.JordanResponse:
    x = _element(req)
    x_s, x_n = jordan_decompose(x)
    witness = semisimple_polynomial_witness(x, x_s)
    return S.JordanResponse(
        semisimple=emit_matrix(x_s.mat),
        nilpotent=emit_matrix(x_n.mat),
        witness=emit_poly(witness),
    )


@_domain
def handle_jm(req: S.ElementRequest) -> S.TripleResponse:
    triple = jm_complete(_element(req))
    return S.TripleResponse(
        e=emit_matrix(triple.e.mat),
        h=emit_matrix(triple.h.mat),
        f=emit_matrix(triple.f.mat),
    )


@_domain
def handle_slodowy(req: S.ElementRequest) -> S.SlodowyResponse:
    triple = jm_complete(_element(req))
    slod = slodowy_slice(triple)
    return S.SlodowyResponse(
        triple=S.TripleResponse(
            e=emit_matrix(triple.e.mat),
            h=emit_matrix(triple.h.mat),
            f=emit_matrix(triple.f.mat),
        ),
        base=emit_matrix(slod.base.mat),
        direction_basis=[emit_matrix(b.mat) for b in slod.directions.basis],
        dim=slod.dim,
        weights=contracting_weights(triple),
    )


@_domain
def handle_classify(req: S.ElementRequest) -> S.ClassifyResponse:
    label = classify(_element(req))
    doc = emit_label(label)
    return S.ClassifyResponse(
        label=S.LabelModel(**doc), dimension=class_dimension(label)
    )


@_domain
def handle_class_dim(req: S.ClassDimRequest) -> S.ClassDimResponse:
    label = parse_label(req.label.model_dump())
    return S.ClassDimResponse(dimension=class_dimension(label))


@_domain
def handle_enumerate(req: S.EnumerateRequest) -> S.EnumerateResponse:
    algebra = parse_algebra(req.algebra.model_dump())
    labels = enumerate_classes(algebra)
    return S.EnumerateResponse(
        count=len(labels),
        labels=[S.LabelModel(**emit_label(lb)) for lb in labels],
        dimensions=[class_dimension(lb) for lb in labels],
    )


@_domain
def handle_induce(req: S.InduceRequest) -> S.PartitionResponse:
    pair = LeviOrbitPair(tuple(req.blocks), tuple(tuple(o) for o in req.orbits))
    result = ls_induce(pair)
    return S.PartitionResponse(
        partition=emit_partition(result),
        dimension=orbit_dimension(result, pair.n),
    )


@_domain
def handle_richardson(req: S.RichardsonRequest) -> S.PartitionResponse:
    result = richardson(tuple(req.blocks))
    return S.PartitionResponse(
        partition=emit_partition(result),
        dimension=orbit_dimension(result, sum(req.blocks)),
    )


def _descriptor_response(desc) -> S.NaturalSliceResponse:
    return S.NaturalSliceResponse(
        eigenvalues=[emit_rational(v) for v in desc.eigenvalues],
        blocks=list(desc.blocks),
        nilpotent_types=[emit_partition(p) for p in desc.nilpotent_types],
        entries=[
            [
                [
                    S.PairModel(size=s, partition=emit_partition(p))
                    for s, p in label.pairs
                ]
                for label in entry
            ]
            for entry in desc.entries
        ],
    )


@_domain
def handle_natural_slice(req: S.ElementRequest) -> S.NaturalSliceResponse:
    return _descriptor_response(natural_slice(_element(req)))


@_domain
def handle_comp_slice(req: S.ElementRequest) -> S.CompSliceResponse:
    x = _element(req)
    x_s, x_n = jordan_decompose(x)
    if x_n.is_zero():
        zero = LieElement(x.algebra, Mat.zeros(x.algebra.n))
        triple = Sl2Triple(zero, zero, zero)
    else:
        triple = jm_complete(x_n, within=derived_centralizer(x_s))
    comp = complementary_slice(x, triple)
    return S.CompSliceResponse(
        descriptor=_descriptor_response(comp.descriptor),
        slodowy_base=emit_matrix(comp.slodowy.base.mat),
        slodowy_directions=[emit_matrix(b.mat) for b in comp.slodowy.directions.basis],
        x_is_member=comp.contains(x),
        nilpotent_part_is_member=comp.contains(x_n) if not x_n.is_zero() else False,
    )


@_domain
def handle_membership(req: S.MembershipRequest) -> S.MembershipResponse:
    algebra = parse_algebra(req.algebra.model_dump())
    x = LieElement(algebra, parse_matrix(req.x))
    y = LieElement(algebra, parse_matrix(req.y))
    descriptor_verdict = membership_Sx_descriptor(y, x)
    _, x_n = jordan_decompose(x)
    rank_verdict = None
    if x_n.is_zero():
        rank_verdict = membership_Sx_rank(y, x)
        if rank_verdict != descriptor_verdict:
            raise LieError("membership paths disagree")
    return S.MembershipResponse(
        member=descriptor_verdict,
        descriptor_path=descriptor_verdict,
        rank_path=rank_verdict,
    )


@_domain
def handle_residual(req: S.ElementRequest) -> S.ResidualResponse:
    x = _element(req)
    data = subquotient_data(x)
    pres = ax_presentation(x)
    doc = emit_subquotients(data)
    return S.ResidualResponse(
        **{k: v for k, v in doc.items() if k != "exact_sequence"},
        exact_sequence=S.ExactSequenceModel(**doc["exact_sequence"]),
        presentation_consistent=pres["consistent"],
    )


@_domain
def handle_verify(req: S.VerifyRequest) -> S.VerifyResponse:
    report = run_sweep(
        req.suite, seed=req.seed, samples=req.samples, n_max=req.n_max, n=req.n
    )
    return S.VerifyResponse(
        suite=report["suite"],
        parameters={k: str(v) for k, v in report["parameters"].items()},
        checks=report["checks"],
        failures=[str(f) for f in report["failures"]],
        passed=report["pass"],
    )


@_domain
def handle_atlas(req: S.AtlasRequest) -> S.AtlasResponse:
    algebra = parse_algebra(req.algebra.model_dump())
    doc = atlas_mod.atlas(algebra, bound=req.bound)
    if req.format == "dot":
        return S.AtlasResponse(format="dot", document=atlas_mod.atlas_dot(doc))
    return S.AtlasResponse(format="json", document=doc)


HANDLERS = {
    "jordan": (handle_jordan, S.ElementRequest),
    "jm": (handle_jm, S.ElementRequest),
    "slodowy": (handle_slodowy, S.ElementRequest),
    "classify": (handle_classify, S.ElementRequest),
    "class-dim": (handle_class_dim, S.ClassDimRequest),
    "enumerate": (handle_enumerate, S.EnumerateRequest),
    "induce": (handle_induce, S.InduceRequest),
    "richardson": (handle_richardson, S.RichardsonRequest),
    "natural-slice": (handle_natural_slice, S.ElementRequest),
    "comp-slice": (handle_comp_slice, S.ElementRequest),
    "membership": (handle_membership, S.MembershipRequest),
    "residual": (handle_residual, S.ElementRequest),
    "verify": (handle_verify, S.VerifyRequest),
    "atlas": (handle_atlas, S.AtlasRequest),
}


app = FastAPI(
    title="lieslice",
    description="Exact-arithmetic Lie theory: Jordan data, slices, "
    "decomposition classes, residual groups in type A.",
)


def _register(command, handler, request_model):
    path = "/" + command

    def endpoint(request):
        try:
            return handler(request)
        except DomainError as exc:
            raise HTTPException(status_code=400, detail=exc.record.model_dump())

    endpoint.__name__ = "endpoint_" + command.replace("-", "_")
    endpoint.__annotations__ = {"request": request_model}
    app.post(path)(endpoint)


for _command, (_handler, _model) in HANDLERS.items():
    _register(_command, _handler, _model)


@app.get("/health")
def health():
    return {"status": "ok"}


@app.get("/commands")
def commands():
    return {"commands": sorted(HANDLERS)}
