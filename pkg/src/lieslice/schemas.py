"""Pydantic request/response models for the service and the CLI client.

Matrices travel as nested arrays of rational strings ("p/q" or "p"); no
floats anywhere in the wire format.
"""

from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, Field

MatrixDoc = List[List[str | int]]


class AlgebraModel(BaseModel):
    family: Literal["gl", "sl"] = "gl"
    n: int = Field(ge=1)


class ElementRequest(BaseModel):
    algebra: AlgebraModel
    matrix: MatrixDoc


class JordanResponse(BaseModel):
    semisimple: MatrixDoc
    nilpotent: MatrixDoc
    witness: List[str]


class TripleResponse(BaseModel):
    e: MatrixDoc
    h: MatrixDoc
    f: MatrixDoc


class SlodowyResponse(BaseModel):
    triple: TripleResponse
    base: MatrixDoc
    direction_basis: List[MatrixDoc]
    dim: int
    weights: List[int]


class PairModel(BaseModel):
    size: int
    partition: List[int]


class LabelModel(BaseModel):
    algebra: AlgebraModel
    pairs: List[PairModel]


class ClassifyResponse(BaseModel):
    label: LabelModel
    dimension: int


class ClassDimRequest(BaseModel):
    label: LabelModel


class ClassDimResponse(BaseModel):
    dimension: int


class EnumerateRequest(BaseModel):
    algebra: AlgebraModel


class EnumerateResponse(BaseModel):
    count: int
    labels: List[LabelModel]
    dimensions: List[int]


class InduceRequest(BaseModel):
    blocks: List[int]
    orbits: List[List[int]]


class PartitionResponse(BaseModel):
    partition: List[int]
    dimension: Optional[int] = None


class RichardsonRequest(BaseModel):
    blocks: List[int]


class NaturalSliceResponse(BaseModel):
    eigenvalues: List[str]
    blocks: List[int]
    nilpotent_types: List[List[int]]
    entries: List[List[List[PairModel]]]


class CompSliceResponse(BaseModel):
    descriptor: NaturalSliceResponse
    slodowy_base: MatrixDoc
    slodowy_directions: List[MatrixDoc]
    x_is_member: bool
    nilpotent_part_is_member: bool


class MembershipRequest(BaseModel):
    algebra: AlgebraModel
    x: MatrixDoc
    y: MatrixDoc


class MembershipResponse(BaseModel):
    member: bool
    descriptor_path: bool
    rank_path: Optional[bool] = None


class ExactSequenceModel(BaseModel):
    C_order: int
    rank_T: int


class ResidualResponse(BaseModel):
    dim_L: int
    dim_Lprime: int
    rank_T: int
    dim_N: int
    dim_A: int
    C_order: int
    C_structure: List[int]
    A_rank: int
    A_torsion_order: int
    exact_sequence: ExactSequenceModel
    presentation_consistent: bool


class VerifyRequest(BaseModel):
    suite: str
    seed: int = 0
    samples: Optional[int] = None
    n_max: Optional[int] = None
    n: Optional[int] = None


class VerifyResponse(BaseModel):
    suite: str
    parameters: dict
    checks: int
    failures: List[str]
    passed: bool = Field(alias="pass")

    model_config = {"populate_by_name": True}


class AtlasRequest(BaseModel):
    algebra: AlgebraModel
    format: Literal["json", "dot"] = "json"
    bound: int = 6


class AtlasResponse(BaseModel):
    format: str
    document: dict | str


class ErrorRecord(BaseModel):
    kind: str
    message: str
    detail: Optional[str] = None
