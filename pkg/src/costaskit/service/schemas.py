"""Request and response models for the HTTP service.

Every endpoint answers with a RunReport: named pass/fail verdicts for
verification commands, named exact counts for counting commands, and a
payload dict carrying structured objects (maps, arrays, polynomials).
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class Verdict(StrictModel):
    name: str
    passed: bool
    detail: str = ""


class CountEntry(StrictModel):
    name: str
    value: int


class RunReport(StrictModel):
    command: str
    parameters: dict[str, Any] = Field(default_factory=dict)
    verdicts: list[Verdict] = Field(default_factory=list)
    counts: list[CountEntry] = Field(default_factory=list)
    payload: dict[str, Any] = Field(default_factory=dict)
    elapsed_ms: float = 0.0


class SequenceRequest(StrictModel):
    sequence: str | list[int]


class WelchSequenceRequest(StrictModel):
    p: int
    alpha: int | None = None
    c: int | None = None


class CensusSequenceRequest(StrictModel):
    n: int
    cap: int = 8
    threads: int = 1


class GroupPairRequest(StrictModel):
    g1: str
    g2: str


class GroupRequest(StrictModel):
    g: str


class MapJson(StrictModel):
    domain: str
    codomain: str
    images: list[list[Any]]


class MapVerifyRequest(StrictModel):
    map: MapJson


class WelchMapRequest(StrictModel):
    q: int | str
    L: list[Any] | None = None
    c: int = 0


class ExportArrayRequest(StrictModel):
    map: MapJson | None = None
    q: int | str | None = None
    L: list[Any] | None = None
    c: int = 0
    domain_split: list[int]
    codomain_split: list[int]


class MapEquivRequest(StrictModel):
    f: MapJson
    g: MapJson
    translate: bool = False


class DpdsJson(StrictModel):
    group: str
    elements: list[Any]


class DpdsVerifyRequest(StrictModel):
    set: DpdsJson


class DpdsEquivRequest(StrictModel):
    d1: DpdsJson
    d2: DpdsJson


class SearchNoneRequest(StrictModel):
    n: int
    normalize: bool = True


class PolynomialRequest(StrictModel):
    field: str | int
    coeffs: list[Any]


class CountRequest(StrictModel):
    p: int
    m: int


class EnumerateRequest(StrictModel):
    q: int | str


class CensusShiftingRequest(StrictModel):
    q: int | str
    threads: int = 1
    allow_large: bool = False


class CensusCircularRequest(StrictModel):
    p: int
    threads: int = 1
    allow_large: bool = False


class BoundsRequest(StrictModel):
    p_lo: int = 2
    p_hi: int = 13
    m_lo: int = 3
    m_hi: int = 3


class SuiteRequest(StrictModel):
    names: list[str] | None = None
    include_slow: bool = False
    threads: int = 1
