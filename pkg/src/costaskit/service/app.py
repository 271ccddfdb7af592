"""HTTP service exposing verification, construction, census, and suite runs.

All endpoints are POST with JSON bodies and answer a RunReport; domain
validation errors surface as HTTP 400 with a detail message.  The CLI
talks to this app in-process by default, so the service is the single
behavior surface for both transports.
"""

from __future__ import annotations

import time
from typing import Any, Callable

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..abgroup import AbelianGroup, automorphism_count, is_isomorphic, isomorphism_witness
from ..circmap import (
    export_array,
    is_circular_costas,
    is_standard,
    are_equivalent,
    welch_map,
)
from ..classic import (
    difference_triangle,
    enumerate_costas_parallel,
    has_shifting_property,
    is_circular,
    is_costas,
    is_singly_periodic,
    render_grid,
    welch_family,
    welch_sequence,
)
from ..cpoly import (
    CensusMismatchError,
    census_circular_prime,
    census_shifting,
    conjecture2_bound,
    conjecture3_bound,
    count_welch_polynomials,
    enumerate_welch_polynomials,
    is_costas_polynomial,
    is_shifting_costas,
    ratio_table,
)
from ..dpds import dpds_equivalent, from_map, is_dpds, search_dpds, to_map
from ..formats import (
    array_to_json,
    dpds_from_json,
    dpds_to_json,
    element_json,
    format_sequence,
    map_from_json,
    map_to_json,
    parse_field,
    parse_group,
    parse_sequence,
    poly_to_json,
    poly_from_json,
    table_to_json,
)
from ..fqpoly import FqPolynomial, LinearizedPoly
from ..suite import run_suite
from . import schemas as S


def _parse_linearized(field, coeffs: list[Any]) -> LinearizedPoly:
    parsed = [field.element(c if isinstance(c, int) else tuple(c)) for c in coeffs]
    return LinearizedPoly(field, parsed)


def create_app() -> FastAPI:
    app = FastAPI(title="costaskit", version=__version__)

    def report(command: str, parameters: dict, t0: float, **kw) -> S.RunReport:
        return S.RunReport(
            command=command,
            parameters=parameters,
            elapsed_ms=(time.perf_counter() - t0) * 1000.0,
            **kw,
        )

    def guarded(fn: Callable[[], S.RunReport]) -> S.RunReport:
        try:
            return fn()
        except ValueError as e:
            raise HTTPException(status_code=400, detail=str(e)) from e

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/classic/verify")
    def classic_verify(req: S.SequenceRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            seq = parse_sequence(req.sequence)
            ok = is_costas(seq)
            payload = {
                "sequence": format_sequence(seq),
                "triangle": difference_triangle(seq),
                "grid": render_grid(seq),
                "singly_periodic": is_singly_periodic(seq),
                "circular": is_circular(seq),
                "shifting_property": has_shifting_property(seq),
            }
            return report(
                "classic verify",
                {"sequence": format_sequence(seq)},
                t0,
                verdicts=[S.Verdict(name="costas", passed=ok, detail="all difference rows distinct" if ok else "a difference row repeats")],
                payload=payload,
            )

        return guarded(run)

    @app.post("/classic/welch")
    def classic_welch(req: S.WelchSequenceRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            if req.alpha is not None:
                seqs = [welch_sequence(req.p, req.alpha, req.c or 0)]
            else:
                seqs = sorted(welch_family(req.p))
            return report(
                "classic welch",
                {"p": req.p, "alpha": req.alpha, "c": req.c},
                t0,
                counts=[S.CountEntry(name="family-size", value=len(seqs))],
                payload={"sequences": [format_sequence(s) for s in seqs]},
            )

        return guarded(run)

    @app.post("/classic/census")
    def classic_census(req: S.CensusSequenceRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            seqs = enumerate_costas_parallel(req.n, req.threads, cap=req.cap)
            return report(
                "classic census",
                {"n": req.n},
                t0,
                counts=[S.CountEntry(name="costas", value=len(seqs))],
                payload={"sequences": [format_sequence(s) for s in seqs]},
            )

        return guarded(run)

    @app.post("/group/iso")
    def group_iso(req: S.GroupPairRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            g1, g2 = parse_group(req.g1), parse_group(req.g2)
            ok = is_isomorphic(g1, g2)
            payload = {
                "invariants": {req.g1: list(g1.invariants()), req.g2: list(g2.invariants())}
            }
            if ok:
                payload["witness"] = table_to_json(isomorphism_witness(g1, g2))
            return report(
                "group iso",
                {"g1": req.g1, "g2": req.g2},
                t0,
                verdicts=[S.Verdict(name="isomorphic", passed=ok, detail="invariant factors match" if ok else "invariant factors differ")],
                payload=payload,
            )

        return guarded(run)

    @app.post("/group/aut")
    def group_aut(req: S.GroupRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            g = parse_group(req.g)
            n = automorphism_count(g)
            return report(
                "group aut",
                {"g": req.g},
                t0,
                counts=[S.CountEntry(name="automorphisms", value=n)],
            )

        return guarded(run)

    @app.post("/map/verify")
    def map_verify(req: S.MapVerifyRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            f = map_from_json(req.map.model_dump())
            ok = is_circular_costas(f)
            return report(
                "map verify",
                {"domain": req.map.domain, "codomain": req.map.codomain},
                t0,
                verdicts=[S.Verdict(name="circular-costas", passed=ok, detail="injective with injective difference maps" if ok else "a difference map collides")],
                payload={"standard": bool(ok and is_standard(f))},
            )

        return guarded(run)

    @app.post("/map/welch")
    def map_welch(req: S.WelchMapRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            field = parse_field(req.q)
            L = _parse_linearized(field, req.L) if req.L is not None else None
            f = welch_map(field, L, req.c)
            return report(
                "map welch",
                {"q": req.q, "L": req.L, "c": req.c},
                t0,
                counts=[S.CountEntry(name="points", value=f.domain.order)],
                payload={"map": map_to_json(f)},
            )

        return guarded(run)

    @app.post("/map/export-array")
    def map_export_array(req: S.ExportArrayRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            if req.map is not None:
                f = map_from_json(req.map.model_dump())
            elif req.q is not None:
                field = parse_field(req.q)
                L = _parse_linearized(field, req.L) if req.L is not None else None
                f = welch_map(field, L, req.c)
            else:
                raise ValueError("provide either a map or a welch construction (q, L, c)")
            arr = export_array(f, req.domain_split, req.codomain_split)
            payload = {"array": array_to_json(arr)}
            if len(arr.dims) <= 3:
                payload["render"] = arr.render()
            return report(
                "map export-array",
                {
                    "domain_split": req.domain_split,
                    "codomain_split": req.codomain_split,
                },
                t0,
                counts=[S.CountEntry(name="ones", value=len(arr.ones))],
                payload=payload,
            )

        return guarded(run)

    @app.post("/map/equiv")
    def map_equiv(req: S.MapEquivRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            f = map_from_json(req.f.model_dump())
            g = map_from_json(req.g.model_dump())
            ok, witness = are_equivalent(f, g, translate=req.translate)
            payload = {}
            if witness:
                payload["witness"] = {
                    "domain": table_to_json(witness["domain"]),
                    "codomain": table_to_json(witness["codomain"]),
                }
                if "shift" in witness:
                    payload["witness"]["shift"] = list(witness["shift"])
            return report(
                "map equiv",
                {"translate": req.translate},
                t0,
                verdicts=[S.Verdict(name="equivalent", passed=ok, detail="isomorphism pair found" if ok else "no isomorphism pair works")],
                payload=payload,
            )

        return guarded(run)

    @app.post("/dpds/verify")
    def dpds_verify(req: S.DpdsVerifyRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            d = dpds_from_json(req.set.model_dump())
            ok = is_dpds(d)
            triples = [
                [element_json(a1 + b1, scalar_ok=False), element_json(a2 + b2, scalar_ok=False), element_json(da + db, scalar_ok=False)]
                for (a1, b1), (a2, b2), (da, db) in d.difference_triples()
            ]
            return report(
                "dpds verify",
                {"group": req.set.group},
                t0,
                verdicts=[S.Verdict(name="dpds", passed=ok, detail="each off-axis element appears exactly once" if ok else "difference coverage fails")],
                payload={"differences": triples},
            )

        return guarded(run)

    @app.post("/dpds/from-map")
    def dpds_from_map_ep(req: S.MapVerifyRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            f = map_from_json(req.map.model_dump())
            d = from_map(f)
            return report(
                "dpds from-map",
                {"domain": req.map.domain, "codomain": req.map.codomain},
                t0,
                verdicts=[S.Verdict(name="dpds", passed=is_dpds(d), detail="graph of the map")],
                payload={"set": dpds_to_json(d)},
            )

        return guarded(run)

    @app.post("/dpds/to-map")
    def dpds_to_map_ep(req: S.DpdsVerifyRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            d = dpds_from_json(req.set.model_dump())
            f = to_map(d)
            return report(
                "dpds to-map",
                {"group": req.set.group},
                t0,
                verdicts=[S.Verdict(name="circular-costas", passed=is_circular_costas(f), detail="associated function")],
                payload={"map": map_to_json(f)},
            )

        return guarded(run)

    @app.post("/dpds/equiv")
    def dpds_equiv(req: S.DpdsEquivRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            d1 = dpds_from_json(req.d1.model_dump())
            d2 = dpds_from_json(req.d2.model_dump())
            ok = dpds_equivalent(d1, d2)
            return report(
                "dpds equiv",
                {"group": req.d1.group},
                t0,
                verdicts=[S.Verdict(name="equivalent", passed=ok, detail="automorphism plus translation found" if ok else "no automorphism-translation pair works")],
            )

        return guarded(run)

    @app.post("/dpds/search-none")
    def dpds_search_none(req: S.SearchNoneRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            if req.n < 3:
                raise ValueError("order must be at least 3")
            group_a, group_b = AbelianGroup([req.n - 1]), AbelianGroup([req.n])
            found = list(search_dpds(group_a, group_b, normalize=req.normalize))
            return report(
                "dpds search-none",
                {"n": req.n, "normalize": req.normalize},
                t0,
                verdicts=[
                    S.Verdict(
                        name="none-found",
                        passed=not found,
                        detail="no difference set exists" if not found else "difference sets exist",
                    )
                ],
                counts=[S.CountEntry(name="found", value=len(found))],
            )

        return guarded(run)

    @app.post("/cpoly/verify")
    def cpoly_verify(req: S.PolynomialRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            f = poly_from_json({"field": req.field, "coeffs": req.coeffs})
            ok = is_costas_polynomial(f)
            return report(
                "cpoly verify",
                {"field": str(req.field), "polynomial": f.text()},
                t0,
                verdicts=[S.Verdict(name="costas-polynomial", passed=ok, detail="all difference polynomials permute" if ok else "a difference polynomial collides or f(0) != 0")],
            )

        return guarded(run)

    @app.post("/cpoly/shifting")
    def cpoly_shifting(req: S.PolynomialRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            f = poly_from_json({"field": req.field, "coeffs": req.coeffs})
            ok, witness = is_shifting_costas(f)
            payload = {}
            if witness is not None:
                payload["witnesses"] = [
                    [element_json(d.coords), element_json(a.coords)]
                    for d, a in sorted(witness.items(), key=lambda kv: kv[0].index)
                ]
            return report(
                "cpoly shifting",
                {"field": str(req.field), "polynomial": f.text()},
                t0,
                verdicts=[S.Verdict(name="shifting-costas-polynomial", passed=ok, detail="every difference is a dilation of f" if ok else "some difference is not a dilation of f")],
                payload=payload,
            )

        return guarded(run)

    @app.post("/cpoly/count")
    def cpoly_count(req: S.CountRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            n = count_welch_polynomials(req.p, req.m)
            counts = [S.CountEntry(name="welch-polynomials", value=n)]
            if req.m == 2:
                counts.append(S.CountEntry(name="degree-two-bound", value=conjecture2_bound(req.p)))
            if req.m >= 3:
                counts.append(S.CountEntry(name="conjectured-bound", value=conjecture3_bound(req.p, req.m)))
            return report("cpoly count", {"p": req.p, "m": req.m}, t0, counts=counts)

        return guarded(run)

    @app.post("/cpoly/enumerate")
    def cpoly_enumerate(req: S.EnumerateRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            field = parse_field(req.q)
            polys = list(enumerate_welch_polynomials(field))
            return report(
                "cpoly enumerate",
                {"q": req.q},
                t0,
                counts=[S.CountEntry(name="welch-polynomials", value=len(polys))],
                payload={"polynomials": [poly_to_json(f)["coeffs"] for f in polys]},
            )

        return guarded(run)

    @app.post("/cpoly/census-shifting")
    def cpoly_census_shifting(req: S.CensusShiftingRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            field = parse_field(req.q)
            survivors = census_shifting(field, workers=req.threads, allow_large=req.allow_large)
            expected = set(enumerate_welch_polynomials(field))
            ok = survivors == expected
            ordered = sorted(survivors, key=FqPolynomial.index_tuple)
            return report(
                "cpoly census-shifting",
                {"q": req.q},
                t0,
                verdicts=[S.Verdict(name="matches-welch-enumeration", passed=ok, detail="census equals the linearized-power family" if ok else "census deviates from the linearized-power family")],
                counts=[S.CountEntry(name="survivors", value=len(survivors))],
                payload={"polynomials": [poly_to_json(f)["coeffs"] for f in ordered]},
            )

        return guarded(run)

    @app.post("/cpoly/census-circular")
    def cpoly_census_circular(req: S.CensusCircularRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            try:
                found = census_circular_prime(req.p, workers=req.threads, allow_large=req.allow_large)
                ok, seqs = True, sorted(found)
            except CensusMismatchError as e:
                ok, seqs = False, []
                detail = str(e)
            else:
                detail = "census equals the exponential family"
            return report(
                "cpoly census-circular",
                {"p": req.p},
                t0,
                verdicts=[S.Verdict(name="matches-welch-family", passed=ok, detail=detail)],
                counts=[S.CountEntry(name="circular", value=len(seqs))],
                payload={"sequences": [format_sequence(s) for s in seqs]},
            )

        return guarded(run)

    @app.post("/cpoly/bounds")
    def cpoly_bounds(req: S.BoundsRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            rows = ratio_table(req.p_lo, req.p_hi, req.m_lo, req.m_hi)
            payload = {
                "rows": [
                    {
                        "p": p,
                        "m": m,
                        "R_num": r.numerator,
                        "R_den": r.denominator,
                        "R_float": float(r),
                    }
                    for p, m, r in rows
                ]
            }
            return report(
                "cpoly bounds",
                {"p_lo": req.p_lo, "p_hi": req.p_hi, "m_lo": req.m_lo, "m_hi": req.m_hi},
                t0,
                counts=[S.CountEntry(name="rows", value=len(rows))],
                payload=payload,
            )

        return guarded(run)

    @app.post("/suite/run")
    def suite_run(req: S.SuiteRequest) -> S.RunReport:
        def run():
            t0 = time.perf_counter()
            results = run_suite(
                names=req.names, include_slow=req.include_slow, workers=req.threads
            )
            verdicts = [
                S.Verdict(name=r.name, passed=r.passed, detail=r.detail) for r in results
            ]
            counts = [
                S.CountEntry(name=f"{r.name}:{label}", value=value)
                for r in results
                for label, value in r.counts
            ]
            return report(
                "suite run",
                {"include_slow": req.include_slow},
                t0,
                verdicts=verdicts,
                counts=counts,
            )

        return guarded(run)

    return app


app = create_app()
