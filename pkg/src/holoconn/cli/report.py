"""Run analyses on a request and render the report.

The machine-readable report is JSON with sorted keys and two-space indent,
terminated by a newline, so ``dumps(loads(s)) == s`` for every emitted ``s``.
Every expression is a canonical string in the request's variables and
re-parses to an equal expression. Layout::

    {
      "engine": {"name": "holoconn", "version": "..."},
      "reports": [
        {
          "request": {"name", "variables", "source", "parameters",
                      "analyses", "point", "order", "window"},
          "results": {
            "torsion":    {"torsion_free": bool, "components": {"T^k_12": expr}},
            "curvature":  {"components": {"R^l_k": expr}},
            "flat":       {"flat": bool},
            "projective": {"K0".."K3": expr, "L1": expr, "L2": expr,
                           "projectively_flat": bool},
            "killing":    {"dimensions": [{"order": n, "dimension": d}],
                           "dimension": d, "stabilized": bool,
                           "basis": [{"a": expr, "b": expr}]}
          }
        }
      ]
    }

``R^l_k`` is the component of ``R(d_1, d_2) d_k`` along ``d_l`` and
``T^k_12`` of ``T(d_1, d_2)`` along ``d_k`` (1-based). Killing basis jets are
truncated Taylor polynomials about the base point, written out in the chart
variables. Only requested analyses appear. ``timing`` (seconds per analysis)
is added only on request, since it breaks determinism.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor

from .. import __version__
from ..connection import curvature, is_flat, torsion
from ..errors import AnalysisError, HoloconnError
from ..expr import Expr, Poly, SeriesJet
from ..killing import killing_jet_space
from ..projective import geodesic_ode, liouville_invariants
from .fileformat import AnalysisRequest

__all__ = ["ENGINE", "run", "run_batch", "dumps_machine", "render_text", "jet_expression"]

ENGINE = "holoconn"


def jet_expression(j: SeriesJet) -> Expr:
    """The Taylor polynomial of ``j`` as a function of the chart variables."""
    offsets = Poly({pq: c for pq, c in j.coefficients.items()})
    return Expr(offsets.translate(tuple(-c for c in j.base.coordinates)))


def _request_echo(req: AnalysisRequest) -> dict:
    return {
        "name": req.name,
        "variables": list(req.variables),
        "source": req.source,
        "parameters": {k: e.to_string(req.variables) for k, e in req.parameters},
        "analyses": list(req.analyses),
        "point": None if req.point is None else [str(c) for c in req.point],
        "order": req.order,
        "window": req.window,
    }


def _torsion(req):
    t = torsion(req.connection)
    return {
        "torsion_free": t.is_zero(),
        "components": {f"T^{k + 1}_12": t[k, 0, 1].to_string(req.variables) for k in (0, 1)},
    }


def _curvature(req):
    r = curvature(req.connection)
    return {"components": {f"R^{l + 1}_{k + 1}": r.r[l][k].to_string(req.variables)
                           for l in (0, 1) for k in (0, 1)}}


def _flat(req):
    return {"flat": is_flat(req.connection)}


def _projective(req):
    ode = geodesic_ode(req.connection)
    lv = liouville_invariants(ode)
    out = {f"K{n}": k.to_string(req.variables) for n, k in enumerate(ode.coefficients())}
    out["L1"] = lv.l1.to_string(req.variables)
    out["L2"] = lv.l2.to_string(req.variables)
    out["projectively_flat"] = lv.is_zero()
    return out


def _killing(req):
    space = killing_jet_space(req.connection, req.point, req.order)
    dims = space.dimensions()
    return {
        "dimensions": [{"order": n, "dimension": d} for n, d in space.per_order],
        "dimension": dims[-1],
        "stabilized": len(set(dims[-req.window:])) == 1,
        "basis": [{"a": jet_expression(a).to_string(req.variables),
                   "b": jet_expression(b).to_string(req.variables)} for a, b in space.basis],
    }


_RUNNERS = {
    "torsion": _torsion,
    "curvature": _curvature,
    "flat": _flat,
    "projective": _projective,
    "killing": _killing,
}


def run(req: AnalysisRequest, timing: bool = False) -> dict:
    """Execute exactly the requested analyses; module errors come back as
    :class:`AnalysisError` naming the analysis."""
    results = {}
    times = {}
    for name in req.analyses:
        start = time.perf_counter()
        try:
            results[name] = _RUNNERS[name](req)
        except HoloconnError as err:
            raise AnalysisError(name, err) from err
        times[name] = round(time.perf_counter() - start, 6)
    report = {"request": _request_echo(req), "results": results}
    if timing:
        report["timing"] = times
    return report


def _run_one(args):
    req, timing = args
    try:
        return run(req, timing), None
    except AnalysisError as err:
        return None, (req.name, err.analysis, f"{type(err.cause).__name__}: {err.cause}")


def run_batch(requests, timing: bool = False, jobs: int = 1) -> list:
    """``[(report, None) | (None, (name, analysis, message))]`` in input order."""
    work = [(r, timing) for r in requests]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, work))
    return [_run_one(w) for w in work]


def machine_document(reports: list[dict]) -> dict:
    return {"engine": {"name": ENGINE, "version": __version__}, "reports": reports}


def dumps_machine(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def render_text(doc: dict) -> str:
    lines = [f"{doc['engine']['name']} {doc['engine']['version']}"]
    for rep in doc["reports"]:
        req = rep["request"]
        lines.append("")
        lines.append(f"== {req['name']} ({req['source']}; variables {', '.join(req['variables'])})")
        for k, v in req["parameters"].items():
            lines.append(f"   {k} = {v}")
        res = rep["results"]
        if "torsion" in res:
            t = res["torsion"]
            lines.append(f"torsion-free: {_yes(t['torsion_free'])}")
            if not t["torsion_free"]:
                for k, v in t["components"].items():
                    lines.append(f"   {k} = {v}")
        if "curvature" in res:
            lines.append("curvature R(d1, d2):")
            for k, v in res["curvature"]["components"].items():
                lines.append(f"   {k} = {v}")
        if "flat" in res:
            lines.append(f"flat: {_yes(res['flat']['flat'])}")
        if "projective" in res:
            p = res["projective"]
            lines.append("geodesic ODE: " + ", ".join(f"K{n} = {p[f'K{n}']}" for n in range(4)))
            lines.append(f"Liouville: L1 = {p['L1']}, L2 = {p['L2']}")
            lines.append(f"projectively flat: {_yes(p['projectively_flat'])}")
        if "killing" in res:
            kl = res["killing"]
            table = ", ".join(f"{d['order']}:{d['dimension']}" for d in kl["dimensions"])
            lines.append(f"Killing jets at ({', '.join(req['point'])}), order:dimension = {table}")
            status = "stabilized" if kl["stabilized"] else "not stabilized"
            lines.append(f"Killing dimension: {kl['dimension']} ({status} over {req['window']} orders)")
            for n, vec in enumerate(kl["basis"], start=1):
                lines.append(f"   X{n}: a = {vec['a']}; b = {vec['b']}")
        if "timing" in rep:
            lines.append("timing: " + ", ".join(f"{k} {v:.3f}s" for k, v in rep["timing"].items()))
    return "\n".join(lines) + "\n"
