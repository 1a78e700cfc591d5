"""Request parsing, pipeline orchestration, and canonical output emission.

Requests are strict JSON documents with exact rational coefficient strings
(decimal literals are rejected).  Reports are deterministic functions of the
request: every numeric field is an exact string or an {a, b, d} quadratic
triple, decimal values appear only under 'approx' keys, and the canonical
JSON is byte-identical across runs.  Wall-clock timings appear only in the
human-readable summary.
"""

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bundle import (DegenerateCurveError, FormTriple, cover_equations,
                     cover_smooth_witness, default_witness_primes,
                     degenerate_fiber_form, discriminant_quartic, prym_sextic,
                     smooth_quartic_check)
from .certificates import (CertificateError, DivisorCertificate, parity_compare,
                           pushforward_line_match, span_rank_verdict,
                           verify_galois_stable, verify_on_cover)
from .localpoints import qp_points_exist, real_points_exist, verify_local_witness
from .quadext import QuadExt, parse_rational
from .realroots import RealAlgebraic
from .sigma import AuditReport, surjectivity_audit
from .ternary import TernaryForm, monomial_name
from .topology import (INF, classify_real_locus, cover_real_points_empty,
                       profile_csv_rows)
from .unipoly import BinaryForm, proportional


class RequestError(ValueError):
    pass


ALL_STAGES = ("smoothness", "prym_curve", "degenerate_sextic", "signature_profile",
              "real_topology", "cover_real_points", "certificates", "local_points",
              "sigma_audit")

_REQUEST_KEYS = {"name", "triple", "certificates", "places", "witness_primes",
                 "audit", "expected_sextic"}
_TRIPLE_KEYS = {"q1", "q2", "q3"}
_AUDIT_KEYS = {"base_points", "lines_per_pencil"}
_MONOMIAL_KEYS = {"u^2", "v^2", "w^2", "u*v", "u*w", "v*w"}


@dataclass
class AnalysisRequest:
    name: str
    triple: FormTriple
    raw_triple: dict
    certificates: list
    places: list
    witness_primes: Optional[list]
    audit: Optional[dict]
    expected_sextic: Optional[list]
    hensel_depth: int = 0


def parse_request(doc: dict) -> AnalysisRequest:
    if not isinstance(doc, dict):
        raise RequestError("request must be a JSON object")
    unknown = set(doc) - _REQUEST_KEYS
    if unknown:
        raise RequestError(f"unknown request keys: {sorted(unknown)}")
    if "triple" not in doc:
        raise RequestError("request.triple is required")
    tdoc = doc["triple"]
    unknown = set(tdoc) - _TRIPLE_KEYS
    if unknown:
        raise RequestError(f"unknown triple keys: {sorted(unknown)}")
    forms = {}
    for key in ("q1", "q2", "q3"):
        if key not in tdoc:
            raise RequestError(f"request.triple.{key} is required")
        named = {}
        for mono, value in tdoc[key].items():
            if mono not in _MONOMIAL_KEYS:
                raise RequestError(f"request.triple.{key}: unknown monomial {mono!r}")
            try:
                named[mono] = parse_rational(str(value))
            except ValueError as exc:
                raise RequestError(f"request.triple.{key}.{mono}: {exc}") from exc
        forms[key] = TernaryForm.from_named(2, named)
    name = str(doc.get("name", ""))
    triple = FormTriple(forms["q1"], forms["q2"], forms["q3"], name=name)

    certificates = []
    for i, cdoc in enumerate(doc.get("certificates", []) or []):
        try:
            certificates.append(DivisorCertificate.from_json_dict(cdoc))
        except (KeyError, ValueError) as exc:
            raise RequestError(f"request.certificates[{i}]: {exc}") from exc

    places = []
    for i, pl in enumerate(doc.get("places", []) or []):
        if pl == "R":
            places.append("R")
        else:
            try:
                p = int(pl)
            except (TypeError, ValueError):
                raise RequestError(f"request.places[{i}]: expected 'R' or an odd prime")
            places.append(p)

    primes = doc.get("witness_primes")
    if primes is not None:
        primes = [int(p) for p in primes]

    audit = doc.get("audit")
    if audit is not None:
        unknown = set(audit) - _AUDIT_KEYS
        if unknown:
            raise RequestError(f"unknown audit keys: {sorted(unknown)}")
        audit = {"base_points": int(audit.get("base_points", 20)),
                 "lines_per_pencil": int(audit.get("lines_per_pencil", 10))}

    expected = doc.get("expected_sextic")
    if expected is not None:
        if len(expected) != 7:
            raise RequestError("expected_sextic needs 7 coefficients, highest degree first")
        expected = [parse_rational(str(c)) for c in expected]

    return AnalysisRequest(name, triple, tdoc, certificates, places, primes,
                           audit, expected)


def load_request(path: str) -> AnalysisRequest:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_request(json.load(fh))


# -- exact-value serialization -------------------------------------------------------


def frac_str(x) -> str:
    f = Fraction(x)
    return str(f)


def scalar_json(x):
    if isinstance(x, QuadExt):
        if x.b == 0:
            return frac_str(x.a)
        return {"a": frac_str(x.a), "b": frac_str(x.b), "d": str(x.d)}
    return frac_str(x)


def point_json(x):
    if isinstance(x, (int, Fraction)):
        return {"value": frac_str(x), "approx": float(Fraction(x))}
    if isinstance(x, QuadExt):
        if x.b == 0:
            return {"value": frac_str(x.a), "approx": float(x.a)}
        return {"a": frac_str(x.a), "b": frac_str(x.b), "d": str(x.d), "approx": float(x)}
    if isinstance(x, RealAlgebraic):
        if x.kind == "rat":
            return {"value": frac_str(x.value), "approx": float(x.value)}
        if x.kind == "quad":
            return point_json(x.value)
        return {"witness": [frac_str(c) for c in x.witness.coeffs],
                "lo": frac_str(x.lo), "hi": frac_str(x.hi), "approx": x.approx()}
    if x is INF:
        return {"value": "1/0", "approx": "inf"}
    raise TypeError(f"cannot serialize {x!r}")


def interval_json(iv):
    return {"lo": point_json(iv.lo), "hi": point_json(iv.hi),
            "through_infinity": iv.through_infinity}


def intervals_json(ivs):
    if ivs == ("full",):
        return "full"
    return [interval_json(iv) for iv in ivs]


# -- pipeline -------------------------------------------------------------------------


def run_full_report(request: AnalysisRequest, stages=None):
    """Run the verification pipeline; stage failures are embedded, not raised.

    Returns (report dict, timings dict)."""
    selected = set(ALL_STAGES if stages is None else stages)
    triple = request.triple
    report = {"schema_version": "1", "name": request.name,
              "triple": _triple_echo(triple), "stages": {}}
    timings = {}

    def run_stage(name, fn):
        if name not in selected:
            report["stages"][name] = "skipped"
            return None
        t0 = time.monotonic()
        try:
            out = fn()
            report["stages"][name] = out
            return out
        except (ValueError, TypeError, ZeroDivisionError, RuntimeError) as exc:
            report["stages"][name] = {"error": f"{type(exc).__name__}: {exc}"}
            return None
        finally:
            timings[name] = time.monotonic() - t0

    primes = request.witness_primes or default_witness_primes(
        [triple.q1, triple.q2, triple.q3])

    run_stage("smoothness", lambda: _smoothness_stage(triple, primes))
    run_stage("prym_curve", lambda: _prym_stage(triple))
    run_stage("degenerate_sextic", lambda: _sextic_stage(triple, request.expected_sextic))
    if "real_topology" in selected or "signature_profile" in selected:
        t0 = time.monotonic()
        topology = None
        try:
            topology = classify_real_locus(triple)
        except (ValueError, TypeError, ZeroDivisionError, RuntimeError) as exc:
            err = {"error": f"{type(exc).__name__}: {exc}"}
            if "signature_profile" in selected:
                report["stages"]["signature_profile"] = err
            if "real_topology" in selected:
                report["stages"]["real_topology"] = err
        dt = time.monotonic() - t0
        if topology is not None:
            if "signature_profile" in selected:
                report["stages"]["signature_profile"] = _profile_json(topology.profile)
                timings["signature_profile"] = dt
            else:
                report["stages"]["signature_profile"] = "skipped"
            if "real_topology" in selected:
                report["stages"]["real_topology"] = _topology_json(topology)
                timings["real_topology"] = dt
            else:
                report["stages"]["real_topology"] = "skipped"
    else:
        report["stages"]["signature_profile"] = "skipped"
        report["stages"]["real_topology"] = "skipped"

    run_stage("cover_real_points", lambda: {"verdict": cover_real_points_empty(triple)})
    run_stage("certificates", lambda: _certificates_stage(triple, request.certificates))
    run_stage("local_points", lambda: _local_stage(triple, request.places,
                                                   request.hensel_depth))
    if request.audit is None and "sigma_audit" in selected and stages is None:
        report["stages"]["sigma_audit"] = "skipped"
    else:
        run_stage("sigma_audit", lambda: _audit_stage(triple, request.audit or {}))
    return report, timings


def _triple_echo(triple: FormTriple):
    def form_json(q):
        return {monomial_name(m): frac_str(c) for m, c in sorted(q.coeffs.items(), reverse=True)}
    return {"q1": form_json(triple.q1), "q2": form_json(triple.q2), "q3": form_json(triple.q3)}


def _smoothness_stage(triple, primes):
    delta = discriminant_quartic(triple)
    cert_delta = smooth_quartic_check(delta, primes)
    cert_cover = cover_smooth_witness(cover_equations(triple), primes)
    return {"witness_primes": [str(p) for p in primes],
            "delta": _smooth_json(cert_delta),
            "cover": _smooth_json(cert_cover)}


def _smooth_json(cert):
    out = {"verdict": cert.verdict, "method": cert.method}
    if cert.prime is not None:
        out["prime"] = str(cert.prime)
    if cert.singular_point is not None:
        out["singular_point"] = [scalar_json(c) for c in cert.singular_point]
    if cert.detail:
        out["detail"] = cert.detail
    return out


def _prym_stage(triple):
    curve = prym_sextic(triple)
    return {"coefficients_ascending": [frac_str(c) for c in curve.f.coeffs],
            "degree": curve.f.degree(),
            "squarefree": True,
            "genus2_valid": curve.f.degree() in (5, 6)}


def _sextic_stage(triple, expected):
    form = degenerate_fiber_form(triple)
    out = {"coefficients_descending": [frac_str(c) for c in form.coeffs]}
    if expected is not None:
        scalar = proportional(form.coeffs, expected)
        out["expected_match"] = ({"matched": True, "scalar": frac_str(scalar)}
                                 if scalar is not None else {"matched": False})
    else:
        out["expected_match"] = "skipped"
    return out


def _profile_json(profile):
    segments = []
    for seg in profile.segments:
        t0, t1 = seg.sample
        sample = "1/0" if t1 == 0 else frac_str(Fraction(t0) / Fraction(t1))
        segments.append({
            "left": point_json(seg.left) if seg.left is not INF else {"value": "1/0", "approx": "inf"},
            "right": point_json(seg.right) if seg.right is not INF else {"value": "1/0", "approx": "inf"},
            "sample": sample,
            "p": seg.sig.positives,
            "q": seg.sig.negatives,
        })
    return {"roots": [point_json(r) for r in profile.roots],
            "infinity_root": profile.has_infinity_root,
            "segments": segments}


def _topology_json(topology):
    return {
        "classification": topology.classification,
        "component_count": topology.component_count,
        "pi1_surjective_on_real_points": topology.pi1_surjective,
        "real_point_intervals": intervals_json(topology.real_point_intervals),
        "real_line_intervals": intervals_json(topology.real_line_intervals),
    }


def _certificates_stage(triple, certs):
    if not certs:
        return "skipped"
    pres = cover_equations(triple)
    quartic = pres.delta
    out = []
    for cert in certs:
        on_cover, residues = verify_on_cover(cert, pres)
        galois = verify_galois_stable(cert)
        try:
            line_match = pushforward_line_match(cert, quartic)
        except CertificateError as exc:
            line_match = False
        entry = {
            "d": str(cert.d),
            "points": [[scalar_json(c) for c in p.coords] for p in cert.points],
            "on_cover": on_cover,
            "galois_stable": galois,
            "line_match": line_match,
        }
        if not on_cover:
            entry["residues"] = [[scalar_json(x) for x in res] for res in residues]
        if on_cover and galois and line_match:
            verdict = span_rank_verdict(cert)
            entry["span_rank"] = verdict.rank
            entry["verdict"] = verdict.label
            entry["minors"] = {f"drop_col_{k}": scalar_json(v)
                               for k, v in verdict.minors.items()}
        else:
            entry["verdict"] = "rejected"
        out.append(entry)
    for i in range(1, len(out)):
        try:
            out[i]["parity_vs_first"] = parity_compare(certs[0], certs[i])
        except CertificateError as exc:
            out[i]["parity_vs_first"] = f"incomparable: {exc}"
    return out


def _local_stage(triple, places, hensel_depth):
    if not places:
        return "skipped"
    curve = prym_sextic(triple)
    out = []
    for pl in places:
        if pl == "R":
            verdict = real_points_exist(curve)
        else:
            verdict = qp_points_exist(curve, pl, depth_budget=hensel_depth)
        entry = {
            "place": verdict.place,
            "verdict": verdict.verdict,
            "depth_used": verdict.depth_used,
            "required_depth": verdict.required_depth,
        }
        if verdict.witness:
            entry["witness"] = verdict.witness
            entry["witness_reverifies"] = verify_local_witness(curve, verdict)
        if verdict.detail:
            entry["detail"] = verdict.detail
        out.append(entry)
    return out


def _audit_stage(triple, params):
    rep = surjectivity_audit(triple,
                             base_points=params.get("base_points", 20),
                             lines_per_pencil=params.get("lines_per_pencil", 10))
    return _audit_json(rep)


def _audit_json(rep: AuditReport):
    pencils = []
    for pa in rep.pencils:
        pencils.append({
            "base_point": [frac_str(c) for c in pa.base],
            "boundary_parameters": [point_json(p) for p in pa.boundary_params],
            "infinity_is_boundary": pa.infinity_boundary,
            "arcs": [{"span": list(a[0]) if isinstance(a[0], tuple) else a[0],
                      "in_sigma": a[1]} for a in pa.arcs],
            "certified_lines": [_cert_json(c) for c in pa.certificates],
            "failures": [_failure_json(f) for f in pa.failures],
        })
    return {
        "passed": rep.passed,
        "certified": rep.certified,
        "failed": rep.failed,
        "base_line_in_sigma": rep.base_line_in_sigma,
        "interval": {"lo": point_json(rep.interval[0]), "hi": point_json(rep.interval[1])},
        "skipped_base_points": [[frac_str(c) for c in b] for b in rep.skipped_base_points],
        "pencils": pencils,
    }


def _cert_json(c):
    return {
        "line": [scalar_json(x) for x in c.line_coeffs],
        "tangency_coefficients": [scalar_json(x) for x in c.tangency.full.coeffs],
        "root": point_json(c.root),
        "sample_t": frac_str(c.sample_t),
        "sample_signature": list(c.sample_signature),
    }


def _failure_json(f):
    return {
        "line": [scalar_json(x) for x in f.line_coeffs],
        "endpoint_signs": list(f.endpoint_signs),
        "double_root_positions": list(f.double_root_signs),
        "detail": f.detail,
    }


# -- emission -------------------------------------------------------------------------


def canonical_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":"), allow_nan=False)


def render_summary(report: dict, timings: dict) -> str:
    lines = [f"analysis: {report.get('name') or '(unnamed)'}", ""]
    stages = report["stages"]
    for name in ALL_STAGES:
        val = stages.get(name, "skipped")
        if val == "skipped":
            lines.append(f"  {name:<20} skipped")
            continue
        if isinstance(val, dict) and "error" in val:
            lines.append(f"  {name:<20} ERROR: {val['error']}")
            continue
        lines.append(f"  {name:<20} {_stage_brief(name, val)}")
    lines.append("")
    lines.append("timings (s):")
    for name, dt in timings.items():
        lines.append(f"  {name:<20} {dt:.3f}")
    return "\n".join(lines) + "\n"


def _stage_brief(name, val):
    if name == "smoothness":
        return f"delta {val['delta']['verdict']} ({val['delta']['method']}), cover {val['cover']['verdict']} ({val['cover']['method']})"
    if name == "prym_curve":
        return f"degree {val['degree']} squarefree sextic model"
    if name == "degenerate_sextic":
        match = val.get("expected_match")
        if isinstance(match, dict):
            return "matches expected up to scalar " + match.get("scalar", "-") if match.get("matched") else "DOES NOT match expected"
        return f"{len(val['coefficients_descending'])} coefficients"
    if name == "signature_profile":
        return f"{len(val['roots'])} real rank-drop parameters, {len(val['segments'])} segments"
    if name == "real_topology":
        return f"{val['classification']}, components {val['component_count']}, pi1 surjective {val['pi1_surjective_on_real_points']}"
    if name == "cover_real_points":
        return val["verdict"]
    if name == "certificates":
        if isinstance(val, str):
            return val
        return "; ".join(f"cert{i}: {c['verdict']}" for i, c in enumerate(val))
    if name == "local_points":
        if isinstance(val, str):
            return val
        return "; ".join(f"{c['place']}: {c['verdict']}" for c in val)
    if name == "sigma_audit":
        return f"passed={val['passed']} certified={val['certified']} failed={val['failed']}"
    return ""


def emit_outputs(report: dict, timings: dict, out_dir: str, emit_csv: bool = True):
    """Write report.json (canonical), summary.txt, and profile.csv; returns paths."""
    import os

    os.makedirs(out_dir, exist_ok=True)
    paths = {}
    json_path = os.path.join(out_dir, "report.json")
    with open(json_path, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(report))
    paths["json"] = json_path
    summary_path = os.path.join(out_dir, "summary.txt")
    with open(summary_path, "w", encoding="utf-8") as fh:
        fh.write(render_summary(report, timings))
    paths["summary"] = summary_path
    profile = report["stages"].get("signature_profile")
    if emit_csv and isinstance(profile, dict) and "segments" in profile:
        csv_path = os.path.join(out_dir, "profile.csv")
        with open(csv_path, "w", encoding="utf-8") as fh:
            fh.write("t_exact,t_approx,p,q\n")
            for seg in profile["segments"]:
                t_exact = seg["sample"]
                if t_exact == "1/0":
                    approx = "inf"
                else:
                    approx = repr(float(Fraction(t_exact)))
                fh.write(f"{t_exact},{approx},{seg['p']},{seg['q']}\n")
        paths["csv"] = csv_path
    return paths
