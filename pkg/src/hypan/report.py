"""Consolidated JSON report document emitted by the CLI.

Reports carry no wall-clock timestamps so repeated runs are byte-identical;
sections for analyses that were not requested are absent keys. epsilon_star
serializes as null with the companion epsilon_unbounded flag when the
four-point condition never binds.
"""

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass

from . import __version__
from .checks import AxiomReport, PtolemyReport, QuadrupleWitness
from .hyperbolicity import UNBOUNDED, BolicityResult, HyperbolicityReport
from .moebius import DistortionReport


@dataclass
class ReportDocument:
    tool_version: str
    input_digest: str
    space_summary: dict | None = None
    axiom: AxiomReport | None = None
    ptolemy: PtolemyReport | None = None
    lemma22: tuple | None = None
    hyperbolicity: HyperbolicityReport | None = None
    bolicity: BolicityResult | None = None
    distortion: DistortionReport | None = None
    tolerances: dict | None = None


def digest_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def digest_file(path: str) -> str:
    with open(path, "rb") as fh:
        return digest_bytes(fh.read())


def _witness(w: QuadrupleWitness | None):
    if w is None:
        return None
    return {"indices": list(w.indices), "pairing": w.pairing, "value": w.value}


def document_to_dict(doc: ReportDocument) -> dict:
    out = {"tool_version": doc.tool_version, "input_digest": doc.input_digest}
    if doc.space_summary is not None:
        out["space_summary"] = doc.space_summary
    if doc.axiom is not None:
        a = doc.axiom
        out["axiom"] = {
            "symmetric": a.symmetric,
            "identity_ok": a.identity_ok,
            "worst_triangle_violation": a.worst_triangle_violation,
            "worst_triangle_triple": list(a.worst_triangle_triple),
            "perimeter_ok": a.perimeter_ok,
            "worst_perimeter_witness": _witness(a.worst_perimeter_witness),
        }
    if doc.ptolemy is not None:
        p = doc.ptolemy
        out["ptolemy"] = {
            "max_relative_defect": p.max_relative_defect,
            "witness": _witness(p.witness),
            "is_ptolemy": p.is_ptolemy,
        }
    if doc.lemma22 is not None:
        value, witness, base = doc.lemma22
        out["lemma22"] = {
            "base": base,
            "max_defect": value,
            "witness": _witness(witness),
        }
    if doc.hyperbolicity is not None:
        h = doc.hyperbolicity
        unbounded = h.epsilon_star is UNBOUNDED
        section = {
            "delta_star": h.delta_star,
            "delta_witness": list(h.delta_witness.indices),
            "epsilon_star": None if unbounded else h.epsilon_star,
            "epsilon_unbounded": unbounded,
            "epsilon_witness": _witness(h.epsilon_witness),
            "mode": h.mode.kind,
            "consistency_ok": h.consistency_ok,
        }
        if h.mode.kind == "sampled":
            section["sample_count"] = h.mode.count
            section["seed"] = h.mode.seed
        out["hyperbolicity"] = section
    if doc.bolicity is not None:
        b = doc.bolicity
        out["bolicity"] = {
            "r": b.r,
            "eta": b.eta,
            "r_min": b.r_min,
            "vacuous": b.vacuous,
            "witness": _witness(b.witness),
        }
    if doc.distortion is not None:
        m = doc.distortion
        out["distortion"] = {
            "pair_count": m.pair_count,
            "max_lower_violation": m.max_lower_violation,
            "max_upper_violation": m.max_upper_violation,
            "max_identity_violation": m.max_identity_violation,
            "bound_constant": m.bound_constant,
            "witnesses": [list(w) for w in m.witnesses],
        }
    if doc.tolerances is not None:
        out["tolerances"] = doc.tolerances
    return out


def write_report(doc: ReportDocument, path: str) -> None:
    """Atomic write (temp file + rename) of the report JSON."""
    body = json.dumps(document_to_dict(doc), indent=1) + "\n"
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(body)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def new_document(input_digest: str) -> ReportDocument:
    return ReportDocument(tool_version=__version__, input_digest=input_digest)
