"""JSON persistence of canonical configurations.

Documents are written with a fixed key order and every float printed with
17 significant digits, so output is byte-for-byte reproducible and parses
back to exactly the same doubles.  Complex numbers are ``[re, im]`` pairs;
the point at infinity is the string ``"inf"``.
"""

import json
import math
from importlib import resources

import numpy as np

from .elliptic import LatticeBasis
from .errors import InvalidInput, LabelingFailure
from .isotopy import IsotopyClass, Pairing, class_pairing
from .mobius import MobiusMap, RootTriple
from .polyline import Polyline
from .solver import CanonicalConfiguration, SamplingBudget
from .sphere import INF

FORMAT = "canonical-arcs/config"
SCHEMA_VERSION = 1
TOOL_VERSION = "0.1.0"


class _Inline(list):
    """A list emitted on a single line."""


def _num(x):
    x = float(x)
    if not math.isfinite(x):
        raise InvalidInput(f"non-finite number {x} cannot be serialized")
    if x == 0:
        x = 0.0  # drop the sign of -0.0
    return x


def _cplx(z):
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        return "inf"
    return _Inline([_num(z.real), _num(z.imag)])


def _emit(obj, indent, out):
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        items = list(obj.items())
        for n, (k, v) in enumerate(items):
            out.append(f"{pad}  {json.dumps(k)}: ")
            _emit(v, indent + 1, out)
            out.append(",\n" if n < len(items) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, _Inline):
        out.append("[")
        for n, v in enumerate(obj):
            _emit(v, indent, out)
            if n < len(obj) - 1:
                out.append(", ")
        out.append("]")
    elif isinstance(obj, list):
        if not obj:
            out.append("[]")
            return
        out.append("[\n")
        for n, v in enumerate(obj):
            out.append(pad + "  ")
            _emit(v, indent + 1, out)
            out.append(",\n" if n < len(obj) - 1 else "\n")
        out.append(pad + "]")
    elif isinstance(obj, bool) or obj is None:
        out.append(json.dumps(obj))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(format(_num(obj), ".17g"))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_document(doc):
    """Deterministic text of a JSON-compatible document (trailing newline)."""
    out = []
    _emit(doc, 0, out)
    out.append("\n")
    return "".join(out)


def config_to_document(config):
    b = config.basis
    r = b.roots
    return {
        "format": FORMAT,
        "schema_version": SCHEMA_VERSION,
        "tool_version": TOOL_VERSION,
        "points": [_cplx(p) for p in config.points],
        "class": {"r": config.cls.r, "s": config.cls.s},
        "pairing": str(config.pairing),
        "basis": {
            "omega1_0": _cplx(b.omega1_0),
            "omega2_0": _cplx(b.omega2_0),
            "tau": _cplx(b.tau),
            "w1": _cplx(b.w1),
            "w2": _cplx(b.w2),
        },
        "roots": {
            "e1": _cplx(r.e1),
            "e2": _cplx(r.e2),
            "e3": _cplx(r.e3),
            "scale": _cplx(r.scale),
        },
        "normalization": [_cplx(v) for v in config.normalization.as_tuple()],
        "class_periods": {
            "omega1": _cplx(config.omega1),
            "omega2": _cplx(config.omega2),
            "companion": _Inline([int(v) for v in config.companion]),
        },
        "arcs": [
            [_cplx(p) for p in config.arc0.points],
            [_cplx(p) for p in config.arc1.points],
        ],
        "metadata": {
            "flatLength0": _num(config.flat_length0),
            "flatLength1": _num(config.flat_length1),
            "annulusModulus": _num(config.annulus_modulus),
            "separation": _num(config.separation),
            "samplingBudget": {
                "h": _num(config.budget.h),
                "theta_max_deg": _num(config.budget.theta_max_deg),
                "cap": int(config.budget.cap),
                "initial": int(config.budget.initial),
            },
        },
    }


def dumps_config(config):
    return dumps_document(config_to_document(config))


def load_schema():
    text = resources.files("canonical_arcs.schema").joinpath("config-v1.json").read_text()
    return json.loads(text)


def _parse_cplx(v):
    if v == "inf":
        return INF
    if not (isinstance(v, list) and len(v) == 2):
        raise InvalidInput(f"expected [re, im] or \"inf\", got {v!r}")
    return complex(float(v[0]), float(v[1]))


def document_to_config(doc):
    """Rebuild a configuration from a parsed document (no recomputation of arcs)."""
    try:
        if doc.get("format") != FORMAT:
            raise InvalidInput(f"not a {FORMAT} document")
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise InvalidInput(f"unsupported schema version {doc.get('schema_version')!r}")
        cls = IsotopyClass(int(doc["class"]["r"]), int(doc["class"]["s"]))
        pairing = Pairing.parse(doc["pairing"])
        if pairing is not class_pairing(cls):
            raise InvalidInput(f"pairing {pairing} does not match class {cls}")
        rt = doc["roots"]
        roots = RootTriple(*(_parse_cplx(rt[k]) for k in ("e1", "e2", "e3", "scale")))
        bd = doc["basis"]
        try:
            basis = LatticeBasis.from_parts(
                _parse_cplx(bd["omega1_0"]),
                _parse_cplx(bd["omega2_0"]),
                roots,
                _parse_cplx(bd["w1"]),
                _parse_cplx(bd["w2"]),
            )
        except LabelingFailure as exc:
            raise InvalidInput(f"stored basis is inconsistent: {exc}") from None
        if basis.tau != _parse_cplx(bd["tau"]):
            raise InvalidInput("stored tau disagrees with the stored reduced basis")
        cp = doc["class_periods"]
        md = doc["metadata"]
        sb = md["samplingBudget"]
        arcs = [Polyline(np.array([_parse_cplx(p) for p in a], np.complex128)) for a in doc["arcs"]]
        if len(arcs) != 2:
            raise InvalidInput("a configuration has exactly two arcs")
        points = tuple(_parse_cplx(p) for p in doc["points"])
        if len(points) != 4:
            raise InvalidInput("a configuration has exactly four points")
        return CanonicalConfiguration(
            points=points,
            cls=cls,
            pairing=pairing,
            basis=basis,
            omega1=_parse_cplx(cp["omega1"]),
            omega2=_parse_cplx(cp["omega2"]),
            companion=tuple(int(v) for v in cp["companion"]),
            arc0=arcs[0],
            arc1=arcs[1],
            flat_length0=float(md["flatLength0"]),
            flat_length1=float(md["flatLength1"]),
            annulus_modulus=float(md["annulusModulus"]),
            normalization=MobiusMap(*(_parse_cplx(v) for v in doc["normalization"])),
            budget=SamplingBudget(
                h=float(sb["h"]),
                theta_max_deg=float(sb["theta_max_deg"]),
                cap=int(sb["cap"]),
                initial=int(sb["initial"]),
            ),
            separation=float(md["separation"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidInput):
            raise
        raise InvalidInput(f"malformed configuration document: {exc!r}") from None


def loads_config(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InvalidInput("configuration document must be a JSON object")
    return document_to_config(doc)
