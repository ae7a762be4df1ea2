"""JSON documents describing a monodromy representation.

    {
      "field": {"cyclotomic_order": 3},
      "coefficients": "field",            # or "integers"
      "fiber_rank": 4,
      "generators": [{"label": "-27/16", "matrix": [["1", "0", ...], ...]}, ...],
      "distinguished": "0",
      "metadata": {"n": 3, "h_good": true, "b_n_F": 4, "euler_MX": null}
    }

Entries are strings in the entry grammar ("1/2", "z^2+1") or integers.
"""

import hashlib
import json

from .arith.field import CyclotomicField
from .arith.grammar import ParseError, parse_entry
from .linalg import FieldMatrix
from .monodromy import MonodromyRep


class DocumentError(ValueError):
    """Structural problem in a document (exit code 2 at the CLI)."""


def _require(doc, key, where="document"):
    if key not in doc:
        raise DocumentError(f"{where}: missing key {key!r}")
    return doc[key]


def rep_from_document(doc):
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    order = int(_require(doc, "field").get("cyclotomic_order", 1))
    if order < 1:
        raise DocumentError("cyclotomic_order must be positive")
    field = CyclotomicField(order)
    coefficients = doc.get("coefficients", "field")
    if coefficients not in ("field", "integers"):
        raise DocumentError("coefficients must be 'field' or 'integers'")
    m = int(_require(doc, "fiber_rank"))
    gens = _require(doc, "generators")
    if not gens:
        raise DocumentError("need at least one generator")
    mats, labels = [], []
    for k, g in enumerate(gens):
        where = f"generator {k}"
        label = str(_require(g, "label", where))
        rows = _require(g, "matrix", where)
        if len(rows) != m or any(len(r) != m for r in rows):
            raise DocumentError(f"{where}: matrix must be {m}x{m}")
        parsed = []
        for i, row in enumerate(rows):
            out = []
            for j, entry in enumerate(row):
                try:
                    out.append(parse_entry(entry, field))
                except ParseError as exc:
                    raise ParseError(
                        f"{where} ({label}), entry [{i}][{j}]: {exc.message}", exc.text, exc.offset
                    ) from None
            parsed.append(out)
        mats.append(FieldMatrix(parsed, field))
        labels.append(label)
    if len(set(labels)) != len(labels):
        raise DocumentError("labels must be unique")
    dist = str(doc.get("distinguished", labels[0]))
    if dist not in labels:
        raise DocumentError(f"distinguished value {dist!r} is not a generator label")
    meta = doc.get("metadata", {})
    return MonodromyRep(
        tuple(mats),
        tuple(labels),
        labels.index(dist),
        n=int(meta.get("n", 1)),
        h_good=bool(meta.get("h_good", False)),
        coefficients=coefficients,
        b_n_F=meta.get("b_n_F"),
        euler_MX=meta.get("euler_MX"),
    )


def rep_to_document(rep):
    return {
        "field": {"cyclotomic_order": rep.field.order},
        "coefficients": rep.coefficients,
        "fiber_rank": rep.fiber_rank,
        "generators": [
            {"label": lab, "matrix": M.to_strings()} for lab, M in zip(rep.labels, rep.matrices)
        ],
        "distinguished": rep.labels[rep.distinguished],
        "metadata": {"n": rep.n, "h_good": rep.h_good, "b_n_F": rep.b_n_F, "euler_MX": rep.euler_MX},
    }


def load_document(path):
    """Return (MonodromyRep, sha256 hex digest of the raw bytes)."""
    with open(path, "rb") as fh:
        raw = fh.read()
    digest = hashlib.sha256(raw).hexdigest()
    try:
        doc = json.loads(raw.decode("utf-8"))
    except json.JSONDecodeError as exc:
        text = raw.decode("utf-8", errors="replace")
        raise ParseError(f"invalid JSON: {exc.msg}", text, exc.pos) from None
    return rep_from_document(doc), digest


def dump_document(rep, path=None):
    text = json.dumps(rep_to_document(rep), indent=2, ensure_ascii=False)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return text
