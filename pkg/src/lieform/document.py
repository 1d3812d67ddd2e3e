"""Structured text documents describing an algebra plus named forms/endos.

A document is a single JSON file with the shape

    {
      "parameters": ["a", "b"],
      "algebra": {
        "dim": 4,
        "basis": ["e0", "e1", "e2", "e3"],
        "brackets": [{"i": 1, "j": 2, "coeffs": {"e3": "-1"}}, ...]
      },
      "forms":     {"omega": "e0^e1 + e2^e3", ...},
      "endos":     {"J": [["a", "-(1+a^2)/b", "0", "0"], ...], ...},
      "bilinears": {"B": [["1", "0", ...], ...], ...},
      "h_subalgebra": [["0", "1", "0", "0"], ...]        # optional
    }

Scalar entries use the literal grammar of the scalars module; wedge
expressions are sums of terms ``[scalar-literal *] name^name^...`` over the
dual basis.  Emission is canonical, so parse -> emit -> parse is the
identity.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exterior import KForm
from .lie_core import LieAlgebra
from .scalars import Scalar, parse_scalar, ScalarParseError


class DocumentError(Exception):
    pass


class FormParseError(DocumentError):
    def __init__(self, text, pos, msg):
        self.text = text
        self.pos = pos
        super().__init__(f"parse error at position {pos} in {text!r}: {msg}")


class Document:
    def __init__(self, parameters, algebra, forms=None, endos=None,
                 bilinears=None, h_subalgebra=None):
        self.parameters = list(parameters)
        self.algebra = algebra
        self.forms = dict(forms or {})
        self.endos = dict(endos or {})
        self.bilinears = dict(bilinears or {})
        self.h_subalgebra = h_subalgebra

    # -- building the exact objects -----------------------------------

    def build_algebra(self):
        basis = self.algebra["basis"]
        dim = self.algebra["dim"]
        if len(basis) != dim:
            raise DocumentError(
                f"dim is {dim} but the basis lists {len(basis)} names")
        params = tuple(self.parameters)
        brackets = {}
        for entry in self.algebra.get("brackets", []):
            i, j = entry["i"], entry["j"]
            if not (0 <= i < dim and 0 <= j < dim):
                raise DocumentError(f"bracket indices ({i},{j}) out of range")
            vec = [Scalar.zero(params)] * dim
            for name, literal in entry["coeffs"].items():
                if name not in basis:
                    raise DocumentError(
                        f"unknown basis name {name!r} in bracket ({i},{j})")
                vec[basis.index(name)] = parse_scalar(literal, params)
            brackets[(i, j)] = vec
        h = None
        if self.h_subalgebra:
            h = [[parse_scalar(c, params) for c in row]
                 for row in self.h_subalgebra]
        return LieAlgebra(basis, brackets, params=params, h_subalgebra=h)

    def build_form(self, name, g):
        if name not in self.forms:
            raise DocumentError(f"document has no form named {name!r}")
        return parse_form(self.forms[name], g)

    def build_matrix(self, table, name, g):
        if name not in table:
            raise DocumentError(f"document has no entry named {name!r}")
        rows = table[name]
        if len(rows) != g.dim or any(len(r) != g.dim for r in rows):
            raise DocumentError(f"matrix {name!r} has the wrong shape")
        return [[parse_scalar(c, g.params) for c in row] for row in rows]

    def build_endo(self, name, g):
        return self.build_matrix(self.endos, name, g)

    def build_bilinear(self, name, g):
        return self.build_matrix(self.bilinears, name, g)

    # -- (de)serialization --------------------------------------------

    def to_dict(self):
        out = {
            "parameters": self.parameters,
            "algebra": self.algebra,
            "forms": self.forms,
            "endos": self.endos,
            "bilinears": self.bilinears,
        }
        if self.h_subalgebra:
            out["h_subalgebra"] = self.h_subalgebra
        return out


def loads(text):
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if "algebra" not in raw:
        raise DocumentError("document lacks an 'algebra' section")
    for key in ("dim", "basis"):
        if key not in raw["algebra"]:
            raise DocumentError(f"algebra section lacks {key!r}")
    return Document(raw.get("parameters", []), raw["algebra"],
                    raw.get("forms"), raw.get("endos"), raw.get("bilinears"),
                    raw.get("h_subalgebra"))


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(doc):
    return json.dumps(doc.to_dict(), indent=2) + "\n"


def dump(doc, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))


# ---------------------------------------------------------------------------
# Wedge expressions
# ---------------------------------------------------------------------------

def _split_top(text, seps):
    """Split at top-level occurrences of the given single-char separators.

    Returns a list of (position, separator-or-None, chunk).
    """
    parts = []
    depth = 0
    start = 0
    lead_sep = None
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise FormParseError(text, pos, "unbalanced ')'")
        elif depth == 0 and ch in seps:
            parts.append((start, lead_sep, text[start:pos]))
            lead_sep = ch
            start = pos + 1
    if depth != 0:
        raise FormParseError(text, len(text), "unbalanced '('")
    parts.append((start, lead_sep, text[start:]))
    return parts


def _as_monomial(chunk, g):
    """Index tuple for ``name^name^...`` over the dual basis, else None."""
    names = [p.strip() for p in chunk.split("^")]
    if not names or any(not n for n in names):
        return None
    try:
        idx = tuple(g.basis_names.index(n) for n in names)
    except ValueError:
        return None
    return idx


def parse_form(text, g):
    """Parse a wedge expression like ``e0^e1 + -(1+a^2)/b * e1^e3``."""
    text = str(text)
    degree = None
    coeffs = {}
    sign = 1
    seen = False
    for pos, sep, chunk in _split_top(text, "+-"):
        if sep == "-":
            sign = -sign
        if not chunk.strip():
            # a sign run like "a + -b"; the sign carries to the next chunk
            continue
        seen = True
        factors = _split_top(chunk, "*")
        idx = _as_monomial(factors[-1][2], g)
        if idx is not None and len(factors) > 1:
            literal = "*".join(f[2] for f in factors[:-1])
        elif idx is not None:
            literal = "1"
        else:
            idx = ()
            literal = chunk
        try:
            c = parse_scalar(literal, g.params)
        except ScalarParseError as exc:
            raise FormParseError(text, pos + exc.pos, str(exc)) from exc
        if sign < 0:
            c = -c
        if degree is None:
            degree = len(idx)
        elif len(idx) != degree:
            raise FormParseError(
                text, pos, f"mixed degrees {degree} and {len(idx)}")
        if len(set(idx)) != len(idx):
            raise FormParseError(text, pos, "repeated factor in monomial")
        # normalize to increasing order with the permutation sign
        order = sorted(range(len(idx)), key=lambda t: idx[t])
        inv = sum(1 for x in range(len(order)) for y in range(x + 1, len(order))
                  if order[x] > order[y])
        if inv % 2:
            c = -c
        key = tuple(sorted(idx))
        coeffs[key] = coeffs.get(key, g.zero()) + c
        sign = 1
    if degree is None or not seen:
        raise FormParseError(text, 0, "empty expression")
    return KForm(g, degree, coeffs)


def emit_form(f):
    """Canonical wedge expression; parse(emit(f)) == f."""
    g = f.algebra
    if f.is_zero():
        return "0" if f.degree == 0 else "0 * " + "^".join(
            g.basis_names[i] for i in range(f.degree))
    parts = []
    for idx in sorted(f.coeffs):
        c = f.coeffs[idx]
        mono = "^".join(g.basis_names[i] for i in idx)
        if not idx:
            parts.append(f"({c})")
        else:
            parts.append(f"({c}) * {mono}")
    return " + ".join(parts)


def emit_scalar(s):
    return str(s)


def document_from_entry(entry):
    """Serialize a catalog entry (algebra + families) as a document."""
    g = entry.algebra
    brackets = []
    for (i, j), vec in sorted(g.structure_table().items()):
        brackets.append({
            "i": i, "j": j,
            "coeffs": {g.basis_names[k]: emit_scalar(c)
                       for k, c in enumerate(vec) if not c.is_zero()}})
    forms = {}
    endos = {}
    for name, fam in entry.families.items():
        if isinstance(fam, KForm):
            forms[name] = emit_form(fam)
        else:
            endos[name] = [[emit_scalar(c) for c in row]
                           for row in fam.matrix]
    bilinears = {name: [[emit_scalar(c) for c in row] for row in mat]
                 for name, mat in entry.bilinears.items()}
    return Document(
        list(g.params),
        {"dim": g.dim, "basis": list(g.basis_names), "brackets": brackets},
        forms, endos, bilinears)
