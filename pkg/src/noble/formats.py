"""Flat-file formats and JSON documents.

Cayley files::

    # name: E3
    cayley 3
    0 0 0
    0 1 1
    0 1 2

Generator files list partial bijections of ``{0, ..., m-1}``, one per line,
with ``-`` where a point is undefined::

    points 2
    1 -

JSON documents are written with sorted keys so that equal inputs give
byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
from typing import Iterable, Optional, Sequence

from .algebra import SemigroupTable, validate_inverse_semigroup
from .engine import (
    CUSTOM,
    FilterFamily,
    NobilityCertificate,
    Representation,
    make_family,
)
from .errors import NotInjective, ParseError, ValidationError
from .partial import UNDEF, ConcreteFamily, PartialBijection, generate_closure

FORMAT_VERSION = 1


def _content_lines(text: str):
    """Yield ``(line number, tokens)`` for non-blank, non-comment lines."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line.split()


def _header(lines, keyword: str) -> int:
    try:
        no, tokens = next(lines)
    except StopIteration:
        raise ParseError(1, f"empty input, expected '{keyword} <n>'") from None
    if len(tokens) != 2 or tokens[0] != keyword:
        raise ParseError(no, f"expected '{keyword} <n>'")
    try:
        n = int(tokens[1])
    except ValueError:
        raise ParseError(no, f"size {tokens[1]!r} is not an integer") from None
    if n < 1:
        raise ParseError(no, "size must be positive")
    return n


def _name_of(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#") and line[1:].strip().startswith("name:"):
            return line[1:].strip()[len("name:"):].strip()
    return ""


def sniff(text: str) -> str:
    """``"cayley"`` or ``"points"`` according to the header keyword."""
    for _, tokens in _content_lines(text):
        if tokens[0] in ("cayley", "points"):
            return tokens[0]
        break
    raise ParseError(1, "expected a 'cayley' or 'points' header")


def parse_cayley(text: str) -> SemigroupTable:
    lines = _content_lines(text)
    n = _header(lines, "cayley")
    rows = []
    for no, tokens in lines:
        if len(rows) == n:
            raise ParseError(no, f"more than {n} rows")
        if len(tokens) != n:
            raise ParseError(no, f"expected {n} entries, got {len(tokens)}")
        row = []
        for tok in tokens:
            try:
                x = int(tok)
            except ValueError:
                raise ParseError(no, f"entry {tok!r} is not an integer") from None
            if not 0 <= x < n:
                raise ParseError(no, f"entry {x} out of range 0..{n - 1}")
            row.append(x)
        rows.append(row)
    if len(rows) != n:
        raise ParseError(len(text.splitlines()), f"expected {n} rows, got {len(rows)}")
    return validate_inverse_semigroup(rows, name=_name_of(text))


def emit_cayley(S: SemigroupTable) -> str:
    out = []
    if S.name:
        out.append(f"# name: {S.name}")
    out.append(f"cayley {S.n}")
    out.extend(" ".join(map(str, row)) for row in S.table)
    return "\n".join(out) + "\n"


def parse_generator_list(text: str) -> tuple[int, list[PartialBijection]]:
    """The point count and the generators exactly as written."""
    lines = _content_lines(text)
    m = _header(lines, "points")
    gens = []
    for no, tokens in lines:
        if len(tokens) != m:
            raise ParseError(no, f"expected {m} entries, got {len(tokens)}")
        images = []
        for tok in tokens:
            if tok == "-":
                images.append(UNDEF)
                continue
            try:
                x = int(tok)
            except ValueError:
                raise ParseError(no, f"entry {tok!r} is neither a point nor '-'") from None
            if not 0 <= x < m:
                raise ParseError(no, f"point {x} out of range 0..{m - 1}")
            images.append(x)
        defined = [x for x in images if x != UNDEF]
        if len(set(defined)) != len(defined):
            raise NotInjective(no)
        gens.append(PartialBijection(m, tuple(images)))
    return m, gens


def parse_generators(text: str) -> ConcreteFamily:
    _, gens = parse_generator_list(text)
    return generate_closure(gens)


def emit_generators(m: int, maps: Iterable[PartialBijection]) -> str:
    out = [f"points {m}"]
    for phi in maps:
        out.append(" ".join("-" if x == UNDEF else str(x) for x in phi.map))
    return "\n".join(out) + "\n"


def load_semigroup(text: str) -> SemigroupTable:
    """A table from either file format; generator files are closed first."""
    if sniff(text) == "cayley":
        return parse_cayley(text)
    from .partial import abstract_table_of

    S, _ = abstract_table_of(parse_generators(text), name=_name_of(text))
    return S


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


# -- documents ---------------------------------------------------------------

def _image(phi: PartialBijection) -> list:
    return [None if x == UNDEF else x for x in phi.map]


def representation_document(rep: Representation) -> dict:
    fam = rep.family
    return {
        "family": [list(F.ids()) for F in fam],
        "family_kind": fam.kind,
        "anchor": None if fam.anchor is None else list(fam.anchor.ids()),
        "action": [_image(phi) for phi in rep.action],
        "flags": rep.flags(),
    }


def load_representation(S: SemigroupTable, doc: dict) -> Representation:
    """Rebuild a representation; flags are left unchecked."""
    try:
        family = make_family(
            S, [S.element_set(ids) for ids in doc["family"]], doc.get("family_kind", CUSTOM),
            anchor=None if doc.get("anchor") is None else S.element_set(doc["anchor"]),
        )
        k = len(family)
        action = tuple(
            PartialBijection(k, tuple(UNDEF if x is None else int(x) for x in img))
            for img in doc["action"]
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(0, f"malformed representation document: {exc}") from None
    if len(action) != S.n:
        raise ValidationError(f"action lists {len(action)} elements, semigroup has {S.n}")
    return Representation(family, action)


def certificate_document(cert: NobilityCertificate, source: str) -> dict:
    from . import __version__

    doc = {
        "tool": "noble",
        "version": __version__,
        "format": FORMAT_VERSION,
        "input_digest": digest(source),
        "verdict": cert.verdict,
        "witness": None,
        "refutation": None,
        "findings": cert.findings,
    }
    if cert.witness is not None:
        w = cert.witness
        doc["witness"] = {
            "H": list(w.H.ids()),
            "degree": w.representation.degree,
            "degenerate": w.degenerate,
            **representation_document(w.representation),
        }
    if cert.refutation is not None:
        doc["refutation"] = {
            "candidates": [
                {"H": list(H.ids()), "failing_idempotent": e} for H, e in cert.refutation.candidates
            ],
            "oracle_bound": cert.refutation.oracle_bound,
        }
    return doc


def family_document(family: FilterFamily) -> list:
    return [list(F.ids()) for F in family]


def ids_from_text(text: str) -> list[int]:
    """Parse ``"1,5"`` or ``"1 5"`` into element ids."""
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(0, f"bad element list {text!r}") from None
