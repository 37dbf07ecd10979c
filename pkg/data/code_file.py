"""
Text formats for codes.

Code files:

    # comment
    q 2
    n 6
    [quantum_stabilizer]
    YIZXXY
    ...
    [classical_stabilizer]
    IIIXII
    [translations]
    IIIZIZ

with optional [gauge_x] / [gauge_z] sections for subsystem codes and an optional
"poly c0 c1 ... cl" header line overriding the default field polynomial.

Classical code files: "q <int>", "n <int> k <int>", then k rows of n encodings.
"""
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np

from algebra.finite_field import DEFAULT_FIELDS, FieldSpec, get_field
from algebra.pauli import PauliOperator, format_pauli, parse_pauli
from codes.bacon_casaccino import LinearCode
from codes.hybrid import HybridCode, gauge_fix
from codes.stabilizer import new_stabilizer
from codes.subsystem import SubsystemCode, validate_subsystem
from utils.errors import ParseError

logger = logging.getLogger(__name__)

SECTIONS = ["quantum_stabilizer", "stabilizer", "classical_stabilizer", "gauge_x", "gauge_z", "translations"]
_section_re = re.compile(r"^\[([a-z_]+)\]$")
_header_re = re.compile(r"^(q|n|poly)\s+(.*)$")


@dataclass
class CodeFile:
    q: int
    n: int
    spec: FieldSpec
    sections: Dict[str, List[PauliOperator]] = field(default_factory=dict)
    comments: List[str] = field(default_factory=list)

    @property
    def stabilizer(self) -> List[PauliOperator]:
        return self.sections.get("quantum_stabilizer", self.sections.get("stabilizer", []))

    @property
    def kind(self) -> str:
        if "classical_stabilizer" in self.sections:
            return "hybrid"
        if "gauge_x" in self.sections or "gauge_z" in self.sections:
            return "subsystem"
        return "stabilizer"

    def to_subsystem(self) -> SubsystemCode:
        pairs = list(zip(self.sections.get("gauge_x", []), self.sections.get("gauge_z", [])))
        return validate_subsystem(self.stabilizer, pairs, n=self.n, spec=self.spec)

    def to_hybrid(self, fixed=None) -> HybridCode:
        """The hybrid code in the file; subsystem files are gauge fixed with the given selection."""
        if self.kind == "subsystem":
            return gauge_fix(self.to_subsystem(), fixed)
        quantum = new_stabilizer(self.stabilizer, n=self.n, spec=self.spec)
        translations = self.sections.get("translations")
        return HybridCode(quantum, self.sections.get("classical_stabilizer", []), translations)


def _parse_header(key, value, lineno):
    try:
        numbers = [int(v) for v in value.split()]
    except ValueError:
        raise ParseError("bad %s header %r" % (key, value), line=lineno, column=len(key) + 2)
    if key in ("q", "n") and len(numbers) != 1:
        raise ParseError("%s takes one integer" % key, line=lineno, column=len(key) + 2)
    return numbers


def parse_code_file(text: str) -> CodeFile:
    q = n = None
    poly = None
    sections: Dict[str, List[PauliOperator]] = {}
    comments = []
    current = None
    spec = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        match = _section_re.match(line)
        if match is not None:
            name = match.group(1)
            if name not in SECTIONS:
                raise ParseError("unknown section [%s]" % name, line=lineno, column=2)
            if name in sections:
                raise ParseError("section [%s] appears twice" % name, line=lineno, column=2)
            if q is None or n is None:
                raise ParseError("q and n must precede the first section", line=lineno, column=1)
            if spec is None:
                spec = _field(q, poly, lineno)
            current = name
            sections[name] = []
            continue
        match = _header_re.match(line)
        if match is not None and current is None:
            key, value = match.groups()
            numbers = _parse_header(key, value, lineno)
            if key == "q":
                q = numbers[0]
            elif key == "n":
                n = numbers[0]
            else:
                poly = numbers
            continue
        if current is None:
            raise ParseError("expected a header line or a section", line=lineno, column=1)
        sections[current].append(parse_pauli(line, spec, n=n, line=lineno))
    if q is None or n is None:
        raise ParseError("missing q or n header", line=1, column=1)
    if "stabilizer" in sections and "quantum_stabilizer" in sections:
        raise ParseError("give either [stabilizer] or [quantum_stabilizer], not both", line=1, column=1)
    if "stabilizer" not in sections and "quantum_stabilizer" not in sections:
        raise ParseError("missing [quantum_stabilizer] or [stabilizer] section", line=1, column=1)
    if len(sections.get("gauge_x", [])) != len(sections.get("gauge_z", [])):
        raise ParseError("[gauge_x] and [gauge_z] must have the same number of rows", line=1, column=1)
    return CodeFile(q, n, spec or _field(q, poly, 1), sections, comments)


def _field(q, poly, lineno):
    if poly is None:
        try:
            return get_field(q)
        except ValueError as e:
            raise ParseError(str(e), line=lineno, column=1)
    p = int(round(q ** (1.0 / (len(poly) - 1)))) if len(poly) > 1 else q
    if p ** (len(poly) - 1) != q:
        raise ParseError("polynomial of degree %d does not define a field of order %d" % (len(poly) - 1, q),
                         line=lineno, column=1)
    try:
        return FieldSpec(p, len(poly) - 1, tuple(poly))
    except ValueError as e:
        raise ParseError(str(e), line=lineno, column=1)


def read_code_file(path) -> CodeFile:
    with open(path, "r", encoding="utf-8") as f:
        return parse_code_file(f.read())


def emit_code_file(code: CodeFile) -> str:
    lines = ["# %s" % c for c in code.comments]
    lines.append("q %d" % code.q)
    lines.append("n %d" % code.n)
    if code.q not in DEFAULT_FIELDS or code.spec != get_field(code.q):
        lines.append("poly %s" % " ".join(str(c) for c in code.spec.poly))
    for name in SECTIONS:
        if name not in code.sections:
            continue
        lines.append("")
        lines.append("[%s]" % name)
        lines.extend(format_pauli(op) for op in code.sections[name])
    return "\n".join(lines) + "\n"


def write_code_file(code: CodeFile, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(emit_code_file(code))


def from_hybrid(h: HybridCode, comments=()) -> CodeFile:
    sections = {
        "quantum_stabilizer": h.quantum.signed_generators(),
        "classical_stabilizer": list(h.classical_gens),
        "translations": list(h.translations),
    }
    return CodeFile(h.spec.q, h.n, h.spec, sections, list(comments))


def from_subsystem(c: SubsystemCode, comments=()) -> CodeFile:
    sections = {
        "stabilizer": c.stabilizer.signed_generators(),
        "gauge_x": c.gauge_x,
        "gauge_z": c.gauge_z,
    }
    return CodeFile(c.spec.q, c.n, c.spec, sections, list(comments))


def parse_linear_code(text: str) -> LinearCode:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if len(rows) < 2:
        raise ParseError("expected 'q <int>' and 'n <int> k <int>' header lines", line=1, column=1)
    lineno, line = rows[0]
    match = re.match(r"^q\s+(\d+)$", line)
    if match is None:
        raise ParseError("expected 'q <int>'", line=lineno, column=1)
    q = int(match.group(1))
    lineno, line = rows[1]
    match = re.match(r"^n\s+(\d+)\s+k\s+(\d+)$", line)
    if match is None:
        raise ParseError("expected 'n <int> k <int>'", line=lineno, column=1)
    n, k = int(match.group(1)), int(match.group(2))
    spec = _field(q, None, 1)
    body = rows[2:]
    if len(body) != k:
        raise ParseError("expected %d generator rows, found %d" % (k, len(body)), line=lineno, column=1)
    matrix = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError("expected %d entries, found %d" % (n, len(tokens)), line=lineno, column=1)
        row = []
        column = 1
        for token in tokens:
            if not token.isdigit() or int(token) >= q:
                raise ParseError("bad field encoding %r" % token, line=lineno, column=column)
            row.append(int(token))
            column += len(token) + 1
        matrix.append(row)
    return LinearCode(spec, np.array(matrix, dtype=np.int64).reshape(k, n))


def read_linear_code(path) -> LinearCode:
    with open(path, "r", encoding="utf-8") as f:
        return parse_linear_code(f.read())


def emit_linear_code(c: LinearCode) -> str:
    lines = ["q %d" % c.spec.q, "n %d k %d" % (c.n, c.k)]
    for row in c.generator.view(np.ndarray):
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"
