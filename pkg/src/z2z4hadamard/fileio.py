"""Version-tagged text format for codes and generator matrices.

A file is a sequence of sections; each starts with a header line::

    Z2Z4 v1 alpha=<a> beta=<b> gamma=<g> delta=<d>
    BIN v1 n=<n>
    MATRIX Z2Z4 v1 alpha=... beta=... gamma=... delta=... name=<G|K|S>
    MATRIX BIN v1 n=<n> name=<G|K|S>

followed by one word per line.  Mixed words are written as the binary part,
one space, then the quaternary part; binary-only words as a 0/1 string.
Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .algebra import CodeType, MixedWord, phi_ext
from .codes import AdditiveCode, BinaryCode, bits_to_int, int_to_bits
from .construct import Matrix, PointLayout

VERSION = "v1"
_MIXED_KEYS = ("alpha", "beta", "gamma", "delta")


class FormatError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass
class Section:
    kind: str  # "Z2Z4" or "BIN"
    matrix: bool
    fields: dict
    lineno: int
    rows: list = field(default_factory=list)

    @property
    def name(self) -> str | None:
        return self.fields.get("name")

    def code_type(self) -> CodeType | None:
        if self.kind != "Z2Z4":
            return None
        return CodeType(*(int(self.fields[k]) for k in _MIXED_KEYS))

    @property
    def n(self) -> int:
        if self.kind == "BIN":
            return int(self.fields["n"])
        return int(self.fields["alpha"]) + 2 * int(self.fields["beta"])


def mixed_line(m: MixedWord) -> str:
    return "".join(map(str, m.bits)) + " " + "".join(map(str, m.quats))


def _mixed_header(t: CodeType) -> str:
    return f"Z2Z4 {VERSION} alpha={t.alpha} beta={t.beta} gamma={t.gamma} delta={t.delta}"


def format_additive(code: AdditiveCode) -> str:
    lines = [_mixed_header(code.type)] + [mixed_line(m) for m in code.sorted_words()]
    return "\n".join(lines) + "\n"


def format_binary(code: BinaryCode) -> str:
    lines = [f"BIN {VERSION} n={code.n}"] + ["".join(map(str, w)) for w in code.tuples()]
    return "\n".join(lines) + "\n"


def format_matrix(mat: Matrix, layout: PointLayout | None = None, t: CodeType | None = None) -> str:
    """Rows in the mixed view when a layout and code type are given, else as bits."""
    if layout is not None and t is not None:
        head = f"MATRIX {_mixed_header(t)} name={mat.name} rows={len(mat.rows)}"
        body = [mixed_line(m) for m in mat.mixed(layout)]
    else:
        head = f"MATRIX BIN {VERSION} n={mat.n} name={mat.name} rows={len(mat.rows)}"
        body = ["".join(map(str, int_to_bits(r, mat.n))) for r in mat.rows]
    return "\n".join([head, *body]) + "\n"


def _parse_header(tokens: list[str], lineno: int) -> Section:
    matrix = tokens[0] == "MATRIX"
    if matrix:
        tokens = tokens[1:]
    if not tokens or tokens[0] not in ("Z2Z4", "BIN"):
        raise FormatError(lineno, "expected a Z2Z4, BIN or MATRIX header")
    kind = tokens[0]
    if len(tokens) < 2 or tokens[1] != VERSION:
        raise FormatError(lineno, f"unsupported or missing version tag (expected {VERSION})")
    fields = {}
    for tok in tokens[2:]:
        key, sep, val = tok.partition("=")
        if not sep or not key:
            raise FormatError(lineno, f"malformed header field {tok!r}")
        fields[key] = val
    required = _MIXED_KEYS if kind == "Z2Z4" else ("n",)
    for key in required:
        if key not in fields:
            raise FormatError(lineno, f"header is missing {key}=")
        if not fields[key].isdigit():
            raise FormatError(lineno, f"{key} must be a non-negative integer")
    return Section(kind, matrix, fields, lineno)


def _parse_row(sec: Section, line: str, lineno: int):
    if sec.kind == "BIN":
        if len(line) != sec.n or set(line) - {"0", "1"}:
            raise FormatError(lineno, f"expected {sec.n} characters from 0/1")
        return tuple(int(c) for c in line)
    alpha, beta = int(sec.fields["alpha"]), int(sec.fields["beta"])
    if " " in line:
        bits, _, quats = line.partition(" ")
    elif alpha == 0:
        bits, quats = "", line
    else:
        bits, quats = line, ""
    if len(bits) != alpha or set(bits) - {"0", "1"}:
        raise FormatError(lineno, f"binary part must be {alpha} characters from 0/1")
    if len(quats) != beta or set(quats) - set("0123"):
        raise FormatError(lineno, f"quaternary part must be {beta} characters from 0-3")
    return MixedWord(alpha, beta, tuple(int(c) for c in bits), tuple(int(c) for c in quats))


def parse_sections(text: str) -> list[Section]:
    sections: list[Section] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] in ("Z2Z4", "BIN", "MATRIX"):
            sections.append(_parse_header(tokens, lineno))
            continue
        if not sections:
            raise FormatError(lineno, "data before the first header line")
        sections[-1].rows.append(_parse_row(sections[-1], line, lineno))
    if not sections:
        raise FormatError(1, "empty file")
    return sections


def section_code(sec: Section) -> AdditiveCode | BinaryCode:
    if not sec.rows:
        raise FormatError(sec.lineno, "section has no words")
    if sec.kind == "BIN":
        return BinaryCode.from_tuples(sec.rows, sec.n)
    return AdditiveCode(sec.code_type(), frozenset(sec.rows))


def loads(text: str) -> AdditiveCode | BinaryCode:
    """The code stored in the first section."""
    return section_code(parse_sections(text)[0])


def load_code(path: str | Path) -> AdditiveCode | BinaryCode:
    return loads(Path(path).read_text())


def to_binary(code: AdditiveCode | BinaryCode) -> BinaryCode:
    """Binary view of a loaded code; additive codes go through the Gray map."""
    if isinstance(code, BinaryCode):
        return code
    return BinaryCode(code.type.n, frozenset(bits_to_int(phi_ext(m)) for m in code.words), code.type)


def save(path: str | Path, *chunks: str) -> None:
    Path(path).write_text("".join(chunks))
