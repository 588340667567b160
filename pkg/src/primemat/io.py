"""Text and JSON interchange for matrices, vectors and Gaussian integers.

Matrix text grammar: rows separated by ``;`` or newlines, entries by
whitespace or commas, optional surrounding quotes (``"1 0; 2 3"``). JSON
form: ``{"rows": [[1, 0], [2, 3]]}`` or a bare list of rows. Vectors are a
JSON array or whitespace-separated integers.
"""
import json
import os
from typing import Any, List

from .core import IntMatrix, IntVector
from .errors import DimensionMismatchError, ParseError


def _strip_quotes(text: str) -> str:
    text = text.strip()
    if len(text) >= 2 and text[0] == text[-1] and text[0] in "'\"":
        text = text[1:-1].strip()
    return text


def _int(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"not an integer: {tok!r}") from None


def _check_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"not an integer: {x!r}")
    return x


def matrix_from_obj(obj: Any) -> IntMatrix:
    if isinstance(obj, dict):
        if "rows" not in obj:
            raise ParseError('matrix object needs a "rows" key')
        obj = obj["rows"]
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise ParseError("matrix must be a non-empty list of rows")
    try:
        return IntMatrix([[_check_int(x) for x in r] for r in obj])
    except DimensionMismatchError as e:
        raise ParseError(str(e)) from None


def parse_matrix(text: str) -> IntMatrix:
    text = _strip_quotes(text)
    if not text:
        raise ParseError("empty matrix")
    if text[0] in "[{":
        try:
            return matrix_from_obj(json.loads(text))
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON matrix: {e}") from None
    rows = [r for r in text.replace("\n", ";").split(";") if r.strip()]
    try:
        return IntMatrix([[_int(t) for t in r.replace(",", " ").split()] for r in rows])
    except DimensionMismatchError as e:
        raise ParseError(str(e)) from None


def vector_from_obj(obj: Any) -> IntVector:
    if not isinstance(obj, list) or not obj:
        raise ParseError("vector must be a non-empty JSON array")
    return tuple(_check_int(x) for x in obj)


def parse_vector(text: str) -> IntVector:
    text = _strip_quotes(text)
    if text.startswith("["):
        try:
            return vector_from_obj(json.loads(text))
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON vector: {e}") from None
    toks = text.replace(",", " ").split()
    if not toks:
        raise ParseError("empty vector")
    return tuple(_int(t) for t in toks)


def parse_matrix_list(text: str) -> List[IntMatrix]:
    """A list of matrices: JSON (list of matrices, ``{"moduli": ...}`` or the
    ``{"matrices": ...}`` family output), or text blocks separated by blank lines."""
    stripped = text.strip()
    if stripped.startswith(("[", "{")):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON: {e}") from None
        if isinstance(obj, dict):
            for key in ("moduli", "matrices"):
                if key in obj:
                    obj = obj[key]
                    break
            else:
                raise ParseError('expected a "moduli" or "matrices" key')
        if not isinstance(obj, list) or not obj:
            raise ParseError("expected a non-empty list of matrices")
        return [matrix_from_obj(m) for m in obj]
    blocks = [b for b in stripped.split("\n\n") if b.strip()]
    if not blocks:
        raise ParseError("no matrices given")
    return [parse_matrix(b) for b in blocks]


def parse_vector_list(text: str) -> List[IntVector]:
    """JSON list of vectors (or ``{"remainders": ...}``), or one vector per line."""
    stripped = text.strip()
    if stripped.startswith(("[", "{")):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON: {e}") from None
        if isinstance(obj, dict):
            if "remainders" not in obj:
                raise ParseError('expected a "remainders" key')
            obj = obj["remainders"]
        if not isinstance(obj, list):
            raise ParseError("expected a list of vectors")
        return [vector_from_obj(v) for v in obj]
    return [parse_vector(line) for line in stripped.splitlines() if line.strip()]


def read_source(arg: str, stdin=None) -> str:
    """Resolve an argument to text: ``-`` is stdin, ``@path`` or an existing
    file path is read, anything else is the literal text."""
    if arg == "-":
        import sys

        return (stdin or sys.stdin).read()
    if arg.startswith("@"):
        path = arg[1:]
    elif os.path.isfile(arg):
        path = arg
    else:
        return arg
    try:
        with open(path) as f:
            return f.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from None


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))
