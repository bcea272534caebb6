"""JSON encodings of spaces, filters, families, sequences, magmas and
eventually periodic sets.

Encoders return plain dicts/lists; decoders validate and raise
``ParseError`` naming the offending field.
"""

import json

from .bits import mask_key, members, to_mask
from .errors import FrolikLabError, ParseError
from .filters import Filter, FilterFamily
from .topology import FiniteSpace, make_standard, validate_topology


def _sets(masks):
    return [list(members(m)) for m in sorted(masks, key=mask_key)]


def _int(value, where, minimum=0):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", where)
    if value < minimum:
        raise ParseError(f"expected an integer >= {minimum}, got {value}", where)
    return value


def _list(value, where):
    if not isinstance(value, list):
        raise ParseError(f"expected a list, got {type(value).__name__}", where)
    return value


def _field(obj, key, where):
    if not isinstance(obj, dict):
        raise ParseError(f"expected an object, got {type(obj).__name__}", where)
    if key not in obj:
        raise ParseError(f"missing field {key!r}", where)
    return obj[key]


def _index_set(value, size, where):
    elems = [_int(v, f"{where}[{j}]") for j, v in enumerate(_list(value, where))]
    for j, e in enumerate(elems):
        if e >= size:
            raise ParseError(f"index {e} out of range for size {size}", f"{where}[{j}]")
    return to_mask(elems)


def space_to_json(X):
    return {"points": X.point_count, "opens": _sets(X.opens)}


def parse_space_name(name):
    """``discrete:3``, ``indiscrete:2`` or ``sierpinski``."""
    kind, _, arity = name.partition(":")
    try:
        n = int(arity) if arity else 2
        return make_standard(kind, n)
    except (ValueError, FrolikLabError) as exc:
        raise ParseError(f"bad space name {name!r}: {exc}", "space") from exc


def space_from_json(obj, where="space"):
    if isinstance(obj, str):
        return parse_space_name(obj)
    n = _int(_field(obj, "points", where), f"{where}.points")
    opens = [
        _index_set(o, n, f"{where}.opens[{j}]")
        for j, o in enumerate(_list(_field(obj, "opens", where), f"{where}.opens"))
    ]
    try:
        return validate_topology(n, opens)
    except FrolikLabError as exc:
        raise ParseError(str(exc), f"{where}.opens") from exc


def filter_to_json(F):
    return {"index_size": F.index_size, "kernel": list(F.kernel_set)}


def filter_from_json(obj, where="filter"):
    k = _int(_field(obj, "index_size", where), f"{where}.index_size", 1)
    return Filter(k, _index_set(_field(obj, "kernel", where), k, f"{where}.kernel"))


def family_to_json(F):
    return {"index_size": F.index_size, "kernels": _sets(F.kernels)}


def family_from_json(obj, where="family"):
    k = _int(_field(obj, "index_size", where), f"{where}.index_size", 1)
    kernels = _list(_field(obj, "kernels", where), f"{where}.kernels")
    return FilterFamily(
        k, frozenset(_index_set(v, k, f"{where}.kernels[{j}]") for j, v in enumerate(kernels))
    )


def sequence_to_json(X, values):
    return {"space": space_to_json(X), "values": list(values)}


def sequence_from_json(obj, where="sequence"):
    X = space_from_json(_field(obj, "space", where), f"{where}.space")
    values = _list(_field(obj, "values", where), f"{where}.values")
    for j, v in enumerate(values):
        _int(v, f"{where}.values[{j}]")
        if v >= X.point_count:
            raise ParseError(f"point {v} out of range", f"{where}.values[{j}]")
    if not values:
        raise ParseError("sequence must be nonempty", f"{where}.values")
    return X, tuple(values)


def verdict_to_json(X, verdict, pseudo=False):
    """Compactness verdict. Pseudocompact witnesses list open sets as
    sorted point arrays instead of points."""
    witness = None
    if verdict.witness is not None:
        values = verdict.witness
        if pseudo:
            values = [list(members(m)) for m in values]
        witness = sequence_to_json(X, values)
    return {"holds": verdict.holds, "witness": witness}


def magma_to_json(M):
    return {"size": M.size, "table": [[int(v) for v in row] for row in M.table]}


def magma_from_json(obj, where="magma"):
    from .residuation import FiniteMagma

    n = _int(_field(obj, "size", where), f"{where}.size")
    rows = _list(_field(obj, "table", where), f"{where}.table")
    if len(rows) != n:
        raise ParseError(f"expected {n} rows", f"{where}.table")
    table = []
    for r, row in enumerate(rows):
        row = _list(row, f"{where}.table[{r}]")
        if len(row) != n:
            raise ParseError(f"expected {n} entries", f"{where}.table[{r}]")
        for c, v in enumerate(row):
            _int(v, f"{where}.table[{r}][{c}]")
            if v >= n:
                raise ParseError(f"entry {v} out of range", f"{where}.table[{r}][{c}]")
        table.append(row)
    return FiniteMagma(n, table)


def eps_to_json(E):
    return {
        "exceptional": sorted(E.exceptional),
        "threshold": E.threshold,
        "period": E.period,
        "residues": sorted(E.residues),
    }


def eps_from_json(obj, where="set"):
    from .periodic import EventuallyPeriodicSet

    exc = [_int(v, f"{where}.exceptional[{j}]") for j, v in
           enumerate(_list(_field(obj, "exceptional", where), f"{where}.exceptional"))]
    t = _int(_field(obj, "threshold", where), f"{where}.threshold")
    p = _int(_field(obj, "period", where), f"{where}.period", 1)
    res = [_int(v, f"{where}.residues[{j}]") for j, v in
           enumerate(_list(_field(obj, "residues", where), f"{where}.residues"))]
    try:
        return EventuallyPeriodicSet(frozenset(exc), t, p, frozenset(res))
    except ValueError as exc_:
        raise ParseError(str(exc_), where) from exc_


def loads(text, where="input"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON ({exc.msg})", f"{where}:{exc.lineno}:{exc.colno}") from exc


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
