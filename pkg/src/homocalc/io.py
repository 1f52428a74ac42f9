"""JSON file formats for complexes, chain maps and simplicial data.

Complex:           {"ranks": {"0": 1, "1": 1}, "differentials": {"1": [[2]]}}
Chain map:         {"source": <complex>, "target": <complex>, "components": {"0": [[1]]}}
Simplicial complex {"simplices": [["a", "b", "c"], ["c", "d"]]}   (maximal simplices)
Simplicial map:    {"source": <sc>, "target": <sc>, "vertex_map": {"a": "x", ...}}

Degrees are string keys; matrices are row-major nested lists.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .algebra import IntMatrix
from .complexes import ChainComplex
from .maps import ChainMap
from .simplicial import SimplicialComplex, SimplicialMap

DEFAULT_MAX_ENTRIES = 10**6


class FormatError(ValueError):
    """Input that cannot be parsed into the expected structure."""


class BudgetError(ValueError):
    """Matrix data would exceed ``HOMOCALC_MAX_ENTRIES``."""


def max_entries() -> int:
    raw = os.environ.get("HOMOCALC_MAX_ENTRIES")
    if raw is None:
        return DEFAULT_MAX_ENTRIES
    try:
        return int(raw)
    except ValueError:
        raise FormatError(f"HOMOCALC_MAX_ENTRIES must be an integer, got {raw!r}")


def entries_for_ranks(ranks: dict[int, int]) -> int:
    return sum(r * ranks.get(k - 1, 0) for k, r in ranks.items())


def check_budget(n_entries: int, what: str = "input") -> None:
    limit = max_entries()
    if n_entries > limit:
        raise BudgetError(
            f"{what} needs {n_entries} matrix entries, above HOMOCALC_MAX_ENTRIES={limit}")


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{where}: expected an integer, got {x!r}")
    return x


def _degree(k, where):
    try:
        return int(k)
    except (TypeError, ValueError):
        raise FormatError(f"{where}: degree key {k!r} is not an integer")


def _matrix(data, rows, cols, where):
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise FormatError(f"{where}: matrix must be a list of lists")
    data = [[_int(x, where) for x in r] for r in data]
    if not data:
        return IntMatrix([], 0, cols)
    widths = {len(r) for r in data}
    if len(widths) != 1:
        raise FormatError(f"{where}: rows have different lengths")
    width = widths.pop()
    return IntMatrix(data, len(data), width if width else 0)


# complexes


def complex_from_json(obj) -> ChainComplex:
    if isinstance(obj, dict) and "complex" in obj and "ranks" not in obj:
        obj = obj["complex"]
    if not isinstance(obj, dict) or "ranks" not in obj:
        raise FormatError("complex must be an object with a 'ranks' field")
    ranks_raw = obj["ranks"]
    if not isinstance(ranks_raw, dict):
        raise FormatError("'ranks' must be an object")
    ranks = {_degree(k, "ranks"): _int(v, f"ranks[{k}]") for k, v in ranks_raw.items()}
    if any(v < 0 for v in ranks.values()):
        raise FormatError("ranks must be nonnegative")
    check_budget(entries_for_ranks(ranks))
    diffs_raw = obj.get("differentials", {})
    if not isinstance(diffs_raw, dict):
        raise FormatError("'differentials' must be an object")
    diffs = {}
    for k, m in diffs_raw.items():
        d = _degree(k, "differentials")
        diffs[d] = _matrix(m, ranks.get(d - 1, 0), ranks.get(d, 0), f"differentials[{k}]")
    return ChainComplex(ranks, diffs)


def complex_to_json(C: ChainComplex) -> dict:
    return {
        "ranks": {str(k): r for k, r in C.ranks.items()},
        "differentials": {str(k): m.tolist() for k, m in C.differentials.items()},
    }


def dumps_complex(C: ChainComplex, **kw) -> str:
    return json.dumps(complex_to_json(C), **kw)


def loads_complex(text: str) -> ChainComplex:
    return complex_from_json(_loads(text))


# chain maps


def chain_map_from_json(obj) -> ChainMap:
    if not isinstance(obj, dict) or not {"source", "target"} <= set(obj):
        raise FormatError("chain map must have 'source' and 'target'")
    A = complex_from_json(obj["source"])
    B = complex_from_json(obj["target"])
    comps_raw = obj.get("components", {})
    if not isinstance(comps_raw, dict):
        raise FormatError("'components' must be an object")
    comps = {}
    for k, m in comps_raw.items():
        d = _degree(k, "components")
        comps[d] = _matrix(m, B.rank(d), A.rank(d), f"components[{k}]")
    return ChainMap(A, B, comps)


def chain_map_to_json(f: ChainMap) -> dict:
    return {
        "source": complex_to_json(f.source),
        "target": complex_to_json(f.target),
        "components": {str(k): m.tolist() for k, m in f.components.items()},
    }


# simplicial data


def simplicial_from_json(obj) -> SimplicialComplex:
    if not isinstance(obj, dict) or "simplices" not in obj:
        raise FormatError("simplicial complex must be an object with 'simplices'")
    simplices = obj["simplices"]
    if not isinstance(simplices, list) or not all(isinstance(s, list) for s in simplices):
        raise FormatError("'simplices' must be a list of vertex lists")
    for s in simplices:
        for v in s:
            if not isinstance(v, (str, int)) or isinstance(v, bool):
                raise FormatError(f"vertex labels must be strings or integers, got {v!r}")
    return SimplicialComplex(simplices)


def simplicial_to_json(X: SimplicialComplex) -> dict:
    return {"simplices": [list(s) for s in X.maximal_simplices()]}


def simplicial_map_from_json(obj) -> SimplicialMap:
    if not isinstance(obj, dict) or not {"source", "target", "vertex_map"} <= set(obj):
        raise FormatError("simplicial map must have 'source', 'target' and 'vertex_map'")
    X = simplicial_from_json(obj["source"])
    Y = simplicial_from_json(obj["target"])
    vmap = obj["vertex_map"]
    if not isinstance(vmap, dict):
        raise FormatError("'vertex_map' must be an object")
    # JSON object keys are strings; match integer labels by their text
    by_text = {str(v): v for v in X.vertices}
    target_by_text = {str(v): v for v in Y.vertices}
    mapping = {}
    for k, v in vmap.items():
        src = by_text.get(k, k)
        mapping[src] = target_by_text.get(str(v), v) if not isinstance(v, (list, dict)) else v
    return SimplicialMap(X, Y, mapping)


# files


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from None


def load_json(path: str | Path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: malformed JSON: {exc}") from None


def load_complex(path) -> ChainComplex:
    return complex_from_json(load_json(path))


def load_chain_map(path) -> ChainMap:
    return chain_map_from_json(load_json(path))


def load_simplicial(path) -> SimplicialComplex:
    return simplicial_from_json(load_json(path))


def load_simplicial_map(path) -> SimplicialMap:
    return simplicial_map_from_json(load_json(path))
