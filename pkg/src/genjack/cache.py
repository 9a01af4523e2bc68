"""On-disk store for transition-matrix blocks.

One JSON document per (kind, r, n, mode[, seed]).  The header carries a hash
of the ordering conventions so that a change of box or multipartition order
invalidates old files instead of silently reusing them.
"""
import hashlib
import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import envelope
from ._version import __version__
from .partitions import boxes, format_mp, multipartitions, parse as parse_mp
from .ring import Assignment, Specialized, Symbolic, parse as parse_ring

# the ordering reference: a three-colored shape with ties on several diagonals
_REFERENCE_SHAPE = ((4, 2, 1), (4, 1, 1), (2, 2, 1))


def default_dir() -> Path:
    env = os.environ.get("GJACK_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "genjack"


def convention_hash(r: int, n: int) -> str:
    h = hashlib.sha256()
    h.update(repr([tuple(b) for b in boxes(_REFERENCE_SHAPE)]).encode())
    h.update(repr([format_mp(m) for m in multipartitions(n, r)]).encode())
    h.update(b"chambers:T-,T*+,U+,U*-;diagonal-included")
    return h.hexdigest()[:16]


def mode_of(dom) -> str:
    return "specialized" if isinstance(dom, Specialized) else "symbolic"


def block_path(kind: str, r: int, n: int, dom, cache_dir=None, seed=None) -> Path:
    base = Path(cache_dir) if cache_dir is not None else default_dir()
    tag = mode_of(dom)
    if isinstance(dom, Specialized):
        tag += f"-{seed}" if seed is not None else "-" + _point_digest(dom.point)
    return base / f"{kind}_r{r}_n{n}_{tag}.json"


def _point_digest(point: Assignment) -> str:
    return hashlib.sha256(json.dumps(point.to_json(), sort_keys=True).encode()).hexdigest()[:12]


def header(kind: str, r: int, n: int, dom) -> dict:
    out = {"kind": kind, "r": r, "n": n, "mode": mode_of(dom),
           "convention_hash": convention_hash(r, n), "version": __version__}
    if isinstance(dom, Specialized):
        out["assignment"] = dom.point.to_json()
    return out


def to_document(mat: envelope.TransitionMatrix, dom) -> dict:
    entries = [[format_mp(l), format_mp(m), str(v)]
               for l in mat.index for m in mat.index if (v := mat.entries[l, m])]
    return {"header": header(mat.kind, mat.rank, mat.degree, dom),
            "index": [format_mp(m) for m in mat.index],
            "entries": entries}


def from_document(doc: dict, dom) -> envelope.TransitionMatrix:
    h = doc["header"]
    r, n = h["r"], h["n"]
    index = [parse_mp(s) for s in doc["index"]]
    mat = envelope.TransitionMatrix(h["kind"], r, n, index)
    for l in index:
        for m in index:
            mat.entries[l, m] = dom.zero
    read = (lambda s: parse_ring(s, r)) if h["mode"] == "symbolic" else Fraction
    for l, m, v in doc["entries"]:
        mat.entries[parse_mp(l), parse_mp(m)] = read(v)
    return mat


def write_atomic(path: Path, doc: dict):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load(path: Path, kind: str, r: int, n: int, dom):
    """The cached block, or None when missing, unreadable or stale."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, ValueError):
        return None
    if doc.get("header") != header(kind, r, n, dom):
        return None
    return from_document(doc, dom)


# ---------------------------------------------------------------- computation

def _row(args):
    kind, r, n, lam_text, point = args
    dom = Symbolic(r) if point is None else Specialized(Assignment.from_json(point))
    lam = parse_mp(lam_text)
    return lam_text, [str(envelope.entry(kind, lam, mu, dom)) for mu in multipartitions(n, r)]


def compute(kind: str, r: int, n: int, dom, threads: int = 1) -> envelope.TransitionMatrix:
    """Full block, with rows farmed out to ``threads`` worker processes."""
    if threads <= 1:
        return envelope.transition(kind, r, n, dom)
    index = multipartitions(n, r)
    point = dom.point.to_json() if isinstance(dom, Specialized) else None
    jobs = [(kind, r, n, format_mp(l), point) for l in index]
    read = (lambda s: parse_ring(s, r)) if point is None else Fraction
    mat = envelope.TransitionMatrix(kind, r, n, index)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for lam_text, row in pool.map(_row, jobs):
            lam = parse_mp(lam_text)
            for mu, v in zip(index, row):
                mat.entries[lam, mu] = read(v)
    return mat


def cached_transition(kind: str, r: int, n: int, dom, cache_dir=None, seed=None,
                      threads: int = 1):
    """(block, path, hit) with the block read from or written to the cache."""
    path = block_path(kind, r, n, dom, cache_dir, seed)
    mat = load(path, kind, r, n, dom)
    if mat is not None:
        return mat, path, True
    mat = compute(kind, r, n, dom, threads)
    write_atomic(path, to_document(mat, dom))
    return mat, path, False
