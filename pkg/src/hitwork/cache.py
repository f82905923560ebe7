"""On-disk persistence of computed quotient bases.

A cache file carries a "k d dim" header, one representative monomial per
line, the hit subspace as fixed-width hexadecimal word dumps behind a
column-count header, and a version plus checksum footer.  Files are
written atomically (temp file, then rename); a checksum or version
mismatch simply forces a recompute.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from pathlib import Path
from typing import Optional

from . import __version__
from .poly import format_monomial, parse_monomial
from .quotient import QuotientBasis, quotient_basis, rebuild_from_hit_rows

CACHE_ENV = "HITWORK_CACHE"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hitwork"


def cache_path(cache_dir: Path, k: int, d: int) -> Path:
    return Path(cache_dir) / f"basis_{k}_{d}.txt"


def _payload_lines(qb: QuotientBasis) -> list:
    ctx = qb.ctx
    nwords = (ctx.dim + 63) // 64
    width = nwords * 16
    lines = [f"{ctx.k} {ctx.d} {qb.dim}"]
    lines.extend(format_monomial(m) for m in qb.reps)
    lines.append(f"cols {ctx.dim} rows {qb.hit.dim}")
    lines.extend(f"{row:0{width}x}" for row in qb.hit.rows)
    lines.append(f"version {__version__}")
    return lines


def save_quotient_basis(qb: QuotientBasis, cache_dir: Path) -> Path:
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    lines = _payload_lines(qb)
    body = "\n".join(lines) + "\n"
    digest = hashlib.sha256(body.encode()).hexdigest()
    text = body + f"sha256 {digest}\n"
    path = cache_path(cache_dir, qb.ctx.k, qb.ctx.d)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def load_quotient_basis(k: int, d: int, cache_dir: Path) -> Optional[QuotientBasis]:
    """Load and revalidate a cached basis; None when unusable."""
    path = cache_path(Path(cache_dir), k, d)
    if not path.exists():
        return None
    try:
        text = path.read_text()
        lines = text.splitlines()
        if not lines or not lines[-1].startswith("sha256 "):
            return None
        digest = lines[-1].split()[1]
        body = "\n".join(lines[:-1]) + "\n"
        if hashlib.sha256(body.encode()).hexdigest() != digest:
            return None
        if lines[-2] != f"version {__version__}":
            return None
        head = lines[0].split()
        if [int(head[0]), int(head[1])] != [k, d]:
            return None
        dim = int(head[2])
        reps = [parse_monomial(s, k) for s in lines[1:1 + dim]]
        cols_line = lines[1 + dim].split()
        if cols_line[0] != "cols" or cols_line[2] != "rows":
            return None
        ncols, nrows = int(cols_line[1]), int(cols_line[3])
        rows = [int(s, 16) for s in lines[2 + dim:2 + dim + nrows]]
        if len(rows) != nrows:
            return None
        qb = rebuild_from_hit_rows(k, d, rows)
        if qb.ctx.dim != ncols or list(qb.reps) != reps:
            return None
        return qb
    except (ValueError, IndexError):
        return None


def get_quotient_basis(k: int, d: int,
                       cache_dir: Optional[Path] = None) -> QuotientBasis:
    """Memoised basis with optional disk persistence."""
    from .quotient import _quotient_cache, install_quotient_basis

    qb = _quotient_cache.get((k, d))
    if qb is not None:
        return qb
    if cache_dir is not None:
        qb = load_quotient_basis(k, d, cache_dir)
        if qb is not None:
            install_quotient_basis(qb)
            return qb
    qb = quotient_basis(k, d)
    if cache_dir is not None:
        save_quotient_basis(qb, cache_dir)
    return qb
