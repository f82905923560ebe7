"""Command-line front end and batch verification driver.

Subcommands: basis, invariants, hit, kameko, chi, lattice.  Every command
is deterministic for a fixed seed, honours the degree cap, and exits 0
exactly when all of its verifications passed.  --json switches to a
machine-readable report {command, inputs, dims, verdicts, witness?}.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import __version__
from .cache import default_cache_dir, get_quotient_basis
from .f2linalg import bits_of
from .glaction import gl_generators, invariants
from .kameko import chain
from .modlattice import (
    ModuleContext,
    lattice_to_dot,
    verify_figure1,
)
from .poly import (
    CHI_SEQUENCE_CAP,
    Polynomial,
    apply_chi,
    chi,
    parse_monomial,
    parse_polynomial,
)
from .quotient import reduce as reduce_poly
from .quotient import verify_basis


@dataclass
class RunConfig:
    cache_dir: Optional[Path]
    max_degree: int = 128
    threads: int = 1
    seed: int = 0


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _check_caps(cfg: RunConfig, k: int, d: int) -> Optional[str]:
    if k < 1 or k > 8:
        return f"variable count {k} outside the supported range 1..8"
    if d < 0 or d > cfg.max_degree:
        return f"degree {d} exceeds the cap {cfg.max_degree}"
    return None


def _qb(cfg: RunConfig, k: int, d: int):
    return get_quotient_basis(k, d, cfg.cache_dir)


def cmd_basis(args, cfg: RunConfig) -> int:
    msg = _check_caps(cfg, args.k, args.d)
    if msg:
        print(f"refused: {msg}", file=sys.stderr)
        return 2
    qb = _qb(cfg, args.k, args.d)
    verdicts = {}
    verified = None
    if args.verify:
        try:
            candidates = _read_monomial_file(args.verify, args.k)
        except ValueError as e:
            print(f"parse failure: {e}", file=sys.stderr)
            return 2
        verified = verify_basis(candidates, args.k, args.d)
        verdicts["verified"] = verified
    if args.json:
        payload = {
            "command": "basis",
            "inputs": {"k": args.k, "d": args.d,
                       "verify": str(args.verify) if args.verify else None},
            "dims": {"quotient": qb.dim, "ambient": qb.ctx.dim,
                     "hit": qb.hit.dim},
            "verdicts": verdicts,
            "reps": [str(Polynomial.monomial(m)) for m in qb.reps],
        }
        _emit_json(payload)
    else:
        print(f"dim {qb.dim}")
        if args.verify:
            if verified:
                print(f"VERIFIED basis of dim {qb.dim}")
            else:
                print("FAILED: candidates do not form a basis")
        else:
            for m in qb.reps:
                print(str(Polynomial.monomial(m)))
    return 0 if (verified is None or verified) else 1


def _read_monomial_file(path: str, k: int):
    candidates = []
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            candidates.append(parse_monomial(line, k))
        except ValueError as e:
            raise ValueError(f"{path}:{lineno}: {e}") from None
    return candidates


def cmd_invariants(args, cfg: RunConfig) -> int:
    msg = _check_caps(cfg, args.k, args.d)
    if msg:
        print(f"refused: {msg}", file=sys.stderr)
        return 2
    qb = _qb(cfg, args.k, args.d)
    space = invariants(qb, gl_generators(args.k))
    gens = [str(qb.rep_polynomial(row)) for row in space.rows]
    if args.json:
        _emit_json({
            "command": "invariants",
            "inputs": {"k": args.k, "d": args.d},
            "dims": {"quotient": qb.dim, "invariants": space.dim},
            "verdicts": {},
            "generators": gens,
        })
    else:
        print(f"dim {space.dim}")
        for g in gens:
            print(g)
    return 0


def cmd_hit(args, cfg: RunConfig) -> int:
    try:
        p = parse_polynomial(args.poly, args.k)
    except ValueError as e:
        print(f"parse failure: {e}", file=sys.stderr)
        return 2
    if not p.is_homogeneous():
        print("refused: polynomial is not homogeneous", file=sys.stderr)
        return 2
    if p.is_zero():
        d = 0
    else:
        d = p.degree()
    msg = _check_caps(cfg, args.k, d)
    if msg:
        print(f"refused: {msg}", file=sys.stderr)
        return 2
    qb = _qb(cfg, args.k, d)
    coords, witness = reduce_poly(p, qb)
    hit = coords.bits == 0
    witness_text = " + ".join(f"Sq^{i}({q})" for i, q in witness.summands)
    if args.json:
        _emit_json({
            "command": "hit",
            "inputs": {"k": args.k, "poly": str(p)},
            "dims": {"degree": d, "quotient": qb.dim},
            "verdicts": {"hit": hit},
            "witness": {
                "summands": [[i, str(q)] for i, q in witness.summands],
                "remainder": str(witness.remainder),
            },
        })
    else:
        if hit:
            print("HIT")
            print(witness_text if witness_text else "0")
        else:
            print("NOT-HIT")
            print(f"remainder: {witness.remainder}")
    return 0


def cmd_kameko(args, cfg: RunConfig) -> int:
    if args.k != 4:
        print("refused: the halving chain is specific to k = 4",
              file=sys.stderr)
        return 2
    if args.s < 1:
        print("refused: need s >= 1", file=sys.stderr)
        return 2
    top = 12 * (1 << args.s) - 4
    msg = _check_caps(cfg, args.k, top)
    if msg:
        print(f"refused: {msg}", file=sys.stderr)
        return 2
    for j in range(args.s, -1, -1):
        _qb(cfg, 4, 12 * (1 << j) - 4)
    ch = chain(args.k, args.s)
    steps_payload = []
    for step in ch.steps:
        src, dst = step.down.src, step.down.dst
        if not args.json:
            print(f"P4 degree {src.ctx.d} ambient = {src.ctx.dim}")
            print("even-hypothesis OK" if step.hypothesis_holds
                  else f"even-hypothesis FAILED: {len(step.failures)} offenders")
            print(f"down map {src.ctx.d} -> {dst.ctx.d}: "
                  f"iso {src.dim}x{dst.dim}" if step.down.is_bijection()
                  else f"down map {src.ctx.d} -> {dst.ctx.d}: NOT a bijection")
            print("GL-equivariance OK" if step.equivariant
                  else "GL-equivariance FAILED")
        steps_payload.append({
            "degree": src.ctx.d,
            "ambient": src.ctx.dim,
            "quotient": src.dim,
            "even_hypothesis": step.hypothesis_holds,
            "bijection": step.down.is_bijection(),
            "equivariant": step.equivariant,
        })
    if args.json:
        _emit_json({
            "command": "kameko",
            "inputs": {"k": args.k, "s": args.s},
            "dims": {"top": top, "base": ch.base_degree,
                     "quotient": ch.steps[-1].down.dst.dim},
            "verdicts": {"chain_ok": ch.ok},
            "steps": steps_payload,
        })
    elif ch.ok:
        comp = ch.composite()
        print(f"chain iso Q{args.k}({top}) -> Q{args.k}(8): "
              f"{comp.src.dim}x{comp.dst.dim}")
    return 0 if ch.ok else 1


def cmd_chi(args, cfg: RunConfig) -> int:
    if args.n < 0 or args.n > 64:
        print("refused: degree outside 0..64", file=sys.stderr)
        return 2
    if args.poly is not None:
        if args.k is None:
            print("refused: polynomial form needs a variable count",
                  file=sys.stderr)
            return 2
        try:
            p = parse_polynomial(args.poly, args.k)
        except ValueError as e:
            print(f"parse failure: {e}", file=sys.stderr)
            return 2
        if not p.is_homogeneous():
            print("refused: polynomial is not homogeneous", file=sys.stderr)
            return 2
        result = apply_chi(args.n, p)
        if args.json:
            _emit_json({
                "command": "chi",
                "inputs": {"n": args.n, "k": args.k, "poly": str(p)},
                "dims": {},
                "verdicts": {},
                "result": str(result),
            })
        else:
            print(str(result))
        return 0
    if args.n > CHI_SEQUENCE_CAP:
        print(f"refused: chi({args.n}) holds 2^{args.n - 1} formal "
              "sequences; pass a polynomial to evaluate it instead",
              file=sys.stderr)
        return 2
    op = chi(args.n)
    seqs = op.sorted_sequences()
    if args.json:
        _emit_json({
            "command": "chi",
            "inputs": {"n": args.n},
            "dims": {"sequences": len(seqs)},
            "verdicts": {},
            "sequences": [list(s) for s in seqs],
        })
    else:
        if args.n == 0:
            print("identity")
        else:
            for s in seqs:
                print(" ".join(f"Sq^{i}" for i in s))
    return 0


def cmd_lattice(args, cfg: RunConfig) -> int:
    qb = _qb(cfg, 4, 8)
    ctx = ModuleContext.for_quotient(qb, gl_generators(4))
    report = verify_figure1(ctx, seed=cfg.seed)
    if args.dot:
        Path(args.dot).write_text(lattice_to_dot(report))
    if args.json:
        _emit_json({
            "command": "lattice",
            "inputs": {"dot": args.dot},
            "dims": report.node_dims(),
            "verdicts": dict(report.checks),
            "edges": [[u, lo, label, qd] for u, lo, label, qd in report.edges],
            "failures": list(report.failures),
        })
    else:
        for name, sub in report.nodes.items():
            print(f"{name}: dim {sub.dim}")
        for upper, lower, label, qdim in report.edges:
            print(f"edge {upper} -- {lower}: quotient dim {qdim} [{label}]")
        if report.ok:
            print("11 submodules verified; 24 = 4 ⊕ 20; "
                  "30' ∩ 35 = 24")
        else:
            for f in report.failures:
                print(f"MISMATCH: {f}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hitwork",
        description="Exact computations in hit-problem quotients over F2",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    parser.add_argument("--cache-dir", type=Path, default=None,
                        help="quotient-basis cache directory "
                             "(default: $HITWORK_CACHE or ~/.cache/hitwork)")
    parser.add_argument("--no-cache", action="store_true",
                        help="disable the on-disk cache")
    parser.add_argument("--max-degree", type=int, default=128,
                        help="safety cap on computed degrees")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker threads for hit-space construction")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for the lattice chopping heuristics")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="quotient dimension and representatives")
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--verify", metavar="FILE",
                   help="file of monomials to check as a basis")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("invariants", help="fixed space of the full group")
    p.add_argument("k", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("hit", help="hit decision with witness")
    p.add_argument("k", type=int)
    p.add_argument("poly")
    p.set_defaults(func=cmd_hit)

    p = sub.add_parser("kameko", help="iterated halving chain report")
    p.add_argument("k", type=int)
    p.add_argument("s", type=int)
    p.set_defaults(func=cmd_kameko)

    p = sub.add_parser("chi", help="antipode of a square, or its value")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("poly", nargs="?")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("lattice", help="verify the degree-8 submodule lattice")
    p.add_argument("--dot", metavar="FILE", help="write graph text to FILE")
    p.set_defaults(func=cmd_lattice)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cache_dir = None if args.no_cache else (args.cache_dir or default_cache_dir())
    cfg = RunConfig(cache_dir=cache_dir, max_degree=args.max_degree,
                    threads=args.threads, seed=args.seed)
    return args.func(args, cfg)


if __name__ == "__main__":
    sys.exit(main())
