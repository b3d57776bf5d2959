"""Command-line driver: ``homcycle {check,homology,index,minimize,verify,generate}``.

Exit codes: 0 success, 1 domain error, 2 usage error. Errors print one line
on stderr starting with ``error:``.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from .complex import Chain, SimplicialComplex, verify_closed_pseudomanifold
from .errors import BadParams, BudgetExceeded, HomcycleError
from .homology import HomologyBasis, betti_numbers, betti_z2, hn1_basis
from .index import build_index_function, index_of_chain, sheet_bits
from .io import (
    number,
    parse_chain,
    parse_chain_blocks,
    parse_mesh,
    parse_weights,
    result_to_dict,
    serialize_chain_blocks,
    serialize_mesh,
)
from .meshes import GENERATORS, generate
from .mincycle import WeightFunction, min_cycle_in_class
from .oracle import coset_min, cup_form_invariants, form_invariants

DEFAULT_SEED = 20240601
VERIFY_MESHES = ["sphere_tet", "rp2_6", "torus_grid(3,3)", "klein_grid(4,4)", "genus2_polygon"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Loaded:
    name: str
    complex: SimplicialComplex
    hn1: HomologyBasis | None
    h1: HomologyBasis | None


def _stem(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", name).strip("_")


def load_mesh(where: str, allow_open: bool = False) -> Loaded:
    path = Path(where)
    if path.is_file():
        c = parse_mesh(path.read_text(), allow_open=allow_open)
        return Loaded(path.name, c, None, None)
    family = re.split(r"[(:]", where, maxsplit=1)[0].strip()
    if family in GENERATORS:
        b = generate(where)
        return Loaded(b.name, b.complex, b.hn1, b.h1)
    raise BadParams(f"no such mesh file or bundled mesh: {where}")


def _basis_for(args, mesh: Loaded) -> HomologyBasis:
    c = mesh.complex
    if args.basis:
        return hn1_basis(c, parse_chain_blocks(Path(args.basis).read_text(), c, dim=c.n - 1))
    if mesh.hn1 is not None:
        return mesh.hn1
    sibling = Path(args.mesh)
    sibling = sibling.with_name(sibling.name.rsplit(".", 1)[0] + ".hn1.chain")
    if sibling.is_file():
        return hn1_basis(c, parse_chain_blocks(sibling.read_text(), c, dim=c.n - 1))
    return hn1_basis(c)


def _emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_check(args):
    mesh = load_mesh(args.mesh, allow_open=True)
    rep = verify_closed_pseudomanifold(mesh.complex)
    c = mesh.complex
    payload = {
        "mesh": mesh.name,
        "dim": c.n,
        "f_vector": list(c.f_vector()),
        "ok": rep.ok,
        "violations": rep.violations,
    }
    _emit(args, payload, str(rep))
    return 0 if rep.ok else 1


def cmd_homology(args):
    mesh = load_mesh(args.mesh, allow_open=args.allow_open)
    c = mesh.complex
    if args.k is not None:
        b = betti_z2(c, args.k)
        _emit(args, {"mesh": mesh.name, "k": args.k, "betti": b}, str(b))
    else:
        bs = list(betti_numbers(c))
        _emit(args, {"mesh": mesh.name, "betti": bs}, " ".join(map(str, bs)))
    return 0


def cmd_index(args):
    mesh = load_mesh(args.mesh)
    c = mesh.complex
    basis = _basis_for(args, mesh)
    table = build_index_function(c, basis, jobs=args.jobs)
    if args.dump:
        Path(args.dump).write_text(table.to_json(c) + "\n")
    nonzero = sum(1 for g in table.J if g)
    payload = {
        "mesh": mesh.name,
        "r": table.r,
        "edges": len(table.J),
        "nonzero_edges": nonzero,
        "plane_sizes": [bin(p).count("1") for p in table.planes],
        "reseeds": [p.reseeds for p in table.passes],
    }
    text = (
        f"r {table.r}\nedges {len(table.J)}\nnonzero {nonzero}\n"
        f"plane_sizes {' '.join(str(s) for s in payload['plane_sizes'])}"
    )
    _emit(args, payload, text)
    return 0


def cmd_minimize(args):
    mesh = load_mesh(args.mesh)
    c = mesh.complex
    basis = _basis_for(args, mesh)
    x = parse_chain(Path(args.cycle).read_text(), c, dim=1)
    L = parse_weights(Path(args.weights).read_text(), c) if args.weights else WeightFunction.unit(c)
    table = build_index_function(c, basis, jobs=args.jobs)
    res = min_cycle_in_class(table, c, L, basis, x, jobs=args.jobs)
    payload = result_to_dict(c, res)
    text = "\n".join(
        [f"class {payload['class_index']}", f"weight {payload['weight']}"]
        + [f"{a} {b}" for a, b in payload["edges"]]
    )
    _emit(args, payload, text)
    return 0


def _classes(r):
    return range(1, 1 << r)


def _random_weights(c, rng):
    return WeightFunction([rng.uniform(0.0, 1.0) for _ in range(c.count(1))])


def cmd_verify(args):
    meshes = args.mesh or VERIFY_MESHES
    rng = random.Random(args.seed)
    records = []
    for where in meshes:
        mesh = load_mesh(where)
        c = mesh.complex
        basis = _basis_for(args, mesh) if mesh.hn1 is None else mesh.hn1
        table = build_index_function(c, basis, jobs=args.jobs)
        h1 = mesh.h1.cycles if mesh.h1 is not None else None
        if h1 is None:
            from .homology import h1_basis

            h1 = h1_basis(c).cycles
        form_match = None
        if c.n == 2:
            induced = [[(index_of_chain(table, z) >> k) & 1 for k in range(table.r)] for z in basis]
            form_match = cup_form_invariants(c) == form_invariants(induced)
        weightings = [("unit", WeightFunction.unit(c))]
        for t in range(args.trials):
            weightings.append((f"random{t}", _random_weights(c, rng)))
        for wname, L in weightings:
            for cls in _classes(len(h1)):
                x = Chain(1, 0)
                for k, h in enumerate(h1):
                    if (cls >> k) & 1:
                        x = x + h
                res = min_cycle_in_class(table, c, L, basis, x, jobs=args.jobs)
                try:
                    om = coset_min(c, L, x, budget=args.budget)
                    oracle_min, method = om.weight, om.method
                    match = abs(om.weight - res.weight) <= 1e-12 * max(1.0, abs(om.weight))
                except BudgetExceeded:
                    oracle_min, method, match = None, None, None
                records.append(
                    {
                        "mesh": mesh.name,
                        "weights": wname,
                        "class_index": sheet_bits(index_of_chain(table, x), table.r),
                        "r": table.r,
                        "oracle": method,
                        "oracle_min": number(oracle_min) if oracle_min is not None else None,
                        "algo_min": number(res.weight),
                        "match": match,
                        "form_invariants_match": form_match,
                    }
                )
        if table.r == 0:
            records.append(
                {
                    "mesh": mesh.name,
                    "weights": "unit",
                    "class_index": "",
                    "r": 0,
                    "oracle": None,
                    "oracle_min": 0,
                    "algo_min": 0,
                    "match": True,
                    "form_invariants_match": form_match,
                }
            )
    if args.format == "json":
        print(json.dumps(records, indent=2))
    else:
        for rec in records:
            print(
                f"{rec['mesh']} {rec['weights']} class={rec['class_index']} "
                f"oracle={rec['oracle_min']} algo={rec['algo_min']} match={rec['match']} "
                f"form={rec['form_invariants_match']}"
            )
    return 0


def cmd_generate(args):
    b = generate(args.name)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    stem = _stem(args.name)
    files = {
        out / f"{stem}.smesh": serialize_mesh(b.complex),
        out / f"{stem}.hn1.chain": serialize_chain_blocks(b.complex, b.hn1.cycles),
        out / f"{stem}.h1.chain": serialize_chain_blocks(b.complex, b.h1.cycles),
    }
    for path, text in files.items():
        path.write_text(text)
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="homcycle", description="Minimum-weight Z2-homologous cycles on triangulated manifolds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, fmt="text"):
        sp.add_argument("--format", choices=["json", "text"], default=fmt)
        sp.add_argument("--jobs", type=int, default=1, help="worker cap for per-cycle and per-vertex fan-out")

    sp = sub.add_parser("check", help="closed pseudomanifold report")
    sp.add_argument("--mesh", required=True, help="smesh file or bundled mesh name")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("homology", help="Z2 Betti numbers")
    sp.add_argument("--mesh", required=True)
    sp.add_argument("-k", type=int, default=None)
    sp.add_argument("--allow-open", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_homology)

    sp = sub.add_parser("index", help="build the index function and print statistics")
    sp.add_argument("--mesh", required=True)
    sp.add_argument("--basis", help="chain file with one simple (n-1)-cycle per block")
    sp.add_argument("--dump", help="write the full index table as JSON")
    common(sp)
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("minimize", help="minimum-weight cycle homologous to --cycle")
    sp.add_argument("--mesh", required=True)
    sp.add_argument("--cycle", required=True, help="chain file of the input 1-cycle")
    sp.add_argument("--weights", help="weight file; unlisted edges weigh 1.0")
    sp.add_argument("--basis")
    common(sp, fmt="json")
    sp.set_defaults(func=cmd_minimize)

    sp = sub.add_parser("verify", help="compare against the coset oracle for every class")
    sp.add_argument("--mesh", action="append", help="repeatable; defaults to the bundled surfaces")
    sp.add_argument("--basis")
    sp.add_argument("--trials", type=int, default=0, help="extra random weight assignments per mesh")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--budget", type=int, default=1 << 17, help="largest coset to enumerate exhaustively")
    common(sp, fmt="json")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("generate", help="write a bundled mesh and its curated bases")
    sp.add_argument("name", help="e.g. rp2_6, torus_grid(3,3), torus3_grid:3,3,3")
    sp.add_argument("--out", default=".")
    sp.set_defaults(func=cmd_generate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be >= 1")
        return args.func(args)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return 2
    except HomcycleError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
