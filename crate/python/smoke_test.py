#!/usr/bin/env python3
"""Smoke test for the fanostab_py extension module.

Builds are produced by `cargo build -p fanostab-py` (optionally --release);
this script locates the cdylib under target/, stages it under an importable
name, and exercises the main surface.
"""

import importlib.util
import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libfanostab_py.so", "fanostab_py.dll", "libfanostab_py.dylib")
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit(
            "fanostab_py cdylib not found; run `cargo build -p fanostab-py` first"
        )
    stage = pathlib.Path(tempfile.mkdtemp(prefix="fanostab-py-"))
    target = stage / ("fanostab_py" + built.suffix)
    shutil.copy2(built, target)
    spec = importlib.util.spec_from_file_location("fanostab_py", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def check(label, cond):
    status = "ok" if cond else "FAIL"
    print(f"{status:4} {label}")
    if not cond:
        sys.exit(1)


def main():
    fs = load_module()

    b8 = fs.Hypergraph.generate("bn", 8)
    check("bn(8) has 48 edges", b8.edge_count == 48)
    check("ex_fano(8) == 48", fs.ex_fano(8) == 48)
    check("ex_fano(9) == 70", fs.ex_fano(9) == 70)
    check("bn(8) degree formula", all(b8.degree(v) == 18 for v in range(8)))

    fano = fs.Hypergraph.generate("fano")
    check("fano is linear", fano.is_linear())
    check(
        "fano codegrees are 1",
        all(fano.codegree(u, v) == 1 for u in range(7) for v in range(u + 1, 7)),
    )

    k7 = fs.Hypergraph.generate("complete", 7)
    check("complete(7) holds 30 fano copies", fs.count_copies(k7, fano) == 30)
    witness = fs.contains_fano(k7)
    check("complete(7) yields a witness", witness is not None)
    vertices, edges = witness
    check("witness has 7 vertices and 7 edges", len(vertices) == 7 and len(edges) == 7)
    check("witness edges are host edges", all(k7.has_edge(*e) for e in edges))
    check("bn(14) is fano-free", fs.contains_fano(fs.Hypergraph.generate("bn", 14)) is None)

    check("tetrahedron in bn(8)", fs.find_tetrahedron(b8) == [0, 1, 4, 5])

    k6 = fs.Hypergraph.generate("complete", 6)
    check("octahedra in complete(6)", fs.count_octahedra(k6) == 15)
    check("oracle agrees on complete(6)", fs.oracle_count_octahedra(k6) == 15)
    check("octahedra in bn(6)", fs.count_octahedra(fs.Hypergraph.generate("bn", 6)) == 9)
    octa = fs.Hypergraph.generate("octahedron")
    check("octahedron counts itself", fs.count_octahedra(octa) == 1)

    lemma = json.loads(fs.lemma26_check(fs.Hypergraph.generate("complete", 14)))
    check("octahedron lower bound holds on complete(14)", lemma["holds"])

    b24 = fs.Hypergraph.generate("bn", 24)
    report = json.loads(fs.run_stability_json(b24, "9/625"))
    check("stability recovers bn(24)", report["certificate"] is None)
    check("eA + eB == 0", report["eA"] + report["eB"] == 0)
    check(
        "partition is the two parts",
        sorted(report["A"] + report["B"]) == list(range(24))
        and {tuple(sorted(report["A"])), tuple(sorted(report["B"]))}
        == {tuple(range(12)), tuple(range(12, 24))},
    )

    k12 = fs.Hypergraph.generate("complete", 12)
    cert = json.loads(fs.run_stability_json(k12, "9/625"))["certificate"]
    check("complete(12) returns a fano-witness certificate", cert["type"] == "fano-witness")
    check(
        "certificate edges live in the host",
        all(k12.has_edge(*e) for e in cert["edges"]),
    )

    chain = json.loads(fs.verify_constants())
    check("constant chain certified", chain["certified"])
    check("all 14 ids hold", all(e["holds"] for e in chain["entries"]))

    roundtrip = fs.Hypergraph.parse(b8.serialize())
    check("parse/serialize roundtrip", roundtrip.serialize() == b8.serialize())

    rnd = fs.Hypergraph.random(8, 0.3, 7)
    check("seeded random generator is deterministic",
          rnd.edges() == fs.Hypergraph.random(8, 0.3, 7).edges())

    print("smoke test passed")


if __name__ == "__main__":
    main()
