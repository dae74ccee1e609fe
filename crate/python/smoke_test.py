#!/usr/bin/env python3
"""Smoke test for the tdtc_py extension module.

Builds nothing itself: expects `cargo build -p tdtc-py` (or --release) to have
produced libtdtc_py.so, which is staged under a temp dir as tdtc_py.so and
imported. Exercises one slice of every surface: generation, total graphs,
solvers, formulas, constructions, verification.
"""

import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parents[1]


def stage_module() -> None:
    candidates = [
        ROOT / "target" / profile / "libtdtc_py.so"
        for profile in ("release", "debug")
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("build the bindings first: cargo build -p tdtc-py [--release]")
    stage = pathlib.Path(tempfile.mkdtemp(prefix="tdtc-py-"))
    shutil.copy2(built, stage / "tdtc_py.so")
    sys.path.insert(0, str(stage))


def main() -> None:
    stage_module()
    import tdtc_py

    checks = 0

    def ok(label: str, cond: bool) -> None:
        nonlocal checks
        if not cond:
            sys.exit(f"FAIL: {label}")
        checks += 1
        print(f"PASS: {label}")

    w5 = tdtc_py.Graph.wheel(5)
    ok("wheel W_5 has order 6 and size 10", w5.order == 6 and w5.size == 10)

    t = w5.total()
    ok("T(W_5) has order n+m = 16", t.order == 16)

    r = tdtc_py.Graph.cycle(5).tdtc_number()
    ok("chi-dtt(C_5) = 5 with verified witness", r.value == 5 and r.verified)

    r = tdtc_py.Graph.complete(5).gamma_tm()
    ok("gamma-tm(K_5) = 4", r.value == 4)

    r = tdtc_py.Graph.path(7).alpha_mix()
    ok("alpha-mix(P_7) = 5", r.value == 5)
    ok("alpha-mix witness is a 5-object list", len(r.witness) == 5)

    ok(
        "formula chi-dtt(W_9) = 10",
        tdtc_py.formula("chi-dtt", "wheel", 9) == 10,
    )
    ok(
        "formula chi-dtt(K_{2,3}) = 5",
        tdtc_py.formula("chi-dtt", "complete-bipartite", 3, m=2) == 5,
    )

    classes = tdtc_py.wheel_tdtc(9)
    ok("wheel_tdtc(9) has 10 classes", len(classes) == 10)
    report = tdtc_py.check_coloring(tdtc_py.Graph.wheel(9), classes, "tdtc")
    ok("wheel_tdtc(9) verifies as a TDTC", report.valid)

    broken = [classes[0] + classes[1]] + classes[2:]
    report = tdtc_py.check_coloring(tdtc_py.Graph.wheel(9), broken, "tdtc")
    ok("merged classes fail verification", not report.valid and report.violations)

    fix = tdtc_py.complete_tdtc_fixture(11)
    ok("K_11 fixture has 18 classes", len(fix) == 18)

    graph, classes = tdtc_py.extremal_order_n(10)
    ok("extremal order-10 graph carries 10 classes", graph.order == 10 and len(classes) == 10)

    parts = tdtc_py.tkn_parts(5)
    ok("T(K_5) splits into 6 parts of 5 objects", len(parts) == 6 and all(len(p) == 5 for p in parts))

    pairs = tdtc_py.tkn_automorphism(3, 1)
    mapping = dict((tuple(a), tuple(b)) for a, b in pairs)
    ok("phi_1 swaps v_2 with e_12", mapping[("v", 2)] == ("e", 1, 2))

    k2 = tdtc_py.Graph.complete(2)
    ok("T(K_2) is a triangle", k2.total().is_isomorphic_to(tdtc_py.Graph.cycle(3)))

    parsed = tdtc_py.Graph.from_edge_list(w5.emit())
    ok("edge-list round trip preserves order and size", parsed.order == 6 and parsed.size == 10)

    layered = tdtc_py.Graph.cycle(6).total().tds_layered()
    ok("layered coloring of T(C_6) is a class list", len(layered) >= 4)

    try:
        tdtc_py.formula("gamma-tm", "path", 5)
    except ValueError as e:
        ok("uncovered formula raises ValueError", "no closed form" in str(e))
    else:
        sys.exit("FAIL: uncovered formula should raise")

    try:
        tdtc_py.Graph.path(1).gamma_t()
    except ValueError as e:
        ok("isolated vertex raises ValueError", "isolated" in str(e))
    else:
        sys.exit("FAIL: isolated vertex should raise")

    print(f"smoke test passed ({checks} checks)")


if __name__ == "__main__":
    main()
