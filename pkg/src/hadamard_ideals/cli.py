"""Command-line interface: ``hadamard-ideals <command> ...``.

Input files are JSON documents:

* ideal: ``{"ring": {"vars": [...], "field": "Q" | {"cyclotomic": m}}, "generators": [...]}``
* point: ``{"coords": ["1", "2/3", ...]}`` (a point may also be given inline as ``1:2:3``)
* graph: ``{"vertices": [...], "edges": [[u, v], ...]}``

Exit codes: 0 success (reports of failed hypotheses included), 1 failed
verification suite, 2 parse or validation error, 3 hypothesis failure in a
forced mode, 4 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .errors import HypothesisError, ResourceCapExceeded, UndefinedProductError, ValidationError
from .fiber import fiber_ideal
from .groebner import Ideal, buchberger, groebner_basis, ideal_equal
from .hadamard import (
    CERTIFIED, ProjectivePoint, hadamard_power, hadamard_product, hadamard_product_elimination,
    point_variety_ideal,
)
from .hilbert import degree_and_dimension, hilbert_polynomial, hilbert_values
from .limits import current_limits, limits
from .polyring import MonomialOrder, Ring, make_field
from .toricgraph import Graph, closed_even_walks, toric_ideal_graph, verify_subgraph_theorem, walk_binomial
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_CAP = 0, 1, 2, 3, 4


class CommandFailed(Exception):
    """Raised to end a command with a specific exit code after printing output."""

    def __init__(self, code):
        super().__init__(code)
        self.code = code


# -- input loading -----------------------------------------------------------------

def _read_json(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_ideal(path):
    doc = _read_json(path)
    if not isinstance(doc, dict) or "ring" not in doc or "generators" not in doc:
        raise ValidationError(f'{path}: an ideal document needs "ring" and "generators"')
    ring_doc = doc["ring"]
    if not isinstance(ring_doc, dict) or not isinstance(ring_doc.get("vars"), list):
        raise ValidationError(f'{path}: "ring" needs a "vars" list')
    if not isinstance(doc["generators"], list) or not all(isinstance(g, str) for g in doc["generators"]):
        raise ValidationError(f'{path}: "generators" must be a list of strings')
    field = make_field(ring_doc.get("field", "Q"), current_limits().max_cyclotomic_order)
    ring = Ring(ring_doc["vars"], field)
    return Ideal(ring, doc["generators"]), doc


def load_point(spec, ring):
    """A point file, or inline coordinates such as ``1:2:3`` or ``[1:2:3]``."""
    if Path(spec).is_file():
        doc = _read_json(spec)
        if not isinstance(doc, dict) or not isinstance(doc.get("coords"), list):
            raise ValidationError(f'{spec}: a point document needs a "coords" list')
        coords = [str(c) for c in doc["coords"]]
    else:
        text = spec.strip()
        if text.startswith("[") and text.endswith("]"):
            text = text[1:-1]
        coords = [c.strip() for c in text.replace(",", ":").split(":")]
    return ProjectivePoint(ring, coords)


def load_graph(path):
    return Graph.from_dict(_read_json(path))


def _gens(ideal):
    return [str(g) for g in ideal.generators]


def _ideal_lines(ideal):
    return _gens(ideal) or ["0"]


# -- commands -------------------------------------------------------------------------

def cmd_gb(args):
    ideal, doc = load_ideal(args.ideal)
    order = MonomialOrder.parse(args.order)
    gb = groebner_basis(ideal, order) if args.reduced else buchberger(ideal, order)
    return {
        "inputs": {"ideal": doc, "order": args.order, "reduced": args.reduced},
        "result": gb.strings(),
        "status": "reduced" if args.reduced else "groebner",
    }, gb.strings() or ["0"]


def cmd_hadamard(args):
    I, doc1 = load_ideal(args.ideal1)
    J, doc2 = load_ideal(args.ideal2)
    if I.ring != J.ring:
        raise ValidationError("the two ideals must live in the same ring")
    witness = load_point(args.witness, I.ring) if args.witness else None
    res = hadamard_product(I, J, args.mode, witness)
    out = {
        "inputs": {"ideal1": doc1, "ideal2": doc2, "mode": args.mode, "witness": args.witness},
        "path": res.path,
        "status": res.status,
        "result": _gens(res.ideal),
    }
    if res.witness is not None:
        out["witness"] = str(res.witness)
    lines = _ideal_lines(res.ideal) + [f"path={res.path} status={res.status}"]
    if args.cross_check and res.path != "elimination":
        agree = ideal_equal(res.ideal, hadamard_product_elimination(I, J))
        out["cross_check"] = agree
        lines.append(f"elimination cross-check: {'agrees' if agree else 'DISAGREES'}")
    code = EXIT_HYPOTHESIS if args.mode == "fast" and res.status != CERTIFIED else EXIT_OK
    return out, lines, code


def cmd_power(args):
    I, doc = load_ideal(args.ideal)
    mode = args.mode
    if mode == "auto":
        try:
            result = hadamard_power(I, args.r, "fast")
            mode = "fast"
        except HypothesisError:
            mode = "elimination"
            result = hadamard_power(I, args.r, mode)
    else:
        result = hadamard_power(I, args.r, mode)
    return {
        "inputs": {"ideal": doc, "r": args.r, "mode": args.mode},
        "path": mode,
        "result": _gens(result),
    }, _ideal_lines(result)


def cmd_toric(args):
    G = load_graph(args.graph)
    inputs = {"graph": G.to_dict()}
    if args.walks:
        ring = G.edge_ring()
        walks = closed_even_walks(G, args.max_length)
        polys = [str(walk_binomial(w, ring)) for w in walks]
        inputs["max_length"] = args.max_length
        return {"inputs": inputs, "result": polys, "status": "walks"}, polys or ["no walks with nonzero binomial"]
    if args.subgraph or args.verify:
        H = load_graph(args.subgraph) if args.subgraph else G
        inputs["subgraph"] = H.to_dict()
        rep = verify_subgraph_theorem(G, H)
        verdict = "Theorem holds" if rep.holds else "Theorem FAILS"
        lines = [f"{verdict}: I_G ⋆ I_H^e = I_H^e"]
        lines += ["I_H^e:"] + ["  " + s for s in _ideal_lines(rep.extension)]
        lines += ["I_G ⋆ I_H^e:"] + ["  " + s for s in _ideal_lines(rep.product)]
        out = {
            "inputs": inputs,
            "result": {"extension": _gens(rep.extension), "product": _gens(rep.product)},
            "holds": rep.holds,
            "details": rep.details,
            "status": "holds" if rep.holds else "fails",
        }
        return out, lines, (EXIT_OK if rep.holds else EXIT_FAILED)
    IG = toric_ideal_graph(G)
    return {"inputs": inputs, "result": _gens(IG), "status": "toric"}, _ideal_lines(IG)


def cmd_transform(args):
    I, doc = load_ideal(args.ideal)
    p = load_point(args.point, I.ring)
    inputs = {"ideal": doc, "point": str(p), "fiber": args.fiber, "order": args.order}
    if args.fiber:
        rep = fiber_ideal(I, p, MonomialOrder.parse(args.order))
        data = rep.to_dict()
        lines = ["status: " + rep.status]
        lines += [f"{k}: {str(v).lower()}" for k, v in rep.hypotheses.items()]
        if rep.fiber is not None:
            lines += ["fiber ideal J:"] + ["  " + s for s in _ideal_lines(rep.fiber)]
            lines += ["saturation of J:"] + ["  " + s for s in _ideal_lines(rep.saturation)]
        lines += ["note: " + n for n in rep.notes]
        return {"inputs": inputs, "result": data, "status": rep.status}, lines
    result = point_variety_ideal(p, I)
    return {"inputs": inputs, "result": _gens(result), "status": "transformed"}, _ideal_lines(result)


def cmd_invariants(args):
    I, doc = load_ideal(args.ideal)
    if not I.is_homogeneous():
        raise ValidationError("invariants need a homogeneous ideal")
    order = MonomialOrder.parse(args.order)
    values = hilbert_values(I, args.upto, order)
    data = hilbert_polynomial(I, order)
    out = {
        "inputs": {"ideal": doc, "order": args.order, "upto": args.upto},
        "hilbert_function": values,
        "hilbert_polynomial": data.polynomial_string(),
        "stabilization": data.stabilization,
    }
    lines = ["HF: " + ", ".join(str(v) for v in values)]
    if data.polynomial is None:
        lines.append("Hilbert polynomial: no stabilization within the degree cap")
        out["status"] = "no-stabilization"
    else:
        dd = degree_and_dimension(I)
        out.update(degree=dd.degree, dimension=dd.dimension, status="ok")
        lines += [f"Hilbert polynomial: {data.polynomial} (from degree {data.stabilization})",
                  f"degree: {dd.degree}", f"dimension: {dd.dimension}"]
    return out, lines


def cmd_verify(args):
    if args.cases < 0:
        raise ValidationError("--cases must be non-negative")
    results = run_suite(args.suite, args.seed, args.cases)
    lines = []
    for r in results:
        total = len(r.checks)
        good = total - len(r.failures)
        lines.append(f"{r.name}: {'PASS' if r.passed else 'FAIL'} ({r.cases} cases, {good}/{total} checks)")
        lines += ["  failed: " + f for f in r.failures]
        lines += ["  note: " + n for n in r.notes]
    ok = all(r.passed for r in results)
    out = {
        "inputs": {"suite": args.suite, "seed": args.seed, "cases": args.cases},
        "result": [r.to_dict() for r in results],
        "status": "pass" if ok else "fail",
    }
    return out, lines, (EXIT_OK if ok else EXIT_FAILED)


# -- parser ---------------------------------------------------------------------------------

ORDER_CHOICES = ["lex", "grlex", "grevlex"]


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one structured JSON document")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings in the output")
    caps = common.add_argument_group("resource caps")
    caps.add_argument("--max-spairs", type=int, help="S-pair limit per Groebner basis")
    caps.add_argument("--max-terms", type=int, help="term limit of the working basis")
    caps.add_argument("--max-hilbert-degree", type=int, help="largest degree the Hilbert function is evaluated at")
    caps.add_argument("--max-walks", type=int, help="state limit of the walk enumeration")
    caps.add_argument("--max-cyclotomic-order", type=int, help="largest m accepted for Q(zeta_m)")

    parser = argparse.ArgumentParser(prog="hadamard-ideals", description="Hadamard products of projective varieties")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", parents=[common], help="Groebner basis of an ideal")
    p.add_argument("ideal")
    p.add_argument("--order", choices=ORDER_CHOICES, default="grevlex")
    p.add_argument("--reduced", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("hadamard", parents=[common], help="Hadamard product of two ideals")
    p.add_argument("ideal1")
    p.add_argument("ideal2")
    p.add_argument("--mode", choices=["auto", "fast", "elimination"], default="auto")
    p.add_argument("--witness", help="point on V(I) or V(J) with no zero coordinate")
    p.add_argument("--cross-check", action="store_true", help="also run elimination and compare")
    p.set_defaults(func=cmd_hadamard)

    p = sub.add_parser("power", parents=[common], help="Hadamard power of an ideal")
    p.add_argument("ideal")
    p.add_argument("r", type=int)
    p.add_argument("--mode", choices=["auto", "fast", "elimination"], default="auto")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("toric", parents=[common], help="toric ideal of a graph")
    p.add_argument("graph")
    p.add_argument("--subgraph", help="graph file of a subgraph H")
    p.add_argument("--verify", action="store_true", help="check I_G * I_H^e = I_H^e (H = G without --subgraph)")
    p.add_argument("--walks", action="store_true", help="list closed even walk binomials instead")
    p.add_argument("--max-length", type=int, help="walk length bound (default 2|E|)")
    p.set_defaults(func=cmd_toric)

    p = sub.add_parser("transform", parents=[common], help="Hadamard transformation by a point")
    p.add_argument("ideal")
    p.add_argument("point")
    p.add_argument("--fiber", action="store_true", help="report the fiber ideal of the point")
    p.add_argument("--order", choices=ORDER_CHOICES, default="grevlex")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("invariants", parents=[common], help="Hilbert function, degree and dimension")
    p.add_argument("ideal")
    p.add_argument("--order", choices=ORDER_CHOICES, default="grevlex")
    p.add_argument("--upto", type=int, default=10)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", parents=[common], help="run cross-validation suites")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=25)
    p.set_defaults(func=cmd_verify)
    return parser


def _cap_overrides(args):
    names = ["max_spairs", "max_terms", "max_hilbert_degree", "max_walks", "max_cyclotomic_order"]
    out = {n: getattr(args, n) for n in names if getattr(args, n) is not None}
    if "max_hilbert_degree" in out:
        out["hilbert_window"] = min(current_limits().hilbert_window, out["max_hilbert_degree"])
    return out


def _emit(args, doc, lines, stream):
    if args.json:
        doc = {"command": args.command, **doc}
        stream.write(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        for line in lines:
            stream.write(line + "\n")


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        with limits(**_cap_overrides(args)):
            start = time.perf_counter()
            out = args.func(args)
            elapsed = time.perf_counter() - start
        doc, lines = out[0], out[1]
        code = out[2] if len(out) > 2 else EXIT_OK
        if args.timings:
            doc["timings"] = {"seconds": round(elapsed, 6)}
            lines = lines + [f"time: {elapsed:.3f} s"]
        _emit(args, doc, lines, stdout)
        return code
    except ValidationError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (HypothesisError, UndefinedProductError) as exc:
        stderr.write(f"hypothesis failure: {exc}\n")
        return EXIT_HYPOTHESIS
    except ResourceCapExceeded as exc:
        stderr.write(f"resource cap exceeded: {exc}\n")
        return EXIT_CAP
    except KeyboardInterrupt:
        stderr.write("interrupted\n")
        return 130


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
