"""
Command-line front end.

    python main_hybrid.py verify shaw6 --expect "[[6,1:1,3:2]]"
    python main_hybrid.py bc --code1 rep3.lin --code2 rep3.lin --hybrid --emit bs9.code
    python main_hybrid.py kl shaw6 --d 3 --c 2
    python main_hybrid.py bounds "[[9,1:4,3:2]]_2"
    python main_hybrid.py gauge-fix baconshor9 --fix ZZZZ --emit bs9.code
    python main_hybrid.py examples list

Exit codes: 0 pass, 1 expectation or condition failure, 2 input error, 3 oracle dimension cap.
"""
import argparse
import json
import logging
import os
import sys

sys.path.append(os.path.dirname(os.path.realpath(__file__)))

from codes.bacon_casaccino import classical_min_distance, construct_bc, construct_bc_hybrid
from codes.bounds import (classical_singleton, compare_with_known, quantum_singleton, rule_out_trivial_split,
                          singleton_check, subsystem_singleton, trade_quantum_for_classical)
from codes.hybrid import HybridParams, hybrid_params, quantum_distance
from codes.subsystem import min_distance_subsystem, purity
from config.qec_config import QecConfig
from data.catalog import example_text, get_example, is_example, list_examples
from data.code_file import (emit_code_file, from_hybrid, from_subsystem, parse_code_file, read_code_file,
                            read_linear_code, write_code_file)
from oracle.kl_oracle import check_correction, check_detection
from utils.errors import DimensionTooLarge, QecError
from utils.logger import set_logger

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3

logger = logging.getLogger(__name__)


def load_source(source):
    """A code file path, or the name of a built-in example."""
    if os.path.exists(source):
        return read_code_file(source)
    if is_example(source):
        return parse_code_file(example_text(source))
    raise FileNotFoundError("no code file or example named %r" % source)


def dump_report(report, path):
    if path:
        with open(path, "w") as f:
            json.dump(report, f, indent=2)


def _config(args) -> QecConfig:
    return QecConfig().update(n_jobs=getattr(args, "n_jobs", None), verbose=args.verbose)


def _distance(result):
    return {"value": result.weight, "exact": result.exact, "lower_bound": result.bound,
            "witness": str(result.witness) if result.witness is not None else None}


def _describe(label, result):
    if result.exact:
        return "%s = %d (exact, witness %s)" % (label, result.weight, result.witness)
    return "%s > %d (lower bound, no operator up to weight %d)" % (label, result.max_weight, result.max_weight)


def _matches(expected: HybridParams, params: HybridParams, d_result, c_result):
    """Distances not reached by the search only need to sit above the searched weights."""
    def distance_ok(value, result):
        if result.exact:
            return value == result.weight
        return value > result.max_weight

    return (expected.n == params.n and expected.k == params.k and expected.m == params.m
            and expected.q == params.q
            and distance_ok(expected.d, d_result) and distance_ok(expected.c, c_result))


def cmd_verify(args) -> int:
    config = _config(args)
    code = load_source(args.source)
    h = code.to_hybrid(args.fix)
    max_weight = args.max_weight if args.max_weight is not None else config.default_max_weight(h.n)
    params, d_result, c_result = hybrid_params(h, max_weight=max_weight, config=config)
    gauge_result = quantum_distance(h, max_weight=max_weight, config=config)
    bounded = HybridParams(h.n, h.k, h.m, d_result.bound, c_result.bound, h.spec.q)
    singleton = singleton_check(bounded)
    split = rule_out_trivial_split(bounded)
    print("code: %s (%s)" % (args.source, code.kind))
    print("n = %d, k = %s, m = %s, q = %d" % (h.n, h.k, h.m, h.spec.q))
    print(_describe("d", d_result) + ", inner codes N(S0)\\S0")
    print(_describe("c", c_result))
    print(_describe("d_G", gauge_result) + ", gauge group N(S_Q)\\G, lower bound on d")
    print("parameters: %s" % params)
    print("singleton: %s" % singleton)
    print("trivial split: %s%s" % (split.status, "" if split.split is None else " %s" % (split.split,)))
    report = {
        "source": args.source,
        "kind": code.kind,
        "n": h.n, "k": str(h.k), "m": str(h.m), "q": h.spec.q,
        "max_weight": max_weight,
        "d": _distance(d_result),
        "c": _distance(c_result),
        "d_gauge": _distance(gauge_result),
        "parameters": str(params),
        "singleton": singleton,
        "trivial_split": split.status,
    }
    if code.kind == "subsystem":
        sub = code.to_subsystem()
        sub_d = min_distance_subsystem(sub, max_weight=max_weight, config=config)
        sub_ok = subsystem_singleton(sub.n, sub.k, sub.r, sub_d.bound)
        print("subsystem: [[%d,%s,%s,%s]], singleton %s" % (sub.n, sub.k, sub.r, sub_d, "holds" if sub_ok else "violated"))
        report["subsystem"] = {"k": str(sub.k), "r": str(sub.r), "d": _distance(sub_d), "singleton": sub_ok}
    status = EXIT_OK
    if args.expect:
        expected = HybridParams.parse(args.expect, q=h.spec.q)
        ok = _matches(expected, params, d_result, c_result)
        print("expected %s: %s" % (expected, "match" if ok else "MISMATCH"))
        report["expected"] = str(expected)
        report["match"] = ok
        if not ok:
            status = EXIT_FAIL
    dump_report(report, args.report)
    return status


def cmd_bc(args) -> int:
    config = _config(args)
    c1 = read_linear_code(args.code1)
    c2 = read_linear_code(args.code2)
    report = {"code1": args.code1, "code2": args.code2, "hybrid": args.hybrid}
    status = EXIT_OK
    if args.hybrid:
        h, predicted = construct_bc_hybrid(c1, c2)
        max_weight = args.max_weight if args.max_weight is not None else config.default_max_weight(h.n)
        params, d_result, c_result = hybrid_params(h, max_weight=max_weight, config=config)
        print("predicted: %s (c is a lower bound)" % predicted)
        print("enumerated: %s" % params)
        print(_describe("d", d_result))
        print(_describe("c", c_result))
        report.update({"predicted": str(predicted), "enumerated": str(params),
                       "d": _distance(d_result), "c": _distance(c_result)})
        if d_result.exact and d_result.weight != predicted.d:
            status = EXIT_FAIL
        if c_result.exact and c_result.weight < predicted.c:
            status = EXIT_FAIL
        emitted = from_hybrid(h, comments=["Bacon-Casaccino hybrid %s" % params])
    else:
        code = construct_bc(c1, c2)
        max_weight = args.max_weight if args.max_weight is not None else config.default_max_weight(code.n)
        d_result = min_distance_subsystem(code, max_weight=max_weight, config=config)
        pure = purity(code, config=config)
        predicted_d = min(classical_min_distance(c1), classical_min_distance(c2))
        print("subsystem: [[%d,%s,%s,%s]]" % (code.n, code.k, code.r, d_result))
        print("predicted d = %d, purity = %s" % (predicted_d, pure))
        report.update({"n": code.n, "k": str(code.k), "r": str(code.r), "d": _distance(d_result),
                       "predicted_d": predicted_d, "purity": pure.weight})
        if d_result.exact and d_result.weight != predicted_d:
            status = EXIT_FAIL
        emitted = from_subsystem(code, comments=["Bacon-Casaccino subsystem code [[%d,%s,%s,%s]]"
                                                 % (code.n, code.k, code.r, d_result)])
    if args.emit:
        write_code_file(emitted, args.emit)
        print("written to %s" % args.emit)
    else:
        sys.stdout.write(emit_code_file(emitted))
    dump_report(report, args.report)
    return status


def _kl_targets(args):
    if args.d is not None and args.c is not None:
        return args.d, args.c
    if is_example(args.source) and not os.path.exists(args.source):
        p = get_example(args.source).params
        return (args.d if args.d is not None else p.d), (args.c if args.c is not None else p.c)
    raise QecError("--d and --c are required for code files")


def _print_kl(name, report, limit):
    print("%s: %s" % (name, report.summary()))
    ordered = sorted(report.violations, key=lambda v: (v.weight, v.condition, str(v.operator)))
    for v in ordered[:limit]:
        print("  %s weight %d on (%s | %s): %s residual %.3g"
              % (v.operator, v.weight, ",".join(map(str, v.a)), ",".join(map(str, v.b)), v.condition, v.residual))
    if len(ordered) > limit:
        print("  ... %d more" % (len(ordered) - limit))


def _kl_json(report):
    return {"d": report.d, "c": report.c, "checked": report.checked, "passed": report.passed,
            "violations": [{"operator": str(v.operator), "weight": v.weight, "a": list(v.a), "b": list(v.b),
                            "condition": v.condition, "residual": v.residual} for v in report.violations]}


def cmd_kl(args) -> int:
    config = _config(args)
    d, c = _kl_targets(args)
    h = load_source(args.source).to_hybrid(args.fix)
    detection = check_detection(h, d, c, config=config)
    _print_kl("detection", detection, args.witnesses)
    report = {"source": args.source, "detection": _kl_json(detection)}
    passed = detection.passed
    if args.correct:
        correction = check_correction(h, d, c, config=config)
        _print_kl("correction", correction, args.witnesses)
        report["correction"] = _kl_json(correction)
        passed = passed and correction.passed
    dump_report(report, args.report)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_bounds(args) -> int:
    p = HybridParams.parse(args.params)
    split = rule_out_trivial_split(p)
    print("parameters: %s" % p)
    print("singleton: %s" % singleton_check(p))
    print("quantum singleton k <= n - 2(d-1): %s" % quantum_singleton(p.n, p.k, p.d))
    print("classical singleton m <= n - c + 1: %s" % classical_singleton(p.n, p.m, p.c))
    print("trivial split: %s%s" % (split.status, "" if split.split is None else " %s" % (split.split,)))
    if p.k >= 1:
        print("trade one quantum qudit: %s" % trade_quantum_for_classical(p))
    for name, relation in compare_with_known(p):
        print("against %s: %s" % (name, relation))
    return EXIT_OK


def cmd_gauge_fix(args) -> int:
    code = load_source(args.source)
    if code.kind != "subsystem":
        raise QecError("%s is a %s code, gauge fixing needs [gauge_x] and [gauge_z]" % (args.source, code.kind))
    h = code.to_hybrid(args.fix)
    emitted = from_hybrid(h, comments=["gauge fixed %s: [[%d,%s:%s]]" % (args.fix or "all Z", h.n, h.k, h.m)])
    if args.emit:
        write_code_file(emitted, args.emit)
        print("written to %s" % args.emit)
    else:
        sys.stdout.write(emit_code_file(emitted))
    return EXIT_OK


def cmd_examples(args) -> int:
    if args.action == "list":
        for e in list_examples():
            print("%-12s %-18s %s" % (e.name, e.params, e.description))
        print("d is the inner-code distance wt(N(S0)\\S0), c is wt(N(S_Q)\\N(S0))")
        return EXIT_OK
    if not args.name:
        raise QecError("examples emit needs a NAME")
    if not is_example(args.name):
        raise QecError("unknown example %r" % args.name)
    sys.stdout.write(example_text(args.name))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(description="hybrid quantum-classical codes from gauge fixing")
    parser.add_argument("--verbose", action="store_true")
    parser.add_argument("--logfile", type=str, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="validate a code and enumerate its distances")
    verify.add_argument("source", help="code file or example name")
    verify.add_argument("--max-weight", type=int, default=None)
    verify.add_argument("--expect", type=str, default=None)
    verify.add_argument("--fix", type=str, default=None, help="Z/X per gauge pair for subsystem files")
    verify.add_argument("--n-jobs", type=int, default=None)
    verify.add_argument("--report", type=str, default=None)
    verify.set_defaults(func=cmd_verify)

    bc = sub.add_parser("bc", help="Bacon-Casaccino construction from two classical codes")
    bc.add_argument("--code1", type=str, required=True)
    bc.add_argument("--code2", type=str, required=True)
    bc.add_argument("--emit", type=str, default=None)
    bc.add_argument("--hybrid", action="store_true")
    bc.add_argument("--max-weight", type=int, default=None)
    bc.add_argument("--n-jobs", type=int, default=None)
    bc.add_argument("--report", type=str, default=None)
    bc.set_defaults(func=cmd_bc)

    kl = sub.add_parser("kl", help="dense Knill-Laflamme check")
    kl.add_argument("source", help="code file or example name")
    kl.add_argument("--d", type=int, default=None)
    kl.add_argument("--c", type=int, default=None)
    kl.add_argument("--correct", action="store_true")
    kl.add_argument("--fix", type=str, default=None)
    kl.add_argument("--witnesses", type=int, default=10, help="violations to print")
    kl.add_argument("--report", type=str, default=None)
    kl.set_defaults(func=cmd_kl)

    bounds = sub.add_parser("bounds", help="Singleton and trivial-split checks for a parameter string")
    bounds.add_argument("params", help='"[[n,k:m,d:c]]_q"')
    bounds.set_defaults(func=cmd_bounds)

    fix = sub.add_parser("gauge-fix", help="subsystem code file to hybrid code file")
    fix.add_argument("source")
    fix.add_argument("--fix", type=str, default=None)
    fix.add_argument("--emit", type=str, default=None)
    fix.set_defaults(func=cmd_gauge_fix)

    examples = sub.add_parser("examples", help="built-in example codes")
    examples.add_argument("action", choices=["list", "emit"])
    examples.add_argument("name", nargs="?", default=None)
    examples.set_defaults(func=cmd_examples)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    set_logger(args.verbose, args.logfile)
    try:
        return args.func(args)
    except DimensionTooLarge as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError, NotImplementedError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
