"""Command-line entry point.

Exit codes: 0 when every requested check passes, 1 when a law, predicate or
equality fails, 2 on usage, input or I/O errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core.engine import COUNTEREXAMPLE, PASS, Budget, check_laws, combine
from .core.laws import LAWS
from .errors import LawViolation, MonadLawsFail, RelcatError
from .report import dumps, summary_csv, verdict_figure, write_report

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2

STOCK_MODELS = [
    {"kind": "finset", "sorts": {"X": 2}},
    {"kind": "finpar", "sorts": {"X": 2}},
    {"kind": "finrel", "sorts": {"X": 2}},
    {"kind": "finrel_forall", "sorts": {"X": 2}},
    {"kind": "rel_plus", "sorts": {"X": 2}},
    {"kind": "span_x", "sorts": {"X": 2}},
    {"kind": "span_plus", "sorts": {"X": 2}},
    {"kind": "wrel", "semiring": "boolean", "sorts": {"X": 2}},
]


class UsageError(RelcatError):
    pass


def _load_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _read_text(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None


def _manifest(arg):
    """A manifest from a JSON file path, or a bare kind / monad string."""
    if arg.endswith(".json") or Path(arg).is_file():
        return _load_json(arg)
    return arg


def _model(arg):
    from .instances import build_model
    return build_model(_manifest(arg))


def _budget(args):
    if args.budget_words < 0 or args.budget_hom <= 0:
        raise UsageError("budget caps must be positive")
    return Budget(words=args.budget_words, hom=args.budget_hom, seed=args.seed)


def _run(args, inputs):
    return {"command": args.command if args.command != "diagram" else f"diagram {args.action}",
            "inputs": [str(p) for p in inputs],
            "budget": {"words": args.budget_words, "hom": args.budget_hom},
            "seed": args.seed, "out": args.out}


def _emit(args, doc):
    text = dumps(doc)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _predicate_list(raw):
    from .taxonomy import PREDICATES
    if not raw:
        return None
    names = [p.strip() for p in raw.split(",") if p.strip()]
    bad = [p for p in names if p not in PREDICATES]
    if bad:
        raise UsageError(f"unknown predicate(s): {', '.join(bad)}")
    return names


def _print_verdicts(rep, C, stream):
    for name, pr in rep.predicates.items():
        line = f"{name:<22} {pr.status}"
        law = pr.failing_law
        if law:
            line += f"  [{law}]"
        print(line, file=stream)
        if law and pr.status == COUNTEREXAMPLE:
            bad = next(r for r in pr.reports if r.law == law)
            arrows = {k: C.to_json(v) for k, v in bad.witness.arrows.items()}
            objs = {k: [s.name for s in v] for k, v in bad.witness.objects.items()}
            print(f"{'':<23}witness objects={json.dumps(objs)} arrows={json.dumps(arrows)}", file=stream)
    for v in rep.violations:
        print(f"implication violated: {v}", file=stream)


def _verdict_exit(statuses):
    statuses = list(statuses)
    if all(s == PASS for s in statuses):
        return EXIT_PASS
    return EXIT_FAIL


def cmd_classify(args):
    from .taxonomy import classify
    C = _model(args.model)
    rep = classify(C, _budget(args), _predicate_list(args.predicates), derived=not args.predicates)
    _print_verdicts(rep, C, sys.stdout if args.out else sys.stderr)
    _emit(args, {"run": _run(args, [args.model]), "report": rep.to_json(C)})
    if args.figure:
        verdict_figure([rep], args.figure, title=C.name)
    return _verdict_exit([s for s in rep.verdicts().values()] + ([COUNTEREXAMPLE] if rep.violations else []))


def cmd_law(args):
    from .monads.build import build_monad
    if args.list:
        for name, law in sorted(LAWS.items()):
            print(f"{name:<28} {law.summary}")
        return EXIT_PASS
    if not args.law:
        raise UsageError("give --law NAME[,NAME...] or --list")
    names = [n.strip() for n in args.law.split(",") if n.strip()]
    bad = [n for n in names if n not in LAWS]
    if bad:
        raise UsageError(f"unknown law(s): {', '.join(bad)}")
    C = _model(args.model)
    T = build_monad(_manifest(args.monad), C) if args.monad else None
    reports = check_laws(C, names, _budget(args), monad=T)
    stream = sys.stdout if args.out else sys.stderr
    for r in reports:
        print(f"{r.law:<28} {r.status}" + (f"  {r.detail}" if r.detail else ""), file=stream)
    _emit(args, {"run": _run(args, [args.model]), "model": C.name,
                 "reports": [r.to_json(C) for r in reports]})
    return _verdict_exit(r.status for r in reports)


def cmd_kleisli(args):
    from .instances import build_model
    from .monads.base import MONAD_CLASSES, check_monad_class
    from .monads.build import build_monad
    from .monads.kleisli import kleisli
    from .taxonomy import classify

    base_doc = _manifest(args.base)
    monad_doc = _manifest(args.monad)
    base = build_model(base_doc)
    T = build_monad(monad_doc, base)
    budget = _budget(args)
    classes = [c.strip().replace("_", "-") for c in (args.check_class or "").split(",") if c.strip()]
    bad = [c for c in classes if c not in MONAD_CLASSES]
    if bad:
        raise UsageError(f"unknown monad class(es): {', '.join(bad)}")
    stream = sys.stdout if args.out else sys.stderr
    doc = {"run": _run(args, [args.base, args.monad])}
    try:
        K = kleisli(T, force=args.force, budget=budget)
    except MonadLawsFail as exc:
        doc["monad_laws"] = [r.to_json(base) for r in exc.reports]
        print(f"monad laws fail: {exc}", file=stream)
        _emit(args, doc)
        return EXIT_FAIL
    statuses = []
    if not args.force:
        doc["monad_laws"] = [r.to_json(base) for r in T._law_reports]
        statuses.append(combine(T._law_reports))
    doc["model"] = {"kind": "kleisli", "base": base_doc, "monad": monad_doc, "force": args.force}
    class_reports = [check_monad_class(T, c, budget) for c in classes]
    doc["classes"] = {r.law: r.to_json(base) for r in class_reports}
    for r in class_reports:
        print(f"{r.law:<22} {r.status}", file=stream)
        statuses.append(r.status)
    preds = _predicate_list(args.predicates)
    if preds:
        rep = classify(K, budget, preds, derived=False)
        doc["report"] = rep.to_json(K)
        _print_verdicts(rep, K, stream)
        statuses.extend(rep.verdicts().values())
    if args.model_out:
        Path(args.model_out).write_text(dumps(doc["model"]), encoding="utf-8")
    _emit(args, doc)
    return _verdict_exit(statuses)


def _signature(path):
    from .diagrams import parse_signature
    return parse_signature(_read_text(path))


def _term(sig, path):
    from .diagrams import parse_term
    return parse_term(sig, _read_text(path).strip())


def cmd_diagram(args):
    from .diagrams import certificate, diagrams_equal, evaluate, to_dot
    sig = _signature(args.signature)
    terms = [_term(sig, p) for p in args.terms]
    inputs = [args.signature] + list(args.terms)
    if args.action == "eq":
        if len(terms) != 2:
            raise UsageError("diagram eq needs exactly two term files")
        equal = diagrams_equal(*terms)
        doc = {"run": _run(args, inputs), "equal": equal}
        if not equal:
            doc["certificate"] = certificate(*terms)
        print("equal" if equal else f"not equal: {doc['certificate']}", file=sys.stdout if args.out else sys.stderr)
        _emit(args, doc)
        return EXIT_PASS if equal else EXIT_FAIL
    if len(terms) != 1:
        raise UsageError(f"diagram {args.action} needs exactly one term file")
    (term,) = terms
    if args.action == "render":
        text = to_dot(term)
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        return EXIT_PASS
    if not args.model or not args.assignment:
        raise UsageError("diagram eval needs --model and --assignment")
    C = _model(args.model)
    m = evaluate(term, _load_json(args.assignment), C)
    _emit(args, {"run": _run(args, inputs + [args.model, args.assignment]),
                 "dom": [s.name for s in m.dom], "cod": [s.name for s in m.cod], "payload": C.to_json(m)})
    return EXIT_PASS


def cmd_semiring(args):
    from .semiring import canonical_preorder, load_semiring
    src = _manifest(args.semiring)
    doc = {"run": _run(args, [args.semiring])}
    try:
        S = load_semiring(src)
    except LawViolation as exc:
        doc.update(valid=False, law=exc.law, witness={k: str(v) for k, v in exc.witness.items()}
                   if isinstance(exc.witness, dict) else str(exc.witness))
        print(f"invalid: {exc}", file=sys.stdout if args.out else sys.stderr)
        _emit(args, doc)
        return EXIT_FAIL
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    order = sorted(canonical_preorder(S), key=lambda ab: (S.index(ab[0]), S.index(ab[1])))
    doc.update(valid=True, semiring=S.to_json(), canonical_preorder=[list(ab) for ab in order])
    print(f"valid: {S.name or 'semiring'} with {S.size} elements", file=sys.stdout if args.out else sys.stderr)
    _emit(args, doc)
    return EXIT_PASS


def cmd_report(args):
    from .instances import build_model
    from .taxonomy import classify
    if not args.out:
        raise UsageError("report needs --out DIR")
    docs = [_manifest(m) for m in args.model] if args.model else STOCK_MODELS
    budget = _budget(args)
    preds = _predicate_list(args.predicates)
    models, reports = [], []
    for doc in docs:
        C = build_model(doc)
        models.append(C)
        reports.append(classify(C, budget, preds))
    paths = write_report(reports, models, Path(args.out))
    print(summary_csv(reports), end="")
    for key in ("json", "csv", "png"):
        print(f"wrote {paths[key]}")
    return EXIT_FAIL if any(r.violations for r in reports) else EXIT_PASS


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-words", type=int, default=1, help="longest object word enumerated (default 1)")
    common.add_argument("--budget-hom", type=int, default=512, help="morphisms tried per hom-set (default 512)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled hom-sets")
    common.add_argument("--out", help="write the JSON result here instead of standard output")

    p = argparse.ArgumentParser(prog="relcat", description="Law checking for finite gs-monoidal models.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="run taxonomy predicates on a model")
    c.add_argument("--model", required=True, help="model manifest (JSON file or kind name)")
    c.add_argument("--predicates", help="comma separated predicate names (default: all)")
    c.add_argument("--figure", help="also render the verdict grid to this PNG")
    c.set_defaults(func=cmd_classify)

    law = sub.add_parser("law", parents=[common], help="check named laws on a model")
    law.add_argument("--model", default="finset")
    law.add_argument("--law", help="comma separated law names")
    law.add_argument("--monad", help="monad manifest or kind string, for monad laws")
    law.add_argument("--list", action="store_true", help="list the law catalog")
    law.set_defaults(func=cmd_law)

    k = sub.add_parser("kleisli", parents=[common], help="build and check a Kleisli model")
    k.add_argument("--base", required=True, help="base model manifest")
    k.add_argument("--monad", required=True, help="monad manifest or kind string like semiring:boolean:u")
    k.add_argument("--force", action="store_true", help="skip the monad-law check")
    k.add_argument("--check-class", help="comma separated monad classes (affine, relevant, ...)")
    k.add_argument("--predicates", help="classify the Kleisli model on these predicates")
    k.add_argument("--model-out", help="write the Kleisli model manifest here")
    k.set_defaults(func=cmd_kleisli)

    d = sub.add_parser("diagram", parents=[common], help="decide, evaluate or render diagram terms")
    d.add_argument("action", choices=["eq", "eval", "render"])
    d.add_argument("signature", help="signature file")
    d.add_argument("terms", nargs="+", help="term files")
    d.add_argument("--model", help="model manifest for eval")
    d.add_argument("--assignment", help="assignment JSON for eval")
    d.set_defaults(func=cmd_diagram)

    s = sub.add_parser("semiring", parents=[common], help="validate a semiring")
    s.add_argument("action", choices=["check"])
    s.add_argument("semiring", help="JSON table file or catalog name")
    s.set_defaults(func=cmd_semiring)

    r = sub.add_parser("report", parents=[common], help="classify models and write JSON, CSV and PNG")
    r.add_argument("--model", action="append", help="model manifest (repeatable; default: stock models)")
    r.add_argument("--predicates", help="comma separated predicate names (default: all)")
    r.set_defaults(func=cmd_report)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PASS if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except (RelcatError, OSError, KeyError, ValueError, TypeError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"relcat: error: {msg}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
