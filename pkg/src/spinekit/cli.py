"""Command-line front end.

Exit codes: 0 when all checks pass, 1 when a mathematical check failed (the
failure is reported on stdout), 2 for input or usage errors (diagnosed on
stderr). All reports go to stdout and are deterministic: objects, elements,
and morphisms print in canonical order, so two runs on the same input are
byte-identical.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import classify_group, cyclic_group, klein_group, symmetric_group
from .cosets import AmbientGroup, coset_test, partition_check
from .document import (
    load_group,
    load_spine,
    parse_document,
    serialize_group,
    serialize_spine,
)
from .errors import (
    DocumentError,
    EmptySet,
    InvalidSpine,
    MixedSignature,
    NotPrime,
    NotRegular,
    SearchExhausted,
    TooLarge,
    UnknownElement,
    UnknownObject,
    ValidationError,
)
from .extension import check_regularity, extend_to_groupoid
from .generators import (
    GeneratorSpec,
    gen_affine_config,
    gen_group_action_spine,
    gen_latin_square_family,
    latin_family_spine,
    perturb_spine,
)
from .groups import GroupTable, extract_group, group_on_fiber, relabel_group
from .model import validate_spine

GROUP_SPEC_HELP = (
    "group spec: Zn (cyclic of order n), Sn (symmetric, n <= 4), V4 "
    "(Klein four-group), or a path to a group-table JSON file"
)


def resolve_group_spec(spec: str) -> GroupTable:
    if spec == "V4":
        return klein_group()
    if len(spec) >= 2 and spec[0] in "ZS" and spec[1:].isdigit():
        n = int(spec[1:])
        if spec[0] == "Z":
            if n < 1:
                raise ValueError(f"bad group spec {spec!r}: order must be >= 1")
            return cyclic_group(n)
        if n > 4:
            raise ValueError(f"bad group spec {spec!r}: symmetric groups go up to S4")
        return symmetric_group(n)
    path = Path(spec)
    if not path.exists():
        raise FileNotFoundError(
            f"group spec {spec!r} is not Zn, Sn, or V4, and no such file exists"
        )
    return load_group(path.read_bytes())


def render_cayley(table: GroupTable) -> list[str]:
    """Row-major grid with a header row and column; identity first."""
    order = [table.identity] + [e for e in table.elements if e != table.identity]
    width = max(len(e) for e in order + ["*"])
    pad = lambda s: s.rjust(width)
    lines = [" ".join([pad("*")] + [pad(e) for e in order])]
    for a in order:
        lines.append(" ".join([pad(a)] + [pad(table.op(a, b)) for b in order]))
    return lines


def _read(path: str) -> bytes:
    return Path(path).read_bytes()


def _emit_document(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    spine, _ = load_spine(_read(args.file))
    report = validate_spine(spine)
    print("\n".join(report.render_lines()))
    return 0 if report.ok else 1


def cmd_regularity(args) -> int:
    spine, _ = load_spine(_read(args.file))
    report = check_regularity(spine)
    print("\n".join(report.render_lines()))
    return 0 if report.regular else 1


def cmd_extend(args) -> int:
    spine = parse_document(_read(args.file))
    result = extend_to_groupoid(spine)
    print(f"conservative: {'true' if result.conservative else 'false'}")
    print(f"iterations: {result.iterations}")
    print(f"objects: {len(result.extended.objects)}")
    for pair, added in sorted(result.added_morphisms.items()):
        print(f"added on ({pair[0]},{pair[1]}): {len(added)} morphisms")
    if args.out:
        _emit_document(serialize_spine(result.extended), args.out)
    return 0 if result.conservative else 1


def cmd_extract(args) -> int:
    spine = parse_document(_read(args.file))
    result = extend_to_groupoid(spine)
    action = extract_group(result, args.object)
    cls = classify_group(action.group)
    print(f"object: {args.object}")
    print(f"group order: {len(action.group)}")
    print(f"class: {cls.render()}")
    print("cayley table:")
    print("\n".join(render_cayley(action.group)))
    if args.identity is not None:
        fiber = group_on_fiber(action, args.identity)
        fiber_cls = classify_group(fiber)
        print(f"fiber group at {args.identity}: identity {fiber.identity}")
        print(f"fiber class: {fiber_cls.render()}")
        print("fiber cayley table:")
        print("\n".join(render_cayley(fiber)))
    return 0


def _parse_set(text: str) -> list[tuple[str, ...]]:
    return [(x,) for x in text.split(",") if x != ""]


def cmd_coset(args) -> int:
    table = resolve_group_spec(args.group)
    amb = AmbientGroup(table, 1)
    report = coset_test(amb, _parse_set(args.set))
    names = (
        "left-translates-partition",
        "right-translates-partition",
        "left-coset",
        "right-coset",
        "xyz-closure",
    )
    for name, verdict in zip(names, report.verdicts()):
        print(f"{name}: {'true' if verdict else 'false'}")
    if report.subgroup is not None:
        ordered = sorted(report.subgroup, key=amb.tuple_key)
        print(f"subgroup: {','.join(x[0] for x in ordered)}")
        print(f"translator: {report.translator[0]}")
    return 0 if report.is_coset else 1


def cmd_partition(args) -> int:
    table = resolve_group_spec(args.group)
    for text in args.sets:
        for (x,) in _parse_set(text):
            if x not in table.elements:
                raise UnknownElement(f"{x!r} is not a group element")
    family = [_parse_set(text) for text in args.sets]
    report = partition_check(family)
    print("\n".join(report.render_lines()))
    return 0 if report.equal_or_disjoint else 1


def cmd_gen(args) -> int:
    if args.kind == "group-action":
        if not args.group:
            print("error: --kind group-action needs --group", file=sys.stderr)
            return 2
        table = resolve_group_spec(args.group)
        spine = gen_group_action_spine(table, args.objects)
        spec = GeneratorSpec("group-action", group=args.group, objects=args.objects)
    elif args.kind == "affine-config":
        if args.prime is None:
            print("error: --kind affine-config needs --prime", file=sys.stderr)
            return 2
        spine = gen_affine_config(args.prime)
        spec = GeneratorSpec("affine-config", prime=args.prime)
    elif args.kind == "latin-square":
        if args.order is None:
            print("error: --kind latin-square needs --order", file=sys.stderr)
            return 2
        family = gen_latin_square_family(args.order, args.coset, args.seed)
        spine = latin_family_spine(family)
        spec = GeneratorSpec(
            "latin-square", order=args.order, want_coset=args.coset, seed=args.seed
        )
    else:  # perturbed
        if not args.base:
            print("error: --kind perturbed needs --base", file=sys.stderr)
            return 2
        base = parse_document(_read(args.base))
        spine = perturb_spine(base, args.seed)
        spec = GeneratorSpec("perturbed", seed=args.seed)
    _emit_document(serialize_spine(spine, meta=spec.meta()), args.out)
    return 0


def cmd_relabel(args) -> int:
    table = resolve_group_spec(args.group_file)
    relabeled = relabel_group(table, args.d)
    cls = classify_group(relabeled)
    print(f"identity: {relabeled.identity}")
    print(f"class: {cls.render()}")
    print("cayley table:")
    print("\n".join(render_cayley(relabeled)))
    if args.out:
        _emit_document(serialize_group(relabeled), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinekit",
        description=(
            "Finite groupoid spines: validate, check regularity, extend to a "
            "groupoid, extract the automorphism group, and run coset geometry "
            "tests."
        ),
        epilog=GROUP_SPEC_HELP,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the spine axioms of a document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("regularity", help="check sharp transitivity per pair")
    p.add_argument("file")
    p.set_defaults(func=cmd_regularity)

    p = sub.add_parser("extend", help="extend a regular spine to a groupoid")
    p.add_argument("file")
    p.add_argument("--out", help="write the extended spine document here")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("extract", help="extract the group at an object")
    p.add_argument("file")
    p.add_argument("--object", required=True)
    p.add_argument(
        "--identity",
        help="also print the group transported onto the carrier with this identity",
    )
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("coset", help="run the five-way coset characterization")
    p.add_argument("group", help=GROUP_SPEC_HELP)
    p.add_argument("--set", required=True, help="comma-separated element labels")
    p.set_defaults(func=cmd_coset)

    p = sub.add_parser("partition", help="check a family is pairwise equal-or-disjoint")
    p.add_argument("group", help=GROUP_SPEC_HELP)
    p.add_argument(
        "--sets", required=True, nargs="+", help="each set as comma-separated labels"
    )
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("gen", help="generate a spine document")
    p.add_argument(
        "--kind",
        required=True,
        choices=["group-action", "affine-config", "latin-square", "perturbed"],
    )
    p.add_argument("--group", help=GROUP_SPEC_HELP)
    p.add_argument("--objects", type=int, default=3)
    p.add_argument("--prime", type=int)
    p.add_argument("--order", type=int)
    p.add_argument(
        "--coset",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="latin-square only: whether the family should be a coset family",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--base", help="perturbed only: spine document to mutate")
    p.add_argument("--out", help="write the document here instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("relabel", help="relabel a group so a chosen element is the identity")
    p.add_argument("group_file", help=GROUP_SPEC_HELP)
    p.add_argument("--d", required=True, help="element to become the identity")
    p.add_argument("--out", help="write the relabeled group-table file here")
    p.set_defaults(func=cmd_relabel)

    return parser


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except ValidationError as exc:
        print("\n".join(exc.report.render_lines()))
        return 1
    except InvalidSpine as exc:
        print("\n".join(exc.report.render_lines()))
        return 1
    except NotRegular as exc:
        print("\n".join(exc.report.render_lines()))
        return 1
    except SearchExhausted as exc:
        print(f"search exhausted: {exc}")
        return 1
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        UnknownObject,
        UnknownElement,
        NotPrime,
        TooLarge,
        EmptySet,
        MixedSignature,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
