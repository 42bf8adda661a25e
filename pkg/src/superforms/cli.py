"""Batch command-line interface: JSON in, JSON out, deterministic for a
fixed seed.  Exit status 0 on success, 1 on a domain error (with a
machine-readable error object on stdout), 2 on malformed input."""

from __future__ import annotations

import argparse
import json
import sys

from . import enveloping, examples, realform, superalgebra, supergroup
from .errors import MalformedInputError, SuperformsError
from .supermatrix import SuperMatrix


def _emit(obj, path=None):
    text = json.dumps(obj, sort_keys=True, indent=2, default=str) + "\n"
    sys.stdout.write(text)
    if path:
        with open(path, "w") as fh:
            fh.write(text)


def _algebra(spec: str):
    return superalgebra.build_algebra(spec)


def cmd_describe(args):
    g = _algebra(args.algebra)
    return {
        "family": g.name,
        "model": g.family,
        "shape": [g.m, g.n],
        "dim_even": g.dim_even,
        "dim_odd": g.dim_odd,
        "cartan_rank": len(g.cartan),
        "basis_labels": list(g.labels),
        "notes": g.notes,
    }


def cmd_roots(args):
    g = _algebra(args.algebra)
    return {
        "family": g.name,
        "roots": [
            {
                "coords": [str(c) for c in r.coords],
                "parity": r.parity,
                "vector_index": r.vector_index,
                "vector": g.labels[r.vector_index],
                "positive": r.positive,
            }
            for r in g.roots
        ],
        "paired": g.roots_paired(),
    }


def cmd_chevalley(args):
    g = _algebra(args.algebra)
    data = superalgebra.chevalley_basis(g)
    return {
        "family": g.name,
        "h_basis": [g.labels[i] for i in data.h_indices],
        "integral_structure_constants": data.integral,
        "coroots_integral": data.coroot_integral,
        "coroot_map": {
            superalgebra.Root(coords=k, parity=0, vector_index=0).coords_str(): [str(c) for c in v]
            for k, v in sorted(data.coroot_map.items())
        },
        "structure_constants": {
            f"[{g.labels[i]},{g.labels[j]}]": {g.labels[k]: str(c) for k, c in sorted(e.items())}
            for (i, j), e in sorted(g.structure.items())
            if e
        },
    }


def cmd_check_admissible(args):
    g = _algebra(args.algebra)
    return superalgebra.check_assumption(g).to_json()


def cmd_compact_form(args):
    g = _algebra(args.algebra)
    return realform.realform_report(g, force=args.force)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInputError(f"cannot read JSON from {path}: {exc}") from exc


def cmd_eval_word(args):
    obj = _load_json(args.word_file)
    word = supergroup.word_from_json(obj)
    return {"word": supergroup.word_to_json(word), "matrix": supergroup.evaluate(word).to_json()}


def cmd_sigma_word(args):
    obj = _load_json(args.word_file)
    word = supergroup.word_from_json(obj)
    image = supergroup.sigma_word(word, args.normalization)
    return {
        "normalization": args.normalization,
        "word": supergroup.word_to_json(image),
        "matrix": supergroup.evaluate(image).to_json(),
    }


def cmd_member(args):
    obj = _load_json(args.input_file)
    if "letters" in obj:
        word = supergroup.word_from_json(obj)
        mat = supergroup.evaluate(word)
    elif "entries" in obj:
        mat = SuperMatrix.from_json(obj)
    else:
        raise MalformedInputError("input must be a word (letters) or a matrix (entries)")
    return {
        "normalization": args.normalization,
        "member": supergroup.k_membership(mat, args.normalization),
    }


def cmd_verify_examples(args):
    return examples.verify_example_conditions(
        args.family,
        samples=args.samples,
        q=args.q,
        seed=args.seed,
        normalization=args.normalization,
    )


def cmd_uea_invariants(args):
    g = _algebra(args.algebra)
    return enveloping.invariants_dim_compare(g, args.degree)


def build_parser():
    p = argparse.ArgumentParser(
        prog="superforms",
        description="Exact computations with classical Lie superalgebras, "
        "their compact real forms, and supergroup points over finite "
        "Grassmann algebras.",
    )
    p.add_argument("--json", metavar="PATH", default=None, help="also write the report to PATH")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, algebra=True):
        sp.add_argument("--q", type=int, default=4, help="Grassmann generator count")
        sp.add_argument("--samples", type=int, default=50)
        sp.add_argument("--degree", type=int, default=3)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument(
            "--normalization",
            choices=[supergroup.STANDARD, supergroup.UNITARY],
            default=supergroup.STANDARD,
            help="odd-parameter convention for the involution",
        )
        return sp

    sp = sub.add_parser("describe", help="dimensions and basis of an algebra")
    sp.add_argument("algebra")
    sp.set_defaults(fn=cmd_describe)

    sp = sub.add_parser("roots", help="root system with parities")
    sp.add_argument("algebra")
    sp.set_defaults(fn=cmd_roots)

    sp = sub.add_parser("chevalley", help="Cartan basis, coroots, structure constants")
    sp.add_argument("algebra")
    sp.set_defaults(fn=cmd_chevalley)

    sp = sub.add_parser("check-admissible", help="square-zero check on odd roots")
    sp.add_argument("algebra")
    sp.set_defaults(fn=cmd_check_admissible)

    sp = sub.add_parser("compact-form", help="compact real form report")
    sp.add_argument("algebra")
    sp.add_argument("--force", action="store_true", help="build the candidate span even when obstructed")
    sp.set_defaults(fn=cmd_compact_form)

    sp = common(sub.add_parser("eval-word", help="evaluate a word file to a matrix"))
    sp.add_argument("word_file")
    sp.set_defaults(fn=cmd_eval_word)

    sp = common(sub.add_parser("sigma-word", help="apply the involution to a word file"))
    sp.add_argument("word_file")
    sp.set_defaults(fn=cmd_sigma_word)

    sp = common(sub.add_parser("member", help="fixed-subgroup membership of a word or matrix file"))
    sp.add_argument("input_file")
    sp.set_defaults(fn=cmd_member)

    sp = common(sub.add_parser("verify-examples", help="run one worked-example verification"))
    sp.add_argument("family", help="SL(2), GL(1|1), SL(1|1) or SL(2|1)")
    sp.set_defaults(fn=cmd_verify_examples)

    sp = common(sub.add_parser("uea-invariants", help="truncated enveloping-algebra invariants report"))
    sp.add_argument("algebra")
    sp.set_defaults(fn=cmd_uea_invariants)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        result = args.fn(args)
    except MalformedInputError as exc:
        _emit(exc.to_json(), args.json)
        return 2
    except SuperformsError as exc:
        _emit(exc.to_json(), args.json)
        return 1
    _emit(result, args.json)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
