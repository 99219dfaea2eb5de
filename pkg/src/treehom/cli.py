"""Command-line front end.

Exit status contract: 0 on success, 1 when a verification subcommand finds
its property violated (check-hl, sidorenko, kc), 2 on usage or parse errors.
`--rows` switches every subcommand to machine-readable one-record-per-line
output with tab-separated fields in a stable order.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .automorphy import (
    AUT_SIZE_LIMIT,
    find_increasing_ordering,
    orbit_partition,
    similarity_matrix,
)
from .graphs import (
    GraphParseError,
    SizeLimitError,
    TargetGraph,
    Tree,
    format_graph,
    parse_graph,
)
from .homcount import (
    BRUTE_FORCE_BUDGET,
    activities,
    hom_brute_force,
    kc_difference_decomposition,
    partition_function,
    tree_hom,
)
from .extremal import (
    SMALL_TARGETS,
    classify_small_targets,
    display_label,
    make_capacity_graph,
    make_folkman_plus_dominating,
    make_H_abl,
    make_widom_rowlinson,
    minimizers,
    sidorenko_check,
    verify_hoffman_london,
)
from .trees import all_trees, canonical_code, path, star


# ---------------------------------------------------------------------------
# graph / tree specification strings

def _looped_path(n: int) -> TargetGraph:
    edges = [(i, i + 1) for i in range(n - 1)] + [(i, i) for i in range(n)]
    return TargetGraph.from_edges(n, edges)


def _clique(n: int, looped: bool) -> TargetGraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1 if not looped else i, n)]
    return TargetGraph.from_edges(n, edges)


def parse_target_spec(spec: str) -> TargetGraph:
    """Shorthand (path:n, lpath:n, star:n, clique:n, lclique:n, capacity:C,
    wr:k, habl:a,b,l, folkman+dom, h1..h28), inline:"n m\\n...", or a file path.
    """
    if spec.startswith("inline:"):
        return parse_graph(spec[len("inline:"):].replace("\\n", "\n"))
    head, sep, rest = spec.partition(":")
    if sep:
        try:
            args = [int(x) for x in rest.split(",")]
        except ValueError:
            args = None
        if args is not None:
            if head == "path" and len(args) == 1:
                p = path(args[0])
                return TargetGraph.from_edges(p.n, p.edges)
            if head == "lpath" and len(args) == 1:
                return _looped_path(args[0])
            if head == "star" and len(args) == 1:
                s = star(args[0])
                return TargetGraph.from_edges(s.n, s.edges)
            if head == "clique" and len(args) == 1:
                return _clique(args[0], looped=False)
            if head == "lclique" and len(args) == 1:
                return _clique(args[0], looped=True)
            if head == "capacity" and len(args) == 1:
                return make_capacity_graph(args[0])
            if head == "wr" and len(args) == 1:
                return make_widom_rowlinson(args[0])
            if head == "habl" and len(args) == 3:
                return make_H_abl(*args)
    if spec in ("folkman+dom", "folkman"):
        return make_folkman_plus_dominating()
    if spec.startswith("h") and spec[1:].isdigit() and int(spec[1:]) in SMALL_TARGETS:
        return SMALL_TARGETS[int(spec[1:])]
    if spec == "hind":
        return SMALL_TARGETS[7]
    try:
        with open(spec) as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise GraphParseError(f"cannot read graph {spec!r}: {exc}")


def parse_tree_spec(spec: str) -> Tree:
    """path:n, star:n, inline edge-list text, or a file path."""
    head, sep, rest = spec.partition(":")
    if sep and rest.isdigit():
        if head == "path":
            return path(int(rest))
        if head == "star":
            return star(int(rest))
    if spec.startswith("inline:"):
        g = parse_graph(spec[len("inline:"):].replace("\\n", "\n"))
    else:
        try:
            with open(spec) as fh:
                g = parse_graph(fh.read())
        except OSError as exc:
            raise GraphParseError(f"cannot read tree {spec!r}: {exc}")
    return Tree.from_edges(g.n, g.edges)


def _parse_activities(text: str, n: int):
    vals = [Fraction(part.strip()) for part in text.split(",")]
    if len(vals) != n:
        raise ValueError(f"need {n} activities, got {len(vals)}")
    return activities(vals)


# ---------------------------------------------------------------------------
# subcommand implementations (each returns the exit status)

def _cmd_hom(args) -> int:
    T = parse_tree_spec(args.tree)
    H = parse_target_spec(args.target)
    if args.brute:
        count = hom_brute_force(T, H, args.budget)
    else:
        count = tree_hom(T, H)
    if args.rows:
        print(f"hom\t{T.n}\t{H.n}\t{count}")
    else:
        print(count)
    return 0


def _cmd_partition(args) -> int:
    T = parse_tree_spec(args.tree)
    H = parse_target_spec(args.target)
    lam = _parse_activities(args.activities, H.n)
    z = partition_function(T, H, lam, args.budget)
    if args.rows:
        print(f"partition\t{T.n}\t{H.n}\t{z}")
    else:
        print(z)
    return 0


def _cmd_orbits(args) -> int:
    H = parse_target_spec(args.target)
    P = orbit_partition(H, args.size_limit)
    if args.rows:
        for i, cls in enumerate(P.classes):
            print(f"class\t{i}\t{len(cls)}\t{','.join(map(str, cls))}")
    else:
        print(f"{P.k} similarity classes")
        for i, cls in enumerate(P.classes):
            print(f"  class {i}: size {len(cls)}, vertices {list(cls)}")
    return 0


def _cmd_matrix(args) -> int:
    H = parse_target_spec(args.target)
    P = orbit_partition(H, args.size_limit)
    base = similarity_matrix(P)
    result = find_increasing_ordering(H, args.size_limit)
    if args.rows:
        print(f"sizes\t{','.join(map(str, base.sizes))}")
        for row in base.m:
            print(f"row\t{','.join(map(str, row))}")
        if result is None:
            print("verdict\tno-increasing-ordering")
        else:
            ordering, M = result
            print(f"verdict\tincreasing\t{','.join(map(str, ordering))}")
            for row in M.m:
                print(f"ordered-row\t{','.join(map(str, row))}")
    else:
        print(f"{P.k} classes, sizes {list(base.sizes)}")
        print("similarity matrix (classes in index order):")
        for row in base.m:
            print("  " + "  ".join(f"{x:3d}" for x in row))
        if result is None:
            print("verdict: no increasing ordering")
        else:
            ordering, M = result
            print(f"verdict: increasing ordering found, class order {list(ordering)}")
            for row in M.m:
                print("  " + "  ".join(f"{x:3d}" for x in row))
    return 0


def _cmd_trees(args) -> int:
    ts = all_trees(args.n)
    if args.count:
        print(len(ts))
        return 0
    for ct in ts:
        if args.rows:
            edges = ",".join(f"{u}-{v}" for u, v in ct.tree.edges)
            print(f"tree\t{args.n}\t{ct.code}\t{edges}")
        else:
            print(f"{ct.code}  edges {list(ct.tree.edges)}")
    return 0


def _cmd_minimize(args) -> int:
    H = parse_target_spec(args.target)
    rep = minimizers(H, args.n)
    if args.rows:
        print(f"minimize\t{rep.n}\t{rep.min_count}\t{rep.max_count}"
              f"\t{int(rep.path_is_min)}\t{int(rep.path_is_unique_min)}"
              f"\t{int(rep.star_is_max)}\t{';'.join(rep.minimizers)}")
    else:
        print(f"n={rep.n}: min {rep.min_count}, max {rep.max_count}")
        print(f"path minimal: {rep.path_is_min} (unique: {rep.path_is_unique_min}); "
              f"star maximal: {rep.star_is_max}")
        print(f"{len(rep.minimizers)} minimizing tree class(es):")
        for code in rep.minimizers:
            print(f"  {code}")
    return 0


def _cmd_check_hl(args) -> int:
    H = parse_target_spec(args.target)
    verdict = verify_hoffman_london(H, args.n_max, args.size_limit)
    ok = verdict.strongly_hoffman_london if args.strong else verdict.hoffman_london
    if args.rows:
        for rep in verdict.reports:
            print(f"n\t{rep.n}\t{rep.min_count}\t{int(rep.path_is_min)}"
                  f"\t{int(rep.path_is_unique_min)}")
        print(f"matrix-certificate\t{int(verdict.matrix_certificate is not None)}")
        print(f"strong-certificate\t{int(verdict.strong_certificate is not None)}")
        print(f"verdict\t{int(ok)}")
    else:
        for rep in verdict.reports:
            uniq = " (unique)" if rep.path_is_unique_min else ""
            print(f"n={rep.n}: path minimal: {rep.path_is_min}{uniq}, min {rep.min_count}")
        if verdict.matrix_certificate is not None:
            ordering, _ = verdict.matrix_certificate
            print(f"increasing-columns certificate: class order {list(ordering)}")
        else:
            print("increasing-columns certificate: none")
        if verdict.strong_certificate is not None:
            w = dict(verdict.strong_certificate.witnesses)
            print(f"strict-minimality certificate: witness pairs {w}")
        kind = "strongly path-minimal" if args.strong else "path-minimal"
        print(f"verdict: {kind} up to n={args.n_max}: {ok}")
    return 0 if ok else 1


def _cmd_classify(args) -> int:
    rows = classify_small_targets(args.n_max)
    if args.rows:
        for row in rows:
            counts = ";".join(f"{n}:{c}" for n, c in row.min_counts)
            labels = ";".join(f"{n}:{display_label(labs)}" for n, labs in row.labels)
            print(f"target\t{row.target_id}\t{row.summary}\t{counts}\t{labels}")
    else:
        print(f"{'target':>6}  {'class':<28}  min counts (n=2..{args.n_max})")
        for row in rows:
            counts = ", ".join(str(c) for _, c in row.min_counts)
            print(f"{row.target_id:>6}  {row.summary:<28}  {counts}")
    return 0


def _cmd_family(args) -> int:
    name = args.name
    params = args.params
    spec = name if not params else f"{name}:{','.join(params)}"
    H = parse_target_spec(spec)
    print(format_graph(H))
    return 0


def _cmd_sidorenko(args) -> int:
    H = parse_target_spec(args.target)
    ok, violation = sidorenko_check(H, args.n_max)
    if args.rows:
        if ok:
            print(f"sidorenko\tok\t{args.n_max}")
        else:
            n, code, count, star_count = violation
            print(f"sidorenko\tviolated\t{n}\t{code}\t{count}\t{star_count}")
    else:
        if ok:
            print(f"star is maximal for all trees up to n={args.n_max}")
        else:
            n, code, count, star_count = violation
            print(f"violation at n={n}: tree {code} has {count} > star's {star_count}")
    return 0 if ok else 1


def _cmd_kc(args) -> int:
    T = parse_tree_spec(args.tree)
    H = parse_target_spec(args.target)
    non_leaves = [v for v in T.vertices() if T.degree(v) >= 2]
    status = 0
    any_site = False
    for i, vl in enumerate(non_leaves):
        for vr in non_leaves[i + 1:]:
            try:
                lhs, rhs = kc_difference_decomposition(T, vl, vr, H, args.size_limit)
            except ValueError:
                continue
            any_site = True
            ok = lhs == rhs
            if not ok:
                status = 1
            if args.rows:
                print(f"kc\t{vl}\t{vr}\t{lhs}\t{rhs}\t{int(ok)}")
            else:
                tag = "" if ok else "  MISMATCH"
                print(f"move ({vl},{vr}): difference {lhs}, decomposition {rhs}{tag}")
    if not any_site and not args.rows:
        print("no legal KC move site (tree is a star)")
    return status


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="treehom",
        description="Exact H-coloring counts of trees and path-minimality checks.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, target=False, tree=False, n=False, n_max=False):
        p.add_argument("--rows", action="store_true",
                       help="machine-readable tab-separated output")
        p.add_argument("--budget", type=int, default=BRUTE_FORCE_BUDGET,
                       help="brute-force enumeration cap")
        p.add_argument("--threads", type=int, default=0,
                       help="worker cap (accepted for compatibility; "
                            "execution is single-process)")
        p.add_argument("--size-limit", type=int, default=AUT_SIZE_LIMIT + 9,
                       help="automorphism-search vertex cap")
        if target:
            p.add_argument("--target", required=True,
                           help="target graph: shorthand, inline:..., or file")
        if tree:
            p.add_argument("--tree", required=True,
                           help="tree: path:n, star:n, inline:..., or file")
        if n:
            p.add_argument("-n", type=int, required=True, help="tree order")
        if n_max:
            p.add_argument("--n-max", type=int, default=9, dest="n_max",
                           help="largest tree order swept")

    p = sub.add_parser("hom", help="count H-colorings of a tree")
    common(p, target=True, tree=True)
    p.add_argument("--brute", action="store_true",
                   help="use brute-force enumeration instead of the tree walk")
    p.set_defaults(func=_cmd_hom)

    p = sub.add_parser("partition", help="activity-weighted coloring sum of a tree")
    common(p, target=True, tree=True)
    p.add_argument("--activities", required=True,
                   help='comma-separated rationals, e.g. "3/2,1,5"')
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("orbits", help="automorphic similarity classes of a target")
    common(p, target=True)
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("matrix", help="similarity matrix and increasing-columns verdict")
    common(p, target=True)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("trees", help="list non-isomorphic trees of an order")
    common(p, n=True)
    p.add_argument("--count", action="store_true", help="print only the class count")
    p.set_defaults(func=_cmd_trees)

    p = sub.add_parser("minimize", help="exhaustive minimizer sweep at one order")
    common(p, target=True, n=True)
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("check-hl", help="sweep path minimality up to an order")
    common(p, target=True, n_max=True)
    p.add_argument("--strong", action="store_true",
                   help="require the path to be the unique minimizer (n >= 4)")
    p.set_defaults(func=_cmd_check_hl)

    p = sub.add_parser("classify", help="minimizer classes of the 28 small targets")
    common(p, n_max=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("family", help="emit a named family graph as an edge list")
    common(p)
    p.add_argument("name", help="capacity | wr | habl | folkman (or any shorthand)")
    p.add_argument("params", nargs="*", help="numeric parameters")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("sidorenko", help="check the star maximizes over trees")
    common(p, target=True, n_max=True)
    p.set_defaults(func=_cmd_sidorenko)

    p = sub.add_parser("kc", help="verify the KC difference decomposition on a tree")
    common(p, target=True, tree=True)
    p.set_defaults(func=_cmd_kc)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphParseError, SizeLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
