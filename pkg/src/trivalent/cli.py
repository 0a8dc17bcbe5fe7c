"""Command-line surface: ranks, counts, classification, and batch checks.

Reports are line-oriented ``key=value`` text; ``--json`` switches a report
command to a single machine-readable object.  Vertices, faces, edges and
crossings are printed 1-based; states and signatures are bitstrings in
internal index order.  Exit codes: 0 success, 1 a violation found by the
``verify`` family, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import os
import sys

from . import gf2
from .classical import (
    AbstractGraph,
    LinkProjection,
    Signature,
    apply_switching,
    circuit_sign_sum,
    is_balanced,
    link_class_count,
    link_region_matrix,
    random_connected_multigraph,
    shimizu_solve,
    switching_class_count,
    switching_matrix,
)
from .coloring import ThetaGraphError, classify, monodromy, z2_coloring_space, z3_coloring, z3_to_z2
from .generator import BUILTIN_NAMES, GenConfig, RNG_ALGORITHM, builtin, random_trivalent
from .planar_map import PlanarMap, format_pmap, parse_pmap
from .region_calculus import (
    RegionSelection,
    State,
    apply_regions,
    are_equivalent,
    class_representative,
    count_states,
    region_system,
)
from .two_odd import (
    StripConfig,
    boundary_attachment_count,
    boundary_count_rotations,
    build_strip_config,
    format_tri,
    parse_tri,
    verify_two_odd_law,
)

__all__ = ["main"]


# --- small formatting helpers -------------------------------------------------


def _one_based(indices) -> str:
    values = [i + 1 for i in indices]
    return ",".join(map(str, values)) if values else "-"


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit(args, lines, payload) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _use_color() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _status(ok: bool) -> str:
    word = "ok" if ok else "FAIL"
    if _use_color():
        return f"\x1b[32m{word}\x1b[0m" if ok else f"\x1b[31m{word}\x1b[0m"
    return word


# --- input loading ----------------------------------------------------------------


def _add_map_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("file", nargs="?", help="path to a PMAP v1 map file")
    group.add_argument(
        "--builtin",
        choices=BUILTIN_NAMES + ("cube", "prism", "k4"),
        help="use a named builtin map instead of a file",
    )


def _load_map(args) -> PlanarMap:
    if args.builtin:
        return builtin(args.builtin)
    with open(args.file, "r", encoding="utf-8") as handle:
        return parse_pmap(handle.read())


def _parse_graph_spec(spec: str) -> AbstractGraph:
    """Edge list written as '1-2,2-3,3-1' with 1-based vertex ids."""
    edges = []
    for part in spec.split(","):
        token = part.strip()
        a, sep, b = token.partition("-")
        if not sep or not a.strip().isdigit() or not b.strip().isdigit():
            raise ValueError(f"bad edge {token!r}; expected 'u-v' with 1-based ids")
        u, v = int(a) - 1, int(b) - 1
        edges.append((u, v))
    if not edges:
        raise ValueError("empty edge list")
    return AbstractGraph.from_edges(edges)


# --- map report commands ------------------------------------------------------------


def _cmd_rank(args) -> int:
    pmap = _load_map(args)
    matrix, space = region_system(pmap)
    lines = [f"m={matrix.rows} n={matrix.cols} rank={space.rank} nullity={space.nullity}"]
    payload = {"m": matrix.rows, "n": matrix.cols, "rank": space.rank, "nullity": space.nullity}
    _emit(args, lines, payload)
    return 0


def _cmd_count(args) -> int:
    pmap = _load_map(args)
    count = count_states(pmap)
    try:
        case = str(classify(pmap).case)
    except ThetaGraphError:
        case = "excluded"
    _emit(
        args,
        [f"s(G)={count} case={case}"],
        {"count": str(count), "exponent": count.exponent, "case": case},
    )
    return 0


def _condition_word(generators, odd_faces) -> str:
    if not odd_faces:
        return "vacuous"
    return "holds" if all(g.fixes(2) for g in generators) else "fails"


def _cmd_classify(args) -> int:
    pmap = _load_map(args)
    result = classify(pmap)
    _, space = region_system(pmap)
    rep = result.monodromy
    gens = ",".join(g.cycle_notation() for g in rep.generators) or "-"
    pair = _one_based(result.adjacent_odd_pair) if result.adjacent_odd_pair else "-"
    lines = [
        f"case={result.case}",
        f"n={result.num_vertices} m={result.num_faces}",
        f"odd_faces={_one_based(result.odd_faces)}",
        f"adjacent_odd_pair={pair}",
        f"monodromy_generators={gens}",
        f"monodromy_image_order={rep.image_order}",
        f"monodromy_condition={_condition_word(rep.generators, result.odd_faces)}",
        f"predicted_rank={result.predicted_rank} actual_rank={space.rank}",
        f"s(G)={result.predicted_count}",
    ]
    payload = {
        "case": result.case,
        "n": result.num_vertices,
        "m": result.num_faces,
        "odd_faces": [f + 1 for f in result.odd_faces],
        "adjacent_odd_pair": [f + 1 for f in result.adjacent_odd_pair]
        if result.adjacent_odd_pair
        else None,
        "monodromy_generators": [g.cycle_notation() for g in rep.generators],
        "monodromy_image_order": rep.image_order,
        "monodromy_condition": _condition_word(rep.generators, result.odd_faces),
        "predicted_rank": result.predicted_rank,
        "actual_rank": space.rank,
        "count": str(result.predicted_count),
    }
    _emit(args, lines, payload)
    return 0


def _cmd_equiv(args) -> int:
    pmap = _load_map(args)
    s1 = State.from_string(args.state1)
    s2 = State.from_string(args.state2)
    selection = are_equivalent(pmap, s1, s2)
    if selection is None:
        _emit(args, ["not equivalent"], {"equivalent": False, "regions": None})
    else:
        regions = _one_based(selection.indices())
        _emit(
            args,
            [f"equivalent regions={regions}"],
            {"equivalent": True, "regions": [i + 1 for i in selection.indices()]},
        )
    return 0


def _cmd_solve(args) -> int:
    pmap = _load_map(args)
    target = State.from_string(args.target)
    selection = are_equivalent(pmap, State.zeros(pmap.num_vertices), target)
    if selection is None:
        _emit(args, ["unsolvable"], {"solvable": False, "regions": None})
    else:
        _emit(
            args,
            [f"selection={_one_based(selection.indices())}"],
            {"solvable": True, "regions": [i + 1 for i in selection.indices()]},
        )
    return 0


def _cmd_monodromy(args) -> int:
    pmap = _load_map(args)
    base = args.base - 1 if args.base is not None else None
    report = monodromy(pmap, base)
    gens = ",".join(g.cycle_notation() for g in report.generators) or "-"
    condition = (
        "vacuous"
        if report.distinguished_face is None
        else ("holds" if report.condition_holds else "fails")
    )
    lines = [
        f"base_vertex={report.base_vertex + 1 if report.base_vertex is not None else '-'}",
        f"distinguished_face="
        f"{report.distinguished_face + 1 if report.distinguished_face is not None else '-'}",
        f"cotree_edges={len(report.cotree_edges)}",
        f"generators={gens}",
        f"image_order={report.image_order}",
        f"condition={condition}",
    ]
    payload = {
        "base_vertex": report.base_vertex + 1 if report.base_vertex is not None else None,
        "distinguished_face": report.distinguished_face + 1
        if report.distinguished_face is not None
        else None,
        "cotree_edges": len(report.cotree_edges),
        "generators": [g.cycle_notation() for g in report.generators],
        "image_order": report.image_order,
        "condition": condition,
    }
    _emit(args, lines, payload)
    return 0


def _cmd_gen(args) -> int:
    config = GenConfig(target=args.target, seed=args.seed, start=args.start)
    pmap = random_trivalent(config)
    comment = (
        f"gen seed={config.seed} moves={config.moves} rng={RNG_ALGORITHM} "
        f"target={config.target} start={config.start}"
    )
    text = format_pmap(pmap, comments=[comment])
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


# --- signed graph commands --------------------------------------------------------


def _cmd_signed_count(args) -> int:
    graph = _parse_graph_spec(args.graph)
    count = switching_class_count(graph)
    matrix = switching_matrix(graph)
    lines = [
        f"vertices={graph.num_vertices} edges={graph.num_edges} "
        f"rank={gf2.rank(matrix)} classes={count}"
    ]
    payload = {
        "vertices": graph.num_vertices,
        "edges": graph.num_edges,
        "rank": gf2.rank(matrix),
        "classes": str(count),
    }
    _emit(args, lines, payload)
    return 0


def _cmd_signed_balance(args) -> int:
    graph = _parse_graph_spec(args.graph)
    signature = Signature.from_string(args.signs)
    report = is_balanced(graph, signature)
    if report.balanced:
        switching = _one_based(report.switching_set)
        lines = [f"balanced switching_set={switching}"]
        payload = {"balanced": True, "switching_set": [v + 1 for v in report.switching_set]}
    else:
        circuit = _one_based(report.odd_circuit)
        lines = [f"unbalanced circuit_edges={circuit}"]
        payload = {"balanced": False, "circuit_edges": [e + 1 for e in report.odd_circuit]}
    _emit(args, lines, payload)
    return 0


# --- link projection commands -----------------------------------------------------


def _cmd_link_components(args) -> int:
    lp = LinkProjection(_load_map(args))
    strands, labels = lp.components()
    lines = [
        f"crossings={lp.num_crossings} strands={strands}",
        f"edge_strands={','.join(str(c + 1) for c in labels)}",
    ]
    payload = {
        "crossings": lp.num_crossings,
        "strands": strands,
        "edge_strands": [c + 1 for c in labels],
    }
    _emit(args, lines, payload)
    return 0


def _cmd_link_rank(args) -> int:
    lp = LinkProjection(_load_map(args))
    matrix = link_region_matrix(lp)
    count = link_class_count(lp)
    lines = [
        f"crossings={matrix.cols} regions={matrix.rows} "
        f"rank={gf2.rank(matrix)} classes={count}"
    ]
    payload = {
        "crossings": matrix.cols,
        "regions": matrix.rows,
        "rank": gf2.rank(matrix),
        "classes": str(count),
    }
    _emit(args, lines, payload)
    return 0


def _cmd_link_shimizu(args) -> int:
    lp = LinkProjection(_load_map(args))
    crossing = args.crossing - 1
    selection = shimizu_solve(lp, crossing)
    if selection is None:
        _emit(
            args,
            [f"crossing={args.crossing} unsolvable"],
            {"crossing": args.crossing, "solvable": False, "regions": None},
        )
    else:
        matrix = link_region_matrix(lp)
        achieved = matrix.mul_left(selection.bits)
        expected = gf2.BitVector.from_indices(lp.num_crossings, [crossing])
        if achieved != expected:
            raise AssertionError("certificate failed re-application")
        _emit(
            args,
            [f"crossing={args.crossing} selection={_one_based(selection.indices())}"],
            {
                "crossing": args.crossing,
                "solvable": True,
                "regions": [i + 1 for i in selection.indices()],
            },
        )
    return 0


# --- two-odd commands ---------------------------------------------------------------


def _cmd_twoodd_strip(args) -> int:
    config = StripConfig(args.wheels[0], args.wheels[1], args.strip)
    built = build_strip_config(config)
    if args.tri:
        comment = f"strip wheels={config.m_wheel},{config.n_wheel} strip_len={config.strip_len}"
        sys.stdout.write(format_tri(built.disk, comments=[comment]))
        return 0
    count = boundary_attachment_count(built.disk)
    lines = [
        f"wheels={config.m_wheel},{config.n_wheel} strip_len={config.strip_len}",
        f"vertices={built.disk.num_vertices} triangles={built.disk.num_triangles}",
        f"compatible={_yesno(built.compatible)} far_hub_color={built.far_hub_color}",
        f"N={count.total} divisible_by_3={_yesno(count.total % 3 == 0)} "
        f"odd_boundary_vertices={len(count.odd_vertices)}",
    ]
    payload = {
        "wheels": list(args.wheels),
        "strip_len": config.strip_len,
        "vertices": built.disk.num_vertices,
        "triangles": built.disk.num_triangles,
        "compatible": built.compatible,
        "far_hub_color": built.far_hub_color,
        "N": count.total,
        "divisible_by_3": count.total % 3 == 0,
        "odd_boundary_vertices": len(count.odd_vertices),
    }
    _emit(args, lines, payload)
    return 0


def _cmd_twoodd_verify(args) -> int:
    pmap = _load_map(args)
    report = verify_two_odd_law(pmap)
    lines = [
        f"odd_faces={_one_based(report.odd_faces)}",
        f"adjacent={_yesno(report.odd_faces_adjacent)}",
        f"nullity={report.nullity}",
        f"coloring={''.join(map(str, report.coloring)) or '-'}",
        f"zero_on_odd={_yesno(report.coloring_zero_on_odd)}",
        f"s(G)={report.class_count} expected=2^{report.expected_exponent}",
        f"passed={_yesno(report.passed)}",
    ]
    payload = {
        "odd_faces": [f + 1 for f in report.odd_faces],
        "adjacent": report.odd_faces_adjacent,
        "nullity": report.nullity,
        "coloring": "".join(map(str, report.coloring)),
        "zero_on_odd": report.coloring_zero_on_odd,
        "count": str(report.class_count),
        "expected_exponent": report.expected_exponent,
        "passed": report.passed,
    }
    _emit(args, lines, payload)
    return 0 if report.passed else 1


def _cmd_twoodd_boundary(args) -> int:
    with open(args.file, "r", encoding="utf-8") as handle:
        disk = parse_tri(handle.read())
    count = boundary_attachment_count(disk, args.first)
    rotations = boundary_count_rotations(disk)
    div3 = {c.total % 3 == 0 for c in rotations}
    lines = [
        f"first_odd={count.first_odd}",
        f"odd_vertices={','.join(map(str, count.odd_vertices))}",
        f"runs={','.join(map(str, count.run_lengths))}",
        f"N={count.total}",
        f"rotation_divisibility_invariant={_yesno(len(div3) == 1)}",
    ]
    payload = {
        "first_odd": count.first_odd,
        "odd_vertices": list(count.odd_vertices),
        "runs": list(count.run_lengths),
        "N": count.total,
        "rotation_divisibility_invariant": len(div3) == 1,
    }
    _emit(args, lines, payload)
    return 0


# --- the verify suite ----------------------------------------------------------------


class _Suite:
    """Collects named pass/fail checks and prints one line per family."""

    def __init__(self) -> None:
        self.failures = 0

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        if not ok:
            self.failures += 1
        suffix = f" {detail}" if detail else ""
        print(f"{_status(ok)} {name}{suffix}")


def _verify_builtins(suite: _Suite) -> None:
    expected = {"g1": (4, 16, 1), "g2": (4, 4, 2), "g3": (4, 1, 3)}
    for name, (exp_rank, exp_count, exp_case) in expected.items():
        pmap = builtin(name)
        _, space = region_system(pmap)
        count = count_states(pmap)
        case = classify(pmap).case
        ok = space.rank == exp_rank and count.value == exp_count and case == exp_case
        suite.check(
            f"builtin-{name}",
            ok,
            f"rank={space.rank} count={count} case={case}",
        )
    theta = builtin("theta")
    theta_count = count_states(theta)
    try:
        classify(theta)
        excluded = False
    except ThetaGraphError:
        excluded = True
    suite.check("builtin-theta", theta_count.value == 2 and excluded, f"count={theta_count}")


def _verify_links(suite: _Suite) -> None:
    expected = {"hopf": 2, "trefoil": 1, "figure8": 1}
    for name, exp_strands in expected.items():
        lp = LinkProjection(builtin(name))
        strands, _ = lp.components()
        matrix = link_region_matrix(lp)
        law = gf2.rank(matrix) == lp.num_crossings - strands + 1
        solvable = all(
            shimizu_solve(lp, j) is not None for j in range(lp.num_crossings)
        )
        want_solvable = strands == 1
        suite.check(
            f"link-{name}",
            strands == exp_strands and law and solvable == want_solvable,
            f"strands={strands} rank={gf2.rank(matrix)} single_crossing_moves={_yesno(solvable)}",
        )


def _verify_signed(suite: _Suite, rng: random.Random, rounds: int) -> None:
    rank_bad = balance_bad = 0
    for _ in range(rounds):
        graph = random_connected_multigraph(rng, rng.randrange(2, 10), rng.randrange(0, 8))
        matrix = switching_matrix(graph)
        if gf2.rank(matrix) != graph.num_vertices - 1:
            rank_bad += 1
        for _ in range(4):
            bits = gf2.BitVector(graph.num_edges, rng.getrandbits(graph.num_edges))
            signature = Signature(bits)
            report = is_balanced(graph, signature)
            solvable = gf2.solve_left(matrix, signature.bits) is not None
            if report.balanced != solvable:
                balance_bad += 1
            if report.balanced:
                cleared = apply_switching(graph, signature, report.switching_set)
                if cleared.bits:
                    balance_bad += 1
            else:
                if circuit_sign_sum(signature, report.odd_circuit) != 1:
                    balance_bad += 1
    suite.check("signed-rank-law", rank_bad == 0, f"violations={rank_bad}/{rounds}")
    suite.check("signed-balance-agreement", balance_bad == 0, f"violations={balance_bad}")


def _verify_corpus(suite: _Suite, rng: random.Random, corpus: int, max_vertices: int,
                   brute_force: bool) -> None:
    families = {
        "classify-rank": 0,
        "row-sum": 0,
        "nullity-split": 0,
        "odd-faces-zero": 0,
        "z3-parity": 0,
        "tree-choice": 0,
        "two-odd-law": 0,
        "equiv-certificate": 0,
        "brute-span": 0,
    }
    two_odd_seen = 0
    brute_seen = 0
    for _ in range(corpus):
        target = 2 * rng.randrange(2, max_vertices // 2 + 1)
        pmap = random_trivalent(GenConfig(target=target, seed=rng.getrandbits(63)))
        matrix, space = region_system(pmap)
        result = classify(pmap)
        if result.predicted_rank != space.rank:
            families["classify-rank"] += 1
        total = gf2.BitVector.zeros(matrix.cols)
        for i in range(matrix.rows):
            total ^= matrix.row(i)
        if total.weight() != matrix.cols:
            families["row-sum"] += 1
        basis, nullity = z2_coloring_space(pmap)
        if nullity + space.rank != pmap.num_faces:
            families["nullity-split"] += 1
        odd = pmap.face_parities().odd_faces
        if any(coloring.colors[f] for coloring in basis for f in odd):
            families["odd-faces-zero"] += 1
        z3 = z3_coloring(pmap)
        if (z3 is not None) != (not odd):
            families["z3-parity"] += 1
        elif z3 is not None:
            reduced = z3_to_z2(z3)
            if matrix.mul_left(reduced.as_vector()):
                families["z3-parity"] += 1
        if odd:
            rep_a = monodromy(pmap)
            rep_b = monodromy(pmap, descending_neighbors=True)
            if rep_a.image_order != rep_b.image_order:
                families["tree-choice"] += 1
        if len(odd) == 2:
            two_odd_seen += 1
            if not verify_two_odd_law(pmap).passed:
                families["two-odd-law"] += 1
        s1 = State(gf2.BitVector(pmap.num_vertices, rng.getrandbits(pmap.num_vertices)))
        chosen = RegionSelection(
            gf2.BitVector(pmap.num_faces, rng.getrandbits(pmap.num_faces))
        )
        s2 = apply_regions(pmap, s1, chosen)
        cert = are_equivalent(pmap, s1, s2)
        if cert is None or apply_regions(pmap, s1, cert).bits != s2.bits:
            families["equiv-certificate"] += 1
        if class_representative(pmap, s1).bits != class_representative(pmap, s2).bits:
            families["equiv-certificate"] += 1
        if brute_force and matrix.rows <= 14:
            brute_seen += 1
            if gf2.span_size_bruteforce(matrix) != 1 << space.rank:
                families["brute-span"] += 1
    for name, bad in families.items():
        if name == "two-odd-law":
            detail = f"violations={bad} instances={two_odd_seen}"
        elif name == "brute-span":
            if not brute_force:
                continue
            detail = f"violations={bad} instances={brute_seen}"
        else:
            detail = f"violations={bad}/{corpus}"
        suite.check(name, bad == 0, detail)


def _cmd_verify(args) -> int:
    suite = _Suite()
    rng = random.Random(args.seed)
    _verify_builtins(suite)
    _verify_links(suite)
    _verify_signed(suite, rng, rounds=50)
    _verify_corpus(suite, rng, args.corpus, args.max_vertices, args.brute_force)
    print(f"{'violations found' if suite.failures else 'all checks passed'}")
    return 1 if suite.failures else 0


# --- parser ----------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trivalent",
        description="Region-flip state counting on trivalent sphere maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    report = argparse.ArgumentParser(add_help=False)
    report.add_argument("--json", action="store_true", help="emit one JSON object")

    p = sub.add_parser("rank", parents=[report], help="face-vertex matrix rank and nullity")
    _add_map_source(p)
    p.set_defaults(handler=_cmd_rank)

    p = sub.add_parser("count", parents=[report], help="number of state classes as 2^k")
    _add_map_source(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("classify", parents=[report], help="structural case with evidence")
    _add_map_source(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("equiv", parents=[report], help="test two states for equivalence")
    _add_map_source(p)
    p.add_argument("state1", help="first state as a bitstring")
    p.add_argument("state2", help="second state as a bitstring")
    p.set_defaults(handler=_cmd_equiv)

    p = sub.add_parser("solve", parents=[report], help="regions realizing a target flip")
    _add_map_source(p)
    p.add_argument("target", help="vertex flip pattern as a bitstring")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("monodromy", parents=[report], help="circuit color permutations")
    _add_map_source(p)
    p.add_argument("--base", type=int, help="1-based base vertex (on an odd face)")
    p.set_defaults(handler=_cmd_monodromy)

    p = sub.add_parser("gen", help="grow a random trivalent map and print PMAP text")
    p.add_argument("--target", type=int, required=True, help="even vertex count >= 4")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--start", choices=("theta", "k4"), default="theta")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(handler=_cmd_gen)

    signed = sub.add_parser("signed", help="signed-graph switching commands")
    signed_sub = signed.add_subparsers(dest="signed_command", required=True)
    p = signed_sub.add_parser("count", parents=[report], help="switching class count")
    p.add_argument("--graph", required=True, help="edges as '1-2,2-3,3-1' (1-based)")
    p.set_defaults(handler=_cmd_signed_count)
    p = signed_sub.add_parser("balance", parents=[report], help="balance test with witness")
    p.add_argument("--graph", required=True, help="edges as '1-2,2-3,3-1' (1-based)")
    p.add_argument("--signs", required=True, help="edge signs as a bitstring")
    p.set_defaults(handler=_cmd_signed_balance)

    link = sub.add_parser("link", help="link projection commands")
    link_sub = link.add_subparsers(dest="link_command", required=True)
    p = link_sub.add_parser("components", parents=[report], help="strand count")
    _add_map_source(p)
    p.set_defaults(handler=_cmd_link_components)
    p = link_sub.add_parser("rank", parents=[report], help="region-crossing matrix rank")
    _add_map_source(p)
    p.set_defaults(handler=_cmd_link_rank)
    p = link_sub.add_parser(
        "shimizu", parents=[report], help="regions switching exactly one crossing"
    )
    _add_map_source(p)
    p.add_argument("--crossing", type=int, required=True, help="1-based crossing index")
    p.set_defaults(handler=_cmd_link_shimizu)

    twoodd = sub.add_parser("twoodd", help="two-odd-face and disk-strip commands")
    twoodd_sub = twoodd.add_subparsers(dest="twoodd_command", required=True)
    p = twoodd_sub.add_parser("strip", parents=[report], help="build a two-wheel strip disk")
    p.add_argument(
        "--wheels", type=int, nargs=2, required=True, metavar=("M", "N"),
        help="half-sizes of the two odd wheels",
    )
    p.add_argument("--strip", type=int, required=True, help="number of strip triangles")
    p.add_argument("--tri", action="store_true", help="print the disk in TRI format")
    p.set_defaults(handler=_cmd_twoodd_strip)
    p = twoodd_sub.add_parser(
        "verify", parents=[report], help="check the two-odd-face law on a map"
    )
    _add_map_source(p)
    p.set_defaults(handler=_cmd_twoodd_verify)
    p = twoodd_sub.add_parser("boundary", parents=[report], help="boundary count of a TRI disk")
    p.add_argument("file", help="path to a TRI disk file")
    p.add_argument("--first", type=int, default=0, help="index of the first odd vertex")
    p.set_defaults(handler=_cmd_twoodd_boundary)

    p = sub.add_parser("verify", help="run the whole invariant suite on a random corpus")
    p.add_argument("--corpus", type=int, default=50, help="number of generated maps")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=40, help="largest generated size")
    p.add_argument("--brute-force", action="store_true", help="add exponential span checks")
    p.set_defaults(handler=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
