"""Command-line pipelines.

Each subcommand runs one construction end to end, prints a short
report, and optionally writes a machine-checkable JSON certificate that
the `verify` subcommand recomputes from scratch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import permgrp
from .construct import (
    bipartite_construction,
    build_E_and_H,
    build_theta,
    compare_theta_readings,
    product_action_construction,
    valency64_construction,
)
from .atlas import seed_psl28_gamma
from .eqcode import (
    equidistant_code_pipeline,
    is_regular_on_nonzero,
    weight_profile,
)
from .graphcert import (
    ENUMERATION_LIMIT,
    certificate_payload,
    certify,
    edge_list_text,
    enumerate_small_graph,
    graph_girth,
    graph_is_bipartite,
    graph_is_connected,
    local_certificate,
    two_arc_orbit_count,
    verify_certificate,
)
from .numth import validate_parameters
from .permgrp import PermGroup, coset_action, perm_from_cycles

EXIT_OK = 0
EXIT_REJECTED = 2
EXIT_FAILED = 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    q: int | None = None
    p: int | None = None
    family: str = "pgl2"
    component_index: int = 0
    limit: int = ENUMERATION_LIMIT
    out: str | None = None
    seed: int | None = None
    degree: int | None = None
    group_gens: str | None = None
    subgroup_gens: str | None = None
    edge_element: str | None = None
    preset: str | None = None
    certificate: str | None = None
    reading: str = "primary"


def _emit(path: str | None, payload: dict) -> None:
    if path is None:
        return
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    with open(path, "w") as fh:
        fh.write(text)
    print(f"wrote {path}")


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        return
    with open(path, "w") as fh:
        fh.write(text)
    print(f"wrote {path}")


# -- subcommand bodies ----------------------------------------------------


def _run_edc(config: RunConfig) -> int:
    q = config.q
    ps = validate_parameters(q)
    if not ps.valid:
        print(f"rejected: q = {q}: {ps.violation}", file=sys.stderr)
        return EXIT_REJECTED
    res = equidistant_code_pipeline(q)
    code = res.code
    profile = {w: c for w, c in weight_profile(code).items() if w}
    regular = is_regular_on_nonzero(code, res.shift)
    dims = [c.code.dim for c in res.decomposition.components]
    faithful = sum(1 for c in res.decomposition.components if c.faithful)
    print(f"q = {q}: [{q + 1},2]_{q} code, basis {list(code.basis)}")
    print(f"shift matrix order {res.shift.order} = n(q-1); "
          f"A^n = scalar {res.shift.power_scalar}")
    print(f"weights of the {q * q - 1} nonzero codewords: {profile}")
    print(f"orbit of the first basis vector under the shift is regular: "
          f"{regular}")
    print(f"decomposition: {len(dims)} components, dimensions {dims}, "
          f"{faithful} faithful")
    if set(profile) != {q} or profile[q] != q * q - 1:
        print("FAILED: code is not equidistant of weight q", file=sys.stderr)
        return EXIT_FAILED
    if not regular:
        print("FAILED: shift orbit is not regular", file=sys.stderr)
        return EXIT_FAILED
    _emit(config.out, {
        "q": q,
        "n": q + 1,
        "basis": [list(r) for r in code.basis],
        "weights": {str(w): c for w, c in profile.items()},
        "shift": [list(r) for r in res.shift.mat],
        "shift_order": res.shift.order,
        "components": [{"dim": c.code.dim, "faithful": c.faithful,
                        "order": c.order}
                       for c in res.decomposition.components],
    })
    return EXIT_OK


def _print_certificate(cert) -> None:
    lc = cert.local
    print(f"|G| = {lc.group_order}")
    print(f"|H| = {lc.stabilizer_order}, |H meet H^g| = "
          f"{lc.intersection_order}, valency {lc.valency}")
    print(f"connected: {lc.connected}; locally 2-transitive: "
          f"{lc.locally_2transitive}; g^2 in H: {lc.g_square_in_H}; "
          f"g outside H: {lc.g_outside_H}")
    print(f"socle transitive: {cert.socle_transitive}; diagonal type: "
          f"{cert.diagonal_type}")
    if cert.theorem1_case is not None:
        extra = " (case ii also possible)" if cert.ii_possible else ""
        print(f"valency case: {cert.theorem1_case}"
              f"{f' via prime {cert.case_witness}' if cert.case_witness else ''}"
              f"{extra}")
    if cert.gstar_index is not None:
        print(f"index of G* in G: {cert.gstar_index}; g swaps the halves: "
              f"{cert.g_swaps_halves}")
    print(f"standard double cover verdict: {cert.double_cover_verdict}")
    if not lc.all_conditions:
        raise AssertionError("certificate conditions failed: "
                             f"{lc}")


def _run_construct(config: RunConfig) -> int:
    pa = product_action_construction(config.q, config.family,
                                     config.component_index)
    cert = certify(pa)
    print(f"product-action construction, family {config.family}, "
          f"q = {config.q}, {pa.n} blocks of degree {pa.block_degree}")
    _print_certificate(cert)
    _emit(config.out, certificate_payload(cert, pa, pa.o))
    return EXIT_OK


def _run_bipartite(config: RunConfig) -> int:
    bc = bipartite_construction(config.p, config.family)
    cert = certify(bc)
    print(f"bipartite construction, family {config.family}, p = {config.p}, "
          f"{bc.n} blocks of degree {bc.block_degree}")
    print(f"|H| = {bc.H.order()}, |K| = {bc.K.order()}, "
          f"|H:K| = {bc.H.order() // bc.K.order()}")
    _print_certificate(cert)
    _emit(config.out, certificate_payload(cert, bc, bc.o))
    return EXIT_OK


def _run_example_2_6(config: RunConfig) -> int:
    reports = compare_theta_readings()
    for rep in reports:
        if rep.rejected is not None:
            print(f"reading {rep.reading}: rejected ({rep.rejected})")
        else:
            print(f"reading {rep.reading}: {rep.component_count} minimal "
                  f"invariant subspaces, dimensions {list(rep.dimensions)}, "
                  f"{rep.regular_count} regular, centralizer order "
                  f"{rep.centralizer_order}, normalizer order "
                  f"{rep.normalizer_order}, {rep.involutions} involutions")
    print("viable readings agree on every count")

    seed = seed_psl28_gamma()
    theta = build_theta(seed, config.reading)
    orders = []
    for index in range(6):
        candidate = build_E_and_H(seed, theta, index)
        orders.append(candidate.H.order())
    print(f"H candidates from the 6 regular components, orders {orders}")

    v64 = valency64_construction(config.component_index, config.reading)
    tc = v64.tc
    print(f"centralizer of theta in the socle: order "
          f"{tc.centralizer.order()} (S_3: non-abelian, three involutions)")
    print(f"normalizer of <theta> in the socle: order "
          f"{tc.normalizer.order()}, exponents {sorted(tc.by_exponent)}")
    print(f"edge involutions joining to G: {v64.double_coset_classes} double "
          f"cosets, {v64.classes_up_to_normalizer} class up to the "
          f"H-normalizing involution")
    cert = certify(v64)
    _print_certificate(cert)
    vertices = cert.local.group_order // cert.local.stabilizer_order
    print(f"|G:H| = 2^57 * 3^42 * 7^21 exactly: "
          f"{vertices == 2**57 * 3**42 * 7**21}")
    print(f"|M| = |V| * 2^6 (socle arc-regular): {cert.arc_regular_socle}")
    _emit(config.out, certificate_payload(cert, v64, v64.g))
    return EXIT_OK


_PRESETS = {
    "k4": (4, "(0 1);(0 1 2 3)", "(0 1);(0 1 2)", "(2 3)"),
    "petersen": (5, "(0 1);(0 1 2 3 4)", "(0 1);(2 3);(2 3 4)",
                 "(0 2)(1 3)"),
}


def parse_permutation(text: str, degree: int):
    """A permutation from cycle notation like '(0 1)(2 3)'."""
    text = text.strip()
    if text in ("", "()"):
        return tuple(range(degree))
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"cannot parse permutation {text!r}")
    cycs = []
    for chunk in text[1:-1].split(")("):
        points = [int(t) for t in chunk.replace(",", " ").split()]
        if len(points) != len(set(points)):
            raise ValueError(f"repeated point in cycle ({chunk})")
        if any(x < 0 or x >= degree for x in points):
            raise ValueError(f"point out of range in cycle ({chunk})")
        cycs.append(tuple(points))
    return perm_from_cycles(degree, cycs)


def parse_generators(text: str, degree: int):
    return [parse_permutation(part, degree)
            for part in text.split(";") if part.strip()]


def _run_toy(config: RunConfig) -> int:
    if config.preset is not None:
        degree, group_gens, subgroup_gens, edge = _PRESETS[config.preset]
    else:
        if not (config.degree and config.group_gens
                and config.subgroup_gens and config.edge_element):
            print("rejected: toy needs --preset or all of --degree, "
                  "--group, --subgroup, --g", file=sys.stderr)
            return EXIT_REJECTED
        degree = config.degree
        group_gens = config.group_gens
        subgroup_gens = config.subgroup_gens
        edge = config.edge_element
    G = PermGroup(parse_generators(group_gens, degree), degree=degree)
    H = PermGroup(parse_generators(subgroup_gens, degree), degree=degree)
    g = parse_permutation(edge, degree)
    sg = enumerate_small_graph(G, H, g, config.limit)
    cert = local_certificate(G.order(), H, g)
    ca = coset_action(G, H)
    orbits = two_arc_orbit_count(sg, list(ca.group.gens))
    degrees = sorted({sg.degree(v) for v in range(sg.vertices)})
    print(f"{sg.vertices} vertices, degrees {degrees}, girth "
          f"{graph_girth(sg)}, connected {graph_is_connected(sg)}, "
          f"bipartite {graph_is_bipartite(sg)}")
    print(f"local certificate: valency {cert.valency}, intersection order "
          f"{cert.intersection_order}, locally 2-transitive "
          f"{cert.locally_2transitive}, connected {cert.connected}")
    print(f"2-arc orbits under G: {orbits}")
    agree = (degrees == [cert.valency]
             and cert.connected == graph_is_connected(sg)
             and cert.locally_2transitive == (orbits == 1))
    print(f"certificate agrees with enumeration: {agree}")
    if not agree:
        print("FAILED: local certificate disagrees with the enumerated "
              "graph", file=sys.stderr)
        return EXIT_FAILED
    _write_text(config.out, edge_list_text(sg))
    return EXIT_OK


def _run_verify(config: RunConfig) -> int:
    with open(config.certificate) as fh:
        payload = json.load(fh)
    report = verify_certificate(payload)
    if report.ok:
        print(f"certificate OK: recomputed {report.recomputed}")
        return EXIT_OK
    print(f"FAILED: {report.failures[0]}", file=sys.stderr)
    for failure in report.failures[1:]:
        print(f"        {failure}", file=sys.stderr)
    return EXIT_FAILED


_BODIES = {
    "edc": _run_edc,
    "construct": _run_construct,
    "bipartite": _run_bipartite,
    "example-2-6": _run_example_2_6,
    "toy": _run_toy,
    "verify": _run_verify,
}


def run(config: RunConfig) -> int:
    if config.seed is not None:
        permgrp.DEFAULT_SEED = config.seed
    try:
        return _BODIES[config.command](config)
    except ValueError as err:
        print(f"rejected: {err}", file=sys.stderr)
        return EXIT_REJECTED
    except AssertionError as err:
        print(f"FAILED: {err}", file=sys.stderr)
        return EXIT_FAILED
    except (KeyError, json.JSONDecodeError, OSError) as err:
        print(f"rejected: {err!r}", file=sys.stderr)
        return EXIT_REJECTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patgraphs",
        description="Equidistant codes, product-action groups, and "
                    "certified 2-arc-transitive coset graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON certificate or "
                        "edge list here")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for the randomized sifting phase "
                             "(results are seed-independent)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("edc", parents=[common],
                       help="equidistant code pipeline")
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("construct", parents=[common],
                       help="product-action construction and certificate")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--family", choices=["pgl2", "symmetric"],
                   default="pgl2")
    p.add_argument("--component-index", type=int, default=0)

    p = sub.add_parser("bipartite", parents=[common],
                       help="bipartite construction and certificate")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--family", choices=["symmetric", "pgl2"],
                   default="symmetric")

    p = sub.add_parser("example-2-6", parents=[common],
                       help="the valency-64 instance on 21 blocks")
    p.add_argument("--component-index", type=int, default=0)
    p.add_argument("--reading", default="primary",
                   choices=["primary", "trailing-identity"])

    p = sub.add_parser("toy", parents=[common],
                       help="enumerate a small coset graph and cross-check")
    p.add_argument("--preset", choices=sorted(_PRESETS))
    p.add_argument("--degree", type=int)
    p.add_argument("--group", dest="group_gens",
                   help="generators in cycle notation, ';'-separated")
    p.add_argument("--subgroup", dest="subgroup_gens")
    p.add_argument("--g", dest="edge_element")
    p.add_argument("--limit", type=int, default=ENUMERATION_LIMIT)

    p = sub.add_parser("verify", parents=[common],
                       help="recompute every subcheck of a certificate")
    p.add_argument("certificate")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if v is not None}
    return RunConfig(**fields)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
