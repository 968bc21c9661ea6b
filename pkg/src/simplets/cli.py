"""Command-line interface: catalog, exact SFD, approximate SFD, validation, generation, benchmarking.

Exit codes: 0 success, 2 usage error, 3 malformed input, 4 structural error
(disconnected or too-small complex), 5 internal integrity failure.
"""

from __future__ import annotations

import argparse
import functools
import json
import math
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .approx import ApproxParams, approximate_sfd, linf_distance, required_samples
from .catalog import generate_catalog
from .complexes import SimplicialComplex, connected_components, skeleton_diameter
from .errors import InputError, IntegrityError, StructuralError
from .exact import SFDVector, exact_counts
from .generate import GenSpec, generate, largest_connected_restriction
from .io import load_complex, write_facets
from .sampler import FRESH_CHAIN, THINNED, SimpletSampler, WalkConfig, burn_in_steps

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_STRUCTURAL = 4
EXIT_INTERNAL = 5

_MODE_NAMES = {"fresh": FRESH_CHAIN, "thinned": THINNED}


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _probability(text: str) -> float:
    value = float(text)
    if not (0.0 <= value <= 1.0):
        raise argparse.ArgumentTypeError(f"expected a probability in [0, 1], got {text}")
    return value


def _open_unit(text: str) -> float:
    value = float(text)
    if not (0.0 < value < 1.0):
        raise argparse.ArgumentTypeError(f"expected a value strictly inside (0, 1), got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0.0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _sizes(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text}")
    if not values or any(v < 3 for v in values):
        raise argparse.ArgumentTypeError("sizes must be integers >= 3")
    return values


def _add_accuracy_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--epsilon", type=_open_unit, default=0.1, help="accuracy target in (0,1)")
    parser.add_argument("--delta", type=_open_unit, default=0.1, help="failure probability in (0,1)")
    parser.add_argument("--c", type=_positive_float, default=0.5, help="sample-bound constant")


def _add_walk_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--c-mix", type=_positive_float, default=1.0, help="burn-in scale factor")
    parser.add_argument("--mode", choices=sorted(_MODE_NAMES), default="fresh", help="chain reuse mode")
    parser.add_argument("--thin-gap", type=_positive_int, default=None, help="steps between thinned samples")


def _add_gen_flags(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--model", choices=("flag", "lm"), required=required, help="generator model")
    parser.add_argument("--n", type=_positive_int, help="number of vertices")
    parser.add_argument("--p-edge", type=_probability, help="edge probability")
    parser.add_argument("--p-tri", type=_probability, default=0.0, help="triangle fill probability (lm)")
    parser.add_argument("--p-tet", type=_probability, default=0.0, help="tetrahedron fill probability (lm)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplets",
        description="Exact and sampling-based simplet frequency distributions of simplicial complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_catalog = sub.add_parser("catalog", help="print the simplet type catalog as JSON")
    p_catalog.add_argument("--m", type=int, choices=range(2, 7), required=True)

    p_exact = sub.add_parser("exact", help="exact SFD vector of a facet file")
    p_exact.add_argument("--input", required=True, help="facet file path")
    p_exact.add_argument("--m", type=int, choices=range(2, 7), required=True)

    p_approx = sub.add_parser("approx", help="approximate SFD vector via MCMC sampling")
    p_approx.add_argument("--input", required=True, help="facet file path")
    p_approx.add_argument("--m", type=int, choices=range(3, 7), required=True)
    _add_accuracy_flags(p_approx)
    _add_walk_flags(p_approx)
    p_approx.add_argument("--seed", type=int, default=0)
    p_approx.add_argument("--largest-component", action="store_true",
                          help="restrict to the largest connected component first")

    p_validate = sub.add_parser("validate", help="Monte-Carlo check of the (epsilon, delta) guarantee")
    p_validate.add_argument("--input", help="facet file path (alternative to --model)")
    _add_gen_flags(p_validate, required=False)
    p_validate.add_argument("--gen-seed", type=int, default=0, help="generator seed")
    p_validate.add_argument("--m", type=int, choices=range(3, 7), required=True)
    _add_accuracy_flags(p_validate)
    _add_walk_flags(p_validate)
    p_validate.add_argument("--trials", type=_positive_int, default=200)
    p_validate.add_argument("--seed", type=int, default=0)
    p_validate.add_argument("--threads", type=_positive_int, default=1)
    p_validate.add_argument("--largest-component", action="store_true")

    p_gen = sub.add_parser("gen", help="generate a random complex and write its facet file")
    _add_gen_flags(p_gen, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--output", default="-", help="output path, '-' for stdout")
    p_gen.add_argument("--largest-component", action="store_true")

    p_bench = sub.add_parser("bench", help="time sampling across complex sizes, emit CSV")
    p_bench.add_argument("--sizes", type=_sizes, required=True, help="comma-separated vertex counts")
    p_bench.add_argument("--avg-degree", type=_positive_float, required=True,
                         help="target average degree; edge probability is avg/(n-1)")
    p_bench.add_argument("--model", choices=("flag", "lm"), default="flag")
    p_bench.add_argument("--p-tri", type=_probability, default=0.0)
    p_bench.add_argument("--p-tet", type=_probability, default=0.0)
    p_bench.add_argument("--m", type=int, choices=range(3, 7), required=True)
    _add_accuracy_flags(p_bench)
    p_bench.add_argument("--c-mix", type=_positive_float, default=1.0)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--output", default="-", help="CSV path, '-' for stdout")
    return parser


def _require_connected(complex_: SimplicialComplex) -> None:
    if complex_.vertex_count == 0 or len(connected_components(complex_)) > 1:
        raise StructuralError(
            "the 1-skeleton is disconnected; rerun with --largest-component "
            "to analyze the largest connected component"
        )


def _walk_config(args, m: int) -> WalkConfig:
    return WalkConfig(
        m=m,
        c_mix=args.c_mix,
        per_sample_mode=_MODE_NAMES[args.mode],
        thinning_gap=args.thin_gap,
        rng_seed=args.seed,
    )


def _sfd_json(sfd: SFDVector, catalog) -> dict:
    obj = sfd.to_json_obj()
    obj["catalog"] = catalog.to_json_obj()
    return obj


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_catalog(args) -> int:
    _print_json(generate_catalog(args.m).to_json_obj())
    return EXIT_OK


def cmd_exact(args) -> int:
    complex_, labels = load_complex(args.input)
    catalog = generate_catalog(args.m)
    sfd = exact_counts(complex_, catalog)
    obj = _sfd_json(sfd, catalog)
    obj["labels"] = labels
    _print_json(obj)
    return EXIT_OK


def cmd_approx(args) -> int:
    complex_, labels = load_complex(args.input)
    if args.largest_component:
        complex_, kept = largest_connected_restriction(complex_)
        labels = [labels[v] for v in kept]
    _require_connected(complex_)
    catalog = generate_catalog(args.m)
    walk = _walk_config(args, args.m)
    params = ApproxParams(epsilon=args.epsilon, delta=args.delta, c=args.c, walk=walk)
    sfd = approximate_sfd(complex_, catalog, params, rng=random.Random(args.seed))
    obj = _sfd_json(sfd, catalog)
    obj.update(
        {
            "epsilon": args.epsilon,
            "delta": args.delta,
            "c": args.c,
            "samples": sfd.total,
            "burn_in": burn_in_steps(complex_, args.c_mix),
            "seed": args.seed,
            "walk_mode": args.mode,
            "labels": labels,
        }
    )
    _print_json(obj)
    return EXIT_OK


@dataclass
class ExperimentReport:
    """Validation-run summary: complex stats, parameters, per-trial errors."""

    n: int
    edges: int
    max_degree: int
    diameter: int
    diameter_exact: bool
    params: dict
    exact: dict
    linf_errors: list[float] = field(default_factory=list)
    exact_seconds: float = 0.0
    sampling_seconds: float = 0.0

    def to_json_obj(self) -> dict:
        trials = len(self.linf_errors)
        epsilon = self.params["epsilon"]
        delta = self.params["delta"]
        failures = sum(1 for e in self.linf_errors if e > epsilon)
        threshold = delta + 2.0 * math.sqrt(delta * (1.0 - delta) / trials)
        return {
            "mode": "validate",
            "complex": {
                "n": self.n,
                "edges": self.edges,
                "max_degree": self.max_degree,
                "diameter": self.diameter,
                "diameter_exact": self.diameter_exact,
            },
            "params": self.params,
            "exact": self.exact,
            "trials": trials,
            "linf_errors": self.linf_errors,
            "failures": failures,
            "failure_fraction": failures / trials,
            "threshold": threshold,
            "passed": failures / trials <= threshold,
            "timing": {
                "exact_seconds": self.exact_seconds,
                "sampling_seconds": self.sampling_seconds,
            },
        }


@functools.lru_cache(maxsize=4)
def _trial_context(facets: tuple, n: int, m: int):
    return SimplicialComplex(n, facets), generate_catalog(m)


def _run_trial(job: tuple) -> float:
    facets, n, m, epsilon, delta, c, c_mix, mode, gap, trial_seed, exact_freq = job
    complex_, catalog = _trial_context(facets, n, m)
    walk = WalkConfig(m=m, c_mix=c_mix, per_sample_mode=mode, thinning_gap=gap, rng_seed=trial_seed)
    params = ApproxParams(epsilon=epsilon, delta=delta, c=c, walk=walk)
    approx = approximate_sfd(complex_, catalog, params, rng=random.Random(trial_seed))
    exact = SFDVector(catalog_m=m, frequencies=exact_freq)
    return linf_distance(approx, exact)


def _complex_from_args(args) -> tuple[SimplicialComplex, dict]:
    if (args.input is None) == (args.model is None):
        raise InputError("provide exactly one of --input or --model")
    if args.input is not None:
        complex_, _labels = load_complex(args.input)
        origin = {"input": args.input}
    else:
        if args.n is None or args.p_edge is None:
            raise InputError("--model requires --n and --p-edge")
        spec = GenSpec(args.model, args.n, args.p_edge, args.p_tri, args.p_tet, args.gen_seed)
        complex_ = generate(spec)
        origin = {
            "model": spec.model,
            "n": spec.n,
            "p_edge": spec.p_edge,
            "p_tri": spec.p_tri,
            "p_tet": spec.p_tet,
            "gen_seed": spec.seed,
        }
    if args.largest_component:
        complex_, _kept = largest_connected_restriction(complex_)
    return complex_, origin


def cmd_validate(args) -> int:
    complex_, origin = _complex_from_args(args)
    _require_connected(complex_)
    catalog = generate_catalog(args.m)

    t0 = time.perf_counter()
    exact = exact_counts(complex_, catalog)
    exact_seconds = time.perf_counter() - t0

    mode = _MODE_NAMES[args.mode]
    jobs = [
        (
            complex_.facets,
            complex_.vertex_count,
            args.m,
            args.epsilon,
            args.delta,
            args.c,
            args.c_mix,
            mode,
            args.thin_gap,
            args.seed * 1_000_003 + trial,
            exact.frequencies,
        )
        for trial in range(args.trials)
    ]
    t0 = time.perf_counter()
    if args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            errors = list(pool.map(_run_trial, jobs, chunksize=max(1, args.trials // (4 * args.threads))))
    else:
        errors = [_run_trial(job) for job in jobs]
    sampling_seconds = time.perf_counter() - t0

    diameter = skeleton_diameter(complex_)
    report = ExperimentReport(
        n=complex_.vertex_count,
        edges=complex_.edge_count,
        max_degree=complex_.max_degree,
        diameter=diameter.value,
        diameter_exact=diameter.exact,
        params={
            **origin,
            "m": args.m,
            "epsilon": args.epsilon,
            "delta": args.delta,
            "c": args.c,
            "c_mix": args.c_mix,
            "walk_mode": args.mode,
            "thinning_gap": args.thin_gap,
            "samples_per_trial": required_samples(args.epsilon, args.delta, args.c),
            "burn_in": burn_in_steps(complex_, args.c_mix, diameter=diameter.value),
            "trials": args.trials,
            "seed": args.seed,
            "threads": args.threads,
        },
        exact=exact.to_json_obj(),
        linf_errors=errors,
        exact_seconds=exact_seconds,
        sampling_seconds=sampling_seconds,
    )
    _print_json(report.to_json_obj())
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.n is None or args.p_edge is None:
        raise InputError("gen requires --n and --p-edge")
    spec = GenSpec(args.model, args.n, args.p_edge, args.p_tri, args.p_tet, args.seed)
    complex_ = generate(spec)
    if args.largest_component:
        complex_, _kept = largest_connected_restriction(complex_)
    if args.output == "-":
        write_facets(sys.stdout, complex_)
    else:
        write_facets(args.output, complex_)
    return EXIT_OK


def cmd_bench(args) -> int:
    catalog = generate_catalog(args.m)
    samples = required_samples(args.epsilon, args.delta, args.c)
    rows = ["n,edges,max_degree,diameter,burn_in,samples,seconds"]
    for index, size in enumerate(args.sizes):
        p_edge = min(1.0, args.avg_degree / (size - 1))
        spec = GenSpec(args.model, size, p_edge, args.p_tri, args.p_tet, args.seed + index)
        complex_, _kept = largest_connected_restriction(generate(spec))
        diameter = skeleton_diameter(complex_)
        walk = WalkConfig(m=args.m, c_mix=args.c_mix, rng_seed=args.seed + index)
        sampler = SimpletSampler(complex_, walk)
        t0 = time.perf_counter()
        for _ in range(samples):
            sampler.sample()
        seconds = time.perf_counter() - t0
        rows.append(
            f"{complex_.vertex_count},{complex_.edge_count},{complex_.max_degree},"
            f"{diameter.value},{sampler.burn_in},{samples},{seconds:.6f}"
        )
    text = "\n".join(rows) + "\n"
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    return EXIT_OK


_COMMANDS = {
    "catalog": cmd_catalog,
    "exact": cmd_exact,
    "approx": cmd_approx,
    "validate": cmd_validate,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except StructuralError as exc:
        print(f"structural error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL
    except IntegrityError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
