from __future__ import annotations

from typing import TYPE_CHECKING, Any, TextIO

import functools
import itertools
import json
import math
import random
import sys
from collections.abc import Callable

import click
from loguru import logger

from treelike.errors import ModelError

if TYPE_CHECKING:
    from treelike.checks import CommandReport
    from treelike.representations.towers import Tower


@click.group
@click.option("-v", "--verbose", is_flag=True, default=False, help="Print debug output")
@click.option(
    "-q", "--quiet", is_flag=True, default=False, help="Print only warnings and errors"
)
def cli(verbose: bool, quiet: bool) -> None:
    """Experiments on tree-like homogeneous structures."""
    if verbose and quiet:
        raise click.BadOptionUsage(
            "verbose", "--verbose and --quiet are mutually exclusive"
        )
    # Set up logging
    logger.remove()
    desired_level = "DEBUG" if verbose else "WARNING" if quiet else "INFO"
    logger.add(sys.stderr, level=desired_level)


def report_command(func: Callable[..., CommandReport]) -> Callable[..., None]:
    """Emit the returned report as JSON or TSV; exit 1 if a check fails."""

    @click.option("--tsv", is_flag=True, default=False, help="Print TSV tables instead of JSON")
    @click.option(
        "-o",
        "--output",
        type=click.File(mode="wt"),
        default="-",
        help="File to write output to, defaults to stdout",
    )
    @functools.wraps(func)
    def wrapper(*args: Any, output: TextIO, tsv: bool, **kwargs: Any) -> None:
        from .checks import TerminalReporter, render_json, render_tsv

        try:
            report = func(*args, **kwargs)
        except ModelError as e:
            raise click.ClickException(str(e)) from e

        output.write(render_tsv(report) if tsv else render_json(report))
        TerminalReporter().report_checks(report)
        if not report.ok:
            raise SystemExit(1)

    return wrapper


seed_option = click.option(
    "--seed",
    type=int,
    default=0,
    envvar="TREELIKE_SEED",
    show_default=True,
    help='Seed for randomized suites. Can be specified as environment variable "TREELIKE_SEED".',
)

in_option = click.option(
    "--in", "input_file", type=click.File(), required=True, help="JSON input file"
)


def _report(command: str, inputs: dict[str, Any], outputs: dict[str, Any], checks: list[Any] | None = None) -> CommandReport:
    from .checks import CommandReport

    return CommandReport(command=command, inputs=inputs, outputs=outputs, checks=checks or [])


def _check(name: str, passed: bool, detail: str = "") -> Any:
    from .checks import CheckResult

    return CheckResult(name=name, passed=passed, detail=detail)


def _load_json(input_file: TextIO) -> Any:
    try:
        return json.load(input_file)
    except json.JSONDecodeError as e:
        raise ModelError("input file", "not valid JSON", extra_msg=str(e)) from e


def _split_ids(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


@cli.command
@click.option("--k", type=click.IntRange(min=1), required=True, help="Number of leaves")
@click.option("--up-to", is_flag=True, default=False, help="Count for every size 1..K")
@report_command
def orbits(k: int, up_to: bool) -> CommandReport:
    """Count level-tree isomorphism types with K leaves."""
    from .representations.leveled import count_iso_types

    if not up_to:
        return _report("orbits", {"k": k}, {"k": k, "count": count_iso_types(k)})

    counts = [count_iso_types(size) for size in range(1, k + 1)]
    rows: list[list[Any]] = [["k", "count"], *([size, count] for size, count in enumerate(counts, start=1))]
    monotone = all(a <= b for a, b in itertools.pairwise(counts))
    return _report(
        "orbits",
        {"k": k, "up_to": True},
        {"rows": rows},
        [_check("counts are nondecreasing", monotone, " ".join(map(str, counts)))],
    )


@cli.command
@click.option("--perm", "perm_text", required=True, help='Permutation, e.g. "3 1 2"')
@report_command
def encode(perm_text: str) -> CommandReport:
    """Encode a permutation as leveled points."""
    from .growth import Perm, encode_perm
    from .representations.leveled import point_to_json

    sigma = Perm.parse(perm_text)
    encoding = encode_perm(sigma)
    return _report(
        "encode",
        {"perm": perm_text},
        {
            "sigma": str(sigma),
            "points": [point_to_json(point, name) for name, point in encoding.named_points()],
        },
        [_check(name, ok) for name, ok in encoding.conditions()],
    )


@cli.command
@in_option
@report_command
def decode(input_file: TextIO) -> CommandReport:
    """Decode the permutation encoded by a point set."""
    from .growth import decode_perm
    from .representations.leveled import points_from_json

    sigma = decode_perm(points_from_json(_load_json(input_file)))
    return _report("decode", {"in": input_file.name}, {"sigma": str(sigma)})


@cli.command
@click.option("--sigma", "sigma_text", required=True, help="Pattern permutation")
@click.option("--tau", "tau_text", required=True, help="Host permutation")
@report_command
def embeds(sigma_text: str, tau_text: str) -> CommandReport:
    """Compare pattern containment with embedding of the encodings."""
    from .growth import Perm, encoding_embeds, perm_contains

    sigma, tau = Perm.parse(sigma_text), Perm.parse(tau_text)
    pattern = perm_contains(tau, sigma)
    structure = encoding_embeds(tau, sigma)
    return _report(
        "embeds",
        {"sigma": str(sigma), "tau": str(tau)},
        {"pattern": pattern, "structure_embedding": structure},
        [_check("containment agrees with embedding", pattern == structure)],
    )


@cli.command
@click.option("--count", type=click.IntRange(min=1), default=4, show_default=True)
@click.option("--verify", is_flag=True, default=False, help="Check pairwise incomparability")
@report_command
def antichain(count: int, verify: bool) -> CommandReport:
    """List members of an infinite antichain of permutations."""
    from .growth import antichain_member, perm_contains

    members = [antichain_member(i) for i in range(1, count + 1)]
    checks = []
    if verify:
        for (i, p), (j, q) in itertools.permutations(enumerate(members, start=1), 2):
            checks.append(_check(f"member {i} avoids member {j}", not perm_contains(p, q)))
    return _report(
        "antichain",
        {"count": count, "verify": verify},
        {"members": [str(member) for member in members]},
        checks,
    )


@cli.command
@in_option
@report_command
def extend(input_file: TextIO) -> CommandReport:
    """Extend a partial isomorphism of leveled points by one point.

    The input holds "dom" and "img" point lists and the new "point".
    """
    from .representations.leveled import (
        extend_one_point,
        is_partial_isomorphism,
        point_from_json,
        point_to_json,
        points_from_json,
    )

    data = _load_json(input_file)
    if not isinstance(data, dict) or not {"dom", "img", "point"} <= set(data):
        raise ModelError("extension input", "expected 'dom', 'img' and 'point' fields")
    dom, img = points_from_json(data["dom"]), points_from_json(data["img"])
    a = point_from_json(data["point"])
    b = extend_one_point(dom, img, a)
    return _report(
        "extend",
        {"in": input_file.name},
        {"image": point_to_json(b)},
        [_check("extension is a partial isomorphism", is_partial_isomorphism([*dom, a], [*img, b]))],
    )


@cli.command
@in_option
@click.option("--k", type=click.IntRange(min=1), default=10, show_default=True)
@report_command
def acl(input_file: TextIO, k: int) -> CommandReport:
    """Realize the type of a point over a base set K times.

    The input holds the "base" point list and the "point".
    """
    from .representations.leveled import (
        acl_witnesses,
        is_partial_isomorphism,
        point_from_json,
        point_to_json,
        points_from_json,
    )

    data = _load_json(input_file)
    if not isinstance(data, dict) or not {"base", "point"} <= set(data):
        raise ModelError("acl input", "expected 'base' and 'point' fields")
    base = points_from_json(data["base"])
    a = point_from_json(data["point"])
    witnesses = acl_witnesses(base, a, k)
    return _report(
        "acl",
        {"in": input_file.name, "k": k},
        {"witnesses": [point_to_json(w) for w in witnesses]},
        [
            _check("witnesses are distinct", len(set(witnesses)) == k),
            _check(
                "witnesses share the type over the base",
                all(is_partial_isomorphism([*base, a], [*base, w]) for w in witnesses),
            ),
        ],
    )


@cli.group
def tower() -> None:
    """Operations on towers of D-sets."""


def _load_tower(input_file: TextIO) -> Tower:
    from .representations.towers import tower_from_json

    return tower_from_json(_load_json(input_file))


@tower.command("validate")
@in_option
@report_command
def tower_validate(input_file: TextIO) -> CommandReport:
    """Check the invariants of a tower."""
    from .representations.towers import validate_tower

    result = validate_tower(_load_tower(input_file))
    return _report(
        "tower validate",
        {"in": input_file.name},
        {"violations": [v.model_dump() for v in result.violations]},
        [_check("tower is valid", result.ok, f"{len(result.violations)} violations")],
    )


@tower.command("atoms")
@in_option
@click.option("--symbol", required=True, help="One of L, S, L', S', R, Q, P, Q<=, Q>=, T")
@click.option("--tuple", "tuple_text", required=True, help="Comma-separated point ids")
@report_command
def tower_atoms(input_file: TextIO, symbol: str, tuple_text: str) -> CommandReport:
    """Evaluate one atom on a tuple of points."""
    from .representations.towers import atom

    tup = _split_ids(tuple_text)
    holds = atom(_load_tower(input_file), symbol, tup)
    return _report(
        "tower atoms",
        {"in": input_file.name, "symbol": symbol, "tuple": tup},
        {"holds": holds},
    )


@tower.command("reduct")
@in_option
@click.option("--subset", "subset_text", help="Comma-separated point ids (default: all)")
@click.option(
    "--language", type=click.Choice(["L", "LS", "L1", "L2"]), default="L1", show_default=True
)
@report_command
def tower_reduct(input_file: TextIO, subset_text: str | None, language: str) -> CommandReport:
    """The induced structure on a subset over a tower language."""
    from .representations.structure import structure_to_json
    from .representations.towers import reduct

    t = _load_tower(input_file)
    subset = _split_ids(subset_text) if subset_text else list(t.points)
    return _report(
        "tower reduct",
        {"in": input_file.name, "subset": subset, "language": language},
        {"structure": structure_to_json(reduct(t, subset, language))},
    )


@tower.command("complete")
@in_option
@click.option("--subset", "subset_text", required=True, help="Comma-separated point ids")
@click.option(
    "--canonical",
    is_flag=True,
    help="Rebuild the tower from the subset's L2 type instead of adopting ambient points",
)
@report_command
def tower_complete(input_file: TextIO, subset_text: str, canonical: bool) -> CommandReport:
    """Close a subset under special-branch witnesses."""
    from .representations.towers import (
        canonical_completion,
        complete,
        dump_tower,
        induced_tower,
        reduct,
        validate_tower,
    )

    t = _load_tower(input_file)
    subset = _split_ids(subset_text)
    if canonical:
        completion = canonical_completion(t, subset)
        same_type = all(
            reduct(completion.tower, completion.subset, language).relations
            == reduct(t, completion.subset, language).relations
            for language in ("L1", "L2")
        )
        return _report(
            "tower complete",
            {"in": input_file.name, "subset": subset, "canonical": True},
            {"tower": json.loads(dump_tower(completion.tower)), "fresh": list(completion.fresh)},
            [
                _check("completion is a valid tower", validate_tower(completion.tower).ok),
                _check("completion keeps the subset's type", same_type),
            ],
        )
    completed = complete(t, subset)
    return _report(
        "tower complete",
        {"in": input_file.name, "subset": subset},
        {"completion": completed},
        [
            _check("completion contains the subset", set(subset) <= set(completed)),
            _check("induced tower is valid", validate_tower(induced_tower(t, completed)).ok),
            _check("completion is idempotent", complete(t, completed) == completed),
        ],
    )


@tower.command("identities")
@in_option
@report_command
def tower_identities(input_file: TextIO) -> CommandReport:
    """Check the witness-level identities on every admissible tuple."""
    from .checks import run_identity_checks

    t = _load_tower(input_file)
    return _report("tower identities", {"in": input_file.name}, {"points": list(t.points)}, run_identity_checks(t))


@tower.command("witness-nonhomog")
@report_command
def tower_witness_nonhomog() -> CommandReport:
    """Search for an L1-isomorphism that does not preserve L2."""
    from .representations.structure import is_isomorphic
    from .representations.towers import L1_SIGNATURE, atom, dump_tower, nonhomogeneity_witness, reduct

    witness = nonhomogeneity_witness()
    l1_iso = is_isomorphic(
        reduct(witness.tower1, witness.subset1, L1_SIGNATURE),
        reduct(witness.tower2, witness.subset2, L1_SIGNATURE),
    )
    ext1, ext2 = witness.completions()
    image = [witness.bijection[p] for p in witness.distinguishing]
    t_changes = atom(witness.tower1, "T", witness.distinguishing) != atom(witness.tower2, "T", image)
    return _report(
        "tower witness-nonhomog",
        {},
        {
            "tower1": json.loads(dump_tower(witness.tower1)),
            "subset1": list(witness.subset1),
            "tower2": json.loads(dump_tower(witness.tower2)),
            "subset2": list(witness.subset2),
            "bijection": witness.bijection,
            "distinguishing": list(witness.distinguishing),
            "completion1": ext1,
            "completion2": ext2,
        },
        [
            _check("subsets are L1-isomorphic", l1_iso),
            _check("bijection changes a T atom", t_changes, ",".join(witness.distinguishing)),
            _check("bijection does not extend to completions", witness.extension() is None),
        ],
    )


@tower.command("dot")
@in_option
@click.option("--level", type=click.IntRange(min=1), default=1, show_default=True)
@click.option(
    "-o",
    "--output",
    type=click.File(mode="wt"),
    default="-",
    help="File to write output to, defaults to stdout",
)
def tower_dot(input_file: TextIO, level: int, output: TextIO) -> None:
    """Render one level of a tower as GraphViz DOT."""
    from .representations.towers import dump_tower_as

    try:
        output.write(dump_tower_as("graphviz", _load_tower(input_file), level))
    except ModelError as e:
        raise click.ClickException(str(e)) from e


@cli.command
@click.option(
    "--family",
    type=click.Choice(
        ["dset", "up_sfree", "down_sfree", "mixed", "path", "comb", "up_star", "down_star", "down_mixed", "up_mixed"]
    ),
    required=True,
    help="D-tower families first, then B-tower families",
)
@click.option("--n", type=click.IntRange(min=4), required=True, help="Sequence length")
@click.option(
    "--alternation", is_flag=True, default=False, help="Compare alternation at N and 2N"
)
@report_command
def indisc(family: str, n: int, alternation: bool) -> CommandReport:
    """Build an indiscernible sequence in a tower or B-tower."""
    from .representations.towers import (
        B_FAMILIES,
        AtomShape,
        indiscernible_prefix,
        max_alternation,
        tower_to_json,
        validate_tower,
    )

    if family in B_FAMILIES:
        return _indisc_btower(family, n, alternation)

    t, seq = indiscernible_prefix(family, n)  # pyright: ignore[reportArgumentType]
    inputs = {"family": family, "n": n, "alternation": alternation}
    if not alternation:
        return _report(
            "indisc",
            inputs,
            {"sequence": seq, "tower": tower_to_json(t)},
            [_check("tower is valid", validate_tower(t).ok)],
        )

    long_tower, long_seq = indiscernible_prefix(family, 2 * n)  # pyright: ignore[reportArgumentType]
    rows: list[list[Any]] = [["shape", str(n), str(2 * n)]]
    checks = []
    for shape in AtomShape.all():
        short = max_alternation(t, seq, shape)
        long = max_alternation(long_tower, long_seq, shape)
        rows.append([str(shape), short, long])
        checks.append(_check(f"{shape} bounded", short == long, f"{short} vs {long}"))
    return _report("indisc", inputs, {"rows": rows}, checks)


def _indisc_btower(family: str, n: int, alternation: bool) -> CommandReport:
    from .representations.towers import (
        btower_to_json,
        indiscernible_bprefix,
        max_betweenness_alternation,
        validate_btower,
    )

    bt, seq = indiscernible_bprefix(family, n)  # pyright: ignore[reportArgumentType]
    inputs = {"family": family, "n": n, "alternation": alternation}
    if not alternation:
        return _report(
            "indisc",
            inputs,
            {"sequence": seq, "tower": btower_to_json(bt)},
            [_check("B-tower is valid", validate_btower(bt).ok)],
        )

    long_bt, long_seq = indiscernible_bprefix(family, 2 * n)  # pyright: ignore[reportArgumentType]
    rows: list[list[Any]] = [["shape", str(n), str(2 * n)]]
    checks = []
    for slot in range(3):
        shape = ",".join("x" if i == slot else "_" for i in range(3))
        short = max_betweenness_alternation(bt, seq, slot)
        long = max_betweenness_alternation(long_bt, long_seq, slot)
        rows.append([f"L({shape})", short, long])
        checks.append(_check(f"L({shape}) bounded", short == long, f"{short} vs {long}"))
    return _report("indisc", inputs, {"rows": rows}, checks)


@cli.command("triviality-witness")
@click.option("--n", type=click.IntRange(min=3), default=8, show_default=True)
@click.option("--cut", type=str, help="Level of the meet of b and c, e.g. 3/2")
@report_command
def triviality_witness(n: int, cut: str | None) -> CommandReport:
    """Blocks indiscernible over b and over c but not over both."""
    from .growth import triviality_failure_witness
    from .representations.leveled import load_rational

    report = triviality_failure_witness(n, cut=load_rational(cut) if cut is not None else None)
    return _report(
        "triviality-witness",
        {"n": n, "cut": cut},
        {
            "cut": str(report.cut),
            "uniform_over_b": report.uniform_over_b,
            "uniform_over_c": report.uniform_over_c,
            "differing_pair": report.differing_pair,
        },
        [
            _check("indiscernible over b", report.uniform_over_b),
            _check("indiscernible over c", report.uniform_over_c),
            _check("not indiscernible over b and c", report.differing_pair is not None),
        ],
    )


@cli.command
@click.option("--n", type=click.IntRange(min=1), required=True, help="Permutation length")
@report_command
def growth(n: int) -> CommandReport:
    """Count non-isomorphic encodings of permutations of length N."""
    from .growth import growth_lower_bound

    count = growth_lower_bound(n)
    return _report(
        "growth",
        {"n": n},
        {"count": count, "size": 2 * n + 3},
        [_check("one type per permutation", count == math.factorial(n), f"{count} of {math.factorial(n)}")],
    )


@cli.command
@click.option("--samples", type=click.IntRange(min=1), default=10_000, show_default=True)
@seed_option
@report_command
def axioms(samples: int, seed: int) -> CommandReport:
    """Check the C-relation axioms and V laws on random points."""
    from .checks import run_axiom_checks

    checks = run_axiom_checks(random.Random(seed), samples)
    return _report("axioms", {"samples": samples, "seed": seed}, {}, checks)


@cli.command("back-and-forth")
@click.option("--trials", type=click.IntRange(min=1), default=1000, show_default=True)
@seed_option
@report_command
def back_and_forth(trials: int, seed: int) -> CommandReport:
    """Extend isomorphisms between realizations of random level trees."""
    from .checks import run_back_and_forth

    checks = run_back_and_forth(random.Random(seed), trials)
    return _report("back-and-forth", {"trials": trials, "seed": seed}, {}, checks)


@cli.command
@click.option("--pairs", type=click.IntRange(min=1), default=50, show_default=True)
@click.option("--max-size", type=click.IntRange(min=1), default=5, show_default=True)
@seed_option
@report_command
def homogenize(pairs: int, max_size: int, seed: int) -> CommandReport:
    """Check that L2-isomorphisms extend to completions on random towers."""
    from .checks import run_homogenization_checks

    checks = run_homogenization_checks(random.Random(seed), pairs, max_size=max_size)
    return _report("homogenize", {"pairs": pairs, "max_size": max_size, "seed": seed}, {}, checks)


if __name__ == "__main__":
    cli()
