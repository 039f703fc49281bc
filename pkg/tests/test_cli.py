# pyright: reportUnusedFunction = false

from __future__ import annotations

from typing import Any

import json
import sys
from collections.abc import Iterator
from pathlib import Path

import pytest
from click.testing import CliRunner, Result
from loguru import logger

from treelike import cli
from treelike.representations.towers import dump_tower, reference_tower


@pytest.fixture(autouse=True)
def restore_logging() -> Iterator[None]:
    yield
    logger.remove()
    logger.add(sys.stderr, format="{level} {message}", level="DEBUG")


@pytest.fixture()
def workdir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    monkeypatch.chdir(tmp_path)
    (tmp_path / "tstar.json").write_text(dump_tower(reference_tower("Tstar")))
    return tmp_path


def invoke(workdir: Path, *args: str) -> tuple[Result, Any]:
    result = CliRunner().invoke(cli, ["-q", *args, "-o", "out.txt"])
    out = workdir / "out.txt"
    text = out.read_text() if out.exists() else ""
    return result, json.loads(text) if text.startswith("{") else text


def describe_cli() -> None:
    def should_count_orbits(workdir: Path) -> None:
        result, report = invoke(workdir, "orbits", "--k", "3")

        assert result.exit_code == 0
        assert report["outputs"] == {"k": 3, "count": 2}

    def should_tabulate_orbit_counts(workdir: Path) -> None:
        result, text = invoke(workdir, "orbits", "--k", "4", "--up-to", "--tsv")

        assert result.exit_code == 0
        assert text.splitlines()[:5] == ["k\tcount", "1\t1", "2\t1", "3\t2", "4\t6"]

    def should_evaluate_tower_atoms(workdir: Path) -> None:
        result, report = invoke(
            workdir, "tower", "atoms", "--in", "tstar.json", "--symbol", "P", "--tuple", "x,y,z,y,x,z"
        )

        assert result.exit_code == 0
        assert report["outputs"] == {"holds": True}

    def should_compare_containment_and_embedding(workdir: Path) -> None:
        result, report = invoke(workdir, "embeds", "--sigma", "1 2", "--tau", "1 3 2")

        assert result.exit_code == 0
        assert report["outputs"] == {"pattern": True, "structure_embedding": True}

    def should_complete_subsets(workdir: Path) -> None:
        result, report = invoke(workdir, "tower", "complete", "--in", "tstar.json", "--subset", "y,z,w")

        assert result.exit_code == 0
        assert report["outputs"]["completion"] == ["w", "x", "y", "z"]

    def should_complete_subsets_canonically(workdir: Path) -> None:
        result, report = invoke(
            workdir, "tower", "complete", "--in", "tstar.json", "--subset", "y,z,w", "--canonical"
        )

        assert result.exit_code == 0
        assert report["outputs"]["fresh"] == ["+0"]
        assert len(report["outputs"]["tower"]["levels"]) == 1

    def should_report_triviality_witness(workdir: Path) -> None:
        result, report = invoke(workdir, "triviality-witness", "--n", "3")

        assert result.exit_code == 0
        assert report["outputs"]["differing_pair"] == [[1, 2], [2, 3]]
        assert report["outputs"]["cut"] == "3/2"

    def should_count_growth(workdir: Path) -> None:
        result, report = invoke(workdir, "growth", "--n", "3")

        assert result.exit_code == 0
        assert report["outputs"] == {"count": 6, "size": 9}

    def should_pass_axiom_checks(workdir: Path) -> None:
        result, report = invoke(workdir, "axioms", "--samples", "20", "--seed", "3")

        assert result.exit_code == 0
        assert report["inputs"] == {"samples": 20, "seed": 3}

    def should_exit_with_one_on_failed_checks(workdir: Path) -> None:
        (workdir / "bad.json").write_text(
            json.dumps(
                {
                    "levels": [
                        {
                            "nodes": ["c", "a", "b", "d"],
                            "edges": [["c", "a"], ["c", "b"], ["c", "d"]],
                            "leaves": {"a": ["x"], "b": ["y"], "d": ["z"]},
                        }
                    ]
                }
            )
        )

        result, report = invoke(workdir, "tower", "validate", "--in", "bad.json")

        assert result.exit_code == 1
        assert report["outputs"]["violations"][0]["kind"] == "missing special edge"

    def should_turn_model_errors_into_messages(workdir: Path) -> None:
        result, _ = invoke(workdir, "tower", "atoms", "--in", "tstar.json", "--symbol", "L", "--tuple", "x,y,q")

        assert result.exit_code == 1
        assert "unknown point id" in result.output

    def should_render_dot(workdir: Path) -> None:
        result, text = invoke(workdir, "tower", "dot", "--in", "tstar.json", "--level", "2")

        assert result.exit_code == 0
        assert "red" in text

    def should_reject_verbose_and_quiet() -> None:
        result = CliRunner().invoke(cli, ["-v", "-q", "orbits", "--k", "1"])

        assert result.exit_code == 2
