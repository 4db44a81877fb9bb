"""Bridge command line: export cases and taxonomy skeletons from a toy
classifier, end to end, with everything seeded."""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .dataset import toy_loan_dataset
from .errors import BridgeError
from .export import BridgeJob, OutcomePhrases, export_case, export_taxonomy_skeleton
from .model import TabularModel

_LOAN_OUTCOMES = OutcomePhrases(
    desired="accepted",
    undesired="rejected",
    desired_state_phrase="an approved loan",
    undesired_state_phrase="a rejected loan application",
)


def _fitted_toy(seed: int) -> tuple[TabularModel, object]:
    dataset = toy_loan_dataset(seed=seed)
    return TabularModel(dataset).fit(), dataset


def _first_rejected(model: TabularModel, dataset) -> int:
    for index, row in enumerate(dataset.rows):
        if not model.predicts_desired(dict(row)):
            return index
    raise BridgeError("toy dataset contains no rejected rows")


@click.group()
def main() -> None:
    """Convert explainer output into engine-ready case and taxonomy files."""


@main.command("export-case")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--query-index", type=int, default=None, help="Defaults to the first rejected row.")
@click.option("--out", "output_path", required=True)
def export_case_command(seed: int, query_index: int | None, output_path: str) -> None:
    """Export one toy-classifier counterfactual as a case file."""
    try:
        model, dataset = _fitted_toy(seed)
        if query_index is None:
            query_index = _first_rejected(model, dataset)
        job = BridgeJob(
            model=model,
            dataset=dataset,
            query_index=query_index,
            outcomes=_LOAN_OUTCOMES,
            output_path=output_path,
        )
        export_case(job)
    except BridgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(2)
    click.echo(f"wrote {output_path}", err=True)


@main.command("export-skeleton")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", "output_path", required=True)
def export_skeleton_command(seed: int, output_path: str) -> None:
    """Export a taxonomy skeleton for the toy dataset (all UNASSIGNED)."""
    dataset = toy_loan_dataset(seed=seed)
    export_taxonomy_skeleton(dataset, output_path)
    click.echo(f"wrote {output_path}", err=True)


@main.command()
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--dest", required=True, help="Directory for the exported files.")
def demo(seed: int, dest: str) -> None:
    """Export a case file plus taxonomy skeleton into a directory."""
    target = Path(dest)
    target.mkdir(parents=True, exist_ok=True)
    try:
        model, dataset = _fitted_toy(seed)
        query_index = _first_rejected(model, dataset)
        export_case(
            BridgeJob(
                model=model,
                dataset=dataset,
                query_index=query_index,
                outcomes=_LOAN_OUTCOMES,
                output_path=target / "toy_loan_case.json",
            )
        )
        export_taxonomy_skeleton(dataset, target / "toy_loan_taxonomy_skeleton.json")
    except BridgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(2)
    click.echo(f"wrote case and skeleton under {target}", err=True)
    click.echo(
        "assign categories in the skeleton (replace every UNASSIGNED) before "
        "running the explanation engine",
        err=True,
    )


if __name__ == "__main__":
    main()
