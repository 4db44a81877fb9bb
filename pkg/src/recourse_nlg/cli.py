"""Command-line front end.

Exit codes are part of the contract: 0 success, 2 input or schema error,
3 changed feature without an actionability category, 4 counterfactual with
nothing to recommend. Diagnostics go to stderr; stdout carries only the
artifact, so output can be piped. A fixed seed makes any invocation
byte-reproducible; the default seed is 0.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path

import click

from . import fixtures as bundled
from .baselines import generate_basexai, generate_bxai, generate_gbxai
from .case_model import parse_case
from .discourse import (
    RENDERERS,
    STYLE_ALL_ACTIONABLE,
    STYLE_GROUPED,
    STYLE_IMPORTANCE,
    STYLE_TAXONOMY,
    assemble_explanation,
)
from .errors import NoChanges, RecourseError, UnassignedFeature
from .metrics import audit_text, flesch_score, spearman_rho, token_similarity
from .planner import VariantPolicy
from .realiser import Lexicon, load_lexicon
from .taxonomy import load_taxonomy

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNASSIGNED = 3
EXIT_NO_CHANGES = 4

STYLES = (STYLE_TAXONOMY, STYLE_IMPORTANCE, STYLE_GROUPED, STYLE_ALL_ACTIONABLE)
_POLICIES = {
    "seeded-mix": VariantPolicy.SEEDED_MIX,
    "always-full": VariantPolicy.ALWAYS_FULL,
    "always-concise": VariantPolicy.ALWAYS_CONCISE,
}


@dataclass(frozen=True)
class RunConfig:
    """One reproducible engine invocation."""

    case_path: str
    style: str = STYLE_TAXONOMY
    taxonomy_path: str | None = None
    variant_policy: str = "seeded-mix"
    seed: int = 0
    format: str = "text"
    lexicon_path: str | None = None
    swap_immutable_order: bool = False


def _exit_code(error: RecourseError) -> int:
    if isinstance(error, UnassignedFeature):
        return EXIT_UNASSIGNED
    if isinstance(error, NoChanges):
        return EXIT_NO_CHANGES
    return EXIT_INPUT


def run(config: RunConfig) -> int:
    """Execute one explanation run; writes the artifact to stdout."""
    try:
        case = parse_case(Path(config.case_path).read_bytes())
        lexicon = (
            load_lexicon(Path(config.lexicon_path).read_bytes())
            if config.lexicon_path
            else Lexicon()
        )
        taxonomy = (
            load_taxonomy(Path(config.taxonomy_path).read_bytes())
            if config.taxonomy_path
            else None
        )
        policy = _POLICIES[config.variant_policy]

        if config.style in (STYLE_TAXONOMY, STYLE_ALL_ACTIONABLE) and taxonomy is None:
            print(
                f"error: --style {config.style} requires --taxonomy "
                "(prologue and epilogue wording come from the taxonomy file)",
                file=sys.stderr,
            )
            return EXIT_INPUT

        if config.style == STYLE_TAXONOMY:
            explanation = assemble_explanation(
                case,
                taxonomy,
                lexicon,
                policy=policy,
                seed=config.seed,
                swap_immutable_order=config.swap_immutable_order,
            )
        elif config.style == STYLE_ALL_ACTIONABLE:
            explanation = generate_basexai(case, taxonomy, lexicon, config.seed, policy)
        elif config.style == STYLE_IMPORTANCE:
            explanation = generate_bxai(case, lexicon, config.seed, taxonomy)
        elif config.style == STYLE_GROUPED:
            explanation = generate_gbxai(case, lexicon, config.seed, taxonomy)
        else:
            print(f"error: unknown style {config.style!r}", file=sys.stderr)
            return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RecourseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code(exc)

    sys.stdout.write(RENDERERS[config.format](explanation))
    return EXIT_OK


@click.group()
def main() -> None:
    """Turn counterfactual explanations into feasibility-aware recourse text."""


@main.command()
@click.option("--case", "case_path", required=True, help="Case file (query/counterfactual pair).")
@click.option("--taxonomy", "taxonomy_path", default=None, help="Taxonomy file for the dataset.")
@click.option("--style", type=click.Choice(STYLES), default=STYLE_TAXONOMY, show_default=True)
@click.option(
    "--variant-policy",
    type=click.Choice(sorted(_POLICIES)),
    default="seeded-mix",
    show_default=True,
    help="Full vs concise action sentences.",
)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(sorted(RENDERERS)),
    default="text",
    show_default=True,
)
@click.option("--lexicon", "lexicon_path", default=None, help="Lexicon override file.")
@click.option(
    "--swap-immutable-order",
    is_flag=True,
    help="Put non-sensitive factual sentences before sensitive ones.",
)
def explain(
    case_path: str,
    taxonomy_path: str | None,
    style: str,
    variant_policy: str,
    seed: int,
    output_format: str,
    lexicon_path: str | None,
    swap_immutable_order: bool,
) -> None:
    """Generate an explanation for one case."""
    config = RunConfig(
        case_path=case_path,
        taxonomy_path=taxonomy_path,
        style=style,
        variant_policy=variant_policy,
        seed=seed,
        format=output_format,
        lexicon_path=lexicon_path,
        swap_immutable_order=swap_immutable_order,
    )
    sys.exit(run(config))


@main.group()
def metrics() -> None:
    """Text quality checks over files."""


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        import json

        click.echo(json.dumps(report, indent=2))
    else:
        width = max(len(key) for key in report)
        for key, value in report.items():
            click.echo(f"{key.ljust(width)}  {value}")


@metrics.command()
@click.argument("text_file")
@click.option("--json", "as_json", is_flag=True)
def flesch(text_file: str, as_json: bool) -> None:
    """Reading-ease score of a text file."""
    try:
        score = flesch_score(Path(text_file).read_text(encoding="utf-8"))
    except (OSError, RecourseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(EXIT_INPUT)
    _emit({"flesch_score": round(score, 3)}, as_json)


@metrics.command()
@click.argument("file_a")
@click.argument("file_b")
@click.option("--json", "as_json", is_flag=True)
def similarity(file_a: str, file_b: str, as_json: bool) -> None:
    """Token-multiset similarity between two text files."""
    try:
        value = token_similarity(
            Path(file_a).read_text(encoding="utf-8"),
            Path(file_b).read_text(encoding="utf-8"),
        )
    except (OSError, RecourseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(EXIT_INPUT)
    _emit({"token_similarity": round(value, 6)}, as_json)


@metrics.command()
@click.option("--x", "x_values", required=True, help="Comma-separated ranks.")
@click.option("--y", "y_values", required=True, help="Comma-separated ranks.")
@click.option("--json", "as_json", is_flag=True)
def spearman(x_values: str, y_values: str, as_json: bool) -> None:
    """Rank-order correlation between two comma-separated lists."""
    try:
        x = [float(item) for item in x_values.split(",") if item.strip()]
        y = [float(item) for item in y_values.split(",") if item.strip()]
        result = spearman_rho(x, y)
    except (ValueError, RecourseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(EXIT_INPUT)
    _emit({"rho": result.rho, "n": result.n}, as_json)


@metrics.command()
@click.option("--case", "case_path", required=True)
@click.option("--explanation", "explanation_path", required=True, help="JSON-format output.")
@click.option("--json", "as_json", is_flag=True)
def audit(case_path: str, explanation_path: str, as_json: bool) -> None:
    """Numeric-fidelity audit of a JSON-format explanation against its case."""
    import json as json_module

    try:
        case = parse_case(Path(case_path).read_bytes())
        document = json_module.loads(Path(explanation_path).read_text(encoding="utf-8"))
        strings = [document.get("prologue", "")]
        strings += [sentence["text"] for sentence in document.get("sentences", [])]
        strings.append(document.get("epilogue", ""))
        count = int(document.get("metadata", {}).get("actionable_count", 0))
        violations = audit_text("\n".join(filter(None, strings)), case, count)
    except (OSError, KeyError, ValueError, RecourseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(EXIT_INPUT)
    report = {
        "violations": [str(violation) for violation in violations]
        if as_json
        else len(violations),
        "ok": not violations,
    }
    _emit(report, as_json)
    if violations:
        sys.exit(1)


@main.command("fixtures")
@click.argument("name", required=False)
@click.option("--dest", default=None, help="Directory to write all bundled fixtures into.")
def fixtures_command(name: str | None, dest: str | None) -> None:
    """List, print, or export the bundled example cases and taxonomies."""
    if dest is not None:
        target = Path(dest)
        target.mkdir(parents=True, exist_ok=True)
        for filename in bundled.fixture_filenames():
            (target / filename).write_text(bundled.read_fixture(filename), encoding="utf-8")
            click.echo(f"wrote {target / filename}", err=True)
        return
    if name is None:
        for filename in bundled.fixture_filenames():
            click.echo(filename)
        return
    try:
        content = bundled.read_fixture(name)
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(EXIT_INPUT)
    click.echo(content, nl=False)


if __name__ == "__main__":
    main()
