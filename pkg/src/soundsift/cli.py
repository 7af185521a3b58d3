"""Command-line entry points.

Subcommands mirror the library surface: ``cluster`` a corpus file,
``eval`` the clustering quality over query batches or labeled datasets,
``fit`` a projection model, ``serve`` the HTTP facade.

Every command takes ``--seed`` (default 0, never wall-clock), so outputs
are reproducible byte for byte. Exit codes: 0 success, 1 data or runtime
error, 2 usage error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .corpus import parse_corpus, parse_labeled_dataset
from .errors import SoundsiftError, TooFewSamples
from .evaluate import EvalConfig, external_validation_run, internal_validation_run
from .features import (
    FeatureScheme,
    ProjectionKind,
    ProjectionModel,
    build_tag_vocabulary,
    fit_projection,
    tag_matrix,
)
from .pipeline import ClusterJob, feature_matrix, run_clustering

_SCHEMES = [scheme.value for scheme in FeatureScheme]


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


def _read_bytes(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        _fail(str(exc))
        raise AssertionError("unreachable")


def _dump_json(payload: dict, output: str | None) -> None:
    text = json.dumps(payload, indent=2, allow_nan=False)
    if output:
        Path(output).write_text(text + "\n")
    else:
        click.echo(text)


@click.group()
def main() -> None:
    """Cluster sound search results and evaluate the clustering."""


@main.command("cluster")
@click.argument("corpus_path", type=click.Path())
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--k", "k_override", type=int, default=None, help="Override neighbors per node.")
@click.option("--prune/--no-prune", default=False, show_default=True,
              help="Discard the lowest-confidence cluster.")
@click.option("--scheme", type=click.Choice(_SCHEMES), default="stats", show_default=True)
@click.option("--use-frames", is_flag=True, default=False,
              help="Aggregate frame features even when a clip vector is present.")
@click.option("--projection", "projection_path", type=click.Path(), default=None,
              help="Apply a fitted projection model before building the graph.")
@click.option("--output", "-o", type=click.Path(), default=None, help="Write the response JSON here.")
@click.option("--figure", type=click.Path(), default=None, help="Also render the clustered graph as PNG.")
def cmd_cluster(corpus_path, seed, k_override, prune, scheme, use_frames, projection_path,
                output, figure):
    """Cluster one corpus file and emit the response JSON."""
    try:
        corpus = parse_corpus(_read_bytes(corpus_path))
        projection = None
        if projection_path:
            projection = ProjectionModel.from_json(_read_bytes(projection_path))
        job = ClusterJob(
            scheme=FeatureScheme.from_name(scheme),
            seed=seed,
            k_override=k_override,
            prune=prune,
            projection=projection,
            use_frames=use_frames,
        )
        result = run_clustering(corpus, job)
    except SoundsiftError as exc:
        _fail(exc.message)
        return
    _dump_json(result.to_response(corpus.documents), output)
    if figure:
        from .figures import render_graph_figure

        render_graph_figure(result, figure, seed=seed)


@main.command("eval")
@click.argument("mode", type=click.Choice(["internal", "external"]))
@click.argument("inputs", type=click.Path(), nargs=-1, required=True)
@click.option("--prune/--no-prune", default=False, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--dims", type=int, default=100, show_default=True, help="LSA output dimensions.")
@click.option("--vocab-size", type=int, default=5000, show_default=True)
@click.option("--scheme", type=click.Choice(_SCHEMES), default="stats", show_default=True)
@click.option("--k", "k_override", type=int, default=None)
@click.option("--max-duration", type=float, default=10.0, show_default=True,
              help="Evaluate only sounds at most this long, in seconds; 0 disables the filter.")
@click.option("--output-dir", "-o", type=click.Path(), default=".", show_default=True)
def cmd_eval(mode, inputs, prune, seed, dims, vocab_size, scheme, k_override, max_duration,
             output_dir):
    """Score clustering quality over query corpora (internal, CHI) or
    labeled datasets (external, AMI). Writes JSON, CSV and a PNG figure."""
    config = EvalConfig(
        seed=seed,
        prune=prune,
        scheme=FeatureScheme.from_name(scheme),
        k_override=k_override,
        lsa_dim=dims,
        vocab_size=vocab_size,
        max_duration=max_duration if max_duration > 0 else None,
    )
    try:
        if mode == "internal":
            queries = [(Path(p).stem, parse_corpus(_read_bytes(p))) for p in inputs]
            report = internal_validation_run(queries, config)
        else:
            datasets = [(Path(p).stem, parse_labeled_dataset(_read_bytes(p))) for p in inputs]
            report = external_validation_run(datasets, config)
    except SoundsiftError as exc:
        _fail(exc.message)
        return
    if not report.scores:
        _fail("no runnable inputs: every run was skipped")

    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"{report.metric.lower()}_{'pruned' if prune else 'unpruned'}"
    (out / f"{stem}.json").write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    (out / f"{stem}.csv").write_text(report.to_csv())
    from .figures import render_report_figure

    render_report_figure(report, out / f"{stem}.png")
    click.echo(
        f"{report.metric} ({'pruning' if prune else 'no pruning'}): "
        f"mean={report.mean:.4f} std={report.std:.4f} over {len(report.scores)} runs "
        f"({sum(1 for r in report.runs if r.skipped)} skipped) -> {out / stem}.{{json,csv,png}}"
    )


@main.command("fit")
@click.argument("corpus_path", type=click.Path())
@click.option("--kind", type=click.Choice(["pca", "lsa"]), required=True)
@click.option("--dims", type=int, default=100, show_default=True)
@click.option("--scheme", type=click.Choice(_SCHEMES), default="stats", show_default=True,
              help="Frame aggregation used to assemble PCA inputs.")
@click.option("--vocab-size", type=int, default=5000, show_default=True)
@click.option("--standardize", is_flag=True, default=False,
              help="Scale PCA inputs to unit column variance.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--output", "-o", type=click.Path(), required=True)
def cmd_fit(corpus_path, kind, dims, scheme, vocab_size, standardize, seed, output):
    """Fit a PCA (audio features) or LSA (tag vectors) projection model."""
    try:
        corpus = parse_corpus(_read_bytes(corpus_path))
        if kind == "pca":
            samples = feature_matrix(corpus.documents, FeatureScheme.from_name(scheme))
            model = fit_projection(samples, ProjectionKind.PCA, dims, standardize=standardize)
        else:
            vocab = build_tag_vocabulary(corpus, vocab_size)
            if len(vocab) == 0:
                raise TooFewSamples("corpus has no tags to build a vocabulary from")
            model = fit_projection(
                tag_matrix(corpus.documents, vocab), ProjectionKind.LSA, dims
            )
    except SoundsiftError as exc:
        _fail(exc.message)
        return
    Path(output).write_text(model.to_json() + "\n")
    click.echo(f"fitted {kind} model: {model.input_dim} -> {model.output_dim} dims")


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True, envvar="SOUNDSIFT_HOST")
@click.option("--port", type=int, default=8000, show_default=True, envvar="SOUNDSIFT_PORT")
@click.option("--corpus", "corpus_path", type=click.Path(), default=None,
              envvar="SOUNDSIFT_CORPUS", help="Document file to load at startup.")
@click.option("--max-results", type=int, default=500, show_default=True,
              envvar="SOUNDSIFT_MAX_RESULTS")
@click.option("--seed", type=int, default=0, show_default=True, envvar="SOUNDSIFT_SEED",
              help="Default seed for requests that do not send one.")
def cmd_serve(host, port, corpus_path, max_results, seed):
    """Run the HTTP clustering service."""
    import uvicorn

    from .service import ServiceSettings, create_app

    try:
        app = create_app(
            ServiceSettings(corpus_path=corpus_path, max_results=max_results, default_seed=seed)
        )
    except (SoundsiftError, OSError) as exc:
        _fail(str(exc))
        return
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
