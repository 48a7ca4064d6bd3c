"""CLI interface for amrsmith."""

import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import typer
import typer.main

from amrsmith import __version__
from amrsmith.amr.corpus import CorpusError, load_corpus, write_corpus
from amrsmith.amr.serializer import Layout
from amrsmith.amr.triples import to_triples
from amrsmith.config import RunConfig, apply_overrides, config_to_dict, load_config, validate_config
from amrsmith.eval import EvalOptions, ScoreReporter, pipeline_eval
from amrsmith.postprocess import (
    Gazetteer,
    HttpEntityLinker,
    PostprocessOptions,
    PruneMethod,
    WikiBackend,
    postprocess_lines,
    summarize,
    write_log,
)
from amrsmith.preprocess import (
    AlignmentFormat,
    PreprocessOptions,
    ReorderMode,
    clean_sentence,
    preprocess_corpus,
    read_tsv_sidecar,
    write_training_files,
)
from amrsmith.silver import MixSpec, curate, write_report, write_silver_corpus
from amrsmith.smatch import MetricKind, corpus_breakdown, corpus_smatch
from amrsmith.tokenizer import (
    TokenSequence,
    attach_tags,
    build_vocab,
    decode_amr,
    decode_sentence,
    encode_amr,
    encode_sentence,
    read_tag_sidecar,
)
from amrsmith.utils.errors import (
    EXIT_DATA_ERROR,
    EXIT_SUCCESS,
    EXIT_USAGE_ERROR,
    AmrsmithError,
)
from amrsmith.utils.logging import CONTEXT_COMMAND, CONTEXT_ERROR_CODE, configure_logging

logger = logging.getLogger(__name__)

# Typer exports no UsageError; it lives in the click build Typer runs on,
# vendored as typer._click in newer releases
_vendored_click = getattr(typer.main, "_click", None)
_click = _vendored_click.exceptions if _vendored_click is not None else typer.main.click

app = typer.Typer(
    name="amrsmith",
    help="AMR corpus pipelines: parsing, SMATCH, preprocessing, postprocessing and silver data",
    add_completion=False,
    no_args_is_help=True,
)

INPUT_FILE = dict(exists=True, file_okay=True, dir_okay=False, readable=True)


@dataclass
class GlobalOptions:
    """Options given before the subcommand."""
    config_path: Optional[Path] = None
    overrides: Dict[str, Any] = field(default_factory=dict)


def version_callback(value: bool):
    """Display version information"""
    if value:
        typer.echo(f"amrsmith version {__version__}")
        raise typer.Exit()


@app.callback()
def callback(
    ctx: typer.Context,
    seed: Optional[int] = typer.Option(None, "--seed", help="Global random seed"),
    jobs: Optional[int] = typer.Option(None, "--jobs", "-j", help="Worker processes for corpus work"),
    config_path: Optional[Path] = typer.Option(
        None,
        "--config",
        "-c",
        help="Config file (.yaml, or flat key = value); default $AMRSMITH_CONFIG",
    ),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Warnings only, no progress bars"),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING or ERROR"),
    json_logs: bool = typer.Option(False, "--json-logs", help="JSON log lines on stderr"),
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        "-V",
        callback=version_callback,
        is_eager=True,
        help="Show version and exit",
    ),
):
    """amrsmith: AMR toolkit for character-level sequence-to-sequence parsing"""
    ctx.obj = GlobalOptions(
        config_path=config_path,
        overrides={
            "seed": seed,
            "jobs": jobs,
            "quiet": True if quiet else None,
            "logging.level": log_level.upper() if log_level else None,
            "logging.json_format": True if json_logs else None,
        },
    )


def resolve_config(ctx: typer.Context, command: str, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """File config, then global flags, then subcommand flags; validated and logged."""
    options: GlobalOptions = ctx.obj or GlobalOptions()
    config = load_config(options.config_path)
    config = apply_overrides(config, options.overrides)
    config = apply_overrides(config, overrides or {})
    validate_config(config)

    configure_logging(config.logging.level, config.logging.json_format, config.logging.file)
    if config.quiet:
        logging.getLogger().setLevel(logging.WARNING)
    logger.info(
        f"Running {command}",
        extra={CONTEXT_COMMAND: command, "config": config_to_dict(config)},
    )
    return config


def wiki_backend(config: RunConfig) -> Optional[WikiBackend]:
    if config.wiki.gazetteer:
        return Gazetteer.load(config.wiki.gazetteer)
    if config.wiki.url:
        return HttpEntityLinker(
            config.wiki.url,
            timeout=config.wiki.timeout_seconds,
            retries=config.wiki.retries,
            max_concurrency=config.wiki.max_concurrency,
        )
    return None


def postprocess_options(config: RunConfig, backend: Optional[WikiBackend]) -> PostprocessOptions:
    return PostprocessOptions(
        prune=PruneMethod(config.postprocess.prune),
        coref=config.postprocess.coref,
        wikify=backend is not None,
    )


def read_lines(path: Path) -> List[str]:
    with open(path, encoding="utf-8") as f:
        return f.read().splitlines()


def report_corpus_errors(path: Path, errors: List[CorpusError]) -> None:
    """Malformed blocks to stderr, one line each; read_corpus has already logged them."""
    for error in errors:
        typer.echo(f"{path}: {error}", err=True)


def write_lines(lines: Sequence[str], path: Optional[Path]) -> None:
    """Lines to a file, or to stdout without one."""
    if path is None:
        for line in lines:
            typer.echo(line)
        return
    with open(path, "w", encoding="utf-8") as f:
        f.writelines(line + "\n" for line in lines)


@app.command()
def parse(
    ctx: typer.Context,
    corpus: Path = typer.Argument(..., help="AMR corpus file", **INPUT_FILE),
    layout: Layout = typer.Option(Layout.INDENTED, "--layout", help="Output layout"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output file (default stdout)"),
):
    """
    Validate a corpus and write it back in canonical form.

    Malformed blocks are reported on stderr with their line; the command
    then exits with code 2.
    """
    resolve_config(ctx, "parse")
    graphs, errors = load_corpus(corpus)
    if out is None:
        write_corpus(graphs, sys.stdout, layout)
    else:
        with open(out, "w", encoding="utf-8") as f:
            write_corpus(graphs, f, layout)
    report_corpus_errors(corpus, errors)
    logger.info(f"Parsed {len(graphs)} graphs, {len(errors)} malformed", extra={"path": str(corpus)})
    if errors:
        raise typer.Exit(EXIT_DATA_ERROR)


@app.command()
def triples(
    ctx: typer.Context,
    corpus: Path = typer.Argument(..., help="AMR corpus file", **INPUT_FILE),
    normalize_inverse: bool = typer.Option(
        True,
        "--normalize-inverse/--keep-inverse",
        help="Rewrite :X-of edges as :X in the opposite direction",
    ),
):
    """Print the triples of every graph as TSV: block, kind, label, arg1, arg2."""
    resolve_config(ctx, "triples")
    graphs, errors = load_corpus(corpus)
    for index, graph in enumerate(graphs):
        for triple in to_triples(graph, normalize_inverse=normalize_inverse):
            typer.echo(f"{index}\t{triple.kind.value}\t{triple.label}\t{triple.arg1}\t{triple.arg2}")
    report_corpus_errors(corpus, errors)
    if errors:
        raise typer.Exit(EXIT_DATA_ERROR)


@app.command()
def smatch(
    ctx: typer.Context,
    pred: Path = typer.Option(..., "--pred", help="Predicted AMR corpus", **INPUT_FILE),
    gold: Path = typer.Option(..., "--gold", help="Gold AMR corpus", **INPUT_FILE),
    restarts: Optional[int] = typer.Option(None, "--restarts", help="Hill-climbing restarts per pair"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Random seed (overrides the global one)"),
    metric: MetricKind = typer.Option(MetricKind.SMATCH, "--metric", help="Scoring view"),
    normalize_inverse: Optional[bool] = typer.Option(
        None,
        "--normalize-inverse/--keep-inverse",
        help="Invert :X-of relations before matching",
    ),
    per_pair: Optional[Path] = typer.Option(None, "--per-pair", help="Write per-pair scores as TSV"),
):
    """
    Score a predicted corpus against gold.

    Prints one line: P x.xxxx R x.xxxx F x.xxxx
    """
    config = resolve_config(
        ctx,
        "smatch",
        {"seed": seed, "smatch.restarts": restarts, "smatch.normalize_inverse": normalize_inverse},
    )
    preds, pred_errors = load_corpus(pred)
    golds, gold_errors = load_corpus(gold)
    report_corpus_errors(pred, pred_errors)
    report_corpus_errors(gold, gold_errors)
    if pred_errors or gold_errors:
        # Pairs are matched by position
        raise typer.Exit(EXIT_DATA_ERROR)
    reporter = ScoreReporter()
    progress = not config.quiet

    if metric is MetricKind.SMATCH:
        score = corpus_smatch(
            preds,
            golds,
            restarts=config.smatch.restarts,
            seed=config.seed,
            normalize_inverse=config.smatch.normalize_inverse,
            jobs=config.jobs,
            progress=progress,
        )
        typer.echo(reporter.summary_line(score.total))
        if per_pair is not None:
            reporter.write_per_pair(score, per_pair)
        return

    if per_pair is not None:
        logger.warning("--per-pair is only written for the smatch metric")
    table = corpus_breakdown(
        preds,
        golds,
        metrics=[metric],
        restarts=config.smatch.restarts,
        seed=config.seed,
        normalize_inverse=config.smatch.normalize_inverse,
        jobs=config.jobs,
        progress=progress,
    )
    typer.echo(reporter.summary_line(table[metric]))


@app.command()
def preprocess(
    ctx: typer.Context,
    corpus: Path = typer.Option(..., "--corpus", help="Gold AMR corpus", **INPUT_FILE),
    out_amr: Path = typer.Option(..., "--out-amr", help="Variable-free AMRs, one per line"),
    out_snt: Path = typer.Option(..., "--out-snt", help="Cleaned sentences, one per line"),
    strip_wiki: Optional[bool] = typer.Option(None, "--strip-wiki/--keep-wiki", help="Remove :wiki relations"),
    reorder: Optional[ReorderMode] = typer.Option(None, "--reorder", help="Child ordering"),
    double: Optional[bool] = typer.Option(None, "--double/--no-double", help="Add reordered copies"),
    alignments_format: Optional[AlignmentFormat] = typer.Option(
        None,
        "--alignments-format",
        help="Where alignments come from",
    ),
    alignments: Optional[Path] = typer.Option(
        None,
        "--alignments",
        help="TSV alignment sidecar (for --alignments-format tsv)",
        **INPUT_FILE,
    ),
):
    """Turn a gold corpus into line-aligned training files."""
    config = resolve_config(
        ctx,
        "preprocess",
        {
            "preprocess.strip_wiki": strip_wiki,
            "preprocess.reorder": reorder.value if reorder else None,
            "preprocess.double": double,
            "preprocess.alignments_format": alignments_format.value if alignments_format else None,
        },
    )
    fmt = AlignmentFormat(config.preprocess.alignments_format)
    if fmt is AlignmentFormat.TSV and alignments is None:
        raise typer.BadParameter("--alignments-format tsv needs --alignments FILE", param_hint="--alignments")

    graphs, errors = load_corpus(corpus)
    sidecars = read_tsv_sidecar(alignments) if alignments is not None else None
    options = PreprocessOptions(
        strip_wiki=config.preprocess.strip_wiki,
        reorder=ReorderMode(config.preprocess.reorder),
        double=config.preprocess.double,
        alignments_format=fmt,
    )
    pairs = preprocess_corpus(graphs, options, sidecars)
    count = write_training_files(pairs, out_amr, out_snt)
    logger.info(
        f"Wrote {count} training pairs ({len(errors)} malformed blocks skipped)",
        extra={"pairs": count, "skipped": len(errors)},
    )


@app.command()
def tokenize(
    ctx: typer.Context,
    input_path: Path = typer.Option(..., "--in", help="One line per record", **INPUT_FILE),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output file (default stdout)"),
    mode: Optional[str] = typer.Option(None, "--mode", help="amr or sent"),
    super_relations: Optional[bool] = typer.Option(
        None,
        "--super-relations/--no-super-relations",
        help="Relation labels as single symbols",
    ),
    pos: Optional[bool] = typer.Option(None, "--pos/--no-pos", help="Insert POS tags after words"),
    tags: Optional[Path] = typer.Option(None, "--tags", help="POS sidecar (token<TAB>tag)", **INPUT_FILE),
    depth_parens: Optional[bool] = typer.Option(
        None,
        "--depth-parens/--no-depth-parens",
        help="Parentheses carry their nesting depth",
    ),
    decode: bool = typer.Option(False, "--decode", help="Turn token lines back into text"),
    vocab: Optional[Path] = typer.Option(None, "--vocab", help="Write symbol<TAB>count report"),
):
    """Encode lines as model token sequences, or decode them back."""
    config = resolve_config(
        ctx,
        "tokenize",
        {
            "tokenize.mode": mode,
            "tokenize.super_relations": super_relations,
            "tokenize.pos": pos,
            "tokenize.depth_parens": depth_parens,
        },
    )
    settings = config.tokenize
    lines = read_lines(input_path)

    if decode:
        decoder = decode_amr if settings.mode == "amr" else decode_sentence
        write_lines([decoder(TokenSequence.from_line(line)) for line in lines], out)
        return

    if settings.mode == "amr":
        sequences = [encode_amr(line, settings.super_relations, settings.depth_parens) for line in lines]
    else:
        records = [clean_sentence(line) for line in lines]
        if settings.pos:
            if tags is None:
                raise typer.BadParameter("--pos needs a --tags sidecar", param_hint="--tags")
            records = attach_tags(records, read_tag_sidecar(tags))
        sequences = [encode_sentence(record, with_pos=settings.pos) for record in records]

    write_lines([sequence.to_line() for sequence in sequences], out)
    if vocab is not None:
        table = build_vocab(sequences)
        table.write(vocab)
        logger.info(f"Wrote {len(table)} symbols to {vocab}")


@app.command()
def postprocess(
    ctx: typer.Context,
    input_path: Path = typer.Option(..., "--in", help="Raw model output, one AMR per line", **INPUT_FILE),
    out: Path = typer.Option(..., "--out", "-o", help="Restored AMR corpus"),
    prune: Optional[int] = typer.Option(None, "--prune", help="Pruning method 0-4 (0 disables)"),
    coref: Optional[bool] = typer.Option(None, "--coref/--no-coref", help="Restore co-reference"),
    wiki: Optional[Path] = typer.Option(None, "--wiki", help="Gazetteer TSV (name<TAB>title)"),
    wiki_url: Optional[str] = typer.Option(None, "--wiki-url", help="Entity-linking service URL"),
    log: Optional[Path] = typer.Option(None, "--log", help="TSV log of every change"),
):
    """Repair, prune, restore variables and co-reference, and wikify model output."""
    config = resolve_config(
        ctx,
        "postprocess",
        {
            "postprocess.prune": prune,
            "postprocess.coref": coref,
            "wiki.gazetteer": str(wiki) if wiki else None,
            "wiki.url": wiki_url,
        },
    )
    backend = wiki_backend(config)
    results = postprocess_lines(
        read_lines(input_path),
        postprocess_options(config, backend),
        backend=backend,
        jobs=config.jobs,
        progress=not config.quiet,
    )
    with open(out, "w", encoding="utf-8") as f:
        write_corpus((result.graph for result in results), f)
    if log is not None:
        write_log(results, log)
    logger.info("Postprocessing finished", extra={"stats": summarize(results)})


@app.command()
def silver(
    ctx: typer.Context,
    camr: Path = typer.Option(..., "--camr", help="CAMR output corpus", **INPUT_FILE),
    jamr: Path = typer.Option(..., "--jamr", help="JAMR output corpus", **INPUT_FILE),
    total: int = typer.Option(..., "--total", help="Sentences in the mixed corpus"),
    out: Path = typer.Option(..., "--out", "-o", help="Silver corpus"),
    report: Optional[Path] = typer.Option(None, "--report", help="JSON curation report"),
    camr_fraction: Optional[float] = typer.Option(None, "--camr-fraction", help="Share taking the CAMR parse"),
    threshold: Optional[float] = typer.Option(None, "--threshold", help="Agreement F (0-100) to exceed"),
    inclusive: Optional[bool] = typer.Option(
        None,
        "--inclusive/--strict",
        help="Also keep agreement equal to the threshold",
    ),
    seed: Optional[int] = typer.Option(None, "--seed", help="Random seed (overrides the global one)"),
):
    """Filter, score and mix two parsers' outputs into silver training data."""
    config = resolve_config(
        ctx,
        "silver",
        {
            "seed": seed,
            "silver.camr_fraction": camr_fraction,
            "silver.threshold": threshold,
            "silver.inclusive": inclusive,
        },
    )
    if total < 0:
        raise typer.BadParameter("must not be negative", param_hint="--total")
    mix_spec = MixSpec(total=total, camr_fraction=config.silver.camr_fraction, seed=config.seed)
    result = curate(
        camr,
        jamr,
        mix_spec,
        threshold=config.silver.threshold,
        inclusive=config.silver.inclusive,
        restarts=config.smatch.restarts,
        jobs=config.jobs,
        progress=not config.quiet,
    )
    write_silver_corpus(result.records, out)
    if report is not None:
        write_report(result.report, report)
    logger.info("Silver curation finished", extra={"report": result.report.to_dict()})


@app.command("pipeline-eval")
def pipeline_eval_command(
    ctx: typer.Context,
    raw: Path = typer.Option(..., "--raw", help="Raw model output, one AMR per line", **INPUT_FILE),
    gold: Path = typer.Option(..., "--gold", help="Gold AMR corpus", **INPUT_FILE),
    prune: Optional[int] = typer.Option(None, "--prune", help="Pruning method 0-4"),
    no_prune: bool = typer.Option(False, "--no-prune", help="Same as --prune 0"),
    coref: Optional[bool] = typer.Option(None, "--coref/--no-coref", help="Restore co-reference"),
    wiki: Optional[Path] = typer.Option(None, "--wiki", help="Gazetteer TSV"),
    wiki_url: Optional[str] = typer.Option(None, "--wiki-url", help="Entity-linking service URL"),
    restarts: Optional[int] = typer.Option(None, "--restarts", help="Hill-climbing restarts per pair"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Random seed (overrides the global one)"),
    breakdown: bool = typer.Option(False, "--breakdown", help="Also print the fine-grained table"),
    per_pair: Optional[Path] = typer.Option(None, "--per-pair", help="Write per-pair scores as TSV"),
    log: Optional[Path] = typer.Option(None, "--log", help="TSV postprocessing log"),
):
    """Postprocess raw model output and score it against gold."""
    config = resolve_config(
        ctx,
        "pipeline-eval",
        {
            "seed": seed,
            "smatch.restarts": restarts,
            "postprocess.prune": 0 if no_prune else prune,
            "postprocess.coref": coref,
            "wiki.gazetteer": str(wiki) if wiki else None,
            "wiki.url": wiki_url,
        },
    )
    backend = wiki_backend(config)
    options = EvalOptions(
        postprocess=postprocess_options(config, backend),
        restarts=config.smatch.restarts,
        seed=config.seed,
        normalize_inverse=config.smatch.normalize_inverse,
        breakdown=breakdown,
        jobs=config.jobs,
        progress=not config.quiet,
    )
    result = pipeline_eval(raw, gold, options, backend)

    reporter = ScoreReporter()
    for line in reporter.eval_lines(result):
        typer.echo(line)
    if per_pair is not None:
        reporter.write_per_pair(result.score, per_pair)
    if log is not None:
        write_log(result.results, log)
    logger.info(
        f"pipeline-eval finished in {result.duration:.2f}s",
        extra={"worst_pairs": reporter.worst_pairs(result.score)},
    )


def dispatch(argv: Sequence[str]) -> int:
    """Run one command line and map its outcome to an exit code.

    Exit Codes:
        0 - Success
        1 - Usage error (unknown subcommand, bad or missing option)
        2 - Input data or configuration could not be processed
    """
    command = typer.main.get_command(app)
    try:
        result = command.main(args=list(argv), prog_name="amrsmith", standalone_mode=False)
    except _click.UsageError as e:
        e.show()
        if e.ctx is not None:
            typer.echo(e.ctx.get_help(), err=True)
        return EXIT_USAGE_ERROR
    except typer.Abort:
        typer.echo("Aborted!", err=True)
        return EXIT_USAGE_ERROR
    except AmrsmithError as e:
        logger.error(f"{e}", extra={CONTEXT_ERROR_CODE: e.code})
        typer.echo(f"Error: {e}", err=True)
        return EXIT_DATA_ERROR
    except OSError as e:
        logger.error(f"I/O error: {e}")
        typer.echo(f"Error: {e}", err=True)
        return EXIT_DATA_ERROR
    return result if isinstance(result, int) else EXIT_SUCCESS


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
