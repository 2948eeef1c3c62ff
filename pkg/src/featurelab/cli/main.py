"""Headless driver: batch experiments and report emission without the service.

Every command is a pure function of its input files, flags, and seeds;
rerunning writes byte-identical outputs (data files and figures alike).
Output filenames under --out are fixed:

  correlate:  correlation_matrix.csv, dendrogram_order.txt, correlation_matrix.png
  regress:    report.json, predictions.csv, pred_vs_truth.png
  autoselect: feature_set.json, ranking.json, comparison.json,
              importance.png, wavelength_histogram.png (registry mode)
  bench:      bench.csv, bench.json, bench.png

Exit status: 0 success, 1 usage or contract error, 2 runtime failure.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

import click
import numpy as np

from .. import reporting
from ..errors import FeatureLabError
from ..regress import ModelConfig, SvrHyperParams, kfold_cv
from ..select import (
    FeatureSet,
    auto_select,
    compare_subset_vs_full,
    evaluate_with_ranking,
    wavelength_histogram,
)
from ..spectra import (
    FeatureTable,
    IndexRegistry,
    compute_indices,
    default_registry,
    ingest_feature_csv,
    ingest_reflectance_csv,
    load_registry,
)
from ..stats import correlation_matrix, hcluster
from . import figures


@dataclass
class LoadedInput:
    table: FeatureTable
    registry: Optional[IndexRegistry]
    messages: list[str]


def load_input(input_path: str, registry_path: Optional[str], target: Optional[str]) -> LoadedInput:
    """Feature CSV (needs --target) or reflectance CSV + registry."""
    with open(input_path, encoding="utf-8") as fh:
        text = fh.read()
    if registry_path is not None:
        registry = load_registry(registry_path)
        ingest = ingest_reflectance_csv(text, name=os.path.basename(input_path))
        result = compute_indices(ingest.dataset, registry)
        return LoadedInput(result.table, registry, ingest.diagnostics.messages + result.messages)
    if target is None:
        raise click.UsageError("feature-CSV mode requires --target (or pass --registry)")
    result = ingest_feature_csv(text, target_name=target)
    return LoadedInput(result.table, None, result.diagnostics.messages)


def load_grid_file(path: Optional[str]) -> Optional[tuple[SvrHyperParams, ...]]:
    """Hyperparameter grid override: either {"c": [...], "gamma": [...],
    "epsilon": [...]} (cross product) or an explicit list of combos."""
    if path is None:
        return None
    with open(path, encoding="utf-8") as fh:
        spec = json.load(fh)
    if isinstance(spec, list):
        return tuple(SvrHyperParams(c=e["c"], gamma=e["gamma"], epsilon=e["epsilon"]) for e in spec)
    return tuple(
        SvrHyperParams(c=c, gamma=g, epsilon=e)
        for c in spec["c"]
        for e in spec["epsilon"]
        for g in spec["gamma"]
    )


def parse_seeds(text: str) -> list[int]:
    """Comma list ("0,1,2") or inclusive range ("0-29")."""
    text = text.strip()
    if "-" in text and "," not in text:
        start, _, end = text.partition("-")
        return list(range(int(start), int(end) + 1))
    return [int(s) for s in text.split(",") if s.strip()]


def write_json(payload, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True, allow_nan=False)
        fh.write("\n")


def out_dir(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    if not os.access(path, os.W_OK):
        raise click.UsageError(f"output directory {path!r} is not writable")
    return path


input_opt = click.option("--input", "input_path", required=True, help="input CSV path")
registry_opt = click.option("--registry", "registry_path", default=None,
                            help="index registry file (switches to reflectance mode)")
target_opt = click.option("--target", default=None, help="target column (feature-CSV mode)")
k_opt = click.option("--k", default=5, show_default=True, help="cross-validation folds")
seed_opt = click.option("--seed", default=42, show_default=True, help="fold-plan seed")
grid_opt = click.option("--grid-file", "grid_file", default=None,
                        help="JSON hyperparameter grid override")
out_opt = click.option("--out", "out_path", required=True, help="output directory")


@click.group()
def cli():
    """Feature-selection workbench, batch interface."""


@cli.command()
@input_opt
@registry_opt
@target_opt
@out_opt
def correlate(input_path, registry_path, target, out_path):
    """Correlation matrix, cluster order, and heatmap."""
    loaded = load_input(input_path, registry_path, target)
    matrix = correlation_matrix(loaded.table)
    dendrogram = hcluster(matrix)
    out = out_dir(out_path)

    with open(os.path.join(out, "correlation_matrix.csv"), "w", encoding="utf-8") as fh:
        fh.write("label," + ",".join(matrix.labels) + "\n")
        for label, row in zip(matrix.labels, matrix.values):
            fh.write(label + "," + ",".join(repr(float(v)) for v in row) + "\n")
    with open(os.path.join(out, "dendrogram_order.txt"), "w", encoding="utf-8") as fh:
        for idx in dendrogram.leaf_order:
            fh.write(matrix.labels[idx] + "\n")
    figures.correlation_heatmap(matrix, dendrogram, os.path.join(out, "correlation_matrix.png"))
    click.echo(f"wrote correlation outputs for {len(matrix.labels)} labels to {out}")


@cli.command()
@input_opt
@registry_opt
@target_opt
@k_opt
@seed_opt
@click.option("--select", "select_names", default=None,
              help="comma-separated feature subset to train on")
@grid_opt
@out_opt
def regress(input_path, registry_path, target, k, seed, select_names, grid_file, out_path):
    """Cross-validated regression report with importance scores."""
    loaded = load_input(input_path, registry_path, target)
    table = loaded.table
    if select_names:
        names = [n.strip() for n in select_names.split(",") if n.strip()]
        table = table.restrict(names)
    config = ModelConfig(svr_grid=load_grid_file(grid_file))
    report, _ranking = evaluate_with_ranking(table, k=k, seed=seed, config=config)
    out = out_dir(out_path)

    write_json(reporting.report_payload(report), os.path.join(out, "report.json"))
    with open(os.path.join(out, "predictions.csv"), "w", encoding="utf-8") as fh:
        fh.write("index,truth,prediction,fold\n")
        for i, (t, p, f) in enumerate(
            zip(report.truth, report.predictions, report.fold_plan.assignments)
        ):
            fh.write(f"{i},{t!r},{p!r},{f}\n")
    figures.pred_vs_truth(report, os.path.join(out, "pred_vs_truth.png"))
    click.echo(f"R^2: {report.aggregate.r2:.4f}")
    click.echo(f"RMSE: {report.aggregate.rmse:.4f}")


@cli.command()
@input_opt
@registry_opt
@target_opt
@click.option("--m", required=True, type=int, help="number of features to keep")
@k_opt
@seed_opt
@grid_opt
@out_opt
def autoselect(input_path, registry_path, target, m, k, seed, grid_file, out_path):
    """Automatic subset selection plus subset-versus-full comparison."""
    loaded = load_input(input_path, registry_path, target)
    table = loaded.table
    config = ModelConfig(svr_grid=load_grid_file(grid_file))
    report, ranking = evaluate_with_ranking(table, k=k, seed=seed, config=config)
    feature_set = auto_select(table, m=m, k=k, seed=seed, config=config, ranking=ranking)
    row = compare_subset_vs_full(table, feature_set, k=k, seed=seed, config=config)
    out = out_dir(out_path)

    write_json(reporting.feature_set_payload(feature_set), os.path.join(out, "feature_set.json"))
    write_json(
        reporting.ranking_payload(ranking, table.feature_names), os.path.join(out, "ranking.json")
    )
    write_json(reporting.comparison_payload(row), os.path.join(out, "comparison.json"))
    figures.importance_bars(
        table.feature_names,
        ranking.scores,
        set(feature_set.selected),
        os.path.join(out, "importance.png"),
    )
    if loaded.registry is not None:
        hist = wavelength_histogram(feature_set, loaded.registry)
        write_json(reporting.wavelength_payload(hist), os.path.join(out, "wavelengths.json"))
        figures.wavelength_bars(hist, os.path.join(out, "wavelength_histogram.png"))
    click.echo(f"selected {len(feature_set.selected)} of {table.d} features")
    click.echo(
        f"subset R^2: {row.subset_metrics.r2:.4f}  full R^2: {row.full_metrics.r2:.4f}"
    )


@cli.command()
@input_opt
@registry_opt
@target_opt
@click.option("--seeds", required=True, help='seed list "0,1,2" or range "0-29"')
@k_opt
@grid_opt
@out_opt
def bench(input_path, registry_path, target, seeds, k, grid_file, out_path):
    """Mean held-out R^2 per model (svr, ridge) across fold-plan seeds."""
    loaded = load_input(input_path, registry_path, target)
    table = loaded.table
    seed_list = parse_seeds(seeds)
    if not seed_list:
        raise click.UsageError("--seeds produced an empty list")
    svr_config = ModelConfig(kind="svr", svr_grid=load_grid_file(grid_file))
    ridge_config = ModelConfig(kind="ridge")

    per_seed: dict[str, list[float]] = {"svr": [], "ridge": []}
    for seed in seed_list:
        for name, config in (("svr", svr_config), ("ridge", ridge_config)):
            report = kfold_cv(table, k=k, seed=seed, config=config)
            per_seed[name].append(report.aggregate.r2)
    mean_r2 = {name: float(np.mean(vals)) for name, vals in per_seed.items()}
    out = out_dir(out_path)

    with open(os.path.join(out, "bench.csv"), "w", encoding="utf-8") as fh:
        fh.write("model,mean_r2,seeds\n")
        for name in ("svr", "ridge"):
            fh.write(f"{name},{mean_r2[name]!r},{len(seed_list)}\n")
    write_json(
        {
            "seeds": seed_list,
            "k": k,
            "mean_r2": mean_r2,
            "per_seed_r2": {name: [reporting._num(v) for v in vals]
                            for name, vals in per_seed.items()},
        },
        os.path.join(out, "bench.json"),
    )
    figures.bench_bars(mean_r2, os.path.join(out, "bench.png"))
    for name in ("svr", "ridge"):
        click.echo(f"{name}: mean R^2 {mean_r2[name]:.4f} over {len(seed_list)} seeds")


@cli.command()
@click.option("--registry", "registry_path", default=None, help="registry file (default: built-in)")
def indices(registry_path):
    """Print the bound index registry."""
    registry = load_registry(registry_path) if registry_path else default_registry()
    for defn in registry.definitions:
        click.echo(f"{defn.name} = {defn.text()}")


def main(argv: Optional[list[str]] = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.ClickException as err:
        err.show()
        return 1
    except click.Abort:
        return 1
    except (FeatureLabError, ValueError, KeyError, OSError) as err:
        click.echo(f"error: {err}", err=True)
        return 1
    except Exception as err:  # genuine runtime failure
        click.echo(f"internal error: {type(err).__name__}: {err}", err=True)
        return 2


if __name__ == "__main__":
    sys.exit(main())
