"""Batch command line front end.

    doccluster cluster --corpus CORPUS --out OUT [--scheme tf|tfidf] [--k 5] [--seed 0] ...

Subcommands: cluster, evaluate, summarize, export-matrix, compare-schemes.
Settings may also come from a flat ``key=value`` file given with
``--config``; flags override the file.

Exit status: 0 success, 1 I/O, 2 config/precondition, 3 internal invariant.
Errors print one ``error: <Category>: <message>`` line on stderr.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import __version__
from .errors import ConfigError, DocClusterError, EmptyCorpus, UnlabeledDocument, UnreadableFile
from .evaluation import compare_schemes, observation_table
from .kmedoids import InitStrategy, cluster, clustering_report, dumps_report
from .summarizer import summarize_cluster
from .text_pipeline import Document, StopwordList
from .vector_space import WeightingScheme, build_matrix, build_vocabulary

COMMANDS = ("cluster", "evaluate", "summarize", "export-matrix", "compare-schemes")


@dataclass
class RunConfig:
    corpus_path: str = ""
    scheme: str = "TF_RATIO"
    k: int = 5
    seed: int = 0
    init: str = "random"
    stopword_path: Optional[str] = None
    max_iterations: Optional[int] = None
    summary_n: int = 2
    output_dir: str = "out"
    threads: int = 1
    metric: str = "manhattan"
    score_mode: str = "mean"

    def validate(self):
        if not self.corpus_path or not Path(self.corpus_path).is_dir():
            raise ConfigError(f"corpus path {self.corpus_path!r} is not a directory")
        if self.stopword_path and not Path(self.stopword_path).is_file():
            raise ConfigError(f"stopword file {self.stopword_path!r} does not exist")
        try:
            self.scheme = WeightingScheme.parse(self.scheme).value
        except ValueError:
            raise ConfigError(f"unknown scheme {self.scheme!r}") from None
        if self.k < 1:
            raise ConfigError(f"k must be >= 1, got {self.k}")
        if self.init not in ("random", "stratified"):
            raise ConfigError(f"init must be 'random' or 'stratified', got {self.init!r}")
        if self.max_iterations is not None and self.max_iterations < 1:
            raise ConfigError("max-iters must be >= 1")
        if self.summary_n < 1:
            raise ConfigError("summary-n must be >= 1")
        if self.metric not in ("manhattan", "euclidean"):
            raise ConfigError(f"unknown metric {self.metric!r}")
        if self.score_mode not in ("mean", "sum"):
            raise ConfigError(f"unknown score mode {self.score_mode!r}")
        return self

    @property
    def strategy(self):
        if self.init == "stratified":
            return InitStrategy.stratified(self.seed)
        return InitStrategy.random(self.seed)


# flag / config-file key -> RunConfig field
_KEYS = {
    "corpus": "corpus_path", "scheme": "scheme", "k": "k", "seed": "seed", "init": "init",
    "stopwords": "stopword_path", "max_iters": "max_iterations", "summary_n": "summary_n",
    "out": "output_dir", "threads": "threads", "metric": "metric", "score_mode": "score_mode",
}


def read_config_file(path) -> dict:
    values = {}
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    for n, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{n}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _KEYS:
            raise ConfigError(f"{path}:{n}: unknown key {key!r}")
        values[_KEYS[key]] = value
    return values


def _coerce(values):
    out = {}
    for name, value in values.items():
        if value is None:
            continue
        if name in ("k", "seed", "max_iterations", "summary_n", "threads"):
            try:
                value = int(value)
            except ValueError:
                raise ConfigError(f"{name} must be an integer, got {value!r}") from None
        out[name] = value
    return out


def ingest_corpus(corpus_path, stoplist=None) -> list:
    """Read every ``.txt`` file under the corpus directory, in lexicographic path order.

    ``corpus/<label>/<doc>.txt`` gives a labelled document; ``corpus/<doc>.txt``
    an unlabelled one. Document ids are the relative POSIX paths.
    """
    root = Path(corpus_path)
    if not root.is_dir():
        raise ConfigError(f"corpus path {corpus_path!r} is not a directory")
    paths = sorted(root.rglob("*.txt"), key=lambda p: p.relative_to(root).as_posix())
    docs = []
    for path in paths:
        if not path.is_file():
            continue
        rel = path.relative_to(root)
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise UnreadableFile(f"{rel.as_posix()}: {exc}") from None
        label = rel.parent.name if len(rel.parts) > 1 else None
        docs.append(Document.from_text(rel.as_posix(), text, label, stoplist))
    if not docs:
        raise EmptyCorpus(f"no .txt documents under {corpus_path}")
    return docs


def _write(path, text):
    path.write_text(text, encoding="utf-8", newline="\n")


def _summaries(docs, matrix, result, config, stoplist):
    by_row = list(docs)
    blocks, payload = [], []
    for no, m in enumerate(result.medoids):
        members = [by_row[d] for d in result.members(m)]
        summary = summarize_cluster(members, matrix, config.summary_n, stoplist,
                                    mode=config.score_mode)
        blocks.append(f"# cluster {no} (medoid {matrix.doc_ids[m]})\n{summary.to_text()}")
        payload.append({"cluster_no": no, "medoid": matrix.doc_ids[m], **summary.to_dict()})
    text = "\n".join(blocks)
    return text, json.dumps({"clusters": payload}, indent=2, ensure_ascii=False) + "\n"


def run(config: RunConfig, command="cluster") -> list:
    """Execute one subcommand; return the written artifact paths."""
    if command not in COMMANDS:
        raise ConfigError(f"unknown command {command!r}")
    config.validate()
    stoplist = StopwordList.from_file(config.stopword_path) if config.stopword_path else None
    docs = ingest_corpus(config.corpus_path, stoplist)
    labels = [d.label for d in docs]
    labelled = all(lab is not None for lab in labels)
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    if command == "compare-schemes":
        if not labelled:
            raise UnlabeledDocument("compare-schemes needs every document labelled")
        comparison = compare_schemes(docs, config.k, config.seed, config.strategy,
                                     config.max_iterations, config.metric, config.threads)
        for name, table in (("tf_ratio", comparison.tf_ratio), ("tf_idf", comparison.tf_idf)):
            for ext, text in (("txt", table.to_text()), ("csv", table.to_csv())):
                path = out / f"observation_table_{name}.{ext}"
                _write(path, text)
                written.append(path)
        path = out / "scheme_delta.json"
        _write(path, comparison.to_json())
        return written + [path]

    if command == "evaluate" and not labelled:
        raise UnlabeledDocument("evaluate needs every document labelled (corpus/<label>/<doc>.txt)")

    vocab = build_vocabulary(docs)
    matrix = build_matrix(docs, vocab, config.scheme)
    if command in ("cluster", "export-matrix"):
        matrix.write(out)
        written += [out / "matrix.csv", out / "matrix.json"]
    if command == "export-matrix":
        return written

    result = cluster(matrix, config.k, config.strategy, config.max_iterations,
                     labels, config.metric, config.threads)
    path = out / "clustering.json"
    _write(path, dumps_report(clustering_report(result, matrix, config.seed, config.metric)))
    written.append(path)

    if command in ("cluster", "evaluate") and labelled:
        table = observation_table(result, labels, matrix.doc_ids, matrix.scheme)
        for ext, text in (("txt", table.to_text()), ("csv", table.to_csv())):
            path = out / f"observation_table.{ext}"
            _write(path, text)
            written.append(path)

    if command in ("cluster", "summarize"):
        text, js = _summaries(docs, matrix, result, config, stoplist)
        for name, body in (("summaries.txt", text), ("summaries.json", js)):
            _write(out / name, body)
            written.append(out / name)
    return written


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key=value settings file; flags override it")
    common.add_argument("--corpus", help="corpus directory (corpus/<label>/<doc>.txt)")
    common.add_argument("--scheme", help="TF_RATIO (default) or TF_IDF")
    common.add_argument("--k", type=int, help="number of clusters (default 5)")
    common.add_argument("--seed", type=int, help="RNG seed for random init (default 0)")
    common.add_argument("--init", choices=["random", "stratified"])
    common.add_argument("--stopwords", help="stopword file, one word per line")
    common.add_argument("--max-iters", type=int, dest="max_iters",
                        help="cap on accepted swaps (default 10 x documents)")
    common.add_argument("--summary-n", type=int, dest="summary_n",
                        help="sentences per document in summaries (default 2)")
    common.add_argument("--out", help="output directory")
    common.add_argument("--threads", type=int, help="worker threads for distance computation")
    common.add_argument("--metric", choices=["manhattan", "euclidean"],
                        help="distance; euclidean is a non-default extension")
    common.add_argument("--score-mode", choices=["mean", "sum"], dest="score_mode",
                        help="sentence score: mean (default) or raw sum of term weights")

    parser = argparse.ArgumentParser(prog="doccluster", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def config_from_args(args) -> RunConfig:
    values = read_config_file(args.config) if args.config else {}
    for key, name in _KEYS.items():
        flag = getattr(args, key, None)
        if flag is not None:
            values[name] = flag
    return RunConfig(**_coerce(values))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        written = run(config, args.command)
    except DocClusterError as exc:
        print(f"error: {exc.category}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: IOError: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001
        print(f"error: InternalError: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    print(f"{args.command}: wrote {len(written)} file(s) to {config.output_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
