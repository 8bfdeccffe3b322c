"""Command-line pipeline: every stage reads and writes JSONL so stages
compose with shell pipes.  Diagnostics go to stderr; exit codes are 0 on
success, 1 for validation problems, 2 for I/O problems."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Iterable, Sequence, TextIO

from . import fixtures
from .classifier import (
    EvalSubset,
    FeatureMode,
    TrainConfig,
    evaluate,
    load_model,
    train,
)
from .corpus import CorpusFormatError, dump_jsonl_line, read_corpus, sentence_to_dict
from .detector import MispTag, correct, detect
from .lexicon import Intention, Lexicon, load_lexicon
from .mae import generate_embeddings, load_embeddings, write_embeddings
from .mst import annotate
from .patterns import classify_pattern
from .segmenter import TokenizedSentence
from .stats import (
    collect_term_observations,
    corpus_summary,
    entropy_table,
    pairwise_kappa_matrix,
    read_annotations,
)

_TAG_KEYS = {MispTag.LOL: "lol", MispTag.REP: "rep", MispTag.INT: "int", MispTag.MSP: "msp"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # Unknown flags/subcommands are a usage problem, not an I/O one.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _require_files(*paths: str | None) -> None:
    for path in paths:
        if path and path != "-" and not Path(path).is_file():
            raise FileNotFoundError(f"no such file: {path}")


def _open_input(path: str | None) -> TextIO:
    if path is None or path == "-":
        return sys.stdin
    return open(path, encoding="utf-8")


def _open_output(path: str | None) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8")


def _load_lexicon(args: argparse.Namespace) -> Lexicon:
    if args.lexicon is None and args.wordlist is None:
        return fixtures.fixture_lexicon()
    if args.lexicon is None or args.wordlist is None:
        raise ValueError("--lexicon and --wordlist must be given together")
    _require_files(args.lexicon, args.wordlist)
    return load_lexicon(args.lexicon, args.wordlist)


def _map_lines(
    lines: Iterable[str],
    transform: Callable[[str], str | None],
    out: TextIO,
    workers: int,
) -> None:
    stripped = [ln for ln in lines if ln.strip()]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = pool.map(transform, stripped)
            for result in results:
                if result is not None:
                    out.write(result + "\n")
        return
    for line in stripped:
        result = transform(line)
        if result is not None:
            out.write(result + "\n")


def _line_sentence(line: str, lex: Lexicon, lineno_hint: str = "input") -> TokenizedSentence:
    sentences = list(read_corpus([line], lex))
    if not sentences:
        raise CorpusFormatError(f"{lineno_hint}: empty line")
    return sentences[0]


# --- subcommand bodies ------------------------------------------------------


def _cmd_segment(args: argparse.Namespace) -> int:
    lex = _load_lexicon(args)

    def transform(line: str) -> str:
        sentence = _line_sentence(line, lex)
        return dump_jsonl_line(sentence_to_dict(sentence))

    with _open_input(args.input) as src, _open_output(args.output) as out:
        _map_lines(src, transform, out, args.workers)
    return 0


def _cmd_detect(args: argparse.Namespace) -> int:
    lex = _load_lexicon(args)

    def transform(line: str) -> str:
        sentence = _line_sentence(line, lex)
        doc = sentence_to_dict(sentence)
        doc["tags"] = [detect(t, lex).surface for t in sentence.tokens]
        return dump_jsonl_line(doc)

    with _open_input(args.input) as src, _open_output(args.output) as out:
        _map_lines(src, transform, out, args.workers)
    return 0


def _cmd_normalize(args: argparse.Namespace) -> int:
    lex = _load_lexicon(args)

    def transform(line: str) -> str:
        sentence = _line_sentence(line, lex)
        doc = sentence_to_dict(sentence)
        doc.pop("text", None)
        doc["tokens"] = [correct(t, lex) for t in sentence.tokens]
        return dump_jsonl_line(doc)

    with _open_input(args.input) as src, _open_output(args.output) as out:
        _map_lines(src, transform, out, args.workers)
    return 0


def _cmd_annotate(args: argparse.Namespace) -> int:
    lex = _load_lexicon(args)

    def transform(line: str) -> str:
        sentence = _line_sentence(line, lex)
        augmented = annotate(sentence, lex)
        doc = sentence_to_dict(sentence)
        doc.pop("text", None)
        doc["tokens"] = list(augmented.tokens)
        doc["tag_counts"] = {
            _TAG_KEYS[tag]: n for tag, n in augmented.tag_counts.items()
        }
        return dump_jsonl_line(doc)

    with _open_input(args.input) as src, _open_output(args.output) as out:
        _map_lines(src, transform, out, args.workers)
    return 0


def _cmd_classify_pattern(args: argparse.Namespace) -> int:
    with _open_input(args.input) as src, _open_output(args.output) as out:
        reader = csv.reader(src, delimiter="\t")
        for lineno, row in enumerate(reader, start=1):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if row[0].startswith("#"):
                continue
            if len(row) < 3:
                raise ValueError(
                    f"line {lineno}: expected misspelt<TAB>corrected<TAB>intention"
                )
            misspelt, corrected, intention_s = row[0], row[1], row[2]
            intention = Intention(intention_s.strip())
            label = classify_pattern(misspelt, corrected, intention)
            out.write(f"{misspelt}\t{corrected}\t{label.value}\n")
    return 0


def _cmd_train(args: argparse.Namespace) -> int:
    lex = _load_lexicon(args)
    _require_files(args.embeddings)
    store = load_embeddings(args.embeddings)
    with _open_input(args.input) as src:
        corpus = list(read_corpus(src, lex))
    config = TrainConfig(
        epochs=args.epochs, learning_rate=args.learning_rate, seed=args.seed
    )
    model = train(corpus, FeatureMode(args.mode), store, lex, config)
    payload = {
        "format": "thaimisp-model",
        "version": 1,
        "dim": model.dim,
        "mode": model.mode.value,
        "seed": model.seed,
        "classes": ["negative", "neutral", "positive"],
        "weights": model.weights.tolist(),
        "bias": model.bias.tolist(),
    }
    with _open_output(args.output) as out:
        json.dump(payload, out, sort_keys=True, separators=(",", ":"))
        out.write("\n")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    lex = _load_lexicon(args)
    _require_files(args.embeddings, args.model)
    store = load_embeddings(args.embeddings)
    model = load_model(args.model)
    with _open_input(args.input) as src:
        corpus = list(read_corpus(src, lex))
    report = evaluate(model, corpus, store, lex, EvalSubset(args.subset))
    with _open_output(args.output) as out:
        json.dump(report.to_json_dict(), out, sort_keys=True, separators=(",", ":"))
        out.write("\n")
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    if args.corpus is None and args.annotations is None:
        raise ValueError("give at least one of --corpus or --annotations")
    result: dict = {}
    if args.corpus is not None:
        _require_files(args.corpus)
        with open(args.corpus, encoding="utf-8") as fh:
            lines = fh.readlines()
        result["summary"] = corpus_summary(lines, top_k=args.top_k).to_json_dict()
        observations = collect_term_observations(lines)
        result["entropy"] = entropy_table(observations, min_count=args.min_count)
    if args.annotations is not None:
        _require_files(args.annotations)
        with open(args.annotations, encoding="utf-8") as fh:
            records = read_annotations(fh)
        annotators, matrix = pairwise_kappa_matrix(records)
        result["kappa"] = {"annotators": annotators, "matrix": matrix}
    if args.kappa_csv and "kappa" in result:
        with open(args.kappa_csv, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow([""] + result["kappa"]["annotators"])
            for name, row in zip(result["kappa"]["annotators"], result["kappa"]["matrix"]):
                writer.writerow([name] + ["" if v is None else f"{v:.6f}" for v in row])
    if args.entropy_csv and "entropy" in result:
        with open(args.entropy_csv, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["term", "entropy_bits"])
            for term, value in result["entropy"].items():
                writer.writerow([term, f"{value:.6f}"])
    with _open_output(args.output) as out:
        json.dump(result, out, ensure_ascii=False, sort_keys=True, separators=(",", ":"))
        out.write("\n")
    return 0


def _cmd_gen_embeddings(args: argparse.Namespace) -> int:
    _require_files(args.vocab)
    words = []
    with open(args.vocab, encoding="utf-8") as fh:
        for line in fh:
            word = line.strip()
            if word and not word.startswith("#"):
                words.append(word)
    store = generate_embeddings(words, dim=args.dim, seed=args.seed)
    with _open_output(args.output) as out:
        write_embeddings(store, out)
    return 0


# --- parser -----------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="thaimisp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: _Parser, with_lexicon: bool = True) -> None:
        p.add_argument("input", nargs="?", default="-", help="input file (default stdin)")
        p.add_argument("-o", "--output", default="-", help="output file (default stdout)")
        if with_lexicon:
            p.add_argument("--lexicon", help="lexicon TSV (default: bundled fixture)")
            p.add_argument("--wordlist", help="wordlist file (default: bundled fixture)")
            p.add_argument(
                "--workers", type=int, default=1, help="parallel per-line workers"
            )

    p = sub.add_parser("segment", help="tokenize corpus JSONL")
    add_common(p)
    p.set_defaults(func=_cmd_segment)

    p = sub.add_parser("detect", help="per-token misspelling tags")
    add_common(p)
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("normalize", help="correct every token")
    add_common(p)
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("annotate", help="insert misspelling tag tokens")
    add_common(p)
    p.set_defaults(func=_cmd_annotate)

    p = sub.add_parser(
        "classify-pattern", help="label misspelt/corrected TSV rows with patterns"
    )
    add_common(p, with_lexicon=False)
    p.set_defaults(func=_cmd_classify_pattern)

    p = sub.add_parser("train", help="train the sentiment model")
    add_common(p)
    p.add_argument("--embeddings", required=True, help="embedding text file")
    p.add_argument(
        "--mode",
        default="none",
        choices=[m.value for m in FeatureMode],
        help="feature configuration",
    )
    p.add_argument("--epochs", type=int, default=500)
    p.add_argument("--learning-rate", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("eval", help="evaluate a trained model")
    add_common(p)
    p.add_argument("--embeddings", required=True)
    p.add_argument("--model", required=True)
    p.add_argument(
        "--subset", default="all", choices=[s.value for s in EvalSubset]
    )
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("stats", help="corpus statistics and agreement")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--corpus", help="annotated corpus JSONL")
    p.add_argument("--annotations", help="annotation records JSONL")
    p.add_argument("--min-count", type=int, default=6)
    p.add_argument("--top-k", type=int, default=5)
    p.add_argument("--kappa-csv", help="also write the kappa matrix as CSV")
    p.add_argument("--entropy-csv", help="also write the entropy table as CSV")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("gen-embeddings", help="deterministic random embedding store")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--vocab", required=True, help="one word per line")
    p.set_defaults(func=_cmd_gen_embeddings)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(parser.format_usage(), end="", file=sys.stderr)
        print(f"thaimisp: error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (FileNotFoundError, PermissionError, IsADirectoryError, OSError) as exc:
        print(f"thaimisp: i/o error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"thaimisp: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
