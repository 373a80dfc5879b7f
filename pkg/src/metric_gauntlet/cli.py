"""Command-line front end.

Subcommands: ``score``, ``loo``, ``perturb``, ``search-ss``.
Exit codes: 0 success, 2 input validation, 3 I/O, 4 probe infeasible.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path

from . import formatting
from .corpus import ReferenceBundle, build_vocabulary
from .errors import FractionUnreachable, GauntletError
from .io import (align_hypotheses, atomic_write, embeddings_for, read_embeddings,
                 read_hypotheses, read_parallel, read_plain, read_references)
from .metrics.meteor import MeteorConfig, SynonymLexicon
from .metrics.report import ScoreConfig, score_all
from .probes.loo import leave_one_out
from .probes.perturb import PerturbSpec, perturb_and_score
from .probes.search import OBJECTIVES, search_representative_sentence

log = logging.getLogger("metric_gauntlet")

EXIT_OK, EXIT_INPUT, EXIT_IO, EXIT_INFEASIBLE = 0, 2, 3, 4


def _config(args) -> ScoreConfig:
    synonyms = SynonymLexicon.from_file(args.synonyms) if args.synonyms else None
    baseline = args.baseline if args.baseline is not None else 0.0
    return ScoreConfig(meteor=MeteorConfig(synonyms=synonyms), embedding_baseline=baseline)


def _emit(args, payload: dict, table: str) -> None:
    parts = []
    if args.format in ("json", "both"):
        parts.append(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    if args.format in ("table", "both"):
        parts.append(table)
    text = "\n".join(parts)
    if args.out:
        atomic_write(args.out, text)
    else:
        sys.stdout.write(text)


def cmd_score(args) -> int:
    refs = read_references(args.refs, args.lowercase)
    ids, hyps, by_id = read_hypotheses(args.hyps, args.lowercase)
    hyps = align_hypotheses(refs, ids, hyps, by_id)
    config = _config(args)
    hyp_emb = ref_emb = None
    if args.embeddings:
        baseline, table = read_embeddings(args.embeddings)
        if args.baseline is None and baseline is not None:
            config = replace(config, embedding_baseline=baseline)
        hyp_emb, ref_emb = embeddings_for(refs, table)
    report = score_all(hyps, refs.refs, config, hyp_emb, ref_emb)
    payload = report.to_dict()
    _emit(args, payload, formatting.report_table(payload, "SYS"))
    return EXIT_OK


def _loo_embeddings(args, num_corpora, num_instances, config):
    baseline, table = read_embeddings(args.embeddings)
    if args.baseline is None and baseline is not None:
        config = replace(config, embedding_baseline=baseline)
    ids = [str(n + 1) for n in range(num_instances)]
    try:
        per_corpus = [[table[(i, k)] for i in ids] for k in range(num_corpora)]
        sys_emb = [table[(i, None)] for i in ids] if args.hyps else None
    except KeyError as exc:
        raise GauntletError(f"missing embedding for {exc.args[0]}") from None
    return per_corpus, sys_emb, config


def cmd_loo(args) -> int:
    bundle = ReferenceBundle(read_parallel(args.refs, args.lowercase))
    sys_hyps = read_plain(args.hyps, args.lowercase) if args.hyps else None
    config = _config(args)
    emb = sys_emb = None
    if args.embeddings:
        emb, sys_emb, config = _loo_embeddings(args, bundle.num_corpora, bundle.num_instances, config)
    payload = {"rvr": leave_one_out(bundle, None, config, emb).to_dict()}
    if sys_hyps is not None:
        payload["svr"] = leave_one_out(bundle, sys_hyps, config, emb, sys_emb).to_dict()
    _emit(args, payload, formatting.loo_table(payload))
    return EXIT_OK


def cmd_perturb(args) -> int:
    if len(args.refs) < 2:
        raise GauntletError("perturb needs the hypothesis corpus plus at least one held-out reference file")
    config_path = Path(args.probe_config)
    data = json.loads(config_path.read_text(encoding="utf-8"))
    if args.seed is not None:
        data["seed"] = args.seed
    spec = PerturbSpec.from_json(data, base_dir=config_path.parent, stoplist_path=args.stoplist)
    corpora = read_parallel(args.refs, args.lowercase)
    hyps, heldout = corpora[0], corpora[1:]
    refs = [[c[n] for c in heldout] for n in range(len(hyps))]
    vocab = None
    if args.train:
        vocab = build_vocabulary(read_plain(args.train, args.lowercase))
    elif spec.mode == "threshold":
        raise GauntletError("threshold mode needs --train to build the vocabulary")
    if vocab is not None and args.vocab_out:
        atomic_write(args.vocab_out, vocab.to_tsv())
    outcome = perturb_and_score(hyps, refs, spec, vocab, _config(args))
    payload = outcome.to_dict()
    _emit(args, payload, formatting.perturb_table(payload))
    return EXIT_OK


def cmd_search_ss(args) -> int:
    train = read_plain(args.train, args.lowercase)
    if not train:
        raise GauntletError("training corpus is empty")
    refs = read_references(args.refs, args.lowercase)
    result = search_representative_sentence(train, refs.refs, args.objective, _config(args),
                                            naive=args.naive)
    payload = result.to_dict()
    _emit(args, payload, formatting.search_row(payload))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--refs", action="append", required=True,
                        help="references: one JSONL file or repeated parallel text files")
    common.add_argument("--synonyms", help="synonym lexicon for METEOR, one synset per line")
    common.add_argument("--baseline", type=float, help="rescaling baseline for the embedding F-score")
    common.add_argument("--lowercase", action="store_true", help="lowercase all text before scoring")
    common.add_argument("--format", choices=("json", "table", "both"), default="both",
                        help="output JSON, a fixed-width table, or both (default)")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="metric-gauntlet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", parents=[common], help="score hypotheses with every metric")
    p.add_argument("--hyps", required=True, help="hypotheses: JSONL with ids or plain text by line")
    p.add_argument("--embeddings", help="token embeddings JSONL for the embedding F-score")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("loo", parents=[common], help="leave-one-out over parallel reference files")
    p.add_argument("--hyps", help="system output; adds a system-vs-reference run")
    p.add_argument("--embeddings", help="token embeddings JSONL for the embedding F-score")
    p.set_defaults(func=cmd_loo)

    p = sub.add_parser("perturb", parents=[common],
                       help="perturb the first --refs file and score it against the rest")
    p.add_argument("--probe-config", required=True, help="JSON perturbation config")
    p.add_argument("--train", help="training corpus for threshold-mode frequencies")
    p.add_argument("--stoplist", help="stoplist file; overrides the config's stoplist_file")
    p.add_argument("--seed", type=int, help="random seed (default: config seed, else 0)")
    p.add_argument("--vocab-out", help="write the training vocabulary as TSV")
    p.set_defaults(func=cmd_perturb)

    p = sub.add_parser("search-ss", parents=[common],
                       help="find the single training sentence maximizing a corpus metric")
    p.add_argument("--train", required=True, help="training sentences, one per line")
    p.add_argument("--objective", choices=OBJECTIVES, default="bleu4",
                   help="corpus metric to maximize (default: bleu4)")
    p.add_argument("--naive", action="store_true", help="score every candidate the slow way")
    p.set_defaults(func=cmd_search_ss)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except FractionUnreachable as exc:
        return _fail(exc, EXIT_INFEASIBLE)
    except (GauntletError, ValueError, KeyError, json.JSONDecodeError) as exc:
        return _fail(exc, EXIT_INPUT)
    except OSError as exc:
        return _fail(exc, EXIT_IO)


def _fail(exc: BaseException, code: int) -> int:
    log.debug("failure detail", exc_info=exc)
    print(f"metric-gauntlet: error: {exc}", file=sys.stderr)
    return code

if __name__ == "__main__":
    sys.exit(main())
