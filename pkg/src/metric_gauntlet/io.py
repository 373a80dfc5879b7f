"""Readers and writers for the on-disk formats.

* references: JSON Lines ``{"id": ..., "refs": [...]}`` or C plain-text
  files with one sentence per line (line i of every file is instance i)
* hypotheses: JSON Lines ``{"id": ..., "hyp": ...}`` or plain text by line
* embeddings: JSON Lines ``{"id", "tokens", "vectors", "idf"?, "ref"?}``
  with an optional leading ``{"baseline": b}`` header.  ``ref`` is the
  index of the reference (or parallel file) the record embeds; records
  without it embed the hypothesis.

Plain-text files get ids ``"1"``, ``"2"``, ... from their line numbers.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .corpus import EvalCorpus, Instance, Sentence, normalize_tokens
from .errors import AlignmentError, EmptySentence, RaggedReferences
from .metrics.embedding import EmbeddedSentence


def _lines(path) -> List[str]:
    with open(path, encoding="utf-8") as f:
        return f.read().splitlines()


def is_jsonl(path) -> bool:
    if str(path).endswith((".jsonl", ".json")):
        return True
    for line in _lines(path):
        if line.strip():
            return line.lstrip().startswith("{")
    return False


def _tokens(text: str, lowercase: bool, where: str) -> Sentence:
    try:
        return normalize_tokens(text, lowercase)
    except EmptySentence:
        raise EmptySentence(f"empty sentence at {where}") from None


def read_jsonl(path) -> List[dict]:
    records = []
    for k, line in enumerate(_lines(path), start=1):
        if not line.strip():
            continue
        try:
            records.append(json.loads(line))
        except json.JSONDecodeError as exc:
            raise AlignmentError(f"{path}:{k}: invalid JSON ({exc.msg})") from None
    return records


def read_plain(path, lowercase: bool = False) -> List[Sentence]:
    """One sentence per line; blank lines are errors."""
    return [_tokens(line, lowercase, f"{path}:{k}")
            for k, line in enumerate(_lines(path), start=1)]


def read_references(paths: Sequence, lowercase: bool = False) -> EvalCorpus:
    """Load references from one JSONL file or several parallel text files."""
    if len(paths) == 1 and is_jsonl(paths[0]):
        instances = []
        for rec in read_jsonl(paths[0]):
            rid = str(rec["id"])
            refs = tuple(_tokens(r, lowercase, f"{paths[0]} id {rid}") for r in rec["refs"])
            if not refs:
                raise AlignmentError(f"instance {rid} has no references", rid)
            instances.append(Instance(rid, refs))
        try:
            return EvalCorpus(instances)
        except ValueError as exc:
            raise AlignmentError(str(exc)) from None
    corpora = read_parallel(paths, lowercase)
    n = len(corpora[0])
    return EvalCorpus([Instance(str(i + 1), tuple(c[i] for c in corpora)) for i in range(n)])


def read_parallel(paths: Sequence, lowercase: bool = False) -> List[List[Sentence]]:
    corpora = [read_plain(p, lowercase) for p in paths]
    lengths = [len(c) for c in corpora]
    if len(set(lengths)) != 1:
        raise RaggedReferences(f"parallel files have unequal line counts: {lengths}")
    return corpora


def read_hypotheses(path, lowercase: bool = False) -> Tuple[List[str], List[Sentence], bool]:
    """Return ``(ids, sentences, has_ids)``."""
    if is_jsonl(path):
        ids, hyps = [], []
        for rec in read_jsonl(path):
            hid = str(rec["id"])
            ids.append(hid)
            hyps.append(_tokens(rec["hyp"], lowercase, f"{path} id {hid}"))
        return ids, hyps, True
    hyps = read_plain(path, lowercase)
    return [str(i + 1) for i in range(len(hyps))], hyps, False


def align_hypotheses(refs: EvalCorpus, hyp_ids: Sequence[str], hyps: Sequence[Sentence],
                     by_id: bool) -> List[Sentence]:
    """Order ``hyps`` to match ``refs``; ids win over line numbers."""
    if not by_id:
        if len(hyps) != len(refs):
            offending = str(min(len(hyps), len(refs)) + 1)
            raise AlignmentError(
                f"{len(hyps)} hypothesis lines but {len(refs)} reference instances "
                f"(first unmatched line {offending})", offending)
        return list(hyps)
    table: Dict[str, Sentence] = {}
    for hid, hyp in zip(hyp_ids, hyps):
        if hid in table:
            raise AlignmentError(f"duplicate hypothesis id {hid}", hid)
        table[hid] = hyp
    ref_ids = set(refs.ids)
    for hid in hyp_ids:
        if hid not in ref_ids:
            raise AlignmentError(f"hypothesis id {hid} has no references", hid)
    for rid in refs.ids:
        if rid not in table:
            raise AlignmentError(f"reference id {rid} has no hypothesis", rid)
    return [table[rid] for rid in refs.ids]


def read_embeddings(path) -> Tuple[Optional[float], Dict[Tuple[str, Optional[int]], EmbeddedSentence]]:
    baseline = None
    table = {}
    for rec in read_jsonl(path):
        if "id" not in rec:
            if "baseline" in rec:
                baseline = float(rec["baseline"])
            continue
        ref = rec.get("ref")
        key = (str(rec["id"]), None if ref is None else int(ref))
        table[key] = EmbeddedSentence(tuple(rec["tokens"]), rec["vectors"], rec.get("idf"))
    return baseline, table


def embeddings_for(refs: EvalCorpus, table) -> Tuple[List[EmbeddedSentence], List[List[EmbeddedSentence]]]:
    """Pick hypothesis and per-reference embeddings for every instance."""
    hyp_emb, ref_emb = [], []
    for inst in refs.instances:
        try:
            hyp_emb.append(table[(inst.id, None)])
            ref_emb.append([table[(inst.id, k)] for k in range(len(inst.refs))])
        except KeyError as exc:
            rid, k = exc.args[0]
            what = "hypothesis" if k is None else f"reference {k}"
            raise AlignmentError(f"no embedding for {what} of id {rid}", rid) from None
    return hyp_emb, ref_emb


def atomic_write(path, text: str) -> None:
    """Write via a temp file in the target directory and rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
