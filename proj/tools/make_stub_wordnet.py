#!/usr/bin/env python3
"""Carve a small WNDB-format WordNet out of a full WordNet 3.0 install.

The stub keeps the first sense of every content word found in the given text
files, then adds hypernym ancestors breadth-first until the target synset
count is reached. Pointers to synsets outside the stub are dropped and byte
offsets are renumbered so the output is a valid WNDB database.

Only words occurring at least MIN_COUNT times (or in a query file) are kept.

usage: make_stub_wordnet.py WORDNET_DIR OUT_DIR STOPWORDS TEXT_FILE...
"""
import collections
import os
import re
import shutil
import sys
import tempfile

import nltk

TARGET = 200
MIN_COUNT = 2
POS_FILES = {"n": "noun", "v": "verb", "a": "adj", "r": "adv"}
EXTRA_WORDS = ["cat", "cats", "ran", "quickly", "car", "automobile", "dog",
               "run", "animal", "vehicle", "truck", "quick"]
KEEP_POINTERS = {"@", "@i", "~", "~i", "&"}


def main():
    wn_dir, out_dir, stop_path = sys.argv[1:4]
    texts = sys.argv[4:]
    data_root = tempfile.mkdtemp()
    os.makedirs(f"{data_root}/corpora")
    shutil.copytree(wn_dir, f"{data_root}/corpora/wordnet")
    nltk.data.path.insert(0, data_root)
    from nltk.corpus import wordnet as wn
    stop = set(open(stop_path).read().split())

    counts = collections.Counter()
    query_words = set()
    for path in texts:
        for run in re.findall(r"[a-z]+", open(path).read().lower()):
            if len(run) > 1 and run not in stop:
                counts[run] += 1
                if path.endswith("query.txt"):
                    query_words.add(run)
    # Words seen once in the documents are left out so hypernym ancestors fit.
    tokens = list(EXTRA_WORDS) + [w for w in counts
                                  if counts[w] >= MIN_COUNT or w in query_words]

    chosen = []
    seen = set()

    def add(ss):
        if ss not in seen:
            seen.add(ss)
            chosen.append(ss)

    for tok in tokens:
        for pos in "nvar":
            lemma = wn.morphy(tok, pos)
            if lemma:
                add(wn.synsets(lemma, pos)[0])
                break
    mandatory = len(chosen)
    print("mandatory", mandatory, file=sys.stderr)
    frontier = collections.deque(chosen)
    while frontier and len(chosen) < TARGET:
        ss = frontier.popleft()
        for h in ss.hypernyms() + ss.instance_hypernyms():
            if len(chosen) >= TARGET:
                break
            if h not in seen:
                add(h)
                frontier.append(h)
    if len(chosen) != TARGET:
        sys.exit(f"got {len(chosen)} synsets (mandatory {mandatory})")

    header = open(f"{wn_dir}/data.noun").read().split("\n")[:29]
    header = "\n".join(header) + "\n"

    by_pos = collections.defaultdict(list)
    for ss in chosen:
        pos = "a" if ss.pos() == "s" else ss.pos()
        by_pos[pos].append(ss)
    for pos in by_pos:
        by_pos[pos].sort(key=lambda s: s.offset())

    # Raw records keyed by (pos, old offset).
    raw = {}
    for pos, name in POS_FILES.items():
        with open(f"{wn_dir}/data.{name}", "rb") as fh:
            for ss in by_pos.get(pos, []):
                fh.seek(ss.offset())
                raw[(pos, ss.offset())] = fh.readline().decode().rstrip("\n")

    def parse(line):
        body, _, gloss = line.partition(" | ")
        f = body.split()
        wcnt = int(f[3], 16)
        words = f[4:4 + 2 * wcnt]
        i = 4 + 2 * wcnt
        pcnt = int(f[i])
        ptrs = [f[i + 1 + 4 * k: i + 5 + 4 * k] for k in range(pcnt)]
        rest = f[i + 1 + 4 * pcnt:]
        return f[1], f[2], words, ptrs, rest, gloss.strip()

    def pos_of(c):
        return "a" if c == "s" else c

    included = set(raw)
    new_offset = {}
    for pos, name in POS_FILES.items():
        # Offsets depend on record lengths, which depend on offsets; widths are
        # fixed at 8 digits so a single layout pass is exact.
        pos_ptr = len(header.encode())
        for ss in by_pos.get(pos, []):
            new_offset[(pos, ss.offset())] = pos_ptr
            pos_ptr += len(render(pos, ss.offset(), raw, parse, pos_of,
                                  included, None).encode()) + 1

    lemma_index = collections.defaultdict(lambda: collections.defaultdict(list))
    for pos, name in POS_FILES.items():
        lines = []
        for ss in by_pos.get(pos, []):
            key = (pos, ss.offset())
            lines.append(render(pos, ss.offset(), raw, parse, pos_of, included,
                                new_offset))
            _, _, words, _, _, _ = parse(raw[key])
            for w in words[0::2]:
                lemma = re.sub(r"\(.*\)$", "", w).lower()
                lemma_index[pos][lemma].append(new_offset[key])
        with open(f"{out_dir}/data.{name}", "w") as out:
            out.write(header)
            for line in lines:
                out.write(line + "\n")
        with open(f"{out_dir}/index.{name}", "w") as out:
            out.write(header)
            for lemma in sorted(lemma_index[pos]):
                offs = sorted(set(lemma_index[pos][lemma]))
                out.write(f"{lemma} {pos} {len(offs)} 0 {len(offs)} 0 "
                          + " ".join(f"{o:08d}" for o in offs) + "  \n")

    lemmas = {p: set(lemma_index[p]) for p in POS_FILES}
    for pos, name in POS_FILES.items():
        with open(f"{wn_dir}/{name}.exc") as fh, \
                open(f"{out_dir}/{name}.exc", "w") as out:
            for line in fh:
                f = line.split()
                if any(b in lemmas[pos] for b in f[1:]) and f[0] in tokens:
                    out.write(line)
    print(f"{TARGET} synsets, {mandatory} from the word list",
          {p: len(v) for p, v in by_pos.items()})


def render(pos, old, raw, parse, pos_of, included, new_offset):
    lex, sstype, words, ptrs, rest, gloss = parse(raw[(pos, old)])
    kept = []
    for sym, off, p, st in ptrs:
        tgt = (pos_of(p), int(off))
        if sym in KEEP_POINTERS and tgt in included:
            o = new_offset[tgt] if new_offset else 0
            kept.append(f"{sym} {o:08d} {p} {st}")
    o = new_offset[(pos, old)] if new_offset else 0
    parts = [f"{o:08d}", lex, sstype, f"{len(words) // 2:02x}"] + words
    parts.append(f"{len(kept):03d}")
    parts += kept
    parts += rest
    return " ".join(parts) + " | " + gloss + "  "


if __name__ == "__main__":
    main()
