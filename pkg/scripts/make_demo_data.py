#!/usr/bin/env python3
"""Generate a small demo corpus: two systems over the same sources, plus
references, in the canonical line-record format.

System A is a decent "translator" (sharp, roughly diagonal attention);
system B copies several sources verbatim and attends diffusely, so the
copy penalty and the diagnostic flags have something to bite on.

Usage:
    python scripts/make_demo_data.py [outdir]

then e.g.:
    attnscope score demo/system_a.txt --refs demo/refs.txt -o demo/a.index
    attnscope compare demo/system_a.txt demo/system_b.txt -o demo/pair.index
    attnscope serve demo/system_a.txt demo/system_b.txt --port 8000
"""

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from attnscope import AlignmentRecord, AttentionMatrix, Dataset, serialize_canonical

SOURCES = [
    "the weather station reported heavy rain across the northern coast",
    "a small boat drifted slowly toward the old stone harbour",
    "researchers published a detailed study on ancient trade routes",
    "the committee postponed its final decision until next spring",
    "children played football on the frozen field behind the school",
    "new regulations require every factory to report emissions monthly",
    "the museum restored a painting lost for over two centuries",
    "local farmers expect a record harvest despite the dry summer",
    "engineers tested the bridge under twice its rated load",
    "the orchestra rehearsed the final movement late into the night",
    "satellite imagery revealed unexpected changes in the river delta",
    "the library digitized thousands of fragile manuscripts last year",
]

TARGET_WORDS = [
    "vema", "tolu", "sarin", "peko", "mithra", "olan", "dresa", "kuvi",
    "haldo", "brint", "osel", "tarn", "welk", "juna", "prilo", "skad",
    "moren", "aviz", "cleth", "urbo", "fenk", "galar", "nopti", "ril",
]


def sharp_attention(rng, ls, lt):
    rows = []
    for j in range(lt):
        anchor = min(int(j * ls / lt), ls - 1)
        row = [0.0] * ls
        row[anchor] = 0.9
        spill = [i for i in (anchor - 1, anchor + 1) if 0 <= i < ls]
        for i in spill:
            row[i] = 0.1 / len(spill)
        if not spill:
            row[anchor] = 1.0
        rows.append(row)
    return rows


def diffuse_attention(rng, ls, lt):
    rows = []
    for _ in range(lt):
        raw = [0.4 + rng.random() for _ in range(ls)]
        total = sum(raw)
        rows.append([v / total for v in raw])
    return rows


def translated_record(rng, i, src_tokens):
    lt = max(3, len(src_tokens) + rng.randint(-2, 1))
    hyp = [rng.choice(TARGET_WORDS) for _ in range(lt)]
    return AlignmentRecord(
        id=f"sent{i}",
        src_tokens=tuple(src_tokens),
        hyp_tokens=tuple(hyp),
        attention=AttentionMatrix.from_rows(sharp_attention(rng, len(src_tokens), lt)),
    )


def copied_record(rng, i, src_tokens):
    n = len(src_tokens)
    rows = [[1.0 if k == j else 0.0 for k in range(n)] for j in range(n)]
    return AlignmentRecord(
        id=f"sent{i}",
        src_tokens=tuple(src_tokens),
        hyp_tokens=tuple(src_tokens),
        attention=AttentionMatrix.from_rows(rows),
    )


def sloppy_record(rng, i, src_tokens):
    lt = max(2, len(src_tokens) - rng.randint(0, 3))
    hyp = [rng.choice(TARGET_WORDS) for _ in range(lt)]
    return AlignmentRecord(
        id=f"sent{i}",
        src_tokens=tuple(src_tokens),
        hyp_tokens=tuple(hyp),
        attention=AttentionMatrix.from_rows(diffuse_attention(rng, len(src_tokens), lt)),
    )


def main():
    outdir = Path(sys.argv[1] if len(sys.argv) > 1 else "demo")
    outdir.mkdir(parents=True, exist_ok=True)
    rng = random.Random(7)

    records_a = []
    records_b = []
    refs = []
    for i, sentence in enumerate(SOURCES):
        src = sentence.split()
        records_a.append(translated_record(rng, i, src))
        if i % 4 == 0:
            records_b.append(copied_record(rng, i, src))
        elif i % 4 == 1:
            records_b.append(sloppy_record(rng, i, src))
        else:
            records_b.append(translated_record(rng, i, src))
        refs.append(" ".join(rng.choice(TARGET_WORDS) for _ in src))

    a = Dataset(system_name="system_a", records=tuple(records_a))
    b = Dataset(system_name="system_b", records=tuple(records_b))
    (outdir / "system_a.txt").write_bytes(serialize_canonical(a))
    (outdir / "system_b.txt").write_bytes(serialize_canonical(b))
    (outdir / "refs.txt").write_text("\n".join(refs) + "\n", encoding="utf-8")
    print(f"wrote {outdir}/system_a.txt, system_b.txt, refs.txt ({len(SOURCES)} sentences)")


if __name__ == "__main__":
    main()
