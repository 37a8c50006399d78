"""Sentence-level BLEU against a single reference.

BLEU-4 with clipped n-gram precisions. Unigram precision is left
unsmoothed so that a hypothesis sharing no word with the reference
scores exactly 0; higher orders get add-one smoothing on both numerator
and denominator so short sentences keep nonzero scores. Orders longer
than the hypothesis are excluded from the geometric mean. The brevity
penalty is exp(1 - len(ref)/len(hyp)) for hypotheses shorter than the
reference, 1 otherwise.

Used for sorting and diagnostics only; never feeds into the
attention-based confidence.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

MAX_ORDER = 4


@dataclass(frozen=True)
class BleuScore:
    value: float
    precisions: tuple[float, float, float, float]
    brevity_penalty: float


def _ngram_counts(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def sentence_bleu(hyp_tokens: Sequence[str], ref_tokens: Sequence[str]) -> BleuScore:
    """Score one hypothesis against one reference, both as token lists.

    Raises ValueError when either side is empty. ``precisions`` always
    has four entries; orders with no hypothesis n-grams are reported as
    0.0 and skipped in the geometric mean.
    """
    if not hyp_tokens:
        raise ValueError("empty hypothesis")
    if not ref_tokens:
        raise ValueError("empty reference")
    precisions = []
    included = []
    for n in range(1, MAX_ORDER + 1):
        total = len(hyp_tokens) - n + 1
        if total < 1:
            precisions.append(0.0)
            continue
        ref_counts = _ngram_counts(ref_tokens, n)
        matched = sum(
            min(count, ref_counts[gram])
            for gram, count in _ngram_counts(hyp_tokens, n).items()
        )
        if n == 1:
            p = matched / total
        else:
            p = (matched + 1) / (total + 1)
        precisions.append(p)
        included.append(p)
    if len(hyp_tokens) < len(ref_tokens):
        bp = math.exp(1.0 - len(ref_tokens) / len(hyp_tokens))
    else:
        bp = 1.0
    if any(p == 0.0 for p in included):
        value = 0.0
    else:
        value = bp * math.exp(sum(math.log(p) for p in included) / len(included))
    return BleuScore(
        value=value,
        precisions=(precisions[0], precisions[1], precisions[2], precisions[3]),
        brevity_penalty=bp,
    )
