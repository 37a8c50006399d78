"""Character-level source/hypothesis similarity and copied-span detection.

Texts are compared case-insensitively: each character is folded
individually and the folded forms are matched as atomic units, so match
offsets always map 1:1 back onto the original strings (a multi-character
casefold expansion never shifts positions).

``similarity`` is the Ratcliff-Obershelp ratio 2*M/(len(a)+len(b)):
the longest contiguous common substring is matched, then the left and
right remainders are matched recursively, and M is the total matched
character count. The recursion is evaluated over an internally
canonicalized argument order, which makes the ratio symmetric even when
several equally long candidate matches exist.

``longest_match_span`` reports the single longest common substring,
preferring the leftmost occurrence in the hypothesis and then the
leftmost in the source.
"""

from __future__ import annotations

from dataclasses import dataclass
from difflib import SequenceMatcher


def _fold(text: str) -> tuple[str, ...]:
    return tuple(ch.casefold() for ch in text)


def similarity(src_text: str, hyp_text: str) -> float:
    """Ratcliff-Obershelp similarity in [0, 1]; 1 iff the texts are equal
    after case folding. Two empty texts compare as 0."""
    a = _fold(src_text)
    b = _fold(hyp_text)
    if not a and not b:
        return 0.0
    lo, hi = (a, b) if a <= b else (b, a)
    return SequenceMatcher(None, lo, hi, autojunk=False).ratio()


@dataclass(frozen=True)
class MatchSpan:
    """Longest common substring location, as half-open character ranges
    into the detokenized source and hypothesis texts."""

    src_start: int
    src_end: int
    hyp_start: int
    hyp_end: int

    def __post_init__(self) -> None:
        if self.src_start < 0 or self.hyp_start < 0:
            raise ValueError("span starts must be nonnegative")
        if self.src_end - self.src_start != self.hyp_end - self.hyp_start:
            raise ValueError("source and hypothesis spans must have equal length")
        if self.src_end < self.src_start:
            raise ValueError("span ranges must be non-descending")

    @property
    def length(self) -> int:
        return self.src_end - self.src_start


def longest_match_span(src_text: str, hyp_text: str) -> MatchSpan:
    """Longest contiguous common substring of the two texts, case-folded.

    Ties between equally long matches go to the leftmost start in the
    hypothesis, then the leftmost in the source. Returns a zero-length
    span at (0, 0) when the texts share no character.
    """
    hyp = _fold(hyp_text)
    src = _fold(src_text)
    if not hyp or not src:
        return MatchSpan(0, 0, 0, 0)
    # find_longest_match prefers maximal length, then the earliest start
    # in its first sequence, then in its second: hypothesis goes first.
    matcher = SequenceMatcher(None, hyp, src, autojunk=False)
    m = matcher.find_longest_match(0, len(hyp), 0, len(src))
    return MatchSpan(m.b, m.b + m.size, m.a, m.a + m.size)
