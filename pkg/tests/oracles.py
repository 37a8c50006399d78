"""Independent brute-force reimplementations used as test oracles.

Everything here is written directly from the score definitions with
plain loops and no imports from the package under test, so any agreement
with the library is evidence, not tautology.
"""

from __future__ import annotations

import math

RENORM_EPS = 1e-9


def oracle_cdp(rows, src_len):
    total = 0.0
    for i in range(len(rows[0])):
        received = 0.0
        for row in rows:
            received += row[i]
        total += math.log(1.0 + (1.0 - received) ** 2)
    return -total / src_len


def _oracle_entropy(values):
    s = 0.0
    for v in values:
        s += v
    if s == 0.0:
        return 0.0
    if abs(s - 1.0) > RENORM_EPS:
        values = [v / s for v in values]
    acc = 0.0
    for v in values:
        if v > 0.0:
            acc += v * math.log(v)
    return acc


def oracle_ap_out(rows, src_len):
    total = 0.0
    for row in rows:
        total += _oracle_entropy(list(row))
    return total / src_len


def oracle_ap_in(rows, src_len):
    total = 0.0
    for i in range(len(rows[0])):
        total += _oracle_entropy([row[i] for row in rows])
    return total / src_len


def oracle_op(hyp_len, sim):
    return (0.8 + hyp_len * 0.01) * (3 - ((1 - sim) * 5)) * (0.7 + sim) * math.tan(sim)


def oracle_confidence(cdp, ap_out, ap_in, hyp_len, sim):
    if sim < 0.3:
        return cdp + ap_out + ap_in
    return cdp + ap_out + ap_in - oracle_op(hyp_len, sim)


# --- string matching ----------------------------------------------------


def dp_longest_common_substring(a, b):
    """(start_a, start_b, length) of the longest common substring via an
    O(len(a)*len(b)) table. Ties: lowest start in ``a``, then in ``b``."""
    n, m = len(a), len(b)
    best_i = best_j = best_k = 0
    prev = [0] * (m + 1)
    for i in range(n):
        cur = [0] * (m + 1)
        for j in range(m):
            if a[i] == b[j]:
                k = prev[j] + 1
                cur[j + 1] = k
                if k > best_k:
                    best_k = k
                    best_i = i - k + 1
                    best_j = j - k + 1
        prev = cur
    return best_i, best_j, best_k


def _matched_total(a, b):
    if not a or not b:
        return 0
    i, j, k = dp_longest_common_substring(a, b)
    if k == 0:
        return 0
    return (
        k
        + _matched_total(a[:i], b[:j])
        + _matched_total(a[i + k :], b[j + k :])
    )


def _fold(text):
    return tuple(ch.casefold() for ch in text)


def oracle_similarity(src_text, hyp_text):
    a = _fold(src_text)
    b = _fold(hyp_text)
    if not a and not b:
        return 0.0
    lo, hi = (a, b) if a <= b else (b, a)
    return 2.0 * _matched_total(lo, hi) / (len(a) + len(b))


def oracle_span(src_text, hyp_text):
    """(hyp_start, src_start, length), preferring the leftmost start in
    the hypothesis and then in the source."""
    return dp_longest_common_substring(_fold(hyp_text), _fold(src_text))


# --- BLEU ---------------------------------------------------------------


def _count_occurrences(tokens, gram):
    n = len(gram)
    count = 0
    for i in range(len(tokens) - n + 1):
        if tuple(tokens[i : i + n]) == gram:
            count += 1
    return count


def oracle_bleu(hyp, ref):
    included = []
    for n in range(1, 5):
        total = len(hyp) - n + 1
        if total < 1:
            continue
        grams = [tuple(hyp[i : i + n]) for i in range(total)]
        matched = 0
        for gram in set(grams):
            matched += min(
                _count_occurrences(hyp, gram), _count_occurrences(ref, gram)
            )
        if n == 1:
            included.append(matched / total)
        else:
            included.append((matched + 1) / (total + 1))
    bp = math.exp(1 - len(ref) / len(hyp)) if len(hyp) < len(ref) else 1.0
    product = 1.0
    for p in included:
        if p == 0.0:
            return 0.0
        product *= p
    return bp * product ** (1.0 / len(included))
