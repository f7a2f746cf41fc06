#!/usr/bin/env python3
"""Hand-checkable ROUGE counts for the unit-test micro-cases.

Prints one C++ initializer row per case: candidate, reference and the
(matches, candidate total, reference total) triples for ROUGE-1, ROUGE-2
and ROUGE-SU4 (skip-bigrams with up to four intervening tokens plus
unigrams).
"""
from collections import Counter

CASES = [
    ("the cat sat", "the cat"),
    ("a b c d", "a b c d"),
    ("a b c", "x y z"),
    ("a b", "a b"),
    ("a x x x x b", "a b"),
    ("a x x x x x b", "a b"),
    ("a a a", "a"),
    ("a", "a a a"),
    ("a b a b", "b a b a"),
    ("a b c d e f", "f e d c b a"),
    ("the cat sat on the mat", "the cat was on the mat"),
    ("police killed the gunman", "police kill the gunman"),
    ("the gunman kill police", "police killed the gunman"),
    ("a b c", "a c"),
    ("a b c d", "a b d"),
    ("x a y b z c", "a b c"),
    ("a b c a b c", "a b c"),
    ("one", "two"),
    ("a b", "b a"),
    ("a b c d e f g h", "a c e g"),
    ("a a b b", "a b a b"),
    ("a b c d e", "e"),
    ("a b x y z w v c", "a b c"),
    ("the the the cat", "the cat the cat"),
    ("a b c d e f g", "a g"),
]


def ngrams(t, n):
    return Counter(tuple(t[i:i + n]) for i in range(len(t) - n + 1))


def su(t, skip=4):
    c = Counter((w,) for w in t)
    for i in range(len(t)):
        for j in range(i + 1, len(t)):
            if j - i - 1 <= skip:
                c[(t[i], t[j], "skip")] += 1
    return c


def triple(c, r):
    return sum((c & r).values()), sum(c.values()), sum(r.values())


for cand, ref in CASES:
    c, r = cand.split(), ref.split()
    parts = [triple(ngrams(c, 1), ngrams(r, 1)), triple(ngrams(c, 2), ngrams(r, 2)), triple(su(c), su(r))]
    cells = ", ".join("{%d, %d, %d}" % p for p in parts)
    print('    {"%s", "%s", %s},' % (cand, ref, cells))
