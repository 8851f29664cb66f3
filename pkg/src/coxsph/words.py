"""Reduced words, word evaluation, and Bruhat order.

Words are plain tuples of 1-based generator indices. `reduced_words` yields
the full set Red(w) in lexicographic order by recursing on left descents;
`reduced_word_count` is the matching count-only fast path that never
materializes words.
"""

from __future__ import annotations

from .coxeter import CoxeterError, CoxeterSystem, Element


def parse_word(text: str) -> tuple[int, ...]:
    """Parse 's2 s3 s4' (or bare '2 3 4') into a letter tuple."""
    letters = []
    for tok in text.split():
        tok = tok.lower().lstrip("s")
        if not tok.isdigit():
            raise CoxeterError(f"bad word letter {tok!r}")
        letters.append(int(tok))
    return tuple(letters)


def format_word(letters) -> str:
    return " ".join(f"s{i}" for i in letters) if letters else "<id>"


def evaluate(system: CoxeterSystem, letters) -> Element:
    """Product of the generators named by `letters`."""
    w = system.identity
    for i in letters:
        w = system.multiply(w, system.generator(i))
    return w


def is_reduced(system: CoxeterSystem, letters) -> bool:
    return evaluate(system, letters).length == len(letters)


def reduced_words(system: CoxeterSystem, w: Element):
    """Yield every reduced word of w exactly once, lexicographically."""
    if w.length == 0:
        yield ()
        return
    for i in sorted(system.left_descents(w)):
        rest = system.multiply(system.generator(i), w)
        for tail in reduced_words(system, rest):
            yield (i,) + tail


def reduced_word_count(system: CoxeterSystem, w: Element) -> int:
    memo: dict[tuple, int] = {}

    def count(u: Element) -> int:
        if u.length == 0:
            return 1
        got = memo.get(u.rep)
        if got is None:
            got = sum(
                count(system.multiply(system.generator(i), u))
                for i in system.left_descents(u)
            )
            memo[u.rep] = got
        return got

    return count(w)


def bruhat_leq(system: CoxeterSystem, u: Element, v: Element) -> bool:
    """Strong Bruhat order, by the descent recursion."""
    memo: dict[tuple[tuple, tuple], bool] = {}

    def leq(a: Element, b: Element) -> bool:
        if a.length == 0:
            return True
        if a.length > b.length:
            return False
        key = (a.rep, b.rep)
        got = memo.get(key)
        if got is None:
            i = min(system.left_descents(b))
            sb = system.multiply(system.generator(i), b)
            sa = system.multiply(system.generator(i), a)
            if sa.length < a.length:
                got = leq(sa, sb)
            else:
                got = leq(a, sb)
            memo[key] = got
        return got

    return leq(u, v)
