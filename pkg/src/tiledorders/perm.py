"""Permutations of {0, ..., n-1} stored as image tuples.

Externally permutations are written 1-based in cycle notation, e.g. ``"(1 3)(2 4)"``;
``sigma[i]`` is the image of ``i`` (0-based).
"""
import re

__all__ = [
    "identity",
    "compose",
    "inverse",
    "cycles",
    "cycle_lengths",
    "format_cycles",
    "parse_cycles",
]


def identity(n):
    return tuple(range(n))


def compose(sigma, tau):
    """Return sigma o tau, i.e. ``i -> sigma[tau[i]]``."""
    return tuple(sigma[t] for t in tau)


def inverse(sigma):
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(inv)


def cycles(sigma):
    """Disjoint cycles of sigma (fixed points included), each starting at its least element."""
    seen = [False] * len(sigma)
    out = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = sigma[i]
        out.append(tuple(cyc))
    return out


def cycle_lengths(sigma):
    return [len(c) for c in cycles(sigma)]


def format_cycles(sigma):
    """1-based cycle notation with fixed points omitted; the identity is ``"()"``."""
    parts = ["(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles(sigma) if len(c) > 1]
    return "".join(parts) or "()"


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, n):
    """Parse 1-based cycle notation such as ``"(1 2 3)(4 5)"`` or ``"(1,3)"``.

    Cycles are composed right to left, so ``"(1 2)(2 3)"`` maps 3 to 1.
    """
    text = text.strip()
    if _CYCLE.sub("", text).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    sigma = identity(n)
    for body in reversed(_CYCLE.findall(text)):
        items = [int(tok) - 1 for tok in re.split(r"[\s,]+", body.strip()) if tok]
        if len(set(items)) != len(items) or any(not 0 <= i < n for i in items):
            raise ValueError(f"bad cycle ({body}) for n = {n}")
        img = list(range(n))
        for a, b in zip(items, items[1:] + items[:1]):
            img[a] = b
        sigma = compose(tuple(img), sigma)
    return sigma
