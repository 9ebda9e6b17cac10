"""Regression checks against known values for the worked graph families."""

from __future__ import annotations

from typing import Callable, Iterator

from raagkit.graph import family
from raagkit.invariants import chen_ranks, clique_polynomial, cut_numbers, lcs_ranks
from raagkit.polyseries import IntPoly, binomial
from raagkit.report import compare
from raagkit.resonance import lattice_fingerprint, resonance_components


def _components(spec):
    g = family(spec)
    return {frozenset(g.label_set(w)) for w in resonance_components(g).components}


def _complements(pairs):
    return {frozenset(str(v) for v in range(1, 7) if str(v) not in p) for p in pairs}


def _checks() -> list[tuple[str, Callable[[], bool]]]:
    six = IntPoly.of(1, 6, 9, 4)
    cut6 = IntPoly.of(0, 0, 6, 8, 3)
    checks = [
        ("triforce6 clique polynomial 1+6t+9t^2+4t^3", lambda: clique_polynomial(family("triforce6")) == six),
        ("grid6 clique polynomial 1+6t+9t^2+4t^3", lambda: clique_polynomial(family("grid6")) == six),
        ("triforce6 cut polynomial t^2(6+8t+3t^2)", lambda: cut_numbers(family("triforce6")).polynomial() == cut6),
        ("grid6 cut polynomial t^2(6+8t+3t^2)", lambda: cut_numbers(family("grid6")).polynomial() == cut6),
        ("triforce6 resonance components", lambda: _components("triforce6") == _complements(["23", "25", "35"])),
        ("grid6 resonance components", lambda: _components("grid6") == _complements(["15", "25", "26"])),
        ("triforce6 triple intersection 3", lambda: lattice_fingerprint(resonance_components(family("triforce6"))).triples == (3,)),
        ("grid6 triple intersection 2", lambda: lattice_fingerprint(resonance_components(family("grid6"))).triples == (2,)),
        ("compare triforce6 grid6", lambda: [s for _, s in compare(family("triforce6"), family("grid6"))] == [True, True, False]),
        ("compare path:6 dynkinD:6", lambda: [s for _, s in compare(family("path:6"), family("dynkinD:6"))] == [True, True, False]),
        ("compare cycle:6 ycycle:6", lambda: [s for _, s in compare(family("cycle:6"), family("ycycle:6"))] == [True, False, False]),
        ("free group F_2 LCS ranks 2,1,2,3,6,9,18,30", lambda: lcs_ranks(family("empty:2"), 8).values() == [2, 1, 2, 3, 6, 9, 18, 30]),
        ("dynkinD:6 has 3 extremal vertices", lambda: sum(nb.bit_count() == 1 for nb in family("dynkinD:6").adj) == 3),
    ]
    for n in range(3, 8):
        checks.append((f"path:{n} clique polynomial 1+nt+(n-1)t^2", lambda n=n: clique_polynomial(family(f"path:{n}")) == IntPoly.of(1, n, n - 1)))
        checks.append((f"path:{n} tree cut numbers", lambda n=n: all(cut_numbers(family(f"path:{n}"))[j] == (j - 1) * binomial(n - 1, j) for j in range(2, n))))
        checks.append((f"path:{n} Chen ranks (k-1)C(k+n-3,k)", lambda n=n: all(chen_ranks(family(f"path:{n}"), 10)[k] == (k - 1) * binomial(k + n - 3, k) for k in range(2, 11))))
    for n in range(4, 8):
        checks.append((f"cycle:{n} clique polynomial 1+nt+nt^2", lambda n=n: clique_polynomial(family(f"cycle:{n}")) == IntPoly.of(1, n, n)))
        checks.append((f"cycle:{n} has n(n-3)/2 resonance components", lambda n=n: len(resonance_components(family(f"cycle:{n}")).components) == n * (n - 3) // 2))
    for n in range(5, 8):
        checks.append((f"ycycle:{n} c_(n-1) = 1 vs cycle 0", lambda n=n: (cut_numbers(family(f"ycycle:{n}"))[n - 1], cut_numbers(family(f"cycle:{n}"))[n - 1]) == (1, 0)))
    return checks


def run_selftest() -> Iterator[tuple[str, bool]]:
    for name, check in _checks():
        yield name, bool(check())
