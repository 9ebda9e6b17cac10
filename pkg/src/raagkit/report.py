"""Canonical invariant reports and graph comparison."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Any

from raagkit.enumeration import DEFAULT_GUARD
from raagkit.graph import Graph
from raagkit.invariants import clique_polynomial, connectivity, cut_numbers, lcs_ranks
from raagkit.polyseries import DEFAULT_KMAX, geometric_substitution
from raagkit.rescaling import FORMALITY_NOTE, homotopy_ranks, loop_poincare_series
from raagkit.resonance import lattice_fingerprint, resonance_components

DEFAULT_DMAX = 12


@dataclass(frozen=True)
class InvariantReport:
    graph: dict[str, Any]
    clique_polynomial: list[int]
    cut_polynomial: list[int]
    connectivity: int
    lcs_ranks: list[int]
    chen_ranks: list[int]
    resonance: dict[str, Any]
    provenance: dict[str, Any]
    rescaling: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        if d["rescaling"] is None:
            del d["rescaling"]
        return d

    def to_text(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_text(cls, text: str) -> InvariantReport:
        return cls(**json.loads(text))


def resonance_block(g: Graph, **enum) -> dict[str, Any]:
    r = resonance_components(g, **enum)
    return {
        "ambient_dim": r.ambient_dim,
        "codim": r.codim,
        "components": [g.label_set(w) for w in r.components],
        "fingerprint": lattice_fingerprint(r).as_dict(),
    }


def rescaling_block(g: Graph, q: int, kmax: int, dmax: int) -> dict[str, Any]:
    table = homotopy_ranks(g, q, kmax)
    return {
        "q": q,
        "homotopy_ranks": [[m, r] for m, r in table.nonzero()],
        "loop_series": list(loop_poincare_series(g, q, dmax).coeffs),
        "formal_coformal": table.formal_coformal,
        "note": FORMALITY_NOTE,
    }


def build_report(
    g: Graph,
    kmax: int = DEFAULT_KMAX,
    dmax: int = DEFAULT_DMAX,
    q: int | None = None,
    guard: int = DEFAULT_GUARD,
    allow_large: bool = False,
    workers: int = 1,
) -> InvariantReport:
    enum = {"guard": guard, "allow_large": allow_large, "workers": workers}
    cuts = cut_numbers(g, **enum)
    chen = geometric_substitution(cuts.polynomial(), kmax).with_rank(1, g.n)
    return InvariantReport(
        graph={"labels": list(g.labels), "edges": [[g.labels[i], g.labels[j]] for i, j in g.edges()]},
        clique_polynomial=clique_polynomial(g).to_list(),
        cut_polynomial=cuts.polynomial().to_list(),
        connectivity=connectivity(g).kappa,
        lcs_ranks=lcs_ranks(g, kmax).values(),
        chen_ranks=chen.values(),
        resonance=resonance_block(g, **enum),
        provenance={"kmax": kmax, "dmax": dmax, "guard": guard, "allow_large": allow_large},
        rescaling=None if q is None else rescaling_block(g, q, kmax, dmax),
    )


def _verdict(same: bool) -> str:
    return "equal" if same else "DIFFERENT"


def compare(g1: Graph, g2: Graph, **enum) -> list[tuple[str, bool]]:
    """Clique polynomials, cut polynomials and resonance fingerprints side by side."""
    f1 = lattice_fingerprint(resonance_components(g1, **enum))
    f2 = lattice_fingerprint(resonance_components(g2, **enum))
    return [
        ("clique polynomials", clique_polynomial(g1) == clique_polynomial(g2)),
        ("cut polynomials", cut_numbers(g1, **enum).polynomial() == cut_numbers(g2, **enum).polynomial()),
        ("resonance fingerprints", f1 == f2),
    ]


def format_compare(rows: list[tuple[str, bool]]) -> str:
    return "".join(f"{name}: {_verdict(same)}\n" for name, same in rows)

