"""Strong edge decomposability.

A pure complex decomposes at an edge when the edge satisfies the Link
condition and both the contraction and the link of the edge decompose
recursively; the bases of the recursion are the empty complex and
boundaries of simplexes.  The search returns a witness tree that an
independent verifier can replay: it rechecks the Link condition, the
two dimension drops, and the h-vector recurrence
h_k(C) = h_k(contraction) + h_{k-1}(link) at every internal node.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import SimplicialComplex, simplex_boundary, verts_of
from .moves import contraction, link, link_condition


@dataclass
class SedWitness:
    """Decomposition tree: either a base case or an edge with subtrees."""

    kind: str  # "empty" | "simplex-boundary" | "edge"
    edge: tuple | None = None
    contraction: "SedWitness | None" = None
    link: "SedWitness | None" = None

    def edges(self) -> list:
        """Edges used along the decomposition, outermost first."""
        if self.kind != "edge":
            return []
        return [self.edge] + self.contraction.edges()

    def to_json_dict(self) -> dict:
        if self.kind != "edge":
            return {"kind": self.kind}
        return {
            "kind": "edge",
            "edge": list(self.edge),
            "contraction": self.contraction.to_json_dict(),
            "link": self.link.to_json_dict(),
        }


def is_simplex_boundary(c: SimplicialComplex) -> bool:
    if c.is_empty_complex:
        return False
    vs = c.vertices
    return c == simplex_boundary(vs) if len(vs) >= 2 else False


def _edges_of(c: SimplicialComplex) -> list:
    out = []
    for f in c.faces:
        if f.bit_count() == 2:
            v = verts_of(f)
            out.append((v[0], v[1]))
    return sorted(out)


def is_sed(c: SimplicialComplex, _memo=None) -> SedWitness | None:
    """Witness of strong edge decomposability, or None.

    Edges are tried in sorted order and the first full decomposition is
    returned, so results are deterministic.
    """
    if _memo is None:
        _memo = {}
    key = c.facets
    if key in _memo:
        return _memo[key]
    if c.is_empty_complex:
        witness = SedWitness("empty")
    elif is_simplex_boundary(c):
        witness = SedWitness("simplex-boundary")
    elif not c.is_pure:
        witness = None
    else:
        witness = None
        for (i, j) in _edges_of(c):
            ok, _ = link_condition(c, i, j)
            if not ok:
                continue
            sub_c = is_sed(contraction(c, i, j), _memo)
            if sub_c is None:
                continue
            sub_l = is_sed(link(c, [i, j]), _memo)
            if sub_l is None:
                continue
            witness = SedWitness("edge", (i, j), sub_c, sub_l)
            break
    _memo[key] = witness
    return witness


def verify_witness(c: SimplicialComplex, witness: SedWitness) -> tuple:
    """Replay a decomposition tree; returns (ok, reason).

    Beyond the definition itself, the verifier checks the two dimension
    identities every decomposition step must satisfy (the contraction
    keeps the dimension, the link drops it by two) and the h-vector
    recurrence they imply.
    """
    if witness is None:
        return False, "no witness"
    if witness.kind == "empty":
        if c.is_empty_complex:
            return True, None
        return False, f"{sorted(c.facets)} is not the empty complex"
    if witness.kind == "simplex-boundary":
        if is_simplex_boundary(c):
            return True, None
        return False, f"{sorted(c.facets)} is not a simplex boundary"
    if witness.kind != "edge":
        return False, f"unknown witness kind {witness.kind!r}"
    if not c.is_pure:
        return False, "complex is not pure"
    i, j = witness.edge
    if not c.has_face([i, j]):
        return False, f"edge {(i, j)} is not a face"
    ok, cert = link_condition(c, i, j)
    if not ok:
        return False, f"Link condition fails at {(i, j)}: certificate {cert}"
    contr = contraction(c, i, j)
    lk = link(c, [i, j])
    d = c.dim + 1
    if contr.dim != c.dim:
        return False, (
            f"contraction dimension {contr.dim} differs from {c.dim}"
        )
    if lk.dim != c.dim - 2:
        return False, f"link dimension {lk.dim} is not {c.dim - 2}"
    h = c.h_vector
    hc = contr.h_vector
    hl = lk.h_vector
    for k in range(d + 1):
        want = hc[k] if k < len(hc) else 0
        if 1 <= k and k - 1 < len(hl):
            want += hl[k - 1]
        if h[k] != want:
            return False, f"h-recurrence fails at k={k}: {h[k]} != {want}"
    ok, why = verify_witness(contr, witness.contraction)
    if not ok:
        return False, f"contraction subtree: {why}"
    ok, why = verify_witness(lk, witness.link)
    if not ok:
        return False, f"link subtree: {why}"
    return True, None


def h_conditions(c: SimplicialComplex) -> tuple:
    """(ok, reason): h symmetric and nondecreasing up to the middle,
    the two conditions every strongly edge decomposable complex meets."""
    h = c.h_vector
    d = c.dim + 1
    for i in range(d + 1):
        if h[i] != h[d - i]:
            return False, f"h_{i} = {h[i]} differs from h_{d - i} = {h[d - i]}"
    for i in range(d // 2):
        if h[i] > h[i + 1]:
            return False, f"h_{i} = {h[i]} exceeds h_{i + 1} = {h[i + 1]}"
    return True, None
