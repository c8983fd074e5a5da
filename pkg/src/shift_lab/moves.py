"""Local combinatorial moves: links, contractions, the Link condition,
the elementary shift operator on a vertex pair, and stellar subdivision.

All operations treat faces as bit masks and return new complexes; the
inputs are never mutated.
"""

from __future__ import annotations

from .complexes import (
    EMPTY_COMPLEX,
    SimplicialComplex,
    cone,
    mask_of,
    verts_of,
)
from .errors import (
    FaceNotInComplex,
    IdentityViolated,
    InvalidParameters,
    LinkConditionViolated,
    VertexNotPresent,
)


def link(c: SimplicialComplex, face) -> SimplicialComplex:
    """Link of a face: all G disjoint from F with G union F a face.

    The link of the empty face is the complex itself.
    """
    fm = face if isinstance(face, int) else mask_of(face)
    if fm not in c:
        raise FaceNotInComplex(f"{verts_of(fm)} is not a face")
    return SimplicialComplex(fac & ~fm for fac in c.facets if fac & fm == fm)


def contraction(c: SimplicialComplex, i: int, j: int) -> SimplicialComplex:
    """Contract vertex i onto vertex j (i < j): faces through i have i
    replaced by j, the rest survive unchanged.
    """
    if not i < j:
        raise InvalidParameters("need i < j")
    ib, jb = 1 << (i - 1), 1 << (j - 1)
    if not (c.ground & ib and c.ground & jb):
        raise VertexNotPresent(f"{i} or {j} is not a vertex")
    out = set()
    for m in c.faces:
        if m & ib:
            out.add((m & ~ib) | jb)
        else:
            out.add(m)
    return SimplicialComplex(out)


def link_condition(c: SimplicialComplex, i: int, j: int):
    """Does lk(i) meet lk(j) exactly in lk({i,j})?

    Returns (bool, certificate): on failure the certificate is a face of
    the symmetric difference (or the missing edge {i,j} itself).
    """
    if not i < j:
        raise InvalidParameters("need i < j")
    ib, jb = 1 << (i - 1), 1 << (j - 1)
    if not (c.ground & ib):
        raise VertexNotPresent(f"{i} is not a vertex")
    if not (c.ground & jb):
        raise VertexNotPresent(f"{j} is not a vertex")
    edge = ib | jb
    if edge not in c:
        return False, verts_of(edge)
    inter = link(c, ib).faces & link(c, jb).faces
    lk_edge = link(c, edge).faces
    diff = inter ^ lk_edge
    if diff:
        return False, verts_of(min(diff))
    return True, None


def link_condition_via_ideal(c: SimplicialComplex, i: int, j: int) -> bool:
    """The Link condition in ideal form: no minimal non-face of the
    complex contains both i and j.

    Agrees with link_condition whenever {i,j} is a face; when {i,j} is
    itself a minimal non-face the two forms disagree by convention
    (link_condition returns false outright).
    """
    from .ideals import minimal_nonfaces

    if not i < j:
        raise InvalidParameters("need i < j")
    edge = (1 << (i - 1)) | (1 << (j - 1))
    return not any(m & edge == edge for m in minimal_nonfaces(c))


def shift_ij(c: SimplicialComplex, i: int, j: int) -> SimplicialComplex:
    """Elementary shift: each face F with i but not j moves to
    (F - i) + j unless that set is already a face.  Preserves the
    f-vector and is idempotent.
    """
    if not i < j:
        raise InvalidParameters("need i < j")
    ib, jb = 1 << (i - 1), 1 << (j - 1)
    faces = c.faces
    out = set()
    for m in faces:
        if m & ib and not m & jb:
            moved = (m & ~ib) | jb
            out.add(m if moved in faces else moved)
        else:
            out.add(m)
    return SimplicialComplex(out)


def decompose_shift(c: SimplicialComplex, i: int, j: int):
    """Split shift_ij(C) as contraction plus an i-cone, assuming the
    Link condition at {i,j}.

    Returns (contraction(C, i, j), cone(j, link(C, {i,j}))).  The face
    set of shift_ij(C) is then the contraction's faces together with
    {i} + F for F in the cone part; this identity is asserted.
    """
    ok, cert = link_condition(c, i, j)
    if not ok:
        raise LinkConditionViolated(f"fails at {cert}")
    ib, jb = 1 << (i - 1), 1 << (j - 1)
    contr = contraction(c, i, j)
    cone_part = cone(j, link(c, ib | jb))
    expected = set(contr.faces)
    expected.update(m | ib for m in cone_part.faces)
    if expected != set(shift_ij(c, i, j).faces):
        raise IdentityViolated("shift decomposition mismatch")
    return contr, cone_part


def stellar_subdivision(c: SimplicialComplex, face) -> SimplicialComplex:
    """Stellar subdivision at a nonempty face.

    Faces whose union with F is a face are removed and replaced by the
    join of a new vertex (largest label + 1), the boundary of F, and the
    link of F.  Subdividing at a single vertex renames it to the new
    label.
    """
    fm = face if isinstance(face, int) else mask_of(face)
    if fm not in c:
        raise FaceNotInComplex(f"{verts_of(fm)} is not a face")
    if fm.bit_count() < 1:
        raise InvalidParameters("subdivide at a nonempty face")
    new_v = max(c.vertices) + 1
    nb = 1 << (new_v - 1)
    lk_faces = link(c, fm).faces
    kept = {m for m in c.faces if (m | fm) not in c}
    added = set()
    proper = [s for s in _submasks(fm) if s != fm]
    for a in proper:
        for b in lk_faces:
            added.add(a | b)
            added.add(a | b | nb)
    return SimplicialComplex(kept | added)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
