"""Framed quivers, green-sequence replay and verification, and all the
constructive builders of maximal green sequences (MGS).

A framed quiver doubles the vertex set: mutable vertices ``1..n`` plus one
frozen copy ``i'`` of each, with an initial arrow ``i -> i'``.  After any run
of mutations at mutable vertices every mutable vertex is green (no arrows
arriving from frozen vertices) or red (no arrows leaving towards frozen
vertices), never both or neither; the engine asserts this at every state.

Builders never trust the theorems that motivate them: every certificate they
return has been replayed and re-verified before it leaves this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    DirectSumDecomposition,
    MULT_CAP,
    Quiver,
    Rank3Params,
    induced_subquiver,
    is_acyclic,
    mutate,
)
from .errors import CertificateError, InternalInvariantError, QuiverError

DEFAULT_MAX_STATES = 10**6


def default_max_len(n: int) -> int:
    return 2 * n + 4


class FramedQuiver:
    """Immutable framed-quiver state: a ``2n x 2n`` skew-symmetric matrix over
    mutable vertices ``1..n`` and frozen vertices ``n+1..2n``, with the
    frozen-frozen block identically zero."""

    __slots__ = ("ext", "n", "_bytes")

    def __init__(self, ext: np.ndarray, n: int):
        ext = np.asarray(ext, dtype=np.int64)
        if ext.shape != (2 * n, 2 * n):
            raise QuiverError("framed matrix must be 2n x 2n")
        ext.setflags(write=False)
        self.ext = ext
        self.n = n
        self._bytes = ext.tobytes()
        self._assert_sign_coherent()

    def _assert_sign_coherent(self) -> None:
        c = self.ext[: self.n, self.n :]
        nonneg = (c >= 0).all(axis=1)
        nonpos = (c <= 0).all(axis=1)
        if not np.all(nonneg ^ nonpos):
            bad = int(np.argmin(nonneg ^ nonpos)) + 1
            raise InternalInvariantError(
                f"vertex {bad} is neither green nor red; framed state corrupt"
            )

    def mutable_block(self) -> Quiver:
        return Quiver(self.ext[: self.n, : self.n])

    def c_block(self) -> np.ndarray:
        return self.ext[: self.n, self.n :]

    def green_mask(self) -> np.ndarray:
        return (self.c_block() >= 0).all(axis=1)

    def green_vertices(self) -> tuple[int, ...]:
        return tuple(int(i) + 1 for i in np.flatnonzero(self.green_mask()))

    def red_vertices(self) -> tuple[int, ...]:
        return tuple(int(i) + 1 for i in np.flatnonzero(~self.green_mask()))

    def all_red(self) -> bool:
        return not self.green_mask().any()

    def is_multiple_arrow_head(self, k: int) -> bool:
        """True when some mutable arrow of multiplicity >= 2 points at ``k``."""
        return bool(np.any(self.ext[: self.n, k - 1] >= 2))

    def __eq__(self, other):
        return isinstance(other, FramedQuiver) and self._bytes == other._bytes

    def __hash__(self):
        return hash(self._bytes)

    def __repr__(self):
        greens = ",".join(map(str, self.green_vertices()))
        return f"FramedQuiver(n={self.n}, green=[{greens}])"


def frame(q: Quiver) -> FramedQuiver:
    """Initial framed state: mutable block ``q.b``, one arrow ``i -> i'``
    per vertex, everything green."""
    n = q.n
    ext = np.zeros((2 * n, 2 * n), dtype=np.int64)
    ext[:n, :n] = q.b
    eye = np.eye(n, dtype=np.int64)
    ext[:n, n:] = eye
    ext[n:, :n] = -eye
    return FramedQuiver(ext, n)


def mutate_framed(fq: FramedQuiver, k: int) -> FramedQuiver:
    """Mutate the framed state at mutable vertex ``k``; arrows created between
    frozen vertices are deleted, matching ice-quiver mutation.

    Entries are capped like plain quiver entries: one step from a within-cap
    state is exact in 64-bit arithmetic, and a step that would exceed the cap
    raises instead of silently wrapping (divergent quivers square their
    multiplicities every round, so this triggers in finite depth).
    """
    if not (1 <= k <= fq.n):
        raise QuiverError(f"vertex {k} outside mutable range 1..{fq.n}")
    kk = k - 1
    ext = fq.ext
    pos_in = np.maximum(ext[:, kk], 0)
    pos_out = np.maximum(ext[kk, :], 0)
    new = ext + np.outer(pos_in, pos_out) - np.outer(pos_out, pos_in)
    new[kk, :] = -ext[kk, :]
    new[:, kk] = -ext[:, kk]
    new[fq.n :, fq.n :] = 0
    if np.any(np.abs(new) > MULT_CAP):
        raise QuiverError(f"framed mutation at {k} overflows the multiplicity cap")
    return FramedQuiver(new, fq.n)


GREEN = "green"
RED = "red"


def vertex_status(fq: FramedQuiver, i: int) -> str:
    """``green`` or ``red``; anything else would falsify sign-coherence and
    raises from inside the framed-state constructor."""
    if not (1 <= i <= fq.n):
        raise QuiverError(f"vertex {i} outside mutable range 1..{fq.n}")
    return GREEN if fq.green_mask()[i - 1] else RED


@dataclass(frozen=True)
class ReplayStatus:
    """Outcome of replaying a vertex sequence by green mutations."""

    ok: bool
    step: Optional[int] = None  # 1-based index of the offending step
    vertex: Optional[int] = None
    reason: str = ""


def apply_green_sequence(q: Quiver, seq) -> tuple[FramedQuiver, ReplayStatus]:
    """Replay ``seq`` on the framed quiver of ``q``, stopping at the first
    mutation of a non-green vertex.  Returns the state reached."""
    fq = frame(q)
    for idx, k in enumerate(seq, start=1):
        if not (1 <= k <= q.n):
            raise QuiverError(f"vertex {k} outside 1..{q.n} at step {idx}")
        if vertex_status(fq, k) != GREEN:
            return fq, ReplayStatus(
                False, idx, k, f"vertex {k} is red at step {idx}"
            )
        fq = mutate_framed(fq, k)
    return fq, ReplayStatus(True)


@dataclass(frozen=True)
class MgsCertificate:
    """A verified maximal green sequence with its induced vertex permutation.

    ``permutation[i-1]`` is the image of vertex ``i``; relabelling the final
    mutable block by it recovers the starting quiver exactly.
    """

    sequence: tuple[int, ...]
    permutation: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "sequence": list(self.sequence),
            "permutation": list(self.permutation),
        }

    def as_tuple_text(self) -> str:
        return "(" + ", ".join(map(str, self.sequence)) + ")"


def _extract_permutation(fq: FramedQuiver) -> Optional[tuple[int, ...]]:
    """Read the induced permutation off the final c-block, which for a
    completed MGS must be minus a permutation matrix.

    Row ``i`` holds its -1 in column ``sigma(i)``; with this reading,
    relabelling the final mutable block by ``sigma`` recovers the starting
    quiver (the column reading would give the inverse map).
    """
    c = fq.c_block()
    n = fq.n
    if not np.all((c == 0) | (c == -1)):
        return None
    sigma = [0] * n
    for i in range(n):
        cols = np.flatnonzero(c[i, :] == -1)
        if len(cols) != 1:
            return None
        sigma[i] = int(cols[0]) + 1
    if sorted(sigma) != list(range(1, n + 1)):
        return None
    return tuple(sigma)


def check_mgs(q: Quiver, seq) -> tuple[Optional[MgsCertificate], str]:
    """Verify ``seq`` as an MGS of ``q``; returns (certificate, "") on success
    or (None, diagnostic reason)."""
    seq = tuple(seq)
    if not seq:
        return None, "empty sequence cannot end all-red"
    fq, status = apply_green_sequence(q, seq)
    if not status.ok:
        return None, status.reason
    if not fq.all_red():
        greens = fq.green_vertices()
        return None, f"sequence ends with green vertices {greens}"
    sigma = _extract_permutation(fq)
    if sigma is None:
        return None, "final frozen block is not minus a permutation matrix"
    # relabelling the final block by sigma must give back the input
    final = fq.mutable_block()
    n = q.n
    for i in range(n):
        for j in range(n):
            if q.b[sigma[i] - 1, sigma[j] - 1] != final.b[i, j]:
                return None, "induced permutation does not map the result back"
    return MgsCertificate(seq, sigma), ""


def verify_mgs(q: Quiver, seq) -> Optional[MgsCertificate]:
    """Certificate iff ``seq`` is a maximal green sequence of ``q``."""
    cert, _ = check_mgs(q, seq)
    return cert


@dataclass(frozen=True)
class SearchResult:
    status: str  # "found" | "exhausted" | "budget"
    certificate: Optional[MgsCertificate]
    states: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def search_mgs(
    q: Quiver,
    max_len: Optional[int] = None,
    max_states: Optional[int] = None,
    prune: bool = True,
) -> SearchResult:
    """Breadth-first search for a shortest MGS (ties: lexicographically least
    sequence).

    States are framed quivers, deduplicated by their exact matrix; each layer
    is fully generated before goals are compared, so the reported certificate
    does not depend on expansion order.  With ``prune`` on, mutations at the
    head of a multiple arrow are never expanded; no MGS contains such a step.

    "exhausted" is only claimed when every reachable state within ``max_len``
    was genuinely covered; branches cut off by the multiplicity cap downgrade
    the outcome to "budget".
    """
    if max_len is None:
        max_len = default_max_len(q.n)
    if max_states is None:
        max_states = DEFAULT_MAX_STATES
    if max_len < 1:
        raise QuiverError("max_len must be at least 1")

    start = frame(q)
    seen = {start._bytes}
    layer: dict[bytes, tuple[FramedQuiver, tuple[int, ...]]] = {
        start._bytes: (start, ())
    }
    states = 1
    capped = False
    for _ in range(max_len):
        next_layer: dict[bytes, tuple[FramedQuiver, tuple[int, ...]]] = {}
        for fq, seq in layer.values():
            for k in fq.green_vertices():
                if prune and fq.is_multiple_arrow_head(k):
                    continue
                try:
                    child = mutate_framed(fq, k)
                except QuiverError:
                    capped = True
                    continue
                key = child._bytes
                cseq = seq + (k,)
                if key in next_layer:
                    if cseq < next_layer[key][1]:
                        next_layer[key] = (child, cseq)
                    continue
                if key in seen:
                    continue  # reached at a shorter depth already
                seen.add(key)
                states += 1
                next_layer[key] = (child, cseq)
                if states > max_states:
                    return SearchResult("budget", None, states)
        if not next_layer:
            return SearchResult("budget" if capped else "exhausted", None, states)
        goals = [seq for fq, seq in next_layer.values() if fq.all_red()]
        if goals:
            best = min(goals)
            cert = verify_mgs(q, best)
            if cert is None:
                raise InternalInvariantError(
                    f"search produced sequence {best} that fails verification"
                )
            return SearchResult("found", cert, states)
        layer = next_layer
    return SearchResult("budget" if capped else "exhausted", None, states)


def acyclic_mgs(q: Quiver) -> MgsCertificate:
    """MGS of an acyclic quiver built by repeatedly mutating the least-index
    source of the subquiver induced on the still-green vertices."""
    if not is_acyclic(q):
        raise QuiverError("acyclic_mgs requires an acyclic quiver")
    fq = frame(q)
    seq = []
    for _ in range(4 * q.n + 4):
        greens = fq.green_vertices()
        if not greens:
            break
        block = fq.ext[: q.n, : q.n]
        srcs = [
            v for v in greens if all(block[w - 1, v - 1] <= 0 for w in greens)
        ]
        if not srcs:
            raise InternalInvariantError(
                "green subquiver of an acyclic quiver lost all its sources"
            )
        k = min(srcs)
        fq = mutate_framed(fq, k)
        seq.append(k)
    cert = verify_mgs(q, seq)
    if cert is None:
        raise InternalInvariantError(
            f"source-mutation sequence {seq} failed verification"
        )
    return cert


def _require_verified(q: Quiver, cert: MgsCertificate) -> MgsCertificate:
    fresh, reason = check_mgs(q, cert.sequence)
    if fresh is None:
        raise CertificateError(f"certificate does not verify: {reason}")
    if fresh.permutation != cert.permutation:
        raise CertificateError(
            "certificate permutation disagrees with the replayed one"
        )
    return fresh


def rotate_mgs(q: Quiver, cert: MgsCertificate) -> tuple[Quiver, MgsCertificate]:
    """Shift an MGS one step forward along its mutation cycle: the sequence
    with its head removed and ``sigma^-1(head)`` appended is an MGS of the
    once-mutated quiver, with the same induced permutation."""
    cert = _require_verified(q, cert)
    seq, sigma = cert.sequence, cert.permutation
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s - 1] = i + 1
    head = seq[0]
    new_q = mutate(q, head)
    new_seq = seq[1:] + (inv[head - 1],)
    new_cert = verify_mgs(new_q, new_seq)
    if new_cert is None or new_cert.permutation != sigma:
        raise InternalInvariantError("rotated sequence failed re-verification")
    return new_q, new_cert


def reverse_rotate_mgs(
    q: Quiver, cert: MgsCertificate
) -> tuple[Quiver, MgsCertificate]:
    """Inverse of :func:`rotate_mgs`: prepend ``sigma(last)`` (dropping the
    last entry) to get an MGS of the quiver mutated at that new head."""
    cert = _require_verified(q, cert)
    seq, sigma = cert.sequence, cert.permutation
    new_head = sigma[seq[-1] - 1]
    new_q = mutate(q, new_head)
    new_seq = (new_head,) + seq[:-1]
    new_cert = verify_mgs(new_q, new_seq)
    if new_cert is None or new_cert.permutation != sigma:
        raise InternalInvariantError(
            "reverse-rotated sequence failed re-verification"
        )
    return new_q, new_cert


def direct_sum_mgs(
    q: Quiver,
    decomp: DirectSumDecomposition,
    cert_left: MgsCertificate,
    cert_right: MgsCertificate,
) -> MgsCertificate:
    """MGS of a one-way glued quiver: play the left part's sequence, then the
    right part's, each written in the labels of ``q``."""
    if not decomp.check(q):
        raise CertificateError("decomposition does not match the quiver")
    sub_l, map_l = induced_subquiver(q, decomp.part_left)
    if verify_mgs(sub_l, cert_left.sequence) is None:
        raise CertificateError("left certificate fails on the left part")
    sub_r, map_r = induced_subquiver(q, decomp.part_right)
    if verify_mgs(sub_r, cert_right.sequence) is None:
        raise CertificateError("right certificate fails on the right part")
    seq = tuple(map_l[v - 1] for v in cert_left.sequence) + tuple(
        map_r[v - 1] for v in cert_right.sequence
    )
    cert = verify_mgs(q, seq)
    if cert is None:
        raise CertificateError("concatenated sequence fails on the sum")
    return cert


def kcycle_mgs(
    q: Quiver,
    cycle_info: tuple[tuple[int, ...], int],
    cert_c: MgsCertificate,
) -> MgsCertificate:
    """MGS of a quiver ending in an oriented k-cycle ``v1 -> ... -> vk -> v1``
    whose vertices ``v1..v(k-1)`` are otherwise isolated: walk down the cycle,
    play the core's sequence, then walk back up."""
    cycle, attach = cycle_info
    k = len(cycle)
    if k < 3 or attach != cycle[-1]:
        raise CertificateError("cycle info is malformed")
    core_vertices = sorted(set(range(1, q.n + 1)) - set(cycle[:-1]))
    sub_c, map_c = induced_subquiver(q, core_vertices)
    if verify_mgs(sub_c, cert_c.sequence) is None:
        raise CertificateError("core certificate fails on the core subquiver")
    i_c = tuple(map_c[v - 1] for v in cert_c.sequence)
    down = tuple(reversed(cycle[1 : k - 1]))
    up = tuple(cycle[1 : k - 1])
    seq = down + i_c + (cycle[0],) + up
    cert = verify_mgs(q, seq)
    if cert is None:
        raise CertificateError("cycle-ending sequence fails on the quiver")
    return cert


def rank3_mgs(params: Rank3Params) -> Optional[MgsCertificate]:
    """MGS of the cyclic rank-3 quiver, or None when every multiplicity is at
    least 2 (no MGS exists then).

    With some multiplicity equal to 1 the quiver is relabelled so the single
    arrow is 1 -> 2; then ``(2,1,3,2)`` works when b > c, ``(2,3,1,2)`` when
    c > b, and either when b = c.  Multiplicity 0 degenerates to an acyclic
    quiver, handled by source mutations.
    """
    from .catalog import make_rank3

    a, b, c = params.a, params.b, params.c
    q = make_rank3(a, b, c)
    if min(a, b, c) == 0:
        return acyclic_mgs(q)
    if min(a, b, c) >= 2:
        return None
    # rotate labels so the first parameter is 1: one rotation step sends
    # (a, b, c) to (c, a, b)
    triple = (a, b, c)
    r = 0
    while triple[0] != 1:
        triple = (triple[2], triple[0], triple[1])
        r += 1
    _, bb, cc = triple
    seq_norm = (2, 1, 3, 2) if bb > cc else (2, 3, 1, 2) if cc > bb else (2, 1, 3, 2)
    seq = tuple(((w - 1 - r) % 3) + 1 for w in seq_norm)
    cert = verify_mgs(q, seq)
    if cert is None:
        raise InternalInvariantError(
            f"closed-form rank-3 sequence {seq} failed for {params}"
        )
    return cert
