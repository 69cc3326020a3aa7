import numpy as np
import pytest

from quivergreen.canonical import canonical_key
from quivergreen.catalog import get, make_rank3, make_theta
from quivergreen.core import (
    DirectSumDecomposition,
    Quiver,
    Rank3Params,
    find_ending_kcycle,
    induced_subquiver,
    mutate,
    opposite,
    relabel,
)
from quivergreen.errors import CertificateError, InternalInvariantError, QuiverError
from quivergreen.green import (
    GREEN,
    RED,
    FramedQuiver,
    acyclic_mgs,
    apply_green_sequence,
    check_mgs,
    direct_sum_mgs,
    frame,
    kcycle_mgs,
    mutate_framed,
    rank3_mgs,
    reverse_rotate_mgs,
    rotate_mgs,
    search_mgs,
    verify_mgs,
    vertex_status,
)

from oracles import enumerate_green_mgs, random_acyclic_quiver, random_quiver

A2 = Quiver.from_arrows(2, [(1, 2)])


def test_frame_initial_state():
    q = make_rank3(2, 2, 2)
    fq = frame(q)
    assert fq.green_vertices() == (1, 2, 3)
    assert np.array_equal(fq.ext[:3, :3], q.b)
    assert np.array_equal(fq.c_block(), np.eye(3, dtype=int))
    assert np.all(fq.ext[3:, 3:] == 0)


def test_vertex_status_a2_by_hand():
    fq = frame(A2)
    assert vertex_status(fq, 1) == GREEN and vertex_status(fq, 2) == GREEN
    fq1 = mutate_framed(fq, 1)
    assert vertex_status(fq1, 1) == RED and vertex_status(fq1, 2) == GREEN
    fq2 = mutate_framed(fq1, 2)
    assert vertex_status(fq2, 1) == RED and vertex_status(fq2, 2) == RED


def test_sign_coherence_is_asserted():
    # a frozen block with a mixed-sign row is rejected outright
    ext = np.zeros((4, 4), dtype=np.int64)
    ext[0, 2], ext[2, 0] = 1, -1
    ext[0, 3], ext[3, 0] = -1, 1
    ext[1, 3], ext[3, 1] = 1, -1
    with pytest.raises(InternalInvariantError):
        FramedQuiver(ext, 2)


def test_apply_green_sequence_violation():
    fq, status = apply_green_sequence(make_rank3(1, 1, 1), (1, 1))
    assert not status.ok
    assert status.step == 2 and status.vertex == 1


def test_apply_green_sequence_theta_and_z6():
    fq, status = apply_green_sequence(make_theta(4), (2, 3, 4, 1, 2))
    assert status.ok and fq.all_red()
    fq, status = apply_green_sequence(get("Z6").quiver, (3, 1, 2, 5, 6, 4, 3))
    assert status.ok and fq.all_red()


def test_verify_mgs_a2():
    cert = verify_mgs(A2, (1, 2))
    assert cert is not None and cert.permutation == (1, 2)
    longer = verify_mgs(A2, (2, 1, 2))
    assert longer is not None and longer.permutation == (2, 1)
    assert verify_mgs(A2, (1,)) is None
    assert verify_mgs(A2, ()) is None


def test_verify_mgs_theta_family():
    for n in range(4, 10):
        q = make_theta(n)
        cert = verify_mgs(q, tuple([*range(2, n + 1), 1, 2]))
        assert cert is not None
        # the permutation maps the final quiver back onto the input
        final, _ = apply_green_sequence(q, cert.sequence)
        assert relabel(final.mutable_block(), cert.permutation) == q


def test_verify_mgs_rejects_markov():
    markov = make_rank3(2, 2, 2)
    for seq in enumerate_green_mgs(markov, 6):
        raise AssertionError(f"markov should admit no MGS, found {seq}")
    assert verify_mgs(markov, (1, 2, 3)) is None


def test_check_mgs_reasons():
    _, reason = check_mgs(A2, (1, 1))
    assert "red" in reason
    _, reason = check_mgs(A2, (1,))
    assert "green" in reason


def test_search_a2_shortest_lex():
    res = search_mgs(A2, 4, 10**5)
    assert res.found and res.certificate.sequence == (1, 2)
    # oracle: the only MGS up to length 4 are (1,2) and (2,1,2)
    assert enumerate_green_mgs(A2, 4) == {(1, 2), (2, 1, 2)}


def test_search_markov_never_found():
    res = search_mgs(make_rank3(2, 2, 2), 8, 10**6)
    assert res.status in ("exhausted", "budget")


def test_search_theta4():
    res = search_mgs(make_theta(4), 6, 10**6)
    assert res.found and len(res.certificate.sequence) <= 5


def test_search_budget_hit():
    res = search_mgs(make_theta(6), max_len=10, max_states=5)
    assert res.status == "budget"


def test_search_shortest_lex_least_matches_enumeration():
    # the reported sequence must be the lexicographically least among the
    # shortest, compared against literal enumeration of all green sequences
    rng = np.random.default_rng(151)
    checked = 0
    while checked < 40:
        n = int(rng.integers(2, 5))
        q = random_quiver(rng, n, 1)
        res = search_mgs(q, max_len=6)
        all_mgs = enumerate_green_mgs(q, 6)
        if not res.found:
            assert not all_mgs, q.arrows()
            continue
        shortest = min(len(s) for s in all_mgs)
        expected = min(s for s in all_mgs if len(s) == shortest)
        assert res.certificate.sequence == expected, q.arrows()
        checked += 1


def test_search_prune_matches_unpruned_rank3():
    # every rank-3 quiver with entries up to 2, searched both ways
    vals = range(-2, 3)
    for x in vals:
        for y in vals:
            for z in vals:
                q = Quiver([[0, x, y], [-x, 0, z], [-y, -z, 0]])
                pruned = search_mgs(q, 6, 10**5, prune=True)
                full = search_mgs(q, 6, 10**5, prune=False)
                assert pruned.found == full.found, q.arrows()
                if pruned.found:
                    assert pruned.certificate == full.certificate


def test_acyclic_mgs():
    cert = acyclic_mgs(A2)
    assert cert.sequence == (1, 2)
    path = Quiver.from_arrows(3, [(1, 2), (2, 3)])
    cert = acyclic_mgs(path)
    assert 3 <= len(cert.sequence) <= 6
    empty3 = Quiver(np.zeros((3, 3), dtype=int))
    assert acyclic_mgs(empty3).sequence == (1, 2, 3)
    with pytest.raises(QuiverError):
        acyclic_mgs(make_rank3(1, 1, 1))


def test_acyclic_mgs_random():
    rng = np.random.default_rng(53)
    for _ in range(60):
        q = random_acyclic_quiver(rng, int(rng.integers(1, 7)), 2)
        cert = acyclic_mgs(q)
        assert verify_mgs(q, cert.sequence) is not None


def test_rotate_a2_example():
    cert = verify_mgs(A2, (1, 2))
    new_q, new_cert = rotate_mgs(A2, cert)
    assert new_q == Quiver.from_arrows(2, [(2, 1)])
    assert new_cert.sequence == (2, 1)
    assert new_cert.permutation == cert.permutation


def test_reverse_then_rotate_is_identity():
    q = make_theta(4)
    cert = verify_mgs(q, (2, 3, 4, 1, 2))
    back_q, back_cert = reverse_rotate_mgs(q, cert)
    again_q, again_cert = rotate_mgs(back_q, back_cert)
    assert again_q == q and again_cert == cert


def test_rotating_theta_certificate_stays_in_class():
    q = make_theta(4)
    cert = verify_mgs(q, (2, 3, 4, 1, 2))
    cur_q, cur_cert = q, cert
    for _ in range(len(cert.sequence)):
        cur_q, cur_cert = rotate_mgs(cur_q, cur_cert)
    assert canonical_key(cur_q) == canonical_key(q)


def test_rotate_rejects_bad_certificate():
    from quivergreen.green import MgsCertificate

    with pytest.raises(CertificateError):
        rotate_mgs(A2, MgsCertificate((2, 2), (1, 2)))


def test_direct_sum_mgs():
    # two single arrows glued by one cross arrow
    q = Quiver.from_arrows(4, [(1, 2), (3, 4), (2, 3)])
    decomp = DirectSumDecomposition((1, 2), (3, 4), ((2, 3),), 1)
    left = verify_mgs(Quiver.from_arrows(2, [(1, 2)]), (1, 2))
    right = verify_mgs(Quiver.from_arrows(2, [(1, 2)]), (1, 2))
    cert = direct_sum_mgs(q, decomp, left, right)
    assert cert.sequence == (1, 2, 3, 4)

    # disjoint union: no cross arrows at all
    q2 = Quiver.from_arrows(4, [(1, 2), (3, 4)])
    decomp2 = DirectSumDecomposition((1, 2), (3, 4), (), 0)
    cert2 = direct_sum_mgs(q2, decomp2, left, right)
    assert verify_mgs(q2, cert2.sequence) is not None

    # single vertex glued onto a single arrow
    q3 = Quiver.from_arrows(3, [(1, 2), (2, 3)])
    decomp3 = DirectSumDecomposition((1,), (2, 3), ((1, 2),), 1)
    single = acyclic_mgs(Quiver([[0]]))
    cert3 = direct_sum_mgs(q3, decomp3, single, left)
    assert cert3.sequence == (1, 2, 3)


def test_direct_sum_mgs_names_failed_premise():
    q = Quiver.from_arrows(4, [(1, 2), (3, 4), (2, 3)])
    decomp = DirectSumDecomposition((1, 2), (3, 4), ((2, 3),), 1)
    good = verify_mgs(Quiver.from_arrows(2, [(1, 2)]), (1, 2))
    from quivergreen.green import MgsCertificate

    bad = MgsCertificate((2, 2), (1, 2))
    with pytest.raises(CertificateError, match="left"):
        direct_sum_mgs(q, decomp, bad, good)
    with pytest.raises(CertificateError, match="right"):
        direct_sum_mgs(q, decomp, good, bad)
    with pytest.raises(CertificateError, match="decomposition"):
        direct_sum_mgs(
            q, DirectSumDecomposition((1, 3), (2, 4), (), 0), good, good
        )


def test_kcycle_mgs_cases():
    # bare oriented triangle: core is the single vertex 3
    tri = make_rank3(1, 1, 1)
    info = find_ending_kcycle(tri)
    core, _ = induced_subquiver(tri, {3})
    cert = kcycle_mgs(tri, info, acyclic_mgs(core))
    assert cert.sequence == (2, 3, 1, 2)

    # triangle with a pendant tail hanging off the attachment vertex
    q = Quiver.from_arrows(4, [(1, 2), (2, 3), (3, 1), (3, 4)])
    info = find_ending_kcycle(q)
    assert info == ((1, 2, 3), 3)
    core, _ = induced_subquiver(q, {3, 4})
    cert = kcycle_mgs(q, info, acyclic_mgs(core))
    assert verify_mgs(q, cert.sequence) is not None

    # 4-cycle ending
    q4 = Quiver.from_arrows(5, [(1, 2), (2, 3), (3, 4), (4, 1), (4, 5)])
    info = find_ending_kcycle(q4)
    assert info == ((1, 2, 3, 4), 4)
    core, _ = induced_subquiver(q4, {4, 5})
    cert = kcycle_mgs(q4, info, acyclic_mgs(core))
    assert cert.sequence[0] == 3 and cert.sequence[-1] == 3
    assert verify_mgs(q4, cert.sequence) is not None


def test_rank3_mgs_classification():
    assert rank3_mgs(Rank3Params(1, 3, 2)).sequence == (2, 1, 3, 2)
    assert rank3_mgs(Rank3Params(1, 2, 3)).sequence == (2, 3, 1, 2)
    assert rank3_mgs(Rank3Params(2, 2, 2)) is None
    assert rank3_mgs(Rank3Params(3, 5, 2)) is None
    # degenerate: missing arrows give an acyclic quiver
    cert = rank3_mgs(Rank3Params(0, 1, 0))
    assert cert is not None and len(cert.sequence) == 3


def test_rank3_mgs_normalization_covers_all_positions():
    # the single arrow can sit in any of the three slots
    for params in [(1, 3, 2), (3, 1, 2), (2, 3, 1), (1, 2, 3), (4, 1, 2)]:
        cert = rank3_mgs(Rank3Params(*params))
        assert cert is not None
        assert verify_mgs(make_rank3(*params), cert.sequence) is not None


def test_opposite_duality_on_searched_quivers():
    rng = np.random.default_rng(59)
    checked = 0
    while checked < 50:
        n = int(rng.integers(2, 5))
        q = random_quiver(rng, n, 2)
        res = search_mgs(q)
        if not res.found:
            continue
        dual = search_mgs(opposite(q), max_len=len(res.certificate.sequence) + q.n)
        assert dual.found, (q.arrows(), res.certificate.sequence)
        checked += 1
