"""End-to-end acceptance checks; each prints one PASS/FAIL line."""

import json
import time

import pytest

from loopsmith import analyze, chein, cli, enumerate_half_automorphisms, inverse, preset
from loopsmith.groups import automorphism_group, center, inner_automorphism_group, is_elementary_abelian_2
from loopsmith.half import h_violations, half_group_violations
from loopsmith.io import dumps
from loopsmith.loops import compose
from loopsmith.structure import decomposition_oracle

from conftest import CORPUS, auts, embedding, group, h_group, halves


@pytest.fixture
def verdict(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'} {title} {detail}".rstrip())
        assert ok, f"criterion {number} failed: {detail}"
    return emit


def _counts(report):
    c = report.counts
    return c["h"], c["aut"], c["half_t"], c["half"], c["nontrivial"]


def test_criterion_1_q8_example(verdict):
    t0 = time.perf_counter()
    rep = analyze(preset("q8"), "q8")
    dt = time.perf_counter() - t0
    got = _counts(rep)
    verdict(1, "M(Q8,2) counts", got == (8, 192, 384, 3072, 2688) and dt < 120 and rep.all_pass,
            f"(H, Aut, Half_T, Half, nontrivial) = {got} in {dt:.1f}s")


def test_criterion_2_c4c3_example(verdict):
    t0 = time.perf_counter()
    rep = analyze(preset("c4_semidirect_c3"), "c4_semidirect_c3")
    dt = time.perf_counter() - t0
    got = _counts(rep)
    verdict(2, "M(C4xC3,2) counts", got == (2, 144, 288, 576, 288) and dt < 600 and rep.all_pass,
            f"(H, Aut, Half_T, Half, nontrivial) = {got} in {dt:.1f}s by full enumeration")


def test_criterion_3_order_identity(verdict):
    rows = []
    ok = True
    for name in ("q8", "c4_semidirect_c3"):
        G = group(name)
        aut_G = len(automorphism_group(G))
        inner = len(inner_automorphism_group(G))
        elem, m = is_elementary_abelian_2(center(G))
        r = len(h_group(name)).bit_length() - 1
        n = m + r
        via_G = 2 * aut_G * G.order * len(h_group(name))
        via_inner = 2 ** (n + 1) * aut_G * inner
        half = len(halves(name))
        ok &= elem and via_G == via_inner == half
        rows.append(f"{name}: {via_G} = {via_inner} = {half}")
    verdict(3, "order identity", ok, "; ".join(rows))


def test_criterion_4_automorphism_branches(verdict):
    q8, s3 = group("q8"), group("s3")
    hol_q8 = len(automorphism_group(q8)) * q8.order
    hol_s3 = len(automorphism_group(s3)) * s3.order
    aq, as3 = len(auts("q8")), len(auts("s3"))
    verdict(4, "Aut(M(G,2)) branches", aq == hol_q8 == 192 and as3 == 3 * hol_s3 == 108,
            f"|Aut(M(Q8,2))| = {aq}, |Hol(Q8)| = {hol_q8}; |Aut(M(S3,2))| = {as3}, 3|Hol(S3)| = {3 * hol_s3}")


def test_criterion_5_triviality(verdict):
    chein_nt = {name: halves(name).summary()["nontrivial"] for name in ("s3", "dihedral(4)", "dihedral(5)", "dihedral(6)")}
    direct_nt = {name: enumerate_half_automorphisms(group(name)).summary()["nontrivial"]
                 for name in ("s3", "dihedral(4)", "q8")}
    ok = not any(chein_nt.values()) and not any(direct_nt.values())
    verdict(5, "triviality", ok, f"Chein nontrivial {chein_nt}; group-table nontrivial {direct_nt}")


def test_criterion_6_property_suites(verdict):
    failures = {}
    checked = 0
    for name in CORPUS:
        E = embedding(name)
        if E.loop.order > 24:
            continue
        half, H = halves(name), h_group(name)
        hs = set(half.elements)
        viol = {**{f"half.{k}": v for k, v in half_group_violations(E.loop, half, auts(name)).items()},
                **{f"h.{k}": v for k, v in h_violations(E, H).items() if v is not None}}
        viol["half.closed_under_inverse"] = [f for f in half if inverse(f) not in hs]
        viol["h.closed_under_composition"] = [(f, g) for f in H for g in H if compose(f, g) not in set(H.elements)]
        checked += 1
        bad = {k: len(v) for k, v in viol.items() if v}
        if bad:
            failures[name] = bad
    verdict(6, "property suites", not failures and checked == len(CORPUS),
            f"{checked} loops of order <= 24, violations {failures or 0}")


def test_criterion_7_oracle_equivalence(verdict):
    L = chein(preset("q8")).loop
    found = enumerate_half_automorphisms(L).elements
    oracle = decomposition_oracle(L, auts("q8"), h_group("q8"))
    searched = dumps([list(f) for f in found])
    closure = dumps([list(f) for f in oracle])
    verdict(7, "oracle equivalence on M(Q8,2)", searched == closure,
            f"{len(found)} vs {len(oracle)} mappings, serializations byte-identical: {searched == closure}")


def test_criterion_8_determinism(verdict, tmp_path):
    same = {}
    for name in ("q8", "c4_semidirect_c3", "cyclic(3)"):
        outs = []
        for k in range(2):
            p = tmp_path / f"{name}-{k}.json"
            code = cli.main(["analyze", "--group", name, "--out", str(p)])
            assert code == 0
            outs.append(p.read_bytes())
        json.loads(outs[0])
        same[name] = outs[0] == outs[1]
    verdict(8, "deterministic JSON", all(same.values()), str(same))
